#include "nilab/subspace.hpp"
#include "nilab/errors.hpp"

#include <algorithm>
#include <set>

namespace nilab {

Subspace Subspace::span(const Algebra& g, const std::vector<Vec>& vectors) {
  Subspace s;
  s.algebra_ = &g;
  if (vectors.empty()) {
    s.rows_ = Mat(0, g.dim());
    return s;
  }
  Echelon e = row_echelon(Mat::from_rows(vectors, g.dim()));
  s.rows_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(const Algebra& g, const std::vector<Element>& elements) {
  std::vector<Vec> v;
  v.reserve(elements.size());
  for (const auto& x : elements) {
    if (x.algebra != &g)
      throw contract_error("span of elements from another algebra");
    v.push_back(x.coords);
  }
  return span(g, v);
}

Subspace Subspace::whole(const Algebra& g) {
  std::vector<Vec> v;
  for (std::size_t k = 0; k < g.dim(); ++k)
    v.push_back(g.basis_element(k).coords);
  return span(g, v);
}

Subspace Subspace::zero(const Algebra& g) { return span(g, std::vector<Vec>{}); }

std::vector<Element> Subspace::basis() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < dim(); ++i)
    out.push_back(basis_element(i));
  return out;
}

Element Subspace::basis_element(std::size_t i) const { return Element{algebra_, rows_.row_vec(i)}; }

std::optional<Vec> Subspace::coordinates(const Element& x) const {
  if (x.algebra != algebra_)
    throw contract_error("element and subspace belong to different algebras");
  Vec lambda(dim());
  Vec rest = x.coords;
  for (std::size_t i = 0; i < dim(); ++i) {
    lambda[i] = rest[pivots_[i]];
    if (sgn(lambda[i]) == 0)
      continue;
    for (std::size_t c = 0; c < rest.size(); ++c)
      if (sgn(rows_(i, c)) != 0)
        rest[c] -= lambda[i] * rows_(i, c);
  }
  if (!nilab::is_zero(rest))
    return std::nullopt;
  return lambda;
}

bool Subspace::contains(const Element& x) const { return coordinates(x).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_element(i)))
      return false;
  return true;
}

Mat Subspace::annihilator() const {
  auto rk = rank_kernel(rows_.rows() ? rows_ : Mat(0, algebra_->dim()));
  if (rows_.rows() == 0) {
    // Every coordinate functional.
    return Mat::identity(algebra_->dim());
  }
  return Mat::from_rows(rk.kernel, algebra_->dim());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.algebra() != b.algebra())
    throw contract_error("sum of subspaces of different algebras");
  std::vector<Vec> v;
  for (const auto& x : a.basis())
    v.push_back(x.coords);
  for (const auto& x : b.basis())
    v.push_back(x.coords);
  return Subspace::span(*a.algebra(), v);
}

Subspace centralizer(const Element& x) {
  return Subspace::span(*x.algebra, rank_kernel(ad(x)).kernel);
}

Subspace center_of(const Subspace& s) {
  const Algebra& g = *s.algebra();
  const std::size_t k = s.dim(), d = g.dim();
  auto basis = s.basis();
  // M stacks, for each basis vector u_b, the map lambda -> [sum lambda_a u_a, u_b].
  Mat m(k * d, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Element br = bracket(basis[a], basis[b]);
      if (!s.contains(br))
        throw contract_error("center_of: subspace is not closed under the bracket");
      for (std::size_t c = 0; c < d; ++c) {
        m(b * d + c, a) = br.coords[c];
        m(a * d + c, b) = -br.coords[c];
      }
    }
  std::vector<Vec> center;
  for (const auto& lambda : rank_kernel(m).kernel) {
    Element c = g.zero();
    for (std::size_t a = 0; a < k; ++a)
      if (sgn(lambda[a]) != 0)
        c += lambda[a] * basis[a];
    center.push_back(c.coords);
  }
  return Subspace::span(g, center);
}

Subspace normalizer_of(const Subspace& s) {
  const Algebra& g = *s.algebra();
  if (s.dim() == g.dim())
    return Subspace::whole(g);
  Mat f = s.annihilator();
  Mat stacked(0, g.dim());
  for (const auto& u : s.basis())
    stacked.append_rows(f * ad(u));  // [u, y] = ad(u) y
  return Subspace::span(g, rank_kernel(stacked).kernel);
}

Vec characteristic_polynomial(const Mat& a) {
  if (!a.square())
    throw shape_error("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  Vec c(n + 1, Rat(0));
  c[n] = 1;
  Mat m(n, n);
  const Mat id = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / Rat(static_cast<long>(k));
  }
  return c;
}

namespace {

// Rational roots of a polynomial whose roots are all real, searched within the
// bound |root| <= sqrt(sum of squared roots).
std::vector<Rat> rational_roots(const Vec& coeffs, const Rat& sum_squares) {
  Int l = 1;
  for (const auto& c : coeffs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> ints;
  for (const auto& c : coeffs)
    ints.push_back(c.get_num() * (l / c.get_den()));
  Int lead = abs(ints.back());
  if (lead > Int("1000000000000"))
    throw graduation_error("leading coefficient too large for the rational root search");
  std::vector<Int> divisors;
  for (Int q = 1; q * q <= lead; ++q)
    if (lead % q == 0) {
      divisors.push_back(q);
      if (q * q != lead)
        divisors.push_back(lead / q);
    }
  Int bound, fl;
  mpz_fdiv_q(fl.get_mpz_t(), sum_squares.get_num_mpz_t(), sum_squares.get_den_mpz_t());
  if (fl < 0)
    fl = 0;
  mpz_sqrt(bound.get_mpz_t(), fl.get_mpz_t());
  bound += 1;

  std::set<Rat> roots;
  const std::size_t deg = ints.size() - 1;
  for (const auto& q : divisors) {
    Int qbound = q * bound;
    if (qbound > 100000)
      throw graduation_error("eigenvalue search range too large");
    for (Int p = -qbound; p <= qbound; ++p) {
      if (gcd(p, q) != 1 && p != 0)
        continue;
      // sum a_i p^i q^(deg - i) == 0
      Int acc = 0, pp = 1;
      std::vector<Int> qpow(deg + 1, Int(1));
      for (std::size_t i = 1; i <= deg; ++i)
        qpow[i] = qpow[i - 1] * q;
      for (std::size_t i = 0; i <= deg; ++i) {
        acc += ints[i] * pp * qpow[deg - i];
        pp *= p;
      }
      if (acc == 0) {
        Rat r(p, q);
        r.canonicalize();
        roots.insert(r);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

} // namespace

std::vector<GradedPiece> h_graduation(const Element& h, const Subspace& s) {
  if (h.algebra != s.algebra())
    throw contract_error("h and subspace belong to different algebras");
  const Algebra& g = *s.algebra();
  const std::size_t k = s.dim();
  if (k == 0)
    return {};
  auto basis = s.basis();
  Mat m(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    auto c = s.coordinates(bracket(h, basis[a]));
    if (!c)
      throw graduation_error("subspace is not stable under ad(h)");
    for (std::size_t b = 0; b < k; ++b)
      m(b, a) = (*c)[b];
  }
  Rat sum_squares = (m * m).trace();
  if (sgn(sum_squares) < 0)
    throw graduation_error("ad(h) has non-real eigenvalues");
  std::vector<GradedPiece> out;
  std::size_t total = 0;
  for (const auto& lambda : rational_roots(characteristic_polynomial(m), sum_squares)) {
    Mat shifted = m - lambda * Mat::identity(k);
    std::vector<Vec> vectors;
    for (const auto& v : rank_kernel(shifted).kernel) {
      Element x = g.zero();
      for (std::size_t a = 0; a < k; ++a)
        if (sgn(v[a]) != 0)
          x += v[a] * basis[a];
      vectors.push_back(x.coords);
    }
    total += vectors.size();
    out.push_back({lambda, Subspace::span(g, vectors)});
  }
  if (total != k)
    throw graduation_error("ad(h) is not diagonalizable over Q on this subspace");
  return out;
}

Mat unipotent_ad(const Element& n) {
  Mat a = ad(n);
  const std::size_t d = a.rows();
  Mat result = Mat::identity(d);
  Mat term = Mat::identity(d);
  for (std::size_t k = 1;; ++k) {
    term = a * term;
    if (term.is_zero())
      return result;
    if (k >= d)
      throw contract_error("unipotent_ad: ad(n) is not nilpotent");
    result += (1 / factorial(static_cast<unsigned>(k))) * term;
  }
}

} // namespace nilab
