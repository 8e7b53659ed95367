#include "nilab/polynomial.hpp"
#include "nilab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilab {

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Poly::Poly(std::vector<std::string> variables, const Rat& constant) : vars_(std::move(variables)) {
  add_term(Exponents(vars_.size(), 0), constant);
}

Poly Poly::linear(std::vector<std::string> variables, const Vec& coeffs) {
  if (coeffs.size() != variables.size())
    throw shape_error("linear form needs one coefficient per variable");
  Poly p(std::move(variables));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, std::size_t index) {
  Vec c(variables.size(), Rat(0));
  c.at(index) = 1;
  return linear(std::move(variables), c);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

bool Poly::is_linear_form() const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != 1)
      return false;
  return true;
}

Vec Poly::linear_coefficients() const {
  if (!is_linear_form())
    throw contract_error("not a linear form: " + to_string());
  Vec c(vars_.size(), Rat(0));
  for (const auto& [e, v] : terms_)
    c[std::find(e.begin(), e.end(), 1u) - e.begin()] = v;
  return c;
}

Rat Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::evaluate(const Vec& point) const {
  if (point.size() != vars_.size())
    throw shape_error("evaluation point has wrong length");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k)
        t *= point[i];
    total += t;
  }
  return total;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size())
    throw shape_error("exponent vector has wrong length");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (vars_ != o.vars_)
    throw contract_error("polynomials over different variable lists");
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_)
    v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly p(a.vars_);
  Poly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly r(vars_, Rat(1));
  for (unsigned i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  if (b.is_zero())
    throw contract_error("division by the zero polynomial");
  Poly quotient(a.vars_), rest = a;
  const auto& [lead_b, lead_c] = *b.terms_.rbegin();
  while (!rest.is_zero()) {
    const auto& [lead_r, lead_rc] = *rest.terms_.rbegin();
    Poly::Exponents e(lead_r.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lead_r[i] < lead_b[i])
        throw contract_error("polynomial division is not exact");
      e[i] = lead_r[i] - lead_b[i];
    }
    Poly step(a.vars_);
    step.add_term(e, lead_rc / lead_c);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    Rat mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (constant || mag != 1)
      os << mag.get_str();
    bool need_star = !constant && mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      os << (need_star ? "*" : "") << vars_[i];
      if (e[i] > 1)
        os << '^' << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

void check_square(const PolyMat& m) {
  for (const auto& row : m)
    if (row.size() != m.size())
      throw shape_error("polynomial determinant of non-square matrix");
}

std::vector<std::string> shared_variables(const PolyMat& m) {
  for (const auto& row : m)
    for (const auto& p : row)
      return p.variables();
  return {};
}

Poly leibniz(const PolyMat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto vars = shared_variables(m);
  Poly total(vars);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          sign = -sign;
    Poly term(vars, Rat(sign));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      term = term * m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Fraction-free echelon over Q[vars]. Each intermediate entry is a minor of the
// input, so the division by the previous pivot is always exact. Returns the
// number of pivots; when `det_out` is given and the matrix is square it
// receives the determinant.
std::size_t bareiss(PolyMat a, Poly* det_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto vars = shared_variables(a);
  Poly prev(vars, Rat(1));
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero())
      ++p;
    if (p == rows)
      continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = divide_exact(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = Poly(vars);
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out) {
    if (r < rows || rows != cols)
      *det_out = Poly(vars);
    else
      *det_out = Rat(sign) * prev;
  }
  return r;
}

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    std::vector<long> ps;
    for (long n = 2; ps.size() < 200; ++n) {
      bool prime = true;
      for (long d : ps) {
        if (d * d > n)
          break;
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime)
        ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

} // namespace

Poly poly_det(const PolyMat& m) {
  check_square(m);
  if (m.empty())
    return Poly({}, Rat(1));
  if (m.size() <= 8)
    return leibniz(m);
  Poly d;
  bareiss(m, &d);
  return d;
}

Mat evaluate(const PolyMat& m, const Vec& point) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Mat out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols)
      throw shape_error("ragged polynomial matrix");
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = m[i][j].evaluate(point);
  }
  return out;
}

GenericRank generic_rank(const PolyMat& m, std::uint64_t seed, std::size_t samples) {
  if (samples < 3)
    throw contract_error("generic rank cross-check needs at least 3 samples");
  for (const auto& row : m)
    for (const auto& p : row)
      if (!p.is_linear_form())
        throw contract_error("generic_rank expects linear entries, got " + p.to_string());
  GenericRank out;
  out.rank = bareiss(m, nullptr);

  const auto vars = shared_variables(m);
  const auto& primes = small_primes();
  if (vars.size() > primes.size())
    throw unsupported_error("too many variables for the prime sample pool");
  Sampler sampler(seed);
  std::size_t best = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    // Distinct primes per sample: partial Fisher-Yates over the pool.
    std::vector<long> pool = primes;
    std::vector<long> point_int(vars.size());
    Vec point(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::size_t k = i + sampler.raw() % (pool.size() - i);
      std::swap(pool[i], pool[k]);
      point_int[i] = pool[i];
      point[i] = pool[i];
    }
    std::size_t r = m.empty() ? 0 : rank(evaluate(m, point));
    best = std::max(best, r);
    out.sample_points.push_back(std::move(point_int));
    out.sample_ranks.push_back(r);
  }
  if (best != out.rank)
    throw internal_error("symbolic generic rank " + std::to_string(out.rank) +
                         " disagrees with sampled rank " + std::to_string(best));
  return out;
}

} // namespace nilab
