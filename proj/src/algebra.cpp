#include "nilab/algebra.hpp"
#include "nilab/errors.hpp"

#include <algorithm>
#include <cctype>

namespace nilab {

char family_letter(Family f) {
  switch (f) {
  case Family::A: return 'A';
  case Family::B: return 'B';
  case Family::C: return 'C';
  case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    }
  }
  throw unsupported_error("unsupported family '" + text + "' (expected A, B, C or D)");
}

Mat Element::matrix() const {
  if (!algebra)
    throw contract_error("element is not attached to an algebra");
  return algebra->to_matrix(coords);
}

Element& Element::operator+=(const Element& o) {
  require_same_algebra(*this, o);
  coords += o.coords;
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_algebra(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] -= o.coords[i];
  return *this;
}

Algebra::Algebra(Family family, unsigned rank, Rat form_scale)
    : family_(family), rank_(rank), form_scale_(std::move(form_scale)) {
  if (rank == 0)
    throw unsupported_error("rank must be at least 1");
  if (family == Family::D && rank < 2)
    throw unsupported_error("type D needs rank >= 2");
  if (sgn(form_scale_) == 0)
    throw contract_error("form scale must be nonzero");
  switch (family) {
  case Family::A: n_ = rank + 1; break;
  case Family::B: n_ = 2 * rank + 1; break;
  case Family::C:
  case Family::D: n_ = 2 * rank; break;
  }
  build_basis();
  build_coordinate_map();
  build_tables();
}

std::string Algebra::name() const {
  const std::string n = std::to_string(n_);
  switch (family_) {
  case Family::A: return "sl(" + n + ")";
  case Family::C: return "sp(" + n + ")";
  default: return "so(" + n + ")";
  }
}

std::string Algebra::type_label() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

Rat Algebra::killing_ratio() const {
  const long n = static_cast<long>(n_);
  switch (family_) {
  case Family::A: return Rat(2 * n);
  case Family::C: return Rat(n + 2);
  default: return Rat(n - 2);
  }
}

std::vector<unsigned> Algebra::generator_degrees() const {
  std::vector<unsigned> d;
  for (const auto& g : generators_)
    d.push_back(g.degree);
  return d;
}

bool Algebra::duplicated_exponents() const {
  for (std::size_t i = 1; i < generators_.size(); ++i)
    if (generators_[i].degree == generators_[i - 1].degree)
      return true;
  return false;
}

void Algebra::build_basis() {
  const std::size_t n = n_;
  auto unit = [n](std::size_t i, std::size_t j) {
    Mat m(n, n);
    m(i, j) = 1;
    return m;
  };
  auto label = [](std::size_t i, std::size_t j) {
    return "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  };
  form_ = Mat::identity(n);

  if (family_ == Family::A) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == n - 1 && j == n - 1)
          continue;
        if (i == j) {
          basis_.push_back(unit(i, i) - unit(i + 1, i + 1));
          labels_.push_back("H" + std::to_string(i + 1));
        } else {
          basis_.push_back(unit(i, j));
          labels_.push_back(label(i, j));
        }
      }
    return;
  }

  const bool symplectic = family_ == Family::C;
  auto partner = [n](std::size_t a) { return n - 1 - a; };
  // sigma(i) = J_{i, i'}
  auto sigma = [n](std::size_t i) { return 2 * i < n ? 1 : -1; };
  form_ = Mat(n, n);
  for (std::size_t a = 0; a < n; ++a)
    form_(a, partner(a)) = symplectic ? sigma(a) : 1;

  // 0-based: a + b < n - 1 is the strict region, a + b == n - 1 the antidiagonal.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a + b > n - 1 || (a + b == n - 1 && !symplectic))
        continue;
      if (a + b == n - 1) {
        basis_.push_back(unit(a, b));
        labels_.push_back(label(a, b));
        continue;
      }
      const std::size_t pa = partner(b), pb = partner(a);
      long s = symplectic ? sigma(partner(a)) * sigma(b) : -1;
      basis_.push_back(unit(a, b) + Rat(s) * unit(pa, pb));
      labels_.push_back(label(a, b) + (s > 0 ? "+" : "-") + label(pa, pb));
    }
}

void Algebra::build_coordinate_map() {
  const std::size_t d = basis_.size(), nn = n_ * n_;
  // Rows are flattened basis matrices; its pivot columns are matrix positions
  // on which the basis restricts to an invertible square block.
  Mat rows(d, nn);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t p = 0; p < nn; ++p)
      rows(k, p) = basis_[k].entries()[p];
  Echelon e = row_echelon(rows);
  if (e.pivots.size() != d)
    throw internal_error("basis matrices are linearly dependent");
  Mat block(d, d);  // block(q, k) = basis_k at position pivots[q]
  for (std::size_t q = 0; q < d; ++q)
    for (std::size_t k = 0; k < d; ++k)
      block(q, k) = basis_[k].entries()[e.pivots[q]];
  Mat inv = inverse(block);
  coord_map_.assign(d, {});
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t q = 0; q < d; ++q)
      if (sgn(inv(k, q)) != 0)
        coord_map_[k].emplace_back(e.pivots[q], inv(k, q));
}

void Algebra::build_tables() {
  const std::size_t d = dim();
  structure_.assign(d * d * d, Rat(0));
  sparse_structure_.assign(d * d, {});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vec c = coords_unchecked(commutator(basis_[a], basis_[b]));
      for (std::size_t k = 0; k < d; ++k) {
        structure_[(a * d + b) * d + k] = c[k];
        if (sgn(c[k]) != 0)
          sparse_structure_[a * d + b].emplace_back(k, c[k]);
      }
    }
  gram_ = Mat(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b)
      gram_(a, b) = gram_(b, a) = form_scale_ * (basis_[a] * basis_[b]).trace();

  auto add = [this](unsigned degree, GeneratorKind kind) {
    generators_.push_back({0, degree, degree - 1, kind});
  };
  switch (family_) {
  case Family::A:
    for (unsigned k = 2; k <= rank_ + 1; ++k)
      add(k, GeneratorKind::trace_power);
    break;
  case Family::B:
  case Family::C:
    for (unsigned k = 1; k <= rank_; ++k)
      add(2 * k, GeneratorKind::trace_power);
    break;
  case Family::D:
    for (unsigned k = 1; k + 1 <= rank_; ++k)
      add(2 * k, GeneratorKind::trace_power);
    add(rank_, GeneratorKind::pfaffian);
    // Equal degrees keep the trace power first.
    std::stable_sort(generators_.begin(), generators_.end(),
                     [](const InvariantGenerator& x, const InvariantGenerator& y) { return x.degree < y.degree; });
    break;
  }
  for (std::size_t j = 0; j < generators_.size(); ++j)
    generators_[j].index = static_cast<unsigned>(j + 1);
}

Element Algebra::zero() const { return Element{this, Vec(dim(), Rat(0))}; }

Element Algebra::basis_element(std::size_t k) const {
  Element e = zero();
  e.coords.at(k) = 1;
  return e;
}

Element Algebra::element(Vec coords) const {
  if (coords.size() != dim())
    throw shape_error("coordinate vector has wrong length for " + name());
  return Element{this, std::move(coords)};
}

Mat Algebra::to_matrix(const Vec& coords) const {
  if (coords.size() != dim())
    throw shape_error("coordinate vector has wrong length for " + name());
  Mat m(n_, n_);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0)
      m += coords[k] * basis_[k];
  return m;
}

Vec Algebra::coords_unchecked(const Mat& m) const {
  Vec c(dim(), Rat(0));
  const auto& entries = m.entries();
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& [pos, coeff] : coord_map_[k])
      if (sgn(entries[pos]) != 0)
        c[k] += coeff * entries[pos];
  return c;
}

Element Algebra::from_matrix(const Mat& m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw shape_error("matrix size does not match " + name());
  Vec c = coords_unchecked(m);
  if (to_matrix(c) != m)
    throw contract_error("matrix does not lie in " + name());
  return Element{this, std::move(c)};
}

std::vector<std::size_t> Algebra::upper_nilpotent_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    bool upper = true;
    for (std::size_t i = 0; i < n_ && upper; ++i)
      for (std::size_t j = 0; j <= i && upper; ++j)
        upper = sgn(basis_[k](i, j)) == 0;
    if (upper)
      out.push_back(k);
  }
  return out;
}

AlgebraPtr build_algebra(Family family, unsigned rank, const Rat& form_scale) {
  return std::make_shared<const Algebra>(family, rank, form_scale);
}

void require_same_algebra(const Element& x, const Element& y) {
  if (x.algebra == nullptr || x.algebra != y.algebra)
    throw contract_error("elements belong to different algebras");
}

Element bracket(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Algebra& g = *x.algebra;
  return Element{&g, g.coords_unchecked(commutator(x.matrix(), y.matrix()))};
}

Rat trace_form(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  Mat a = x.matrix(), b = y.matrix();
  Rat t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(b(j, i)) != 0)
        t += a(i, j) * b(j, i);
  return x.algebra->form_scale() * t;
}

Mat ad(const Element& x) {
  const Algebra& g = *x.algebra;
  const std::size_t d = g.dim();
  Mat out(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (sgn(x.coords[a]) == 0)
      continue;
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, c] : g.structure_terms(a, b))
        out(k, b) += x.coords[a] * c;
  }
  return out;
}

} // namespace nilab
