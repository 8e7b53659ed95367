#include "nilab/invariants.hpp"
#include "nilab/errors.hpp"
#include "nilab/interpolation.hpp"

namespace nilab {

const InvariantGenerator& generator(const Algebra& g, unsigned j) {
  if (j == 0 || j > g.generators().size())
    throw contract_error("generator index " + std::to_string(j) + " out of range for " + g.name());
  return g.generators()[j - 1];
}

Rat pfaffian(const Mat& a) {
  if (!a.square())
    throw shape_error("pfaffian of non-square matrix");
  const std::size_t n = a.rows();
  if (n % 2 == 1)
    return 0;
  if (n == 0)
    return 1;
  Rat total = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (sgn(a(0, j)) == 0)
      continue;
    // Delete rows and columns 0 and j.
    Mat minor(n - 2, n - 2);
    std::size_t r = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (i == j)
        continue;
      std::size_t c = 0;
      for (std::size_t k = 1; k < n; ++k) {
        if (k == j)
          continue;
        minor(r, c++) = a(i, k);
      }
      ++r;
    }
    Rat term = a(0, j) * pfaffian(minor);
    if (j % 2 == 0)
      total -= term;
    else
      total += term;
  }
  return total;
}

namespace {

Mat without(const Mat& a, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  Mat m(n - 2, n - 2);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q)
      continue;
    std::size_t c = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || k == q)
        continue;
      m(r, c++) = a(i, k);
    }
    ++r;
  }
  return m;
}

Element pfaffian_gradient(const Algebra& g, const Element& x) {
  const Mat& s = g.defining_form();
  const Mat a = s * x.matrix();
  const std::size_t n = a.rows();
  // dPf/dA_pq for p < q, treating A_qp = -A_pq.
  Mat partial(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      Rat minor = pfaffian(without(a, p, q));
      partial(p, q) = (p + q) % 2 == 0 ? -minor : minor;
    }
  Vec functional(g.dim(), Rat(0));
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const Mat sb = s * g.basis()[k];
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (sgn(sb(p, q)) != 0)
          functional[k] += partial(p, q) * sb(p, q);
  }
  auto c = solve(g.gram(), functional);
  if (!c)
    throw internal_error("degenerate invariant form");
  return g.element(*c);
}

Rat scalar_derivative(const Algebra& g, unsigned j, const Element& x, const Element& y) {
  const unsigned degree = generator(g, j).degree;
  std::vector<Sample> samples;
  for (unsigned t = 0; t <= degree; ++t)
    samples.push_back({Rat(t), Vec{eval_generator(g, j, x + Rat(t) * y)}});
  return interpolate_vector_poly(samples, degree)[1][0];
}

} // namespace

Rat eval_generator(const Algebra& g, unsigned j, const Element& x) {
  const auto& gen = generator(g, j);
  if (gen.kind == GeneratorKind::pfaffian)
    return pfaffian(g.defining_form() * x.matrix());
  return power(x.matrix(), gen.degree).trace();
}

Element gradient_unchecked(const Algebra& g, unsigned j, const Element& x) {
  if (x.algebra != &g)
    throw contract_error("element belongs to another algebra");
  const auto& gen = generator(g, j);
  if (gen.kind == GeneratorKind::pfaffian)
    return pfaffian_gradient(g, x);
  Mat m = power(x.matrix(), gen.exponent);
  if (g.family() == Family::A) {
    // Orthogonal projection onto the traceless matrices.
    Rat shift = m.trace() / Rat(static_cast<long>(g.matrix_size()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      m(i, i) -= shift;
  }
  Rat factor = Rat(gen.degree) / g.form_scale();
  return g.element(g.coords_unchecked(factor * m));
}

Element gradient(const Algebra& g, unsigned j, const Element& x) {
  Element p = gradient_unchecked(g, j, x);
  Sampler sampler(0x9e3779b97f4a7c15ULL);
  for (int trial = 0; trial < 5; ++trial) {
    Element y = g.zero();
    for (auto& c : y.coords)
      c = sampler.uniform(-3, 3);
    if (scalar_derivative(g, j, x, y) != trace_form(p, y))
      throw internal_error("gradient self-check failed for generator " + std::to_string(j) + " of " + g.name());
  }
  return p;
}

TaylorTerms taylor_terms(const Algebra& g, unsigned j, const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const unsigned m = generator(g, j).exponent;
  std::vector<Sample> samples;
  for (unsigned t = 0; t <= m; ++t)
    samples.push_back({Rat(t), gradient_unchecked(g, j, x + Rat(t) * y).coords});
  std::vector<Vec> coeffs;
  try {
    coeffs = interpolate_vector_poly(samples, m);
  } catch (const degree_mismatch_error& e) {
    throw internal_error(std::string("taylor_terms: ") + e.what());
  }
  TaylorTerms out{x, y, j, {}};
  for (auto& c : coeffs)
    out.terms.push_back(g.element(std::move(c)));
  if (out.terms.front() != gradient_unchecked(g, j, x) || out.terms.back() != gradient_unchecked(g, j, y))
    throw internal_error("taylor_terms: endpoint terms disagree with P(x), P(y)");
  return out;
}

Element mixed_term(const Algebra& g, unsigned j, const Element& x, const Element& u, unsigned a,
                   const Element& y, unsigned b) {
  require_same_algebra(x, u);
  require_same_algebra(x, y);
  const unsigned m = generator(g, j).exponent;
  if (a + b > m)
    return g.zero();
  if (b == 0 || a == 0) {
    const Element& dir = b == 0 ? u : y;
    const unsigned k = b == 0 ? a : b;
    return factorial(k) * taylor_terms(g, j, x, dir).terms[k];
  }
  auto grid = interpolate_grid(
      [&](const Rat& t, const Rat& s) { return gradient_unchecked(g, j, x + t * u + s * y).coords; }, m);
  return (factorial(a) * factorial(b)) * g.element(grid[a][b]);
}

Element directional_derivative(const Algebra& g, unsigned j, const Element& x, const Element& y, unsigned k) {
  return mixed_term(g, j, x, y, k, y, 0);
}

} // namespace nilab
