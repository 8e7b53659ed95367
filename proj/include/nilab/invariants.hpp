#pragma once

#include "nilab/algebra.hpp"

#include <vector>

namespace nilab {

/// Generator j (1-based) of the algebra's invariant polynomials.
const InvariantGenerator& generator(const Algebra& g, unsigned j);

/// p_j(x): tr(x^(m_j+1)) for trace powers, Pf(S x) for the type D Pfaffian.
Rat eval_generator(const Algebra& g, unsigned j, const Element& x);

/// Pfaffian of an antisymmetric matrix by expansion along the first row.
Rat pfaffian(const Mat& a);

/// Gradient field P_j(x), defined by <dp_j(x), y> = T(P_j(x), y) for the
/// realization's invariant form T. The defining relation is re-checked on five
/// pseudo-random y against the scalar derivative of t -> p_j(x + t y);
/// a mismatch throws internal_error.
Element gradient(const Algebra& g, unsigned j, const Element& x);

/// Same field without the runtime self-check.
Element gradient_unchecked(const Algebra& g, unsigned j, const Element& x);

/// Taylor expansion of P_j along a line: terms[k] = d^kP_j(x).y^(k) / k!.
struct TaylorTerms {
  Element x, y;
  unsigned generator = 0;
  std::vector<Element> terms;  // k = 0..m_j
};

TaylorTerms taylor_terms(const Algebra& g, unsigned j, const Element& x, const Element& y);

/// d^(a+b)P_j(x).u^(a).y^(b). Zero when a + b exceeds m_j.
Element mixed_term(const Algebra& g, unsigned j, const Element& x, const Element& u, unsigned a,
                   const Element& y, unsigned b);

/// d^kP_j(x).y^(k)
Element directional_derivative(const Algebra& g, unsigned j, const Element& x, const Element& y, unsigned k);

} // namespace nilab
