#pragma once

#include "nilab/matrix.hpp"
#include "nilab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nilab {

/// Multivariate polynomial over Q in a fixed, named variable list. Terms are
/// keyed by exponent vector; std::map's lexicographic order on those vectors is
/// lex order with the first variable largest, so the leading term is the last.
class Poly {
public:
  using Exponents = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(std::vector<std::string> variables);
  Poly(std::vector<std::string> variables, const Rat& constant);

  /// The linear form sum coeffs[i] * variables[i].
  static Poly linear(std::vector<std::string> variables, const Vec& coeffs);
  static Poly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for zero or a homogeneous form of degree one.
  bool is_linear_form() const;
  /// Coefficient vector of a linear form.
  Vec linear_coefficients() const;
  Rat coefficient(const Exponents& e) const;

  Rat evaluate(const Vec& point) const;

  void add_term(const Exponents& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned k) const;

  /// Exact quotient a / b; throws contract_error if b does not divide a.
  friend Poly divide_exact(const Poly& a, const Poly& b);

  std::string to_string() const;

private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rat> terms_;

  void check_compatible(const Poly& o) const;
};

using PolyMat = std::vector<std::vector<Poly>>;

/// Determinant over the polynomial ring: Leibniz expansion up to 8x8, then
/// fraction-free elimination with exact polynomial division.
Poly poly_det(const PolyMat& m);

struct GenericRank {
  std::size_t rank = 0;
  /// Values substituted in each cross-check sample, one prime per variable.
  std::vector<std::vector<long>> sample_points;
  std::vector<std::size_t> sample_ranks;
};

/// Rank over the field of rational functions of a matrix whose entries are
/// linear forms. The symbolic result comes from fraction-free elimination over
/// the polynomial ring; it is cross-checked against the maximum rank over
/// `samples` evaluations at distinct primes drawn from a sequence seeded by
/// `seed`. A disagreement throws internal_error.
GenericRank generic_rank(const PolyMat& m, std::uint64_t seed = 0, std::size_t samples = 3);

/// Entrywise evaluation.
Mat evaluate(const PolyMat& m, const Vec& point);

} // namespace nilab
