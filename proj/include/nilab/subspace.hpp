#pragma once

#include "nilab/algebra.hpp"

#include <optional>
#include <vector>

namespace nilab {

/// Linear subspace of an algebra, stored as the reduced row echelon form of
/// its basis coordinates, which makes the basis canonical.
class Subspace {
public:
  Subspace() = default;
  static Subspace span(const Algebra& g, const std::vector<Vec>& vectors);
  static Subspace span(const Algebra& g, const std::vector<Element>& elements);
  static Subspace whole(const Algebra& g);
  static Subspace zero(const Algebra& g);

  const Algebra* algebra() const { return algebra_; }
  std::size_t dim() const { return rows_.rows(); }
  std::vector<Element> basis() const;
  Element basis_element(std::size_t i) const;
  const Mat& echelon_rows() const { return rows_; }

  bool contains(const Element& x) const;
  bool contains(const Subspace& other) const;
  /// Coordinates in basis(), or nullopt when x is outside.
  std::optional<Vec> coordinates(const Element& x) const;
  /// Rows are functionals whose common kernel is exactly this subspace.
  Mat annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.algebra_ == b.algebra_ && a.rows_ == b.rows_;
  }

private:
  const Algebra* algebra_ = nullptr;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);

/// z(x) = ker ad(x).
Subspace centralizer(const Element& x);

/// Centre of a subalgebra; contract_error if `s` is not closed under bracket.
Subspace center_of(const Subspace& s);

/// {y : [y, s] in s}.
Subspace normalizer_of(const Subspace& s);

struct GradedPiece {
  Rat eigenvalue;
  Subspace piece;
};

/// Eigenspace decomposition of ad(h) on an ad(h)-stable subspace, eigenvalues
/// ascending. Throws graduation_error unless ad(h) acts diagonalizably with
/// rational eigenvalues.
std::vector<GradedPiece> h_graduation(const Element& h, const Subspace& s);

/// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) by
/// Faddeev-LeVerrier.
Vec characteristic_polynomial(const Mat& m);

/// exp(ad n) as a finite sum; contract_error unless ad(n) is nilpotent.
Mat unipotent_ad(const Element& n);

} // namespace nilab
