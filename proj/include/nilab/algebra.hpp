#pragma once

#include "nilab/matrix.hpp"
#include "nilab/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nilab {

enum class Family { A, B, C, D };

char family_letter(Family f);
/// Accepts "A".."D" (case-insensitive); throws unsupported_error otherwise.
Family parse_family(const std::string& text);

enum class GeneratorKind { trace_power, pfaffian };

/// One homogeneous generator p_j of the invariant polynomials.
struct InvariantGenerator {
  unsigned index;     // 1-based, ascending degree
  unsigned degree;    // m_j + 1
  unsigned exponent;  // m_j
  GeneratorKind kind;
};

class Algebra;

/// A point of the algebra in basis coordinates.
struct Element {
  const Algebra* algebra = nullptr;
  Vec coords;

  bool is_zero() const { return nilab::is_zero(coords); }
  Mat matrix() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& c : a.coords)
      c = -c;
    return a;
  }
  friend Element operator*(const Rat& c, Element a) {
    for (auto& x : a.coords)
      x *= c;
    return a;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra == b.algebra && a.coords == b.coords;
  }
};

/// Matrix realization of a classical simple Lie algebra.
///
/// Basis ordering, with N the matrix size and a' = N + 1 - a:
///   A  sl(N): row-major over positions (i, j) except (N, N); position (i, i)
///      carries H_i = E_ii - E_{i+1,i+1}, every other position carries E_ij.
///   B, D  so(N) for the form S with S_{a,a'} = 1: row-major over positions
///      with a + b < N + 1, element E_ab - E_{b'a'}.
///   C  sp(N) for J with J_{a,a'} = +1 (a <= N/2) and -1 otherwise: row-major
///      over positions with a + b <= N + 1, element E_{a,a'} on the
///      antidiagonal and E_ab + J_{a',a} J_{b,b'} E_{b'a'} elsewhere.
///
/// The invariant form is T(x, y) = form_scale * tr(xy). The Killing form is
/// killing_ratio() * tr(xy).
class Algebra {
public:
  Algebra(Family family, unsigned rank, Rat form_scale);

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }
  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  std::string name() const;  // e.g. "sl(3)"
  std::string type_label() const;  // e.g. "A2"

  const std::vector<Mat>& basis() const { return basis_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Mat& gram() const { return gram_; }
  const Rat& form_scale() const { return form_scale_; }
  Rat killing_ratio() const;
  /// The bilinear form defining so/sp; the identity for sl.
  const Mat& defining_form() const { return form_; }

  const std::vector<InvariantGenerator>& generators() const { return generators_; }
  std::vector<unsigned> generator_degrees() const;
  /// D_r with r even has two generators of degree r.
  bool duplicated_exponents() const;
  /// D_2 is not simple; it is still buildable for testing.
  bool simple() const { return !(family_ == Family::D && rank_ == 2); }

  /// Structure constants: [b_a, b_b] = sum_k c(a, b, k) b_k.
  const Rat& structure_constant(std::size_t a, std::size_t b, std::size_t k) const {
    return structure_[(a * dim() + b) * dim() + k];
  }
  /// Nonzero (k, c(a, b, k)) pairs.
  const std::vector<std::pair<std::size_t, Rat>>& structure_terms(std::size_t a, std::size_t b) const {
    return sparse_structure_[a * dim() + b];
  }

  Element zero() const;
  Element basis_element(std::size_t k) const;
  Element element(Vec coords) const;
  /// Exact coordinates of an N x N matrix; throws contract_error if the matrix
  /// is not in the algebra.
  Element from_matrix(const Mat& m) const;
  Mat to_matrix(const Vec& coords) const;

  /// Coordinates read off a matrix known to lie in the algebra.
  Vec coords_unchecked(const Mat& m) const;

  /// Indices of basis elements that are strictly upper triangular.
  std::vector<std::size_t> upper_nilpotent_basis() const;

private:
  Family family_;
  unsigned rank_;
  std::size_t n_;
  Rat form_scale_;
  Mat form_;
  std::vector<Mat> basis_;
  std::vector<std::string> labels_;
  // Coordinate k = sum of coeff * entry over coord_map_[k].
  std::vector<std::vector<std::pair<std::size_t, Rat>>> coord_map_;
  Vec structure_;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> sparse_structure_;
  Mat gram_;
  std::vector<InvariantGenerator> generators_;

  void build_basis();
  void build_coordinate_map();
  void build_tables();
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A: sl(r+1), B: so(2r+1), C: sp(2r), D: so(2r) with r >= 2.
AlgebraPtr build_algebra(Family family, unsigned rank, const Rat& form_scale = Rat(1));

void require_same_algebra(const Element& x, const Element& y);

Element bracket(const Element& x, const Element& y);
Rat trace_form(const Element& x, const Element& y);
/// dim x dim matrix of ad(x) in basis coordinates (column k is [x, b_k]).
Mat ad(const Element& x);

} // namespace nilab
