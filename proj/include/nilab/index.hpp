#pragma once

#include "nilab/check_report.hpp"
#include "nilab/polynomial.hpp"
#include "nilab/subspace.hpp"
#include "nilab/triplets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilab {

/// Everything attached to a nilpotent e that the normalizer/centre analysis
/// needs: the gradients selected as a basis of the centre delta of z(e),
/// their exponents, z_j = Q_j(e) and y_j = dQ_j(e).h.
struct PairData {
  const Algebra* algebra = nullptr;
  Triplet triplet;
  std::vector<Element> gradients_at_e;  // P_j(e) for every generator j
  std::vector<unsigned> selected;       // 1-based generator indices j_1 < ... < j_s
  std::vector<unsigned> pair_exponents; // m'_1 <= ... <= m'_s
  std::vector<Element> z_vec;
  std::vector<Element> y_vec;
  Subspace zcent, delta, eta;
  bool distinct_exponents = true;
  bool hypothesis_ok = false;
  std::string selection_note;

  std::size_t s() const { return selected.size(); }
};

PairData build_pair_data(const Algebra& g, const Triplet& t);

/// Throws hypothesis_error unless pd.hypothesis_ok.
void require_hypothesis(const PairData& pd);

/// [e,y_j] = -2m'_j z_j, [f,z_j] = -y_j, eta = z + span{y_j} with
/// dim eta = dim z + dim delta, and the h-weights of y_j and z_j.
/// Throws identity_error when a relation fails.
CheckReport pair_relations_check(const PairData& pd);

/// The s x s matrix ([y_i, z_j]) with entries in delta.
struct BracketTensor {
  std::vector<std::vector<Element>> entries;
  std::vector<std::vector<Vec>> delta_coords;

  std::size_t size() const { return entries.size(); }
  /// Entries as linear forms in the delta coordinates t1, t2, ...
  PolyMat as_linear_forms() const;
};

/// Throws identity_error if some entry leaves delta or the matrix is not
/// symmetric.
BracketTensor bracket_matrix(const PairData& pd);

std::vector<std::string> delta_variables(std::size_t dim);

struct StructureChecks {
  CheckReport report;
  std::vector<Rat> betas;  // [y_i, z_(s+1-i)] = beta_i z_s
};

/// Vanishing whenever m'_i + m'_j - 1 is not a pair exponent, pseudo-
/// triangularity, antidiagonal proportional to z_s, and the h-weight
/// 2(m'_i + m'_j - 1) of every entry. Throws identity_error on failure.
StructureChecks structure_checks(const PairData& pd, const BracketTensor& a);

struct IndexResult {
  std::size_t ind = 0;
  GenericRank rank;
  bool det_nonzero = false;
  bool consistent = false;  // ind == 0 exactly when det A != 0
};

/// ind(eta, delta) = dim delta - generic rank of A.
IndexResult index_pair(const PairData& pd, const BracketTensor& a, std::uint64_t seed = 0);

struct DetShape {
  Poly det;
  Poly expected;
  Poly zs_form;  // z_s as a linear form in delta coordinates
  Rat epsilon;   // sign of the antidiagonal permutation
  Rat gamma;     // det A = gamma * (z_s form)^s
  bool regular = false;
  CheckReport report;
};

/// det A = epsilon beta_1 ... beta_s (z_s)^s. Throws identity_error on mismatch.
DetShape det_shape_check(const PairData& pd, const BracketTensor& a, const std::vector<Rat>& betas);

struct Convolution {
  std::size_t i = 0, j = 0;  // 0-based pair
  Element d_ij, d_ji;        // dQ_i(e).Q_j(e), dQ_j(e).Q_i(e)
  Element bracket;           // [y_i, z_j]
  Element grad;              // gradient of omega_ij = T(Q_i, Q_j) at e
  Vec alphas;                // grad = sum_k alphas[k] z_k
  std::optional<Rat> c_actual;  // [y_i, z_j] = c_actual * grad, when grad != 0
  Rat c_printed;                // m'_i m'_j / (m'_i + m'_j)
  Rat c_derived;                // 2 m'_i m'_j / (m'_i + m'_j)
  CheckReport report;
};

/// Throws identity_error if the gradient leaves delta or a relation fails.
Convolution convolution_at(const PairData& pd, std::size_t i, std::size_t j);

} // namespace nilab
