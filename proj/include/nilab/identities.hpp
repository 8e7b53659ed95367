#pragma once

#include "nilab/check_report.hpp"
#include "nilab/invariants.hpp"
#include "nilab/subspace.hpp"
#include "nilab/triplets.hpp"

#include <cstdint>
#include <vector>

namespace nilab {

/// Random element with integer coordinates in [-bound, bound].
Element random_element(const Algebra& g, Sampler& sampler, long bound = 3);

/// Random nilpotent: integer combination of strictly upper triangular basis
/// elements.
Element random_upper_nilpotent(const Algebra& g, Sampler& sampler, long bound = 2);

/// Runs the gradient-field identities on `samples` seeded random triples
/// (x, y, z) plus a random nilpotent n per sample. One check per identity per
/// sample; failures are recorded, never thrown.
///   equivariance   dP(x).[y,x] = [y,P(x)]
///   exchange       d^kP(x).y^(k)/k! = d^(m-k)P(y).x^(m-k)/(m-k)!   (all k)
///   propagation    [z, d^kP(x).y^(k)] = d^(k+1)P(x).[z,x].y^(k) + k d^kP(x).[z,y].y^(k-1)
///   membership     P(x) in the centre of z(x)
///   group          P(Ad(exp n) x) = Ad(exp n) P(x)
/// An explicit list of (x, y) pairs can be passed instead of random samples.
CheckReport verify_field_identities(const Algebra& g, unsigned j, std::size_t samples, std::uint64_t seed);
CheckReport verify_field_identities(const Algebra& g, unsigned j,
                                    const std::vector<std::pair<Element, Element>>& pairs, std::uint64_t seed);

/// v[j-1][k] = d^kP_j(h).e^(k) and w[j-1][k] = d^kP_j(h).f^(k), 0 <= k <= m_j.
struct Sl2Vectors {
  std::vector<std::vector<Element>> v, w;
  CheckReport report;
};

/// Builds the vectors and checks the weight, raising/lowering and pumping
/// relations; throws identity_error on any failure.
Sl2Vectors sl2_vectors(const Algebra& g, const Triplet& t);

/// P_j(e) independent, [e, P_j(e)] = 0, [h, P_j(e)] = 2 m_j P_j(e).
/// Throws identity_error on failure.
CheckReport kostant_independence(const Algebra& g, const Triplet& t);

struct TriangularDecomposition {
  Subspace h_space, n_plus, n_minus;
  CheckReport report;
};

/// Throws identity_error on any dimension or grading mismatch.
TriangularDecomposition triangular_decomposition(const Algebra& g, const Triplet& t);

struct ShiftRank {
  std::size_t rank = 0;
  bool degenerate = false;  // fewer than max m_j + 1 distinct nonzero nodes
};

/// dim span{[e, P_j(e + t h)] : j, t in t_samples}.
ShiftRank mf_shift_rank(const Algebra& g, const Triplet& t, const std::vector<Rat>& t_samples);

/// Nodes 1..max m_j + 1.
std::vector<Rat> default_shift_nodes(const Algebra& g);

} // namespace nilab
