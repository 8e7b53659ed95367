#pragma once

#include "nilab/rational.hpp"

#include <functional>
#include <vector>

namespace nilab {

struct Sample {
  Rat t;
  Vec value;
};

/// Exact coefficient vectors c_0..c_degree with value(t) = sum_k c_k t^k.
/// The first degree+1 samples determine the coefficients through a Vandermonde
/// solve; any further samples must be reproduced exactly, otherwise the map had
/// a higher degree than declared and degree_mismatch_error is thrown.
/// Repeated nodes are a contract_error.
std::vector<Vec> interpolate_vector_poly(const std::vector<Sample>& samples, unsigned degree);

/// sum_k coeffs[k] t^k
Vec evaluate_vector_poly(const std::vector<Vec>& coeffs, const Rat& t);

/// Coefficients c[a][b] of t^a s^b for a map of total degree <= degree,
/// recovered from the (degree+1)^2 grid t, s in {0..degree}.
std::vector<std::vector<Vec>> interpolate_grid(const std::function<Vec(const Rat&, const Rat&)>& f,
                                               unsigned degree);

} // namespace nilab
