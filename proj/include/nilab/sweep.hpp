#pragma once

#include "nilab/index.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilab {

struct PairAudit {
  std::size_t i = 0, j = 0;  // 1-based
  Vec alphas;
  std::optional<Rat> c_actual;
  Rat c_printed;
  Rat c_derived;
};

/// Full normalizer/index pipeline outcome for one nilpotent orbit.
struct OrbitReport {
  std::string algebra;  // e.g. "A2"
  Partition partition;
  bool skipped = false;
  bool extended_scope = false;  // non-principal B/C/D orbit, or repeated exponents
  std::string note;
  std::optional<std::string> error;

  std::size_t dim_g = 0, dim_z = 0, dim_delta = 0, dim_eta = 0;
  std::vector<unsigned> selected;
  std::vector<unsigned> pair_exponents;
  bool distinct_exponents = true;
  bool hypothesis_ok = false;
  std::optional<std::size_t> ind;
  std::optional<std::size_t> generic_rank;
  std::vector<std::vector<long>> rank_sample_points;
  std::vector<Rat> betas;
  std::optional<Rat> gamma;
  std::optional<Rat> epsilon;
  std::string det;
  std::vector<PairAudit> audits;
  CheckReport checks;

  /// Every check passed and nothing threw.
  bool passed() const { return !error && checks.all_passed(); }
};

/// Runs every stage on one orbit. Errors are captured in the report.
OrbitReport run_orbit(const Algebra& g, const Partition& p, std::uint64_t seed = 0);

/// All nilpotent orbits of the algebra in partition order; parallel across
/// orbits, capped by the NILAB_THREADS environment variable. The zero orbit is
/// reported as skipped.
std::vector<OrbitReport> sweep(const Algebra& g, std::uint64_t seed = 0);

/// Thread cap from NILAB_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

} // namespace nilab
