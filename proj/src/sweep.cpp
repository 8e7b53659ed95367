#include "nilab/sweep.hpp"
#include "nilab/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace nilab {

OrbitReport run_orbit(const Algebra& g, const Partition& p, std::uint64_t seed) {
  OrbitReport out;
  out.algebra = g.type_label();
  out.partition = p;
  out.dim_g = g.dim();
  out.extended_scope = g.family() != Family::A && !(p == principal_partition(g));
  if (p.parts.empty() || p.parts.front() == 1) {
    out.skipped = true;
    out.note = "e = 0";
    return out;
  }
  try {
    const Triplet t = triplet_from_partition(g, p);
    const PairData pd = build_pair_data(g, t);
    out.dim_z = pd.zcent.dim();
    out.dim_delta = pd.delta.dim();
    out.dim_eta = pd.eta.dim();
    out.selected = pd.selected;
    out.pair_exponents = pd.pair_exponents;
    out.distinct_exponents = pd.distinct_exponents;
    out.hypothesis_ok = pd.hypothesis_ok;
    out.note = pd.selection_note;
    if (!pd.hypothesis_ok)
      return out;

    out.checks.append(pair_relations_check(pd));
    const BracketTensor a = bracket_matrix(pd);
    out.checks.add("bracket_matrix", "[y_i,z_j] in delta and symmetric", true);
    if (!pd.distinct_exponents) {
      const IndexResult ir = index_pair(pd, a, seed);
      out.ind = ir.ind;
      out.generic_rank = ir.rank.rank;
      out.rank_sample_points = ir.rank.sample_points;
      out.checks.add("index_det_consistency", "ind(eta,delta) = 0 iff det A != 0", ir.consistent);
      out.extended_scope = true;
      out.note += "; repeated exponents: ordering-dependent steps (pseudo-triangularity, det shape, convolution) refused";
      return out;
    }
    const StructureChecks sc = structure_checks(pd, a);
    out.checks.append(sc.report);
    out.betas = sc.betas;

    const IndexResult ir = index_pair(pd, a, seed);
    out.ind = ir.ind;
    out.generic_rank = ir.rank.rank;
    out.rank_sample_points = ir.rank.sample_points;
    out.checks.add("index_det_consistency", "ind(eta,delta) = 0 iff det A != 0", ir.consistent);

    const DetShape ds = det_shape_check(pd, a, sc.betas);
    out.checks.append(ds.report);
    out.det = ds.det.to_string();
    out.epsilon = ds.epsilon;
    if (ds.regular)
      out.gamma = ds.gamma;

    for (std::size_t i = 0; i < pd.s(); ++i)
      for (std::size_t j = i; j < pd.s(); ++j) {
        const Convolution c = convolution_at(pd, i, j);
        out.checks.append(c.report);
        out.audits.push_back({i + 1, j + 1, c.alphas, c.c_actual, c.c_printed, c.c_derived});
      }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("NILAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0)
      n = static_cast<unsigned>(v);
  }
  return n == 0 ? 1 : n;
}

std::vector<OrbitReport> sweep(const Algebra& g, std::uint64_t seed) {
  const auto parts = nilpotent_partitions(g);
  std::vector<OrbitReport> out(parts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++)
      out[i] = run_orbit(g, parts[i], seed);
  };
  const unsigned workers = std::min<std::size_t>(worker_count(), parts.size());
  if (workers <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(work);
  pool.clear();
  return out;
}

} // namespace nilab
