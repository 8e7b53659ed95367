#include "oracle.hpp"

#include "nilab/errors.hpp"
#include "nilab/index.hpp"
#include "nilab/sweep.hpp"

#include <doctest.h>

using namespace nilab;
using oracle::diag;
using oracle::unit;

namespace {

PairData regular_sl3(const Algebra& g) { return build_pair_data(g, principal_triplet(g)); }

} // namespace

TEST_CASE("pair data") {
  auto sl3 = build_algebra(Family::A, 2);
  PairData pd = regular_sl3(*sl3);
  CHECK(pd.hypothesis_ok);
  CHECK(pd.s() == 2);
  CHECK(pd.pair_exponents == std::vector<unsigned>{1, 2});
  CHECK(pd.z_vec[0] == Rat(2) * pd.triplet.e);
  CHECK(pd.z_vec[1].matrix() == Rat(3) * unit(3, 1, 3));
  CHECK(pd.y_vec[0] == Rat(2) * pd.triplet.h);
  CHECK(pd.y_vec[1].matrix() == Rat(6) * unit(3, 1, 2) - Rat(6) * unit(3, 2, 3));
  CHECK(pd.eta.dim() == 4);

  PairData sub = build_pair_data(*sl3, triplet_from_partition(*sl3, parse_partition("2,1")));
  CHECK(sub.hypothesis_ok);
  CHECK(sub.s() == 1);
  CHECK(sub.pair_exponents == std::vector<unsigned>{1});
  CHECK(sub.z_vec[0].matrix() == Rat(2) * unit(3, 1, 2));
  CHECK(sub.y_vec[0].matrix() == Rat(2) * diag({1, -1, 0}));
  CHECK(sub.delta.dim() == 1);

  auto sl2 = build_algebra(Family::A, 1);
  PairData p2 = build_pair_data(*sl2, principal_triplet(*sl2));
  CHECK(p2.z_vec[0] == Rat(2) * p2.triplet.e);
  CHECK(p2.y_vec[0] == Rat(2) * p2.triplet.h);
}

TEST_CASE("pair relations") {
  auto sl2 = build_algebra(Family::A, 1);
  CHECK(pair_relations_check(build_pair_data(*sl2, principal_triplet(*sl2))).all_passed());
  auto sl3 = build_algebra(Family::A, 2);
  PairData pd = regular_sl3(*sl3);
  CHECK(pair_relations_check(pd).all_passed());
  CHECK(bracket(pd.triplet.e, pd.y_vec[1]).matrix() == Rat(-12) * unit(3, 1, 3));
  CHECK(bracket(pd.triplet.h, pd.y_vec[1]) == Rat(2) * pd.y_vec[1]);
}

TEST_CASE("bracket matrix, structure and index") {
  auto sl2 = build_algebra(Family::A, 1);
  PairData p2 = build_pair_data(*sl2, principal_triplet(*sl2));
  auto a2 = bracket_matrix(p2);
  CHECK(a2.entries[0][0] == Rat(8) * p2.triplet.e);
  auto sc2 = structure_checks(p2, a2);
  CHECK(sc2.report.all_passed());
  CHECK(sc2.betas == std::vector<Rat>{4});
  CHECK(index_pair(p2, a2).ind == 0);
  auto ds2 = det_shape_check(p2, a2, sc2.betas);
  CHECK(ds2.regular);
  CHECK(ds2.gamma == 4);
  CHECK(ds2.report.all_passed());

  auto sl3 = build_algebra(Family::A, 2);
  PairData pd = regular_sl3(*sl3);
  auto a = bracket_matrix(pd);
  CHECK(a.entries[0][0] == Rat(8) * pd.triplet.e);
  CHECK(a.entries[0][1].matrix() == Rat(24) * unit(3, 1, 3));
  CHECK(a.entries[1][0] == a.entries[0][1]);
  CHECK(a.entries[1][1].is_zero());
  auto sc = structure_checks(pd, a);
  CHECK(sc.report.all_passed());
  CHECK(sc.betas == std::vector<Rat>{8, 8});
  auto ir = index_pair(pd, a);
  CHECK(ir.ind == 0);
  CHECK(ir.rank.rank == 2);
  CHECK(ir.consistent);
  auto ds = det_shape_check(pd, a, sc.betas);
  CHECK(ds.det.to_string() == "-576*t2^2");
  CHECK(ds.epsilon == -1);
  CHECK(ds.gamma == -64);
  CHECK(ds.report.all_passed());

  PairData sub = build_pair_data(*sl3, triplet_from_partition(*sl3, parse_partition("2,1")));
  auto as = bracket_matrix(sub);
  CHECK(as.entries[0][0].matrix() == Rat(8) * unit(3, 1, 2));
  CHECK(index_pair(sub, as).ind == 0);
  auto dss = det_shape_check(sub, as, structure_checks(sub, as).betas);
  CHECK(!dss.det.is_zero());
  CHECK(dss.det.degree() == 1);
}

TEST_CASE("convolution audit") {
  auto sl3 = build_algebra(Family::A, 2);
  PairData pd = regular_sl3(*sl3);
  auto c = convolution_at(pd, 0, 1);
  CHECK(c.d_ij.matrix() == Rat(6) * unit(3, 1, 3));
  CHECK(c.d_ji.matrix() == Rat(12) * unit(3, 1, 3));
  CHECK(c.grad.matrix() == Rat(18) * unit(3, 1, 3));
  CHECK(c.bracket.matrix() == Rat(24) * unit(3, 1, 3));
  REQUIRE(c.c_actual);
  CHECK(*c.c_actual == rat(4, 3));
  CHECK(c.c_printed == rat(2, 3));
  CHECK(c.alphas == std::vector<Rat>{0, 6});
  CHECK(c.report.all_passed());

  auto v = convolution_at(pd, 1, 1);
  CHECK(v.bracket.is_zero());
  CHECK(v.d_ij.is_zero());
  CHECK(!v.c_actual);

  auto sl2 = build_algebra(Family::A, 1);
  PairData p2 = build_pair_data(*sl2, principal_triplet(*sl2));
  auto c2 = convolution_at(p2, 0, 0);
  CHECK(c2.grad == Rat(8) * p2.triplet.e);
  CHECK(*c2.c_actual == 1);
  CHECK(c2.c_printed == rat(1, 2));
}

TEST_CASE("hypothesis violations are refused") {
  auto so7 = build_algebra(Family::B, 3);
  PairData pd = build_pair_data(*so7, triplet_from_partition(*so7, parse_partition("3,3,1")));
  CHECK(!pd.hypothesis_ok);
  CHECK_THROWS_AS(require_hypothesis(pd), hypothesis_error);
  CHECK_THROWS_AS(pair_relations_check(pd), hypothesis_error);
  CHECK_THROWS_AS(bracket_matrix(pd), hypothesis_error);
}

TEST_CASE("sweeps over sl(3) and sl(4)") {
  for (unsigned r : {2u, 3u}) {
    auto g = build_algebra(Family::A, r);
    auto reports = sweep(*g);
    CHECK(reports.size() == partitions_of(r + 1).size());
    CHECK(reports.back().skipped);
    CHECK(reports.back().note == "e = 0");
    for (const auto& o : reports) {
      if (o.skipped)
        continue;
      INFO(o.partition.to_string());
      CHECK(o.passed());
      CHECK(o.hypothesis_ok);
      CHECK(o.ind == std::optional<std::size_t>(0));
    }
  }
}

TEST_CASE("pipeline properties on every sl(5) orbit") {
  auto g = build_algebra(Family::A, 4);
  for (const auto& p : nilpotent_partitions(*g)) {
    if (p.parts.front() == 1)
      continue;
    INFO(p.to_string());
    PairData pd = build_pair_data(*g, triplet_from_partition(*g, p));
    REQUIRE(pd.hypothesis_ok);
    CHECK(pd.eta.dim() == pd.zcent.dim() + pd.delta.dim());
    auto a = bracket_matrix(pd);
    for (std::size_t i = 0; i < pd.s(); ++i)
      for (std::size_t j = 0; j < pd.s(); ++j) {
        CHECK(pd.delta.contains(a.entries[i][j]));
        CHECK(a.entries[i][j] == a.entries[j][i]);
        const unsigned w = pd.pair_exponents[i] + pd.pair_exponents[j] - 1;
        if (std::find(pd.pair_exponents.begin(), pd.pair_exponents.end(), w) == pd.pair_exponents.end())
          CHECK(a.entries[i][j].is_zero());
        if (i + j + 2 > pd.s() + 1)
          CHECK(a.entries[i][j].is_zero());
      }
  }
}

TEST_CASE("rescaling the form keeps the index data") {
  auto g1 = build_algebra(Family::A, 3);
  auto g5 = build_algebra(Family::A, 3, Rat(5));
  for (const char* text : {"4", "2,2", "3,1"}) {
    auto p = parse_partition(text);
    auto o1 = run_orbit(*g1, p), o5 = run_orbit(*g5, p);
    CHECK(o1.hypothesis_ok == o5.hypothesis_ok);
    CHECK(o1.generic_rank == o5.generic_rank);
    CHECK(o1.ind == o5.ind);
    CHECK(o5.passed());
  }
}
