#include "oracle.hpp"

#include "nilab/errors.hpp"
#include "nilab/subspace.hpp"
#include "nilab/triplets.hpp"

#include <doctest.h>

using namespace nilab;
using oracle::diag;
using oracle::unit;

TEST_CASE("partitions") {
  CHECK(parse_partition("2,3,2").parts == std::vector<unsigned>{3, 2, 2});
  CHECK(parse_partition("3,2,2").to_string() == "3,2,2");
  CHECK_THROWS_AS(parse_partition("3,,1"), partition_error);
  CHECK_THROWS_AS(parse_partition("0"), partition_error);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(4).front().parts == std::vector<unsigned>{4});
  CHECK(valid_for(Family::B, parse_partition("3,1,1")));
  CHECK(!valid_for(Family::B, parse_partition("4,1")));
  CHECK(valid_for(Family::C, parse_partition("2,1,1")));
  CHECK(!valid_for(Family::C, parse_partition("3,1")));
  // sp(4): (4), (2,2), (2,1,1), zero
  CHECK(nilpotent_partitions(*build_algebra(Family::C, 2)).size() == 4);
  CHECK(nilpotent_partitions(*build_algebra(Family::A, 3)).back().parts == std::vector<unsigned>{1, 1, 1, 1});
}

TEST_CASE("nilpotents from partitions in sl(n)") {
  auto sl2 = build_algebra(Family::A, 1);
  CHECK(nilpotent_from_partition(*sl2, parse_partition("2")).matrix() == unit(2, 1, 2));
  auto sl3 = build_algebra(Family::A, 2);
  CHECK(nilpotent_from_partition(*sl3, parse_partition("3")).matrix() == unit(3, 1, 2) + unit(3, 2, 3));
  CHECK(nilpotent_from_partition(*sl3, parse_partition("2,1")).matrix() == unit(3, 1, 2));
  CHECK_THROWS_AS(nilpotent_from_partition(*sl3, parse_partition("2,2")), partition_error);
  CHECK_THROWS_AS(nilpotent_from_partition(*build_algebra(Family::B, 2), parse_partition("4,1")), partition_error);
}

TEST_CASE("sl2 completion, closed form") {
  auto sl2 = build_algebra(Family::A, 1);
  Triplet t = sl2_complete(*sl2, sl2->from_matrix(unit(2, 1, 2)));
  CHECK(t.h.matrix() == diag({1, -1}));
  CHECK(t.f.matrix() == unit(2, 2, 1));

  auto sl3 = build_algebra(Family::A, 2);
  Triplet r = sl2_complete(*sl3, sl3->from_matrix(unit(3, 1, 2) + unit(3, 2, 3)));
  CHECK(r.h.matrix() == diag({2, 0, -2}));
  CHECK(r.f.matrix() == Rat(2) * unit(3, 2, 1) + Rat(2) * unit(3, 3, 2));

  Triplet m = sl2_complete(*sl3, sl3->from_matrix(unit(3, 1, 2)));
  CHECK(m.h.matrix() == diag({1, -1, 0}));
  CHECK(m.f.matrix() == unit(3, 2, 1));

  CHECK_THROWS_AS(sl2_complete(*sl3, sl3->zero()), contract_error);
  CHECK_THROWS_AS(sl2_complete(*sl3, sl3->from_matrix(diag({1, -1, 0}))), contract_error);
}

TEST_CASE("sl2 completion, linear-system fallback") {
  // Not in Jordan form: conjugate of a regular nilpotent.
  auto sl3 = build_algebra(Family::A, 2);
  Element e = sl3->from_matrix(unit(3, 1, 2) + unit(3, 2, 3) + Rat(5) * unit(3, 1, 3));
  Triplet t = sl2_complete(*sl3, e);
  CHECK(t.e == e);
  CHECK(bracket(t.h, t.e) == Rat(2) * t.e);
  CHECK(bracket(t.h, t.f) == Rat(-2) * t.f);
  CHECK(bracket(t.e, t.f) == t.h);
}

TEST_CASE("every partition gives a valid triplet with integral h") {
  const std::vector<std::pair<Family, unsigned>> algs{
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
      {Family::C, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};
  for (auto [fam, r] : algs) {
    auto g = build_algebra(fam, r);
    for (const auto& p : nilpotent_partitions(*g)) {
      if (p.parts.front() == 1)
        continue;
      INFO(g->name() << " " << p.to_string());
      Triplet t = triplet_from_partition(*g, p);
      CHECK(jordan_type(t.e.matrix()) == p);
      CHECK(bracket(t.h, t.e) == Rat(2) * t.e);
      CHECK(bracket(t.h, t.f) == Rat(-2) * t.f);
      CHECK(bracket(t.e, t.f) == t.h);
      for (const auto& piece : h_graduation(t.h, Subspace::whole(*g)))
        CHECK(piece.eigenvalue.get_den() == 1);
    }
  }
}

TEST_CASE("principal triplets") {
  const std::vector<std::pair<Family, unsigned>> algs{{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                                      {Family::B, 2}, {Family::C, 2}, {Family::B, 3},
                                                      {Family::C, 3}, {Family::D, 4}};
  for (auto [fam, r] : algs) {
    auto g = build_algebra(fam, r);
    INFO(g->name());
    Triplet t = principal_triplet(*g);
    auto z = centralizer(t.e);
    CHECK(z.dim() == g->rank());
    std::vector<Rat> eig, expected;
    for (const auto& piece : h_graduation(t.h, z))
      for (std::size_t k = 0; k < piece.piece.dim(); ++k)
        eig.push_back(piece.eigenvalue);
    for (const auto& gen : g->generators())
      expected.push_back(Rat(2 * gen.exponent));
    std::sort(expected.begin(), expected.end());
    CHECK(eig == expected);
    for (const auto& piece : h_graduation(t.h, Subspace::whole(*g)))
      CHECK(piece.eigenvalue.get_num() % 2 == 0);
  }
  CHECK(principal_partition(*build_algebra(Family::D, 3)).parts == std::vector<unsigned>{5, 1});
}
