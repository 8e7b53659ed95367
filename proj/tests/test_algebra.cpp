#include "oracle.hpp"

#include "nilab/algebra.hpp"
#include "nilab/errors.hpp"
#include "nilab/identities.hpp"
#include "nilab/subspace.hpp"

#include <doctest.h>

using namespace nilab;
using oracle::diag;
using oracle::unit;

namespace {

std::vector<AlgebraPtr> small_algebras() {
  return {build_algebra(Family::A, 1), build_algebra(Family::A, 2), build_algebra(Family::A, 3),
          build_algebra(Family::B, 2), build_algebra(Family::C, 2), build_algebra(Family::B, 3),
          build_algebra(Family::C, 3), build_algebra(Family::D, 3)};
}

std::vector<unsigned> dims_of(const std::vector<GradedPiece>& pieces) {
  std::vector<unsigned> d;
  for (const auto& p : pieces)
    d.push_back(p.piece.dim());
  return d;
}

std::vector<Rat> eigenvalues_of(const std::vector<GradedPiece>& pieces) {
  std::vector<Rat> d;
  for (const auto& p : pieces)
    d.push_back(p.eigenvalue);
  return d;
}

} // namespace

TEST_CASE("dimensions and degrees") {
  auto sl2 = build_algebra(Family::A, 1);
  CHECK(sl2->dim() == 3);
  CHECK(sl2->generator_degrees() == std::vector<unsigned>{2});
  auto sl3 = build_algebra(Family::A, 2);
  CHECK(sl3->dim() == 8);
  CHECK(sl3->generator_degrees() == std::vector<unsigned>{2, 3});
  auto sp4 = build_algebra(Family::C, 2);
  CHECK(sp4->dim() == 10);
  CHECK(sp4->generator_degrees() == std::vector<unsigned>{2, 4});
  CHECK(build_algebra(Family::B, 3)->dim() == 21);
  CHECK(build_algebra(Family::D, 4)->dim() == 28);
  CHECK(build_algebra(Family::D, 4)->generator_degrees() == std::vector<unsigned>{2, 4, 4, 6});
  CHECK(build_algebra(Family::D, 4)->duplicated_exponents());
  CHECK(!build_algebra(Family::D, 5)->duplicated_exponents());
  CHECK(!build_algebra(Family::D, 2)->simple());
  CHECK_THROWS_AS(build_algebra(Family::A, 0), unsupported_error);
  CHECK_THROWS_AS(build_algebra(Family::D, 1), unsupported_error);
  CHECK_THROWS_AS(parse_family("E"), unsupported_error);
}

TEST_CASE("basis matrices lie in the algebra") {
  for (const auto& g : small_algebras()) {
    const Mat& s = g->defining_form();
    for (const auto& b : g->basis()) {
      if (g->family() == Family::A)
        CHECK(b.trace() == 0);
      else
        CHECK((b.transpose() * s + s * b).is_zero());
    }
    CHECK(rank(Mat::from_rows([&] {
            std::vector<Vec> rows;
            for (const auto& b : g->basis())
              rows.push_back(b.entries());
            return rows;
          }(), g->matrix_size() * g->matrix_size())) == g->dim());
    CHECK(det(g->gram()) != 0);
    CHECK(g->gram() == g->gram().transpose());
  }
}

TEST_CASE("brackets in sl(2) and sl(3)") {
  auto sl2 = build_algebra(Family::A, 1);
  Element e = sl2->from_matrix(unit(2, 1, 2)), f = sl2->from_matrix(unit(2, 2, 1)), h = sl2->from_matrix(diag({1, -1}));
  CHECK(bracket(e, f) == h);
  CHECK(bracket(h, e) == Rat(2) * e);
  CHECK(bracket(h, f) == Rat(-2) * f);

  auto sl3 = build_algebra(Family::A, 2);
  CHECK(bracket(sl3->from_matrix(unit(3, 1, 2)), sl3->from_matrix(unit(3, 2, 3))) == sl3->from_matrix(unit(3, 1, 3)));
  CHECK_THROWS_AS(bracket(e, sl3->from_matrix(unit(3, 1, 2))), contract_error);
  CHECK_THROWS_AS(sl3->from_matrix(Mat::identity(3)), contract_error);
}

TEST_CASE("trace form") {
  auto sl2 = build_algebra(Family::A, 1);
  Element e = sl2->from_matrix(unit(2, 1, 2)), f = sl2->from_matrix(unit(2, 2, 1)), h = sl2->from_matrix(diag({1, -1}));
  CHECK(trace_form(e, f) == 1);
  CHECK(trace_form(h, h) == 2);
  CHECK(trace_form(e, e) == 0);
  CHECK(build_algebra(Family::A, 1, Rat(5))->gram() == Rat(5) * sl2->gram());
  CHECK(sl2->killing_ratio() == 4);
}

TEST_CASE("structure constants are antisymmetric and satisfy Jacobi") {
  for (const auto& g : small_algebras()) {
    if (g->rank() > 3)
      continue;
    const std::size_t d = g->dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t k = 0; k < d; ++k)
          REQUIRE(g->structure_constant(a, b, k) == -g->structure_constant(b, a, k));
    // Jacobi on all triples is cubic in dim; sample triples for the larger ones.
    Sampler s(g->dim());
    const std::size_t limit = d <= 10 ? d * d * d : 600;
    for (std::size_t n = 0; n < limit; ++n) {
      std::size_t a, b, c;
      if (d <= 10) {
        a = n / (d * d);
        b = (n / d) % d;
        c = n % d;
      } else {
        a = s.uniform(0, d - 1);
        b = s.uniform(0, d - 1);
        c = s.uniform(0, d - 1);
      }
      Element x = g->basis_element(a), y = g->basis_element(b), z = g->basis_element(c);
      Element j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
      REQUIRE(j.is_zero());
    }
  }
}

TEST_CASE("trace form invariance on random triples") {
  for (const auto& g : small_algebras()) {
    Sampler s(7);
    for (int trial = 0; trial < 20; ++trial) {
      Element x = random_element(*g, s), y = random_element(*g, s), z = random_element(*g, s);
      CHECK(trace_form(bracket(z, x), y) == -trace_form(x, bracket(z, y)));
    }
  }
}

TEST_CASE("ad matches the bracket") {
  auto g = build_algebra(Family::C, 2);
  Sampler s(2);
  Element x = random_element(*g, s), y = random_element(*g, s);
  CHECK(ad(x) * y.coords == bracket(x, y).coords);
}

TEST_CASE("centralizers") {
  auto sl2 = build_algebra(Family::A, 1);
  Element e2 = sl2->from_matrix(unit(2, 1, 2));
  auto z2 = centralizer(e2);
  CHECK(z2 == Subspace::span(*sl2, std::vector<Element>{e2}));

  auto sl3 = build_algebra(Family::A, 2);
  Element e = sl3->from_matrix(unit(3, 1, 2) + unit(3, 2, 3));
  auto z = centralizer(e);
  CHECK(z.dim() == 2);
  CHECK(z == Subspace::span(*sl3, std::vector<Element>{e, sl3->from_matrix(unit(3, 1, 3))}));
  CHECK(centralizer(sl3->from_matrix(unit(3, 1, 2))).dim() == 4);
}

TEST_CASE("centralizer dimension is at least the rank") {
  for (const auto& g : small_algebras()) {
    Sampler s(31);
    for (int trial = 0; trial < 20; ++trial) {
      Element x = random_element(*g, s, 5);
      CHECK(centralizer(x).dim() >= g->rank());
    }
    // Generic x is regular.
    Element x = random_element(*g, s, 50);
    CHECK(centralizer(x).dim() == g->rank());
  }
}

TEST_CASE("centers") {
  auto sl3 = build_algebra(Family::A, 2);
  Element e = sl3->from_matrix(unit(3, 1, 2) + unit(3, 2, 3));
  auto z = centralizer(e);
  CHECK(center_of(z) == z);
  Element e12 = sl3->from_matrix(unit(3, 1, 2));
  CHECK(center_of(centralizer(e12)) == Subspace::span(*sl3, std::vector<Element>{e12}));
  auto sl2 = build_algebra(Family::A, 1);
  CHECK(center_of(Subspace::whole(*sl2)).dim() == 0);
  // span{e, f} is not a subalgebra
  CHECK_THROWS_AS(center_of(Subspace::span(*sl2, std::vector<Element>{sl2->from_matrix(unit(2, 1, 2)),
                                                                      sl2->from_matrix(unit(2, 2, 1))})),
                  contract_error);
}

TEST_CASE("normalizers") {
  auto sl2 = build_algebra(Family::A, 1);
  Element e = sl2->from_matrix(unit(2, 1, 2)), h = sl2->from_matrix(diag({1, -1}));
  CHECK(normalizer_of(Subspace::span(*sl2, std::vector<Element>{e})) ==
        Subspace::span(*sl2, std::vector<Element>{h, e}));
  CHECK(normalizer_of(Subspace::whole(*sl2)).dim() == 3);

  auto sl3 = build_algebra(Family::A, 2);
  Element e3 = sl3->from_matrix(unit(3, 1, 2) + unit(3, 2, 3));
  CHECK(normalizer_of(centralizer(e3)).dim() == 4);
}

TEST_CASE("normalizer of a centralizer has dimension dim z + dim center") {
  for (const auto& g : small_algebras()) {
    for (unsigned n = 2; n <= g->matrix_size(); ++n) {
      Sampler s(n);
      Element x = random_upper_nilpotent(*g, s);
      auto z = centralizer(x);
      CHECK(normalizer_of(z).dim() == z.dim() + center_of(z).dim());
    }
  }
}

TEST_CASE("h-graduation") {
  auto sl2 = build_algebra(Family::A, 1);
  auto g2 = h_graduation(sl2->from_matrix(diag({1, -1})), Subspace::whole(*sl2));
  CHECK(eigenvalues_of(g2) == std::vector<Rat>{-2, 0, 2});
  CHECK(dims_of(g2) == std::vector<unsigned>{1, 1, 1});

  auto sl3 = build_algebra(Family::A, 2);
  Element h = sl3->from_matrix(diag({2, 0, -2}));
  auto g3 = h_graduation(h, Subspace::whole(*sl3));
  CHECK(eigenvalues_of(g3) == std::vector<Rat>{-4, -2, 0, 2, 4});
  CHECK(dims_of(g3) == std::vector<unsigned>{1, 2, 2, 2, 1});

  auto z = centralizer(sl3->from_matrix(unit(3, 1, 2) + unit(3, 2, 3)));
  auto gz = h_graduation(h, z);
  CHECK(eigenvalues_of(gz) == std::vector<Rat>{2, 4});

  // ad of a nonzero nilpotent is not diagonalizable
  CHECK_THROWS_AS(h_graduation(sl3->from_matrix(unit(3, 1, 2)), Subspace::whole(*sl3)), graduation_error);
}

TEST_CASE("characteristic polynomial") {
  // x^2 - 5x - 2 for [[1,2],[3,4]]
  CHECK(characteristic_polynomial(Mat{{1, 2}, {3, 4}}) == from_ints({-2, -5, 1}));
}

TEST_CASE("unipotent adjoint action") {
  auto sl2 = build_algebra(Family::A, 1);
  CHECK(unipotent_ad(sl2->zero()) == Mat::identity(3));
  Element e = sl2->from_matrix(unit(2, 1, 2)), f = sl2->from_matrix(unit(2, 2, 1)), h = sl2->from_matrix(diag({1, -1}));
  CHECK(unipotent_ad(e) * f.coords == (f + h - e).coords);
  CHECK_THROWS_AS(unipotent_ad(h), contract_error);

  for (const auto& g : small_algebras()) {
    Sampler s(9);
    Element n = random_upper_nilpotent(*g, s);
    Mat ad_n = unipotent_ad(n);
    CHECK(ad_n * unipotent_ad(Rat(-1) * n) == Mat::identity(g->dim()));
    CHECK(ad_n.transpose() * g->gram() * ad_n == g->gram());
    for (int trial = 0; trial < 5; ++trial) {
      Element x = random_element(*g, s), y = random_element(*g, s);
      Element ax = g->element(ad_n * x.coords), ay = g->element(ad_n * y.coords);
      CHECK(g->element(ad_n * bracket(x, y).coords) == bracket(ax, ay));
    }
  }
}
