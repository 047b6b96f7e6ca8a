#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tga/errors.hpp"
#include "tga/twisted.hpp"

using namespace tga;

namespace {

// D4 with the nontrivial cohomology class (r = sigma, s = tau)
TwistedAlgebra d4_nontrivial() {
  auto d4 = test::dihedral(4);
  return TwistedAlgebra(h2_basis(d4).generators.at(0));
}

}  // namespace

TEST_CASE("basis products and conjugation") {
  const TwistedAlgebra a = d4_nontrivial();
  const auto& g = a.group();
  for (Elem h = 0; h < 8; ++h) {
    CHECK(a.basis_product(0, h).first.is_one());
    CHECK(a.conjugate_basis(0, h).first.is_one());
    CHECK(a.conjugate_basis(0, h).second == h);
  }
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      CHECK(a.conjugate_basis(x, y).second == g.conj(x, y));
      if (g.commute(x, y)) CHECK(a.conjugate_basis(x, y).first.same_value(alpha_form(a.cocycle(), x, y)));
    }
}

TEST_CASE("D4 with the nontrivial class") {
  const TwistedAlgebra a = d4_nontrivial();
  const Elem r2 = 2, s = 4;
  CHECK(alpha_form(a.cocycle(), r2, s).same_value(RootOfUnity(2, 1)));
  CHECK_FALSE(a.is_f_regular(r2));
  CHECK(a.is_f_regular(0));
  CHECK(a.is_f_regular(1));
  const auto r = regularity_report(a);
  CHECK(r.center_dim == 2);
  CHECK_FALSE(r.nondegenerate);
  CHECK(sz_dim(a, r) == 4);
  CHECK(semicenter_basis(a, r).size() == 4);
  CHECK_THROWS_AS(phi_map(a, r), DegenerateCocycle);
  CHECK_THROWS_AS(classify_semicenter(a), DegenerateCocycle);
}

TEST_CASE("trivial cocycles") {
  for (auto g : {test::dihedral(4), test::dihedral(3), test::abelian({2, 4})}) {
    const TwistedAlgebra a{Cocycle(g, 1)};
    CHECK(a.power_normalized());
    const auto r = regularity_report(a);
    CHECK(r.center_dim == conjugacy_classes(*g).size());
    CHECK(r.nondegenerate == (g->order() == 1));
  }
  const TwistedAlgebra one{Cocycle(test::cyclic(1), 1)};
  const auto r = regularity_report(one);
  CHECK(r.nondegenerate);
  const auto s = classify_semicenter(one, r);
  CHECK(s.sz_dim == 1);
  CHECK(s.commutative);
  CHECK(s.simple);
}

TEST_CASE("abelian groups: Sz is everything") {
  for (auto g : {test::abelian({4, 4}), test::abelian({2, 2}), test::abelian({2, 2, 2})}) {
    const auto b = h2_basis(g);
    ClassEnumerator it(b);
    while (auto f = it.next()) {
      const TwistedAlgebra a(*f);
      const auto r = regularity_report(a);
      CHECK(sz_dim(a, r) == g->order());
    }
  }
}

TEST_CASE("nondegenerate abelian algebra is simple with a bijective phi") {
  auto g = test::abelian({4, 4});
  const TwistedAlgebra a(h2_basis(g).generators.at(0));
  const auto r = regularity_report(a);
  REQUIRE(r.nondegenerate);
  const auto s = classify_semicenter(a, r);
  CHECK(s.sz_dim == 16);
  CHECK(s.simple);
  CHECK_FALSE(s.commutative);
  CHECK(s.phi.kernel == std::vector<int>{0});
  CHECK_FALSE(sz_commutator_crosscheck(a, s.basis));
}

TEST_CASE("power normalization") {
  std::mt19937 rng(3);
  auto d4 = test::dihedral(4);
  const auto f = h2_basis(d4).generators.at(0);
  for (int trial = 0; trial < 50; ++trial) {
    const Cocycle h = f * coboundary(d4, test::random_cochain(8, 16, rng), 16);
    const TwistedAlgebra a(h);
    const TwistedAlgebra n = power_normalize(a);
    CHECK(n.power_normalized());
    CHECK(cohomologous(n.cocycle(), h));
    for (Elem x = 0; x < 8; ++x) CHECK(n.power_scalar(x).is_one());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("crosscheck on a single vector") {
  const TwistedAlgebra a = d4_nontrivial();
  const auto r = regularity_report(a);
  const auto basis = semicenter_basis(a, r);
  CHECK(sz_commutator_crosscheck(a, {basis.front()}));
}
