#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tga/cocycles.hpp"
#include "tga/errors.hpp"

using namespace tga;

namespace {

std::vector<long long> sorted_orders(const CohomologyBasis& b) {
  auto o = b.orders;
  std::sort(o.begin(), o.end());
  return o;
}

Cocycle random_class_member(const CohomologyBasis& b, std::mt19937& rng) {
  Cocycle f(b.group, b.modulus);
  for (std::size_t i = 0; i < b.generators.size(); ++i)
    f = f * b.generators[i].pow(std::uniform_int_distribution<long long>(0, b.orders[i] - 1)(rng));
  const int m = b.modulus * 4;
  return f * coboundary(b.group, test::random_cochain(b.group->order(), m, rng), m);
}

}  // namespace

TEST_CASE("roots of unity") {
  RootOfUnity i(4, 1);
  CHECK((i * i).exponent == 2);
  CHECK((i * i * i * i).is_one());
  CHECK(i.order() == 4);
  CHECK(i.embed(8).exponent == 2);
  CHECK(RootOfUnity(2, 1).same_value(RootOfUnity(4, 2)));
  CHECK((RootOfUnity(2, 1) * RootOfUnity(3, 1)).modulus == 6);
  CHECK(i.inverse().exponent == 3);
  CHECK_THROWS_AS(i.embed(6), InvalidArgument);
}

TEST_CASE("validate_cocycle") {
  auto k4 = test::abelian({2, 2});
  CHECK_NOTHROW(validate_cocycle(Cocycle(k4, 4)));
  std::vector<int> t(16, 0);
  t[1 * 4 + 2] = 1;
  try {
    validate_cocycle(Cocycle(k4, 4, t));
    FAIL("expected NotACocycle");
  } catch (const NotACocycle& e) {
    // the reported triple really violates the identity
    Cocycle f(k4, 4, t);
    const auto& g = *k4;
    CHECK((f(e.x, e.y) + f(g.mul(e.x, e.y), e.z)) % 4 != (f(e.y, e.z) + f(e.x, g.mul(e.y, e.z))) % 4);
  }
  std::vector<int> unnormalized(16, 0);
  unnormalized[1] = 1;
  CHECK_THROWS_AS(validate_cocycle(Cocycle(k4, 4, unnormalized)), NotACocycle);
}

TEST_CASE("coboundaries validate and are null-cohomologous") {
  std::mt19937 rng(7);
  auto d4 = test::dihedral(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = test::random_cochain(8, 4, rng);
    const Cocycle f = coboundary(d4, c, 4);
    CHECK_NOTHROW(validate_cocycle(f));
    CHECK(cohomologous(f, Cocycle(d4, 4)));
  }
  CHECK(coboundary(d4, std::vector<int>(8, 0), 4) == Cocycle(d4, 4));
}

TEST_CASE("H2 of cyclic groups is trivial") {
  for (long long n = 1; n <= 32; ++n) {
    const auto b = h2_basis(test::cyclic(n));
    CHECK(b.generators.empty());
    CHECK(b.class_count() == 1);
  }
}

TEST_CASE("H2 agrees with the brute-force cochain oracle") {
  SUBCASE("C2 x C2") {
    auto g = test::abelian({2, 2});
    CHECK(oracle::class_count(*g, 2) == 2);
    CHECK(sorted_orders(h2_basis(g)) == std::vector<long long>{2});
  }
  SUBCASE("C2 x C2 x C2") {
    auto g = test::abelian({2, 2, 2});
    CHECK(oracle::class_count(*g, 2) == 8);
    CHECK(sorted_orders(h2_basis(g)) == std::vector<long long>{2, 2, 2});
  }
  SUBCASE("D4") {
    auto g = test::dihedral(4);
    CHECK(oracle::class_count(*g, 2) == 2);
    CHECK(sorted_orders(h2_basis(g)) == std::vector<long long>{2});
  }
  SUBCASE("C4 x C4 via alternating forms") {
    auto g = test::abelian({4, 4});
    const auto forms = oracle::alternating_forms_2gen(4, 4, 4);
    CHECK(forms.size() == 4);
    const auto b = h2_basis(g);
    CHECK(sorted_orders(b) == std::vector<long long>{4});
    // the forms of the enumerated classes are exactly the oracle's forms
    std::set<std::vector<int>> seen;
    ClassEnumerator it(b);
    while (auto f = it.next()) {
      std::vector<int> alpha(256);
      for (Elem x = 0; x < 16; ++x)
        for (Elem y = 0; y < 16; ++y) {
          const RootOfUnity a = alpha_form(*f, x, y);
          REQUIRE((a.exponent * 4) % a.modulus == 0);
          alpha[static_cast<std::size_t>(x * 16 + y)] = a.exponent * 4 / a.modulus;
        }
      seen.insert(alpha);
    }
    CHECK(seen == forms);
  }
}

TEST_CASE("class enumeration") {
  auto k4 = test::abelian({2, 2});
  const auto b = h2_basis(k4);
  ClassEnumerator it(b);
  auto first = it.next();
  REQUIRE(first);
  CHECK(*first == Cocycle(k4, b.modulus));
  auto second = it.next();
  REQUIRE(second);
  CHECK_FALSE(it.next());
  CHECK_FALSE(cohomologous(*first, *second));
  // brute force: no mu_4 cochain trivializes the nontrivial class
  bool trivialized = false;
  for (int c1 = 0; c1 < 16; ++c1)
    for (int c2 = 0; c2 < 16; ++c2)
      for (int c3 = 0; c3 < 16; ++c3) {
        const int cc[] = {0, c1, c2, c3};
        if (second->embed(16) == coboundary(k4, cc, 16)) trivialized = true;
      }
  CHECK_FALSE(trivialized);

  const auto empty = h2_basis(test::cyclic(5));
  ClassEnumerator one(empty);
  CHECK(one.next());
  CHECK_FALSE(one.next());

  CHECK_THROWS_AS(ClassEnumerator(h2_basis(test::abelian({2, 2, 2})), 4), TooManyClasses);
}

TEST_CASE("enumerated representatives are pairwise non-cohomologous") {
  for (auto g : {test::abelian({2, 2, 2}), test::abelian({4, 4}), test::abelian({2, 2, 4}),
                 test::dihedral(4)}) {
    const auto b = h2_basis(g);
    std::vector<Cocycle> reps;
    ClassEnumerator it(b);
    while (auto f = it.next()) reps.push_back(*f);
    CHECK(reps.size() == static_cast<std::size_t>(b.class_count()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(cohomologous(reps[i], reps[j]));
  }
}

TEST_CASE("alpha_form is a class invariant (fuzzed)") {
  std::mt19937 rng(11);
  auto d4 = test::dihedral(4);
  auto g3 = test::abelian({2, 4});
  int cases = 0;
  for (auto g : {d4, g3}) {
    const auto b = h2_basis(g);
    for (int trial = 0; trial < 600; ++trial) {
      const Cocycle f = random_class_member(b, rng);
      const Cocycle h = f * coboundary(g, test::random_cochain(g->order(), 16, rng), 16);
      for (Elem x = 0; x < static_cast<Elem>(g->order()); ++x)
        for (Elem y = 0; y < static_cast<Elem>(g->order()); ++y) {
          if (!g->commute(x, y)) continue;
          CHECK(alpha_form(f, x, y).same_value(alpha_form(h, x, y)));
          CHECK((alpha_form(f, x, y) * alpha_form(f, y, x)).is_one());
        }
      ++cases;
    }
  }
  CHECK(cases >= 1000);
  CHECK_THROWS_AS(alpha_form(Cocycle(d4, 4), 1, 4), NotCommuting);
}

TEST_CASE("cohomologous is an equivalence relation (fuzzed)") {
  std::mt19937 rng(5);
  auto g = test::abelian({2, 2, 2});
  const auto b = h2_basis(g);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cocycle a = random_class_member(b, rng);
    const Cocycle c = random_class_member(b, rng);
    const Cocycle d = random_class_member(b, rng);
    CHECK(cohomologous(a, a));
    CHECK(cohomologous(a, c) == cohomologous(c, a));
    if (cohomologous(a, c) && cohomologous(c, d)) CHECK(cohomologous(a, d));
  }
}

TEST_CASE("restriction") {
  auto k4 = test::abelian({2, 2});
  const auto b = h2_basis(k4);
  const Cocycle f = b.generators.at(0);
  const Cocycle triv = restrict(f, Subgroup{{0}});
  CHECK(triv.group().order() == 1);
  CHECK(restrict(f, whole_group(*k4)).table() == f.table());
  const Cocycle half = restrict(f, Subgroup{{0, 1}});
  CHECK_NOTHROW(validate_cocycle(half));
}

TEST_CASE("cocycle text round trip") {
  auto d4 = test::dihedral(4);
  const Cocycle f = h2_basis(d4).generators.at(0);
  std::stringstream ss;
  write_cocycle(ss, f, "D4");
  const Cocycle back = read_cocycle(ss, d4);
  CHECK(back == f);
  std::stringstream bad("cocycle modulus=4 group=D4 n=3\n0 0 0\n");
  CHECK_THROWS_AS(read_cocycle(bad, d4), FormatError);
}

TEST_CASE("H2 respects the order cap") {
  CHECK_THROWS_AS(h2_basis(test::cyclic(101)), ResourceBudgetExceeded);
}
