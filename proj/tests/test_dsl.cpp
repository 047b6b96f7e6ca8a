#include "doctest.h"
#include "tga/catalog.hpp"
#include "tga/dsl.hpp"
#include "tga/errors.hpp"

using namespace tga;

TEST_CASE("parse a small algebra") {
  const auto d = dsl::parse(R"(
    # comment line
    algebra ex {
      generators: a, b, c;
      modulus: 4;
      order: a^4 = 1;
      order: b^2 = 1;
      order: c^2 = a^2;   # power relation with a group word
      relation: [c, a] = w(1) * a^2;
      relation: [a, b] = w(2);
    })");
  CHECK(d.kind == dsl::Document::Kind::Algebra);
  CHECK(d.name == "ex");
  CHECK(d.generators == std::vector<std::string>{"a", "b", "c"});
  CHECK(d.relations.size() == 2);
  CHECK(d.relations[0].commutator);
  const auto pres = dsl::instantiate(d);
  CHECK(pres.modulus == 4);
  CHECK(pres.orders == std::vector<long long>{4, 2, 2});
  CHECK(pres.relations.back().scalar.exponent == 2);
}

TEST_CASE("constants in exponents") {
  const auto d = dsl::parse("group g { generators: a, b; order: a^(p^2) = 1; order: b^p = 1; "
                            "relation: [b, a] = a^(alpha*p); }");
  const auto pres = dsl::instantiate(d, {{"p", 5}, {"alpha", 2}});
  CHECK(pres.orders == std::vector<long long>{25, 5});
  CHECK(build_group(pres)->order() == 125);
  CHECK_THROWS_AS(dsl::instantiate(d), InvalidArgument);
}

TEST_CASE("sweep parameters") {
  const auto d = dsl::parse("sweep s { generators: a, b; modulus: 4; param t in mu(2); param u in mu(4); "
                            "order: a^2 = 1; order: b^2 = 1; relation: [a, b] = t * u^3; }");
  const auto pres = dsl::instantiate(d);
  REQUIRE(pres.parameters.size() == 2);
  CHECK(pres.parameters[1].root_order == 4);
  std::size_t seen = 0;
  const auto stats = sweep_presentation_cocycles(pres, [&](const std::vector<int>&, const TwistedAlgebra&) { ++seen; });
  CHECK(seen == stats.consistent);
  CHECK(stats.consistent + stats.skipped == 8);
}

TEST_CASE("parse errors carry positions") {
  try {
    dsl::parse("group g {\n  generators: a;\n  order: a^2 = 1;\n  relation: a $ a = 1;\n}");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 15);
  }
  CHECK_THROWS_AS(dsl::parse(""), ParseError);
  CHECK_THROWS_AS(dsl::parse("group g { }"), ParseError);
  CHECK_THROWS_AS(dsl::parse("group g { generators: a; order: a^2 = 1; wibble: a; }"), ParseError);
  CHECK_THROWS_AS(dsl::parse("group g { generators: a, b; order: a^2 = 1; order: b^2 = 1; relation: [a, b] = w(1); }"),
                  ParseError);
  CHECK_THROWS_AS(
      dsl::parse("algebra g { generators: a; modulus: 2; order: a^2 = 1; relation: w(1) * a * a = 1; }"), ParseError);
  CHECK_THROWS_AS(dsl::parse("algebra g { generators: a; modulus: 2; param t in mu(2); order: a^2 = t; }"),
                  ParseError);
  CHECK_THROWS_AS(dsl::parse("group g { generators: a; order: a^2 = 1; order: a^3 = 1; }"), ParseError);
  CHECK_THROWS_AS(dsl::parse("group g { generators: a, a; order: a^2 = 1; }"), ParseError);
  CHECK_THROWS_AS(dsl::parse("group g { generators: a; order: a^2 = 1"), ParseError);
}

TEST_CASE("undeclared generators and missing orders") {
  CHECK_THROWS_AS(dsl::parse("group g { generators: a; order: a^2 = 1; relation: [a, b] = 1; }"),
                  UndeclaredGenerator);
  CHECK_THROWS_AS(dsl::parse("group g { generators: a, b; order: a^2 = 1; relation: [a, b] = 1; }"), MissingOrder);
}

TEST_CASE("print and parse round trip on every catalog file") {
  const auto paths = catalog_paths();
  CHECK(paths.size() >= 40);
  for (const auto& path : paths) {
    const auto text = catalog_source(path);
    REQUIRE(text);
    const auto d = dsl::parse(*text);
    const std::string printed = dsl::print(d);
    CHECK_MESSAGE(dsl::parse(printed) == d, path);
    CHECK_MESSAGE(dsl::print(dsl::parse(printed)) == printed, path);
  }
}

TEST_CASE("catalog ids") {
  CHECK(CatalogId::parse("table1_viii:5").p == 5);
  CHECK(CatalogId::parse("table16_ix").str() == "table16_ix");
  CHECK_THROWS_AS(CatalogId::parse("table1_viii:x"), BadCatalogId);
  CHECK_THROWS_AS(catalog_group(CatalogId::parse("nosuch")), BadCatalogId);
  CHECK_THROWS_AS(catalog_group(CatalogId::parse("table1_xvi")), BadCatalogId);
  CHECK_THROWS_AS(catalog_group(CatalogId::parse("table1_viii_p3")), BadCatalogId);
  CHECK_THROWS_AS(catalog_group(CatalogId::parse("table1_xi_general:3")), BadCatalogId);
  CHECK(catalog_group(CatalogId::parse("table1_xi_general:5"))->order() == 625);
  CHECK(smallest_nonresidue(7) == 3);
  CHECK(smallest_nonresidue(3) == 2);
}
