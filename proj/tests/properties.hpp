#pragma once

// Fuzzed invariant suites shared by test_properties and the acceptance
// binary. Each suite returns how many cases it ran and how many failed. The
// checks recompute what they can straight from the cocycle table instead of
// asking the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tga/catalog.hpp"
#include "tga/constructions.hpp"
#include "tga/dsl.hpp"
#include "tga/twisted.hpp"

namespace tga::prop {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string detail;
};

struct PoolGroup {
  std::string id;
  GroupPtr group;
  CohomologyBasis basis;
  std::shared_ptr<const GroupInfo> info;
};

/// Catalog groups at p = 3 and a few small abelian groups, with H^2 bases.
inline const std::vector<PoolGroup>& pool() {
  static const std::vector<PoolGroup> groups = [] {
    std::vector<PoolGroup> out;
    for (const std::vector<long long>& orders :
         std::vector<std::vector<long long>>{{2, 2}, {2, 2, 2}, {4, 2}, {4, 4}, {3, 3}, {2, 2, 2, 2, 2}}) {
      GroupPtr g = cyclic_product(orders);
      std::string id = "C";
      for (std::size_t i = 0; i < orders.size(); ++i) id += (i ? "xC" : "") + std::to_string(orders[i]);
      out.push_back({id, g, h2_basis(g), group_info(g)});
    }
    std::vector<CatalogId> ids;
    for (const auto& f : catalog_families()) {
      if (f.rfind("table1_", 0) == 0)
        ids.push_back({f, 3});
      else
        ids.push_back({f, 0});
    }
    for (const auto& id : ids) {
      GroupPtr g = catalog_group(id);
      out.push_back({id.str(), g, h2_basis(g), group_info(g)});
    }
    return out;
  }();
  return groups;
}

/// A random class representative times a random coboundary.
inline TwistedAlgebra random_algebra(const PoolGroup& pg, std::mt19937& rng) {
  const int m = pg.basis.modulus;
  Cocycle f(pg.group, m);
  for (std::size_t i = 0; i < pg.basis.generators.size(); ++i) {
    std::uniform_int_distribution<long long> d(0, pg.basis.orders[i] - 1);
    f = f * pg.basis.generators[i].pow(d(rng));
  }
  std::uniform_int_distribution<int> v(0, m - 1);
  std::vector<int> c(pg.group->order(), 0);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = v(rng);
  f = f * coboundary(pg.group, c, m);
  return TwistedAlgebra(f, pg.info);
}

inline const PoolGroup& random_group(std::mt19937& rng) {
  const auto& p = pool();
  std::uniform_int_distribution<std::size_t> d(0, p.size() - 1);
  return p[d(rng)];
}

inline Elem random_elem(const FiniteGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(g.order()) - 1);
  return d(rng);
}

// alpha_f(g, h) as an exponent over the cocycle's modulus, straight from the table.
inline int alpha_exp(const Cocycle& f, Elem g, Elem h) {
  const int m = f.modulus();
  return ((f(g, h) - f(h, g)) % m + m) % m;
}

inline bool regular_by_table(const Cocycle& f, Elem x) {
  const FiniteGroup& g = f.group();
  for (Elem h = 0; h < static_cast<Elem>(g.order()); ++h)
    if (g.commute(x, h) && alpha_exp(f, x, h) != 0) return false;
  return true;
}

/// Every consistent algebra reachable from the shipped sweep files plus the
/// catalog algebras.
inline std::vector<TwistedAlgebra> collected_algebras() {
  std::vector<TwistedAlgebra> out;
  for (const auto& fam : catalog_algebra_families())
    out.push_back(catalog_cocycle({fam, fam.rfind("table1_", 0) == 0 ? 3 : 0}));
  for (const std::string fam : {"table1_ix", "table1_x", "table16_viii", "theorem5_64"}) {
    const auto entry = catalog_entry({fam, fam.rfind("table1_", 0) == 0 ? 3 : 0}, "sweeps");
    const auto pres = dsl::instantiate(entry.document, entry.constants);
    std::size_t kept = 0;
    sweep_presentation_cocycles(pres, [&](const std::vector<int>&, const TwistedAlgebra& a) {
      if (kept++ % 8 == 0) out.push_back(a);
    });
  }
  return out;
}

inline SuiteResult cocycle_identity_after_collection(std::size_t cases, unsigned seed) {
  SuiteResult r{"cocycle identity after collection"};
  std::mt19937 rng(seed);
  const auto algebras = collected_algebras();
  std::uniform_int_distribution<std::size_t> pick(0, algebras.size() - 1);
  for (std::size_t i = 0; i < cases; ++i) {
    const TwistedAlgebra& a = algebras[pick(rng)];
    const FiniteGroup& g = a.group();
    const Cocycle& f = a.cocycle();
    const int m = f.modulus();
    const Elem x = random_elem(g, rng), y = random_elem(g, rng), z = random_elem(g, rng);
    const long long lhs = f(x, y) + f(g.mul(x, y), z), rhs = f(y, z) + f(x, g.mul(y, z));
    ++r.cases;
    if ((lhs - rhs) % m != 0) ++r.violations;
  }
  r.detail = std::to_string(algebras.size()) + " collected algebras";
  return r;
}

inline SuiteResult alpha_coboundary_invariance(std::size_t cases, unsigned seed) {
  SuiteResult r{"alpha coboundary invariance"};
  std::mt19937 rng(seed);
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    const TwistedAlgebra a = random_algebra(pg, rng);
    const FiniteGroup& g = a.group();
    // coboundary of a cochain with values in a larger root group
    const int big = a.modulus() * exponent(g);
    std::uniform_int_distribution<int> v(0, big - 1);
    std::vector<int> c(g.order(), 0);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = v(rng);
    const Cocycle f2 = a.cocycle().embed(big) * coboundary(pg.group, c, big);
    for (int k = 0; k < 20; ++k) {
      const Elem x = random_elem(g, rng);
      Elem y = random_elem(g, rng);
      if (!g.commute(x, y)) y = g.power(x, 2);
      ++r.cases;
      if (!alpha_form(a.cocycle(), x, y).same_value(alpha_form(f2, x, y))) ++r.violations;
    }
  }
  return r;
}

inline SuiteResult regularity_invariance(std::size_t cases, unsigned seed) {
  SuiteResult r{"regularity conjugacy and cohomology invariance"};
  std::mt19937 rng(seed);
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    const TwistedAlgebra a = random_algebra(pg, rng);
    const FiniteGroup& g = a.group();
    const int m = a.modulus();
    std::uniform_int_distribution<int> v(0, m - 1);
    std::vector<int> c(g.order(), 0);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = v(rng);
    const TwistedAlgebra b(a.cocycle() * coboundary(pg.group, c, m), pg.info);
    for (int k = 0; k < 10; ++k) {
      const Elem x = random_elem(g, rng), t = random_elem(g, rng);
      const Elem y = g.conj(t, x);
      const bool rx = a.is_f_regular(x);
      ++r.cases;
      if (rx != b.is_f_regular(y) || rx != regular_by_table(a.cocycle(), x)) ++r.violations;
    }
  }
  return r;
}

inline SuiteResult commuting_scalar_gcd_bound(std::size_t cases, unsigned seed) {
  SuiteResult r{"commuting scalar order divides gcd of element orders"};
  std::mt19937 rng(seed);
  std::size_t algebras = 0;
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    const TwistedAlgebra a = power_normalize(random_algebra(pg, rng));
    ++algebras;
    const FiniteGroup& g = a.group();
    if (!a.power_normalized()) {
      ++r.violations;
      continue;
    }
    for (int k = 0; k < 20; ++k) {
      const Elem x = random_elem(g, rng);
      Elem y = random_elem(g, rng);
      if (!g.commute(x, y)) y = g.power(x, 3);
      const auto [scalar, image] = a.conjugate_basis(x, y);
      const int bound = std::gcd(g.element_order(x), g.element_order(y));
      ++r.cases;
      if (image != y || bound % scalar.order() != 0) ++r.violations;
    }
  }
  r.detail = std::to_string(algebras) + " power-normalized algebras";
  return r;
}

// [G : G'C_G(x)] from the product set.
inline std::size_t coset_index_by_products(const FiniteGroup& g, const Subgroup& d, Elem x) {
  std::set<Elem> prod;
  const Subgroup c = centralizer(g, x);
  for (Elem a : d.elements)
    for (Elem b : c.elements) prod.insert(g.mul(a, b));
  return g.order() / prod.size();
}

inline SuiteResult sz_dim_double_count(std::size_t cases, unsigned seed) {
  SuiteResult r{"sz_dim double count"};
  std::mt19937 rng(seed);
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    if (pg.group->order() > 64) continue;
    const TwistedAlgebra a = random_algebra(pg, rng);
    const RegularityReport rep = regularity_report(a);
    std::size_t by_characters = 0;
    for (const auto& row : rep.regular_classes) by_characters += row.size();
    std::size_t by_index = 0;
    for (Elem x : rep.gamma) by_index += coset_index_by_products(a.group(), pg.info->derived, x);
    ++r.cases;
    if (sz_dim(a, rep) != by_characters || by_characters != by_index) ++r.violations;
  }
  return r;
}

// G'-conjugacy classes inside Gamma(f) n G' against the index sum.
inline SuiteResult derived_class_count_identity(std::size_t cases, unsigned seed) {
  SuiteResult r{"G'-classes of regular elements in G' against the index sum"};
  std::mt19937 rng(seed);
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    if (pg.group->order() > 64) continue;
    const TwistedAlgebra a = random_algebra(pg, rng);
    const FiniteGroup& g = a.group();
    const Subgroup& d = pg.info->derived;
    const RegularityReport rep = regularity_report(a);
    std::set<Elem> in_gamma;
    std::size_t rhs = 0;
    for (Elem x : rep.gamma) {
      if (!d.contains(x)) continue;
      rhs += coset_index_by_products(g, d, x);
      for (Elem y : pg.info->classes[static_cast<std::size_t>(pg.info->class_of[static_cast<std::size_t>(x)])])
        in_gamma.insert(y);
    }
    std::set<Elem> seen;
    std::size_t lhs = 0;
    for (Elem x : in_gamma) {
      if (seen.count(x)) continue;
      ++lhs;
      for (Elem t : d.elements) seen.insert(g.conj(t, x));
    }
    ++r.cases;
    if (lhs != rhs) ++r.violations;
  }
  return r;
}

inline SuiteResult regular_in_derived_restricts(std::size_t cases, unsigned seed) {
  SuiteResult r{"regular elements in G' are regular for the restriction"};
  std::mt19937 rng(seed);
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    if (pg.group->order() > 64) continue;
    const TwistedAlgebra a = random_algebra(pg, rng);
    const Subgroup& d = pg.info->derived;
    const SubgroupGroup sg = subgroup_as_group(a.group(), d);
    const Cocycle fr = restrict(a.cocycle(), d);
    std::map<Elem, Elem> local;
    for (std::size_t i = 0; i < sg.embedding.size(); ++i) local[sg.embedding[i]] = static_cast<Elem>(i);
    const RegularityReport rep = regularity_report(a);
    for (Elem x : rep.gamma) {
      if (!d.contains(x)) continue;
      for (Elem y : pg.info->classes[static_cast<std::size_t>(pg.info->class_of[static_cast<std::size_t>(x)])]) {
        ++r.cases;
        if (!regular_by_table(fr, local.at(y))) ++r.violations;
      }
    }
  }
  return r;
}

/// Nondegenerate random algebras: commutative Sz forces Z(G) <= G' and
/// |Z(G)|^2 <= |G|; nondegenerate forces a square order.
inline SuiteResult commutative_center_bound(std::size_t cases, unsigned seed, std::size_t* commutative_seen = nullptr) {
  SuiteResult r{"commutative Sz bounds the center"};
  std::mt19937 rng(seed);
  std::vector<const PoolGroup*> central;
  for (const auto& pg : pool()) {
    ClassEnumerator en(pg.basis);
    while (auto f = en.next())
      if (regularity_report(TwistedAlgebra(*f, pg.info)).nondegenerate) {
        central.push_back(&pg);
        break;
      }
  }
  std::uniform_int_distribution<std::size_t> pick(0, central.size() - 1);
  std::size_t commutative = 0;
  while (r.cases < cases) {
    const PoolGroup& pg = *central[pick(rng)];
    const TwistedAlgebra a = random_algebra(pg, rng);
    const RegularityReport rep = regularity_report(a);
    if (!rep.nondegenerate) continue;
    const SemicenterReport sz = classify_semicenter(a, rep);
    ++r.cases;
    if (!sz.commutative) continue;
    ++commutative;
    const Subgroup z = center(a.group());
    const bool inside = std::all_of(z.elements.begin(), z.elements.end(),
                                    [&](Elem x) { return pg.info->derived.contains(x); });
    if (!inside || z.order() * z.order() > a.group().order()) ++r.violations;
  }
  if (commutative_seen) *commutative_seen = commutative;
  r.detail = std::to_string(commutative) + " commutative cases";
  return r;
}

inline SuiteResult nondegenerate_square_order(std::size_t cases, unsigned seed, std::size_t* nondegenerate_seen = nullptr) {
  SuiteResult r{"nondegenerate implies square order"};
  std::mt19937 rng(seed);
  std::size_t nd = 0;
  while (r.cases < cases) {
    const PoolGroup& pg = random_group(rng);
    if (pg.group->order() > 64) continue;
    const TwistedAlgebra a = random_algebra(pg, rng);
    // independent regularity count: nondegenerate iff only the identity is regular
    bool only_identity = true;
    for (Elem x = 1; x < static_cast<Elem>(a.group().order()) && only_identity; ++x)
      if (regular_by_table(a.cocycle(), x)) only_identity = false;
    const bool flag = regularity_report(a).nondegenerate;
    const std::size_t n = a.group().order();
    std::size_t s = 0;
    while ((s + 1) * (s + 1) <= n) ++s;
    ++r.cases;
    if (flag != only_identity || (flag && s * s != n)) ++r.violations;
    nd += flag;
  }
  if (nondegenerate_seen) *nondegenerate_seen = nd;
  r.detail = std::to_string(nd) + " nondegenerate cases";
  return r;
}

inline std::vector<SuiteResult> all_suites(std::size_t cases, unsigned seed) {
  return {cocycle_identity_after_collection(cases * 10, seed),
          alpha_coboundary_invariance(cases, seed + 1),
          regularity_invariance(cases, seed + 2),
          commuting_scalar_gcd_bound(cases, seed + 3),
          sz_dim_double_count(cases, seed + 4),
          derived_class_count_identity(cases, seed + 5),
          regular_in_derived_restricts(cases, seed + 6),
          commutative_center_bound(cases, seed + 7),
          nondegenerate_square_order(cases, seed + 8)};
}

}  // namespace tga::prop
