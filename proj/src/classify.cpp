#include "tga/classify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "tga/constructions.hpp"
#include "tga/errors.hpp"

namespace tga {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::size_t isqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::string structure_string(const AbelianStructure& a) {
  if (a.invariant_factors.empty()) return "1";
  std::string s;
  for (long long d : a.invariant_factors) s += (s.empty() ? "C" : " x C") + std::to_string(d);
  return s;
}

AbelianStructure abelianization(const FiniteGroup& g) {
  return abelian_structure(*quotient(g, commutator_subgroup(g)).group);
}

Elem generator_element(const FiniteGroup& g, const std::string& name) {
  const auto& names = g.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return g.generator_indices()[i];
  throw InternalInconsistency("group " + g.name() + " has no generator " + name);
}

std::string roman(const std::string& family) { return family.substr(family.find('_') + 1); }

std::vector<std::string> families_with_prefix(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& f : catalog_families())
    if (f.rfind(prefix, 0) == 0) out.push_back(f);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

TheoremRow row(std::string item, std::string expected, std::string observed, std::string status) {
  TheoremRow r{std::move(item), std::move(expected), std::move(observed), std::move(status), false};
  r.pass = r.expected == r.observed;
  return r;
}

void finish(TheoremReport& r) {
  r.pass = !r.rows.empty() && std::all_of(r.rows.begin(), r.rows.end(), [](const TheoremRow& x) { return x.pass; });
}

std::string verdict_summary(const CentralTypeVerdict& v) {
  return to_string(v.verdict);
}

std::string certificate_summary(const CentralTypeVerdict& v) {
  const Certificate& c = v.certificate;
  switch (c.kind) {
    case Certificate::Kind::WitnessCocycle:
      return "witness cocycle (" + c.witness_source + ")";
    case Certificate::Kind::Obstruction:
      return c.obstructions.front().description;
    case Certificate::Kind::ExhaustedClasses:
      return std::to_string(c.class_count) + " classes, all degenerate";
    case Certificate::Kind::BudgetExceeded:
      return "budget exceeded: " + c.reason;
  }
  return {};
}

// Nondegenerate representatives of H^2(G) in enumeration order.
std::vector<TwistedAlgebra> nondegenerate_classes(const GroupPtr& g, const Budget& budget, long long* total = nullptr) {
  const CohomologyBasis basis = h2_basis(g);
  ClassEnumerator en(basis, budget.max_classes);
  if (total) *total = en.total();
  const auto info = group_info(g);
  std::vector<TwistedAlgebra> out;
  while (auto f = en.next()) {
    TwistedAlgebra a(*f, info);
    if (regularity_report(a).nondegenerate) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

std::string to_string(Obstruction::Kind kind) {
  switch (kind) {
    case Obstruction::Kind::NonSquareOrder: return "non-square order";
    case Obstruction::Kind::CyclicCentralizer: return "cyclic centralizer";
    case Obstruction::Kind::LargeElementOrder: return "large element order";
    case Obstruction::Kind::CenterDoesNotEmbed: return "center does not embed";
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CentralType: return "CentralType";
    case Verdict::NotCentralType: return "NotCentralType";
    case Verdict::Unknown: return "Unknown";
  }
  return {};
}

std::string to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::WitnessCocycle: return "WitnessCocycle";
    case Certificate::Kind::Obstruction: return "Obstruction";
    case Certificate::Kind::ExhaustedClasses: return "ExhaustedClasses";
    case Certificate::Kind::BudgetExceeded: return "BudgetExceeded";
  }
  return {};
}

std::vector<Obstruction> obstructions(const FiniteGroup& g) {
  std::vector<Obstruction> out;
  const std::size_t n = g.order();
  const std::size_t r = isqrt(n);
  if (r * r != n) {
    Obstruction o;
    o.kind = Obstruction::Kind::NonSquareOrder;
    o.description = "order " + std::to_string(n) + " is not a square";
    out.push_back(std::move(o));
  }
  Elem top = 0;
  for (Elem x = 1; x < static_cast<Elem>(n); ++x)
    if (g.element_order(x) > g.element_order(top)) top = x;
  if (static_cast<std::size_t>(g.element_order(top)) > r) {
    Obstruction o;
    o.kind = Obstruction::Kind::LargeElementOrder;
    o.witness = top;
    o.description = "element of order " + std::to_string(g.element_order(top));
    out.push_back(std::move(o));
  }
  for (Elem x = 1; x < static_cast<Elem>(n); ++x) {
    Subgroup c = centralizer(g, x);
    if (is_cyclic(g, c)) {
      Obstruction o;
      o.kind = Obstruction::Kind::CyclicCentralizer;
      o.witness = x;
      o.description = "element " + g.label(x) + " has a cyclic centralizer of order " + std::to_string(c.order());
      o.subgroup = std::move(c);
      out.push_back(std::move(o));
      break;
    }
  }
  Subgroup z = center(g);
  const AbelianStructure zs = abelian_structure(g, z);
  const AbelianStructure ab = abelianization(g);
  if (!embeds(zs, ab)) {
    Obstruction o;
    o.kind = Obstruction::Kind::CenterDoesNotEmbed;
    o.description = "center " + structure_string(zs) + " does not embed into " + structure_string(ab);
    o.subgroup = std::move(z);
    o.center = zs;
    o.abelianization = ab;
    out.push_back(std::move(o));
  }
  return out;
}

bool recheck_obstruction(const FiniteGroup& g, const Obstruction& o) {
  const std::size_t n = g.order();
  const std::size_t r = isqrt(n);
  const bool in_range = o.witness > 0 && static_cast<std::size_t>(o.witness) < n;
  switch (o.kind) {
    case Obstruction::Kind::NonSquareOrder:
      return r * r != n;
    case Obstruction::Kind::CyclicCentralizer:
      return in_range && centralizer(g, o.witness) == o.subgroup && is_cyclic(g, o.subgroup);
    case Obstruction::Kind::LargeElementOrder:
      return in_range && static_cast<std::size_t>(g.element_order(o.witness)) > r;
    case Obstruction::Kind::CenterDoesNotEmbed:
      return center(g) == o.subgroup && abelian_structure(g, o.subgroup) == o.center &&
             abelianization(g) == o.abelianization && !embeds(o.center, o.abelianization);
  }
  return false;
}

CentralTypeVerdict central_type_verdict(const GroupPtr& g, const VerdictOptions& options) {
  const auto t0 = Clock::now();
  CentralTypeVerdict v;
  v.group = options.catalog ? options.catalog->str() : g->name();
  auto done = [&](Verdict verdict) {
    v.verdict = verdict;
    v.elapsed_ms = ms_since(t0);
    return v;
  };

  auto obs = obstructions(*g);
  if (!obs.empty()) {
    v.certificate.kind = Certificate::Kind::Obstruction;
    v.certificate.obstructions = std::move(obs);
    return done(Verdict::NotCentralType);
  }

  if (options.use_catalog && options.catalog && has_catalog_algebra(*options.catalog)) {
    const TwistedAlgebra a = catalog_cocycle(*options.catalog);
    std::optional<Cocycle> f;
    if (a.group_ptr() == g) {
      f = a.cocycle();
    } else if (const auto iso = find_isomorphism(a.group(), *g)) {
      f = transport(a.cocycle(), g, *iso);
    }
    if (f && regularity_report(TwistedAlgebra(*f)).nondegenerate) {
      v.certificate.kind = Certificate::Kind::WitnessCocycle;
      v.certificate.witness = std::move(f);
      v.certificate.witness_source = "catalog";
      return done(Verdict::CentralType);
    }
  }

  auto exceeded = [&](std::string reason) {
    v.certificate = Certificate{};
    v.certificate.kind = Certificate::Kind::BudgetExceeded;
    v.certificate.reason = std::move(reason);
    return done(Verdict::Unknown);
  };

  std::optional<CohomologyBasis> basis;
  std::optional<ClassEnumerator> en;
  try {
    basis = h2_basis(g);
    en.emplace(*basis, options.budget.max_classes);
  } catch (const ResourceBudgetExceeded& e) {
    return exceeded(e.what());
  } catch (const TooManyClasses& e) {
    return exceeded(e.what());
  }

  const auto info = group_info(g);
  const std::size_t n = g->order();
  std::vector<char> universal(n, 1);
  universal[0] = 0;
  Certificate& c = v.certificate;
  c.kind = Certificate::Kind::ExhaustedClasses;
  c.class_count = en->total();
  while (auto f = en->next()) {
    if (ms_since(t0) > options.budget.max_ms)
      return exceeded("wall-clock cap of " + std::to_string(options.budget.max_ms) + " ms reached after " +
                      std::to_string(v.classes_tested) + " of " + std::to_string(c.class_count) + " classes");
    const TwistedAlgebra a(*f, info);
    const RegularityReport rep = regularity_report(a);
    ++v.classes_tested;
    if (rep.nondegenerate) {
      const long long index = en->index() - 1;
      c = Certificate{};
      c.kind = Certificate::Kind::WitnessCocycle;
      c.witness = *f;
      c.witness_source = "enumeration";
      c.witness_index = index;
      return done(Verdict::CentralType);
    }
    std::vector<char> regular(n, 0);
    for (Elem rep_x : rep.f_regular_classes)
      for (Elem x : info->classes[static_cast<std::size_t>(info->class_of[static_cast<std::size_t>(rep_x)])])
        regular[static_cast<std::size_t>(x)] = 1;
    Elem w = 0;
    for (Elem x = 1; x < static_cast<Elem>(n) && !w; ++x)
      if (regular[static_cast<std::size_t>(x)]) w = x;
    c.class_witnesses.push_back(w);
    for (std::size_t x = 0; x < n; ++x) universal[x] = universal[x] && regular[x];
  }
  for (std::size_t x = 0; x < n; ++x)
    if (universal[x]) c.universally_regular.push_back(static_cast<Elem>(x));
  return done(Verdict::NotCentralType);
}

bool recheck_certificate(const GroupPtr& g, const CentralTypeVerdict& v) {
  const Certificate& c = v.certificate;
  switch (c.kind) {
    case Certificate::Kind::WitnessCocycle: {
      if (v.verdict != Verdict::CentralType || !c.witness || c.witness->group_ptr() != g) return false;
      validate_cocycle(*c.witness);
      const Cocycle fresh(g, c.witness->modulus(), c.witness->table());
      const std::size_t r = isqrt(g->order());
      return r * r == g->order() && regularity_report(TwistedAlgebra(fresh)).nondegenerate;
    }
    case Certificate::Kind::Obstruction:
      return v.verdict == Verdict::NotCentralType && !c.obstructions.empty() &&
             std::all_of(c.obstructions.begin(), c.obstructions.end(),
                         [&](const Obstruction& o) { return recheck_obstruction(*g, o); });
    case Certificate::Kind::ExhaustedClasses: {
      if (v.verdict != Verdict::NotCentralType) return false;
      const CohomologyBasis basis = h2_basis(g);
      if (basis.class_count() != c.class_count ||
          c.class_witnesses.size() != static_cast<std::size_t>(c.class_count))
        return false;
      ClassEnumerator en(basis, c.class_count);
      std::size_t i = 0;
      while (auto f = en.next()) {
        const TwistedAlgebra a(*f);
        const Elem w = c.class_witnesses[i];
        if (w == 0 || !a.is_f_regular(w)) return false;
        for (Elem x : c.universally_regular)
          if (!a.is_f_regular(x)) return false;
        ++i;
      }
      return true;
    }
    case Certificate::Kind::BudgetExceeded:
      return v.verdict == Verdict::Unknown;
  }
  return false;
}

CommutativeSzFilter commutative_sz_filter(const FiniteGroup& g) {
  std::size_t p = 2;
  while (g.order() % p) ++p;
  std::size_t n = g.order();
  int k = 0;
  while (n % p == 0) n /= p, ++k;
  if (n != 1 || k != 4) throw InvalidArgument("the filter applies to groups of order p^4");
  const Subgroup z = center(g);
  const Subgroup d = commutator_subgroup(g);
  CommutativeSzFilter out;
  out.center_order = z.order();
  out.derived_order = d.order();
  out.center_in_derived = std::all_of(z.elements.begin(), z.elements.end(), [&](Elem x) { return d.contains(x); });
  out.passes = out.center_in_derived && z.order() < d.order() && z.order() == p;
  return out;
}

namespace {

TheoremReport theorem1(const Budget& budget) {
  TheoremReport r;
  r.name = "theorem1";
  r.p = 3;
  const std::set<std::string> positive = {"iii", "v", "viii", "xiv", "xv"};
  for (const auto& family : families_with_prefix("table1_")) {
    const CatalogId id{family, 3};
    const GroupPtr g = catalog_group(id);
    VerdictOptions opt;
    opt.budget = budget;
    opt.catalog = id;
    CentralTypeVerdict v = central_type_verdict(g, opt);
    const bool expect = positive.count(roman(family)) > 0;
    TheoremRow tr;
    tr.item = id.str();
    tr.expected = expect ? "CentralType" : "NotCentralType";
    tr.observed = verdict_summary(v);
    if (v.verdict == Verdict::Unknown) {
      tr.status = "open";
      tr.pass = false;
    } else {
      tr.status = "proved";
      tr.pass = tr.expected == tr.observed && recheck_certificate(g, v);
    }
    tr.observed += " (" + certificate_summary(v) + ")";
    r.rows.push_back(std::move(tr));
    r.verdicts.push_back(std::move(v));
  }

  // Rows ix and x: every cocycle reachable by scalar-decorated presentations
  // leaves a^p regular.
  for (const std::string family : {"table1_ix", "table1_x"}) {
    const CatalogId id{family, 3};
    const auto entry = catalog_entry(id, "sweeps");
    const auto pres = dsl::instantiate(entry.document, entry.constants);
    std::size_t exceptions = 0;
    const auto stats = sweep_presentation_cocycles(pres, [&](const std::vector<int>&, const TwistedAlgebra& a) {
      const Elem ap = a.group().power(generator_element(a.group(), "a"), 3);
      if (!a.is_f_regular(ap)) ++exceptions;
    });
    const std::size_t total = stats.consistent + stats.skipped;
    TheoremRow tr = row(family + " sweep", "a^3 f-regular in every consistent assignment",
                        exceptions == 0 ? "a^3 f-regular in every consistent assignment"
                                        : std::to_string(exceptions) + " assignments with a^3 not f-regular",
                        "corroborated");
    r.rows.push_back(std::move(tr));
    r.notes.push_back(family + " sweep: " + std::to_string(stats.consistent) + " consistent of " +
                      std::to_string(total) + " assignments");
  }
  for (const auto& v : r.verdicts)
    if (v.certificate.kind == Certificate::Kind::ExhaustedClasses)
      r.notes.push_back(v.group + ": negative verdict proved by exhausting " +
                        std::to_string(v.certificate.class_count) + " cohomology classes");
  finish(r);
  return r;
}

TheoremReport theorem2(const Budget& budget) {
  TheoremReport r;
  r.name = "theorem2";
  r.p = 2;
  const std::set<std::string> positive = {"iii", "v", "ix", "x"};
  for (const auto& family : families_with_prefix("table16_")) {
    const CatalogId id{family, 0};
    const GroupPtr g = catalog_group(id);
    VerdictOptions opt;
    opt.budget = budget;
    opt.catalog = id;
    opt.use_catalog = false;
    CentralTypeVerdict v = central_type_verdict(g, opt);
    TheoremRow tr;
    tr.item = id.str();
    tr.expected = positive.count(roman(family)) ? "CentralType" : "NotCentralType";
    tr.observed = verdict_summary(v);
    tr.status = v.verdict == Verdict::Unknown ? "open" : "proved";
    tr.pass = tr.expected == tr.observed && recheck_certificate(g, v);
    tr.observed += " (" + certificate_summary(v) + ")";
    r.rows.push_back(std::move(tr));

    const auto check_regular = [&](const std::string& gen, const std::string& label) {
      const Elem x = g->power(generator_element(*g, gen), 2);
      const auto& u = v.certificate.universally_regular;
      const bool ok = v.certificate.kind == Certificate::Kind::ExhaustedClasses &&
                      std::find(u.begin(), u.end(), x) != u.end();
      r.rows.push_back(row(id.str() + " " + label, "f-regular for every class",
                           ok ? "f-regular for every class" : "not f-regular for some class", "proved"));
    };
    if (roman(family) == "viii") check_regular("b", "b^2");
    if (roman(family) == "xi") check_regular("a", "a^2");
    r.verdicts.push_back(std::move(v));
  }
  finish(r);
  return r;
}

void theorem3_check(TheoremReport& r, const std::string& item, const std::vector<TwistedAlgebra>& algebras) {
  std::size_t restricted_nd = 0, simple = 0, violations = 0, hall = 0;
  for (const auto& a : algebras) {
    const RegularityReport rep = regularity_report(a);
    if (!rep.nondegenerate) {
      ++violations;
      continue;
    }
    const Subgroup d = commutator_subgroup(a.group());
    const bool nd = regularity_report(TwistedAlgebra(restrict(a.cocycle(), d))).nondegenerate;
    const SemicenterReport sz = classify_semicenter(a, rep);
    if (nd) {
      ++restricted_nd;
      simple += sz.simple;
      if (!sz.simple) ++violations;
    }
    if (is_hall(a.group(), d)) {
      ++hall;
      if (!nd || !sz.simple) ++violations;
    }
  }
  TheoremRow tr = row(item, "0 violations", std::to_string(violations) + " violations", "checked");
  tr.observed += " (" + std::to_string(algebras.size()) + " nondegenerate algebras, " +
                 std::to_string(restricted_nd) + " with nondegenerate restriction to G', " + std::to_string(simple) +
                 " of those simple, " + std::to_string(hall) + " with G' Hall)";
  tr.pass = violations == 0;
  r.rows.push_back(std::move(tr));
}

TheoremReport theorem3(int p, const Budget& budget) {
  TheoremReport r;
  r.name = "theorem3";
  r.p = p;
  if (p == 2) {
    std::vector<TwistedAlgebra> cat;
    for (const auto& family : catalog_algebra_families())
      if (family.rfind("table16_", 0) == 0 || family == "theorem5_64") cat.push_back(catalog_cocycle({family, 0}));
    theorem3_check(r, "catalog algebras", cat);
    for (const auto& family : families_with_prefix("table16_")) {
      const auto classes = nondegenerate_classes(catalog_group({family, 0}), budget);
      if (!classes.empty()) theorem3_check(r, family + " enumerated classes", classes);
    }
    theorem3_check(r, "theorem5_64 enumerated classes", nondegenerate_classes(catalog_group({"theorem5_64", 0}), budget));
  } else {
    std::vector<TwistedAlgebra> cat;
    for (const auto& family : catalog_algebra_families())
      if (family.rfind("table1_", 0) == 0) cat.push_back(catalog_cocycle({family, p}));
    theorem3_check(r, "catalog algebras at p = " + std::to_string(p), cat);
    if (p == 3)
      for (const auto& family : catalog_algebra_families())
        if (family.rfind("table1_", 0) == 0)
          theorem3_check(r, family + " enumerated classes", nondegenerate_classes(catalog_group({family, 3}), budget));
  }
  finish(r);
  return r;
}

TheoremReport theorem4(int p, const Budget& budget) {
  TheoremReport r;
  r.name = "theorem4";
  r.p = p;
  if (p == 2) {
    for (const auto& family : families_with_prefix("table16_")) {
      const GroupPtr g = catalog_group({family, 0});
      long long total = 0;
      const auto classes = nondegenerate_classes(g, budget, &total);
      if (classes.empty()) continue;
      std::size_t commutative = 0;
      for (const auto& a : classes) commutative += classify_semicenter(a).commutative;
      TheoremRow tr = row(family, "0 commutative", std::to_string(commutative) + " commutative", "proved");
      tr.observed += " (" + std::to_string(classes.size()) + " nondegenerate of " + std::to_string(total) + " classes)";
      tr.pass = commutative == 0;
      r.rows.push_back(std::move(tr));
      const auto filter = commutative_sz_filter(*g);
      r.rows.push_back(row(family + " structural filter", "fails", filter.passes ? "passes" : "fails", "checked"));
    }
  } else {
    const CatalogId beta{"table1_xv", 3};
    const TwistedAlgebra a = catalog_cocycle(beta);
    const RegularityReport rep = regularity_report(a);
    r.rows.push_back(row("table1_xv:3 nondegenerate", "true", yes_no(rep.nondegenerate), "proved"));
    if (rep.nondegenerate) {
      const SemicenterReport sz = classify_semicenter(a, rep);
      r.rows.push_back(row("table1_xv:3 commutative", "true", yes_no(sz.commutative), "proved"));
      r.rows.push_back(row("table1_xv:3 sz_dim", "9", std::to_string(sz.sz_dim), "proved"));
      r.rows.push_back(row("table1_xv:3 crosscheck", "true", yes_no(sz_commutator_crosscheck(a, sz.basis)), "proved"));
    }
    for (const std::string family : {"table1_iii", "table1_v", "table1_viii", "table1_xiv", "table1_xv"}) {
      const GroupPtr g = catalog_group({family, 3});
      const auto filter = commutative_sz_filter(*g);
      const bool expect = family == "table1_xv";
      TheoremRow tr = row(family + ":3 structural filter", expect ? "passes" : "fails",
                          filter.passes ? "passes" : "fails", "proved");
      r.rows.push_back(std::move(tr));
      r.notes.push_back(family + ": |Z(G)| = " + std::to_string(filter.center_order) +
                        ", |G'| = " + std::to_string(filter.derived_order) +
                        ", Z(G) in G' = " + yes_no(filter.center_in_derived));

      // independent exhaustive confirmation over H^2
      long long total = 0;
      const auto classes = nondegenerate_classes(g, budget, &total);
      std::size_t commutative = 0;
      for (const auto& c : classes) commutative += classify_semicenter(c).commutative;
      const std::string observed = commutative == 0 ? "none commutative"
                                   : commutative == classes.size() ? "all commutative"
                                                                   : "some commutative";
      TheoremRow er = row(family + ":3 enumerated classes", expect ? "all commutative" : "none commutative",
                          observed, "checked");
      er.observed += " (" + std::to_string(classes.size()) + " nondegenerate of " + std::to_string(total) + ")";
      er.pass = !classes.empty() && observed == (expect ? "all commutative" : "none commutative");
      r.rows.push_back(std::move(er));
    }
  }
  finish(r);
  return r;
}

TheoremReport theorem5(const Budget& budget) {
  TheoremReport r;
  r.name = "theorem5";
  const TwistedAlgebra a = crossed_product(order64_last_step(Order64Signs::consistent_default()));
  validate_cocycle(a.cocycle());
  const GroupPtr target = catalog_group({"theorem5_64", 0});
  r.rows.push_back(row("crossed product group", "isomorphic to theorem5_64",
                       find_isomorphism(a.group(), *target) ? "isomorphic to theorem5_64" : "not isomorphic",
                       "proved"));
  const RegularityReport rep = regularity_report(a);
  r.rows.push_back(row("nondegenerate", "true", yes_no(rep.nondegenerate), "proved"));
  if (rep.nondegenerate) {
    const SemicenterReport sz = classify_semicenter(a, rep);
    r.rows.push_back(row("commutative", "true", yes_no(sz.commutative), "proved"));
    r.rows.push_back(row("simple", "false", yes_no(sz.simple), "proved"));
    r.rows.push_back(row("sz_dim", "8", std::to_string(sz.sz_dim), "proved"));
    r.rows.push_back(row("sz_commutator_crosscheck", "true", yes_no(sz_commutator_crosscheck(a, sz.basis)), "proved"));
    const Subgroup z = center(a.group());
    bool central = true;
    for (const auto& b : sz.basis) central = central && z.contains(b.representative);
    r.rows.push_back(row("regular elements central", "true", yes_no(central), "proved"));
  }

  std::size_t consistent = 0, mismatches = 0;
  for (int bits = 0; bits < 64; ++bits) {
    Order64Signs t = Order64Signs::consistent_default();
    t.t16 = bits & 1;
    t.t25 = (bits >> 1) & 1;
    t.t34 = (bits >> 2) & 1;
    t.delta = (bits >> 3) & 1;
    t.gamma = (bits >> 4) & 1;
    t.lambda = (bits >> 5) & 1;
    bool ok = true;
    try {
      verify_action(order64_last_step(t));
    } catch (const NotMultiplicative&) {
      ok = false;
    }
    consistent += ok;
    mismatches += ok != (t.t16 == (t.t25 ^ t.t34));
  }
  TheoremRow tr = row("psi_6 consistent iff t16 = t25 t34", "0 mismatches", std::to_string(mismatches) + " mismatches",
                      "proved");
  tr.observed += " (" + std::to_string(consistent) + " consistent, " + std::to_string(64 - consistent) +
                 " not multiplicative)";
  tr.pass = mismatches == 0 && consistent == 32;
  r.rows.push_back(std::move(tr));

  Order64Signs printed;
  printed.t16 = printed.t34 = printed.t24 = printed.t35 = 1;
  bool printed_ok = true;
  try {
    verify_action(order64_last_step(printed));
  } catch (const NotMultiplicative&) {
    printed_ok = false;
  }
  r.rows.push_back(row("signs t16 = t34 = t24 = t35 = -1 with trivial squares", "not multiplicative",
                       printed_ok ? "consistent" : "not multiplicative", "checked"));

  long long total = 0;
  const auto classes = nondegenerate_classes(target, budget, &total);
  std::size_t commutative = 0;
  for (const auto& c : classes) commutative += classify_semicenter(c).commutative;
  TheoremRow er = row("theorem5_64 enumerated classes", "all nondegenerate classes commutative",
                      commutative == classes.size() && !classes.empty() ? "all nondegenerate classes commutative"
                                                                        : "some non-commutative",
                      "checked");
  er.observed += " (" + std::to_string(classes.size()) + " nondegenerate of " + std::to_string(total) + ")";
  er.pass = !classes.empty() && commutative == classes.size();
  r.rows.push_back(std::move(er));
  r.notes.push_back("the trivial-square sign family never passes: u_x4^2 = 1 forces t24 = u_x2^2 and t35 = u_x3^2");
  finish(r);
  return r;
}

}  // namespace

TheoremReport verify_theorem(int n, int p, const Budget& budget) {
  switch (n) {
    case 1:
      if (p == 3) return theorem1(budget);
      break;
    case 2:
      if (p == 2 || p == 0) return theorem2(budget);
      break;
    case 3:
      if (p == 0) p = 2;
      if (is_prime(p)) return theorem3(p, budget);
      break;
    case 4:
      if (p == 2 || p == 3) return theorem4(p, budget);
      break;
    case 5:
      return theorem5(budget);
    default:
      break;
  }
  throw UnsupportedCase("theorem " + std::to_string(n) + " at p = " + std::to_string(p) + " is not supported");
}

TheoremReport verify_d4_example() {
  TheoremReport r;
  r.name = "d4_example";
  r.p = 2;
  const TwistedAlgebra a = catalog_cocycle({"d4_example", 0});
  const FiniteGroup& g = a.group();
  const Elem sigma = generator_element(g, "sigma"), tau = generator_element(g, "tau");
  const Elem sigma2 = g.power(sigma, 2), sigma3 = g.power(sigma, 3);
  const auto [scalar, image] = a.conjugate_basis(tau, sigma);
  const bool i_sigma3 = image == sigma3 && scalar.same_value(RootOfUnity{4, 1});
  r.rows.push_back(row("u_tau u_sigma u_tau^-1", "i u_sigma^3", i_sigma3 ? "i u_sigma^3" : "other", "checked"));
  r.rows.push_back(row("sigma^2 f-regular", "false", yes_no(a.is_f_regular(sigma2)), "checked"));
  const Subgroup d = commutator_subgroup(g);
  bool only_identity = true;
  for (Elem x : d.elements)
    if (x != 0 && a.is_f_regular(x)) only_identity = false;
  r.rows.push_back(row("f-regular elements in G'", "identity only", only_identity ? "identity only" : "more", "checked"));
  const RegularityReport rep = regularity_report(a);
  r.rows.push_back(row("C^fG simple", "false", yes_no(rep.nondegenerate), "checked"));
  const std::size_t dim = sz_dim(a, rep);
  r.rows.push_back(row("sz_dim", "4", std::to_string(dim), "checked"));
  const std::size_t chars = a.info().characters.characters.size();
  // A 4-dimensional Sz graded by a character group of order 4 is commutative
  // or simple, and Sz of a non-simple twisted group algebra is never simple.
  const bool by_dimension = dim == 4 && chars == 4 && !rep.nondegenerate;
  r.rows.push_back(row("commutative by dimension", "true", yes_no(by_dimension), "cited"));
  const auto basis = semicenter_basis(a, rep);
  r.rows.push_back(row("commutative by direct product", "true", yes_no(sz_commutator_crosscheck(a, basis)), "checked"));
  r.notes.push_back("the dimension argument relies on two cited facts: a Sz of dimension |G^| is commutative or "
                    "simple, and Sz of a non-simple twisted group algebra is not simple");
  finish(r);
  return r;
}

std::vector<PrimeLemmaRow> check_prime_power_lemma(long long p_max) {
  using boost::multiprecision::cpp_int;
  if (p_max < 2) throw InvalidArgument("p_max must be at least 2");
  std::vector<PrimeLemmaRow> out;
  for (long long p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    const cpp_int big_p = p;
    const cpp_int cube = big_p * big_p * big_p;
    const cpp_int value = boost::multiprecision::pow(cpp_int(p + 1), static_cast<unsigned>(p)) - 1;
    const cpp_int residue = value % cube;
    PrimeLemmaRow row;
    row.p = p;
    row.divisible = residue == 0;
    row.residue = residue.str();
    row.residue_is_p_squared = residue == big_p * big_p;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tga
