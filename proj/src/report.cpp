#include "tga/report.hpp"

#include "tga/constructions.hpp"

namespace tga::report {

namespace {

json labels(const FiniteGroup& g, const std::vector<Elem>& xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(g.label(x));
  return out;
}

json structure(const AbelianStructure& a) { return a.invariant_factors; }

json root(const RootOfUnity& r) { return json{{"modulus", r.modulus}, {"exponent", r.exponent}}; }

json character_values(const Character& c) { return json{{"modulus", c.modulus}, {"values", c.values}}; }

}  // namespace

json group_json(const FiniteGroup& g, const std::string& id) {
  const Subgroup z = center(g);
  const Subgroup d = commutator_subgroup(g);
  const auto classes = conjugacy_classes(g);
  json gens = json::array();
  for (std::size_t i = 0; i < g.generator_names().size(); ++i)
    gens.push_back({{"name", g.generator_names()[i]},
                    {"element", g.label(g.generator_indices()[i])},
                    {"order", g.element_order(g.generator_indices()[i])}});
  json cls = json::array();
  for (const auto& c : classes) cls.push_back({{"representative", g.label(c.front())}, {"size", c.size()}});
  json obs = json::array();
  for (const auto& o : obstructions(g)) obs.push_back({{"kind", to_string(o.kind)}, {"description", o.description}});
  return {{"group", id},
          {"order", g.order()},
          {"abelian", g.is_abelian()},
          {"exponent", exponent(g)},
          {"generators", gens},
          {"center", {{"order", z.order()}, {"structure", structure(abelian_structure(g, z))}}},
          {"derived_subgroup", {{"order", d.order()}, {"elements", labels(g, d.elements)}}},
          {"abelianization", structure(abelian_structure(*quotient(g, d).group))},
          {"conjugacy_classes", cls},
          {"obstructions", obs}};
}

json h2_json(const CohomologyBasis& basis, const std::string& id) {
  return {{"group", id},
          {"order", basis.class_count()},
          {"factors", basis.orders},
          {"modulus", basis.modulus}};
}

json analysis_json(const TwistedAlgebra& a, const std::string& id) {
  const FiniteGroup& g = a.group();
  const RegularityReport rep = regularity_report(a);
  json regular = json::array();
  for (std::size_t i = 0; i < rep.regular_classes.size(); ++i)
    regular.push_back({{"character", i},
                       {"values", character_values(a.info().characters.characters[i])},
                       {"classes", labels(g, rep.regular_classes[i])}});
  json out = {{"group", id},
              {"order", g.order()},
              {"modulus", a.modulus()},
              {"power_normalized", a.power_normalized()},
              {"regularity",
               {{"center_dim", rep.center_dim},
                {"nondegenerate", rep.nondegenerate},
                {"f_regular_classes", labels(g, rep.f_regular_classes)},
                {"gamma", labels(g, rep.gamma)},
                {"lambda_regular", regular}}}};

  const auto basis_json = [&](const std::vector<SemicenterVector>& basis) {
    json b = json::array();
    for (const auto& v : basis) {
      json support = json::array();
      for (const auto& [x, c] : v.support) support.push_back({{"element", g.label(x)}, {"coefficient", root(c)}});
      b.push_back({{"character", v.character}, {"representative", g.label(v.representative)}, {"support", support}});
    }
    return b;
  };

  json sz;
  if (rep.nondegenerate) {
    const SemicenterReport s = classify_semicenter(a, rep);
    json phi = json::array();
    for (Elem c : s.phi.coset) phi.push_back(g.label(c));
    sz = {{"sz_dim", s.sz_dim},
          {"commutative", s.commutative},
          {"simple", s.simple},
          {"phi", phi},
          {"phi_kernel", s.phi.kernel},
          {"crosscheck", s.commutative ? json(sz_commutator_crosscheck(a, s.basis)) : json(nullptr)},
          {"basis", basis_json(s.basis)}};
  } else {
    const auto basis = semicenter_basis(a, rep);
    sz = {{"sz_dim", sz_dim(a, rep)},
          {"commutative", sz_commutator_crosscheck(a, basis)},
          {"simple", false},
          {"method", "direct product of basis vectors"},
          {"basis", basis_json(basis)}};
  }
  out["semicenter"] = sz;
  return out;
}

json verdict_json(const GroupPtr& g, const CentralTypeVerdict& v, bool timing) {
  const Certificate& c = v.certificate;
  json data;
  switch (c.kind) {
    case Certificate::Kind::WitnessCocycle: {
      const std::size_t n = g->order();
      json table = json::array();
      for (std::size_t x = 0; x < n; ++x) {
        json r = json::array();
        for (std::size_t y = 0; y < n; ++y) r.push_back((*c.witness)(static_cast<Elem>(x), static_cast<Elem>(y)));
        table.push_back(r);
      }
      data = {{"source", c.witness_source}, {"modulus", c.witness->modulus()}, {"table", table}};
      if (c.witness_index >= 0) data["index"] = c.witness_index;
      break;
    }
    case Certificate::Kind::Obstruction: {
      data = json::array();
      for (const auto& o : c.obstructions) {
        json item = {{"kind", to_string(o.kind)}, {"description", o.description}};
        if (o.witness) item["witness"] = g->label(o.witness);
        if (!o.subgroup.elements.empty()) item["subgroup_order"] = o.subgroup.order();
        if (o.kind == Obstruction::Kind::CenterDoesNotEmbed) {
          item["center"] = structure(o.center);
          item["abelianization"] = structure(o.abelianization);
        }
        data.push_back(item);
      }
      break;
    }
    case Certificate::Kind::ExhaustedClasses:
      data = {{"class_count", c.class_count},
              {"class_witnesses", labels(*g, c.class_witnesses)},
              {"universally_regular", labels(*g, c.universally_regular)}};
      break;
    case Certificate::Kind::BudgetExceeded:
      data = {{"reason", c.reason}};
      break;
  }
  json out = {{"group", v.group},
              {"verdict", to_string(v.verdict)},
              {"certificate", {{"kind", to_string(c.kind)}, {"data", data}}},
              {"classes_tested", v.classes_tested}};
  if (timing) out["elapsed_ms"] = v.elapsed_ms;
  return out;
}

json theorem_json(const TheoremReport& r, bool timing) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"item", x.item}, {"expected", x.expected}, {"observed", x.observed}, {"status", x.status},
                    {"pass", x.pass}});
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json j = {{"group", v.group},
              {"verdict", to_string(v.verdict)},
              {"certificate", to_string(v.certificate.kind)},
              {"classes_tested", v.classes_tested}};
    if (timing) j["elapsed_ms"] = v.elapsed_ms;
    verdicts.push_back(j);
  }
  json out = {{"theorem", r.name}, {"pass", r.pass}, {"rows", rows}, {"notes", r.notes}};
  if (r.p) out["p"] = r.p;
  if (!verdicts.empty()) out["verdicts"] = verdicts;
  return out;
}

json prime_lemma_json(const std::vector<PrimeLemmaRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"p", r.p},
                   {"divisible", r.divisible},
                   {"residue_mod_p3", r.residue},
                   {"residue_is_p_squared", r.residue_is_p_squared}});
  return out;
}

json error_json(const Error& e) {
  json out = error_json(e.kind(), e.what());
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = p->line;
    out["column"] = p->column;
  } else if (const auto* c = dynamic_cast<const NotACocycle*>(&e)) {
    out["x"] = c->x;
    out["y"] = c->y;
    out["z"] = c->z;
  } else if (const auto* m = dynamic_cast<const NotMultiplicative*>(&e)) {
    out["g"] = m->g;
    out["h"] = m->h;
  } else if (const auto* w = dynamic_cast<const WrongOrder*>(&e)) {
    out["power"] = w->power;
  }
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace tga::report
