#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tga/catalog.hpp"
#include "tga/classify.hpp"
#include "tga/constructions.hpp"
#include "tga/dsl.hpp"
#include "tga/report.hpp"

using namespace tga;
using report::json;

namespace {

struct Options {
  bool json_out = false;
  bool timing = false;
  std::vector<std::string> set;
  std::vector<int> params;
};

struct Loaded {
  std::string id;
  GroupPtr group;
  std::optional<CatalogId> catalog;
  std::optional<TwistedAlgebra> algebra;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

std::map<std::string, long long> constants(const std::vector<std::string>& set) {
  std::map<std::string, long long> env;
  for (const auto& s : set) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + s + "'");
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1) throw std::invalid_argument(s);
      env[s.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw UsageError("--set value is not an integer: '" + s + "'");
    }
  }
  return env;
}

Loaded load(const std::string& src, const Options& opt) {
  Loaded out;
  if (src.rfind("catalog:", 0) == 0) {
    const CatalogId id = CatalogId::parse(src.substr(8));
    out.id = id.str();
    out.catalog = id;
    out.group = catalog_group(id);
    if (has_catalog_algebra(id)) out.algebra = catalog_cocycle(id);
    return out;
  }
  std::ifstream in(src);
  if (!in) throw UsageError("cannot read '" + src + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const dsl::Document doc = dsl::parse(buf.str());
  const CollectionPresentation pres = dsl::instantiate(doc, constants(opt.set));
  out.id = doc.name;
  switch (doc.kind) {
    case dsl::Document::Kind::Group:
      out.group = build_group(pres);
      break;
    case dsl::Document::Kind::Algebra:
      out.algebra = collect(pres);
      out.group = out.algebra->group_ptr();
      break;
    case dsl::Document::Kind::Sweep:
      if (opt.params.size() != pres.parameters.size())
        throw UsageError("sweep '" + doc.name + "' needs --params with " + std::to_string(pres.parameters.size()) +
                         " values");
      out.algebra = collect(pres, opt.params);
      out.group = out.algebra->group_ptr();
      break;
  }
  return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
  return s;
}

long long default_budget() {
  const char* env = std::getenv("CTYPE_BUDGET");
  if (!env || !*env) return Budget{}.max_classes;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("CTYPE_BUDGET must be a positive integer, got '") + env + "'");
  }
}

int cmd_group_show(const std::string& src, const Options& opt) {
  const Loaded l = load(src, opt);
  const json j = report::group_json(*l.group, l.id);
  std::ostringstream t;
  t << "group " << l.id << "\n"
    << "order: " << j["order"] << "\n"
    << "abelian: " << j["abelian"] << "\n"
    << "exponent: " << j["exponent"] << "\n"
    << "center: order " << j["center"]["order"] << ", invariant factors [" << join(j["center"]["structure"])
    << "]\n"
    << "derived subgroup: order " << j["derived_subgroup"]["order"] << "\n"
    << "abelianization: [" << join(j["abelianization"]) << "]\n"
    << "conjugacy classes: " << j["conjugacy_classes"].size() << "\n";
  for (const auto& o : j["obstructions"]) t << "obstruction: " << o["description"].get<std::string>() << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_h2(const std::string& src, const Options& opt) {
  const Loaded l = load(src, opt);
  const json j = report::h2_json(h2_basis(l.group), l.id);
  std::ostringstream t;
  t << "H^2(" << l.id << ", C*) has order " << j["order"] << ", factors [" << join(j["factors"]) << "]\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_analyze(const std::string& src, const std::string& cocycle_file, const Options& opt) {
  Loaded l = load(src, opt);
  std::optional<TwistedAlgebra> a;
  if (!cocycle_file.empty()) {
    std::ifstream in(cocycle_file);
    if (!in) throw UsageError("cannot read '" + cocycle_file + "'");
    a.emplace(read_cocycle(in, l.group));
  } else if (l.algebra) {
    a = l.algebra;
  } else {
    a.emplace(Cocycle(l.group, 1));
  }
  const json j = report::analysis_json(*a, l.id);
  const json& r = j["regularity"];
  const json& s = j["semicenter"];
  std::ostringstream t;
  t << "algebra over " << l.id << " (order " << j["order"] << ", modulus " << j["modulus"] << ")\n"
    << "center_dim: " << r["center_dim"] << "\n"
    << "nondegenerate: " << r["nondegenerate"] << "\n"
    << "f-regular classes: " << join(r["f_regular_classes"]) << "\n"
    << "sz_dim: " << s["sz_dim"] << "\n"
    << "commutative: " << s["commutative"] << "\n"
    << "simple: " << s["simple"] << "\n";
  if (s.contains("phi_kernel")) t << "phi kernel size: " << s["phi_kernel"].size() << "\n";
  emit(opt, j, t.str());
  return 0;
}

int cmd_classify(const std::string& src, long long budget, long long max_ms, const Options& opt) {
  const Loaded l = load(src, opt);
  VerdictOptions vo;
  vo.budget.max_classes = budget > 0 ? budget : default_budget();
  if (max_ms > 0) vo.budget.max_ms = max_ms;
  vo.catalog = l.catalog;
  CentralTypeVerdict v = central_type_verdict(l.group, vo);
  if (!l.catalog) v.group = l.id;
  const json j = report::verdict_json(l.group, v, opt.timing);
  std::ostringstream t;
  t << v.group << ": " << to_string(v.verdict) << "\n" << "certificate: " << to_string(v.certificate.kind) << "\n";
  const Certificate& c = v.certificate;
  switch (c.kind) {
    case Certificate::Kind::Obstruction:
      for (const auto& o : c.obstructions) t << "  " << o.description << "\n";
      break;
    case Certificate::Kind::WitnessCocycle:
      t << "  nondegenerate cocycle from " << c.witness_source << "\n";
      break;
    case Certificate::Kind::ExhaustedClasses:
      t << "  " << c.class_count << " classes, each with a nontrivial f-regular element\n";
      if (!c.universally_regular.empty())
        t << "  regular for every class: " << join(j["certificate"]["data"]["universally_regular"]) << "\n";
      break;
    case Certificate::Kind::BudgetExceeded:
      t << "  " << c.reason << "\n";
      break;
  }
  t << "classes tested: " << v.classes_tested << "\n";
  if (opt.timing) t << "elapsed: " << v.elapsed_ms << " ms\n";
  emit(opt, j, t.str());
  return v.verdict == Verdict::Unknown ? 3 : 0;
}

std::string theorem_text(const TheoremReport& r) {
  std::size_t w = 4;
  for (const auto& x : r.rows) w = std::max(w, x.item.size());
  std::ostringstream t;
  t << r.name;
  if (r.p) t << " (p = " << r.p << ")";
  t << "\n";
  for (const auto& x : r.rows)
    t << "  " << (x.pass ? "PASS " : "FAIL ") << x.item << std::string(w - x.item.size() + 2, ' ') << x.observed
      << "  [" << x.status << "]\n";
  for (const auto& n : r.notes) t << "  note: " << n << "\n";
  t << (r.pass ? "PASS" : "FAIL") << "\n";
  return t.str();
}

int cmd_verify(const std::string& what, int p, long long max_p, long long budget, const Options& opt) {
  if (what == "lemma-prime") {
    const auto rows = check_prime_power_lemma(max_p);
    bool pass = true;
    std::ostringstream t;
    for (const auto& r : rows) {
      const bool ok = r.divisible == (r.p == 2) && (r.p == 2 || r.residue_is_p_squared);
      pass = pass && ok;
      t << "p = " << r.p << ": p^3 | (p+1)^p - 1 is " << (r.divisible ? "true" : "false") << ", residue "
        << r.residue << (ok ? "" : "  FAIL") << "\n";
    }
    t << (pass ? "PASS" : "FAIL") << "\n";
    emit(opt, {{"lemma", "prime-power"}, {"max_p", max_p}, {"pass", pass}, {"rows", report::prime_lemma_json(rows)}},
         t.str());
    return pass ? 0 : 1;
  }
  TheoremReport r;
  if (what == "d4-example") {
    r = verify_d4_example();
  } else if (what.size() == 8 && what.rfind("theorem", 0) == 0 && what[7] >= '1' && what[7] <= '5') {
    const int n = what[7] - '0';
    int prime = p;
    if (prime == 0) prime = n == 1 ? 3 : n == 5 ? 0 : 2;
    Budget b;
    b.max_classes = budget > 0 ? budget : default_budget();
    r = verify_theorem(n, prime, b);
  } else {
    throw UsageError("unknown verification target '" + what + "'");
  }
  emit(opt, report::theorem_json(r, opt.timing), theorem_text(r));
  return r.pass ? 0 : 1;
}

int cmd_catalog_list(const Options& opt) {
  json j = json::array();
  std::ostringstream t;
  const auto algebras = catalog_algebra_families();
  for (const auto& f : catalog_families()) {
    const bool alg = std::find(algebras.begin(), algebras.end(), f) != algebras.end();
    const bool table1 = f.rfind("table1_", 0) == 0;
    j.push_back({{"family", f}, {"algebra", alg}, {"takes_p", table1}});
    t << f << (table1 ? "[:p]" : "") << (alg ? "  (algebra)" : "") << "\n";
  }
  emit(opt, j, t.str());
  return 0;
}

int exit_code_for(const Error& e) {
  static const std::set<std::string> usage = {"UsageError",    "ParseError",     "UndeclaredGenerator",
                                              "MissingOrder",  "BadCatalogId",   "UnsupportedCase",
                                              "InvalidArgument", "FormatError"};
  if (usage.count(e.kind())) return 2;
  if (e.kind() == "ResourceBudgetExceeded" || e.kind() == "TooManyClasses") return 3;
  return 1;
}

void emit_error(const json& j, bool json_out) { (json_out ? std::cout : std::cerr) << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted group algebras: central type, semi-centers, verifications"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_out, "JSON output");
  app.add_flag("--timing", opt.timing, "include elapsed times");
  app.add_option("--set", opt.set, "bind a presentation constant, name=value")->take_all();
  app.add_option("--params", opt.params, "parameter exponents for a sweep document")->delimiter(',');

  std::string src, cocycle_file, what;
  long long budget = 0, max_ms = 0, max_p = 97;
  int p = 0;

  auto* group = app.add_subcommand("group", "group commands");
  group->require_subcommand(1);
  auto* show = group->add_subcommand("show", "structure of a group");
  show->add_option("src", src, "file or catalog:<family>[:p]")->required();

  auto* h2 = app.add_subcommand("h2", "second cohomology H^2(G, C*)");
  h2->add_option("src", src)->required();

  auto* analyze = app.add_subcommand("analyze", "regularity and semi-center report");
  analyze->add_option("src", src)->required();
  analyze->add_option("--cocycle", cocycle_file, "cocycle file over the group");

  auto* classify = app.add_subcommand("classify", "decide central type");
  classify->add_option("src", src)->required();
  classify->add_option("--budget", budget, "maximum number of cohomology classes")->check(CLI::PositiveNumber);
  classify->add_option("--max-ms", max_ms, "wall-clock cap in milliseconds")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "theorem1..theorem5, lemma-prime, d4-example");
  verify->add_option("what", what)->required();
  verify->add_option("--p", p, "prime");
  verify->add_option("--max-p", max_p, "largest prime for lemma-prime");
  verify->add_option("--budget", budget, "maximum number of cohomology classes")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "catalog commands");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "catalog families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const bool json_out = std::any_of(argv + 1, argv + argc, [](const char* a) { return std::string(a) == "--json"; });
    emit_error(report::error_json("UsageError", e.what()), json_out);
    return 2;
  }

  try {
    if (*show) return cmd_group_show(src, opt);
    if (*h2) return cmd_h2(src, opt);
    if (*analyze) return cmd_analyze(src, cocycle_file, opt);
    if (*classify) return cmd_classify(src, budget, max_ms, opt);
    if (*verify) return cmd_verify(what, p, max_p, budget, opt);
    if (*list) return cmd_catalog_list(opt);
  } catch (const Error& e) {
    emit_error(report::error_json(e), opt.json_out);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error(report::error_json("InternalError", e.what()), opt.json_out);
    return 1;
  }
  return 2;
}
