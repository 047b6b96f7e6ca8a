#include "tga/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "tga/constructions.hpp"
#include "tga/errors.hpp"

namespace tga {

namespace detail {
extern const std::map<std::string, std::string> kCatalogSources;
}

namespace {

const std::vector<std::string> kRoman = {"i",  "ii",  "iii",  "iv", "v",  "vi",  "vii",
                                         "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv"};

bool split_rows(const std::string& row) { return row == "xi" || row == "xii" || row == "xiii" || row == "xv"; }

std::mutex cache_mutex;
std::map<std::string, GroupPtr> group_cache;
std::map<std::string, std::shared_ptr<const GroupInfo>> info_cache;

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long smallest_nonresidue(long long p) {
  for (long long a = 2; a < p; ++a) {
    bool square = false;
    for (long long x = 1; x < p && !square; ++x) square = (x * x) % p == a;
    if (!square) return a;
  }
  throw InvalidArgument("no quadratic non-residue modulo " + std::to_string(p));
}

CatalogId CatalogId::parse(const std::string& text) {
  CatalogId id;
  const auto colon = text.find(':');
  id.family = text.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string ps = text.substr(colon + 1);
    if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos || ps.size() > 6)
      throw BadCatalogId("bad prime in catalog id '" + text + "'");
    id.p = std::stoi(ps);
  }
  return id;
}

std::string CatalogId::str() const { return p ? family + ":" + std::to_string(p) : family; }

std::vector<std::string> catalog_families() {
  std::vector<std::string> out;
  for (const auto& r : kRoman) out.push_back("table1_" + r);
  for (std::size_t i = 0; i < 14; ++i) out.push_back("table16_" + kRoman[i]);
  out.push_back("theorem5_64");
  out.push_back("d4_example");
  return out;
}

std::vector<std::string> catalog_algebra_families() {
  return {"table1_iii", "table1_v", "table1_viii", "table1_xiv", "table1_xv", "table16_iii",
          "table16_v",  "table16_ix", "table16_x",  "theorem5_64", "d4_example"};
}

std::optional<std::string> catalog_source(const std::string& path) {
  auto it = detail::kCatalogSources.find(path);
  if (it == detail::kCatalogSources.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> catalog_paths() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::kCatalogSources) out.push_back(k);
  return out;
}

CatalogEntry catalog_entry(const CatalogId& id, const std::string& kind) {
  CatalogEntry e;
  std::string file = id.family;
  if (id.family.rfind("table1_", 0) == 0) {
    std::string row = id.family.substr(7);
    std::string variant;
    for (const std::string suffix : {"_p3", "_general"})
      if (row.size() > suffix.size() && row.compare(row.size() - suffix.size(), suffix.size(), suffix) == 0) {
        variant = suffix;
        row.resize(row.size() - suffix.size());
      }
    if (std::find(kRoman.begin(), kRoman.end(), row) == kRoman.end())
      throw BadCatalogId("unknown Table 1 row '" + row + "'");
    const int p = id.p ? id.p : 3;
    if (p == 2 || !is_prime(p)) throw BadCatalogId("Table 1 rows need an odd prime, got " + std::to_string(p));
    if (!variant.empty() && !split_rows(row))
      throw BadCatalogId("row " + row + " has a single presentation for every odd prime");
    if (variant == "_p3" && p != 3) throw BadCatalogId("the p = 3 form of row " + row + " needs p = 3");
    if (variant == "_general" && p == 3)
      throw BadCatalogId("row " + row + " has a separate presentation at p = 3; use table1_" + row);
    if (split_rows(row)) variant = p == 3 ? "_p3" : "_general";
    file = "table1_" + row + variant;
    e.constants = {{"p", p}, {"alpha", smallest_nonresidue(p)}};
  } else {
    if (id.p != 0 && id.p != 2) throw BadCatalogId("family " + id.family + " takes no prime");
  }
  e.path = kind + "/" + file;
  const auto text = catalog_source(e.path);
  if (!text) throw BadCatalogId("no catalog " + std::string(kind == "groups" ? "group" : "entry") + " for '" +
                                id.str() + "'");
  e.document = dsl::parse(*text);
  return e;
}

namespace {

std::string cache_key(const CatalogId& id) {
  const auto e = catalog_entry(id);
  auto it = e.constants.find("p");
  return e.path + (it == e.constants.end() ? "" : ":" + std::to_string(it->second));
}

}  // namespace

GroupPtr catalog_group(const CatalogId& id) {
  const std::string key = cache_key(id);
  {
    std::lock_guard lock(cache_mutex);
    auto it = group_cache.find(key);
    if (it != group_cache.end()) return it->second;
  }
  const auto e = catalog_entry(id);
  auto pres = dsl::instantiate(e.document, e.constants);
  if (e.constants.count("p")) pres.name += "(p=" + std::to_string(e.constants.at("p")) + ")";
  GroupPtr g = build_group(pres);
  std::lock_guard lock(cache_mutex);
  return group_cache.emplace(key, g).first->second;
}

bool has_catalog_algebra(const CatalogId& id) {
  try {
    catalog_entry(id, "algebras");
    return true;
  } catch (const BadCatalogId&) {
    return false;
  }
}

TwistedAlgebra catalog_cocycle(const CatalogId& id) {
  const GroupPtr target = catalog_group(id);
  const auto e = catalog_entry(id, "algebras");
  const auto pres = dsl::instantiate(e.document, e.constants);
  const TwistedAlgebra built = collect(pres);
  std::shared_ptr<const GroupInfo> info;
  {
    std::lock_guard lock(cache_mutex);
    auto it = info_cache.find(cache_key(id));
    if (it != info_cache.end()) info = it->second;
  }
  if (!info) {
    info = group_info(target);
    std::lock_guard lock(cache_mutex);
    info_cache.emplace(cache_key(id), info);
  }
  if (built.group().table() == target->table())
    return TwistedAlgebra(Cocycle(target, built.modulus(), built.cocycle().table()), info);
  const auto iso = find_isomorphism(built.group(), *target);
  if (!iso)
    throw InternalInconsistency("the algebra for " + id.str() + " lives on a group not isomorphic to the catalog group");
  return TwistedAlgebra(transport(built.cocycle(), target, *iso), info);
}

}  // namespace tga
