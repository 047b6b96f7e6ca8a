#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tga/dsl.hpp"
#include "tga/twisted.hpp"

namespace tga {

/// A catalog family with its prime. Table 1 rows take an odd prime (default 3);
/// rows xi-xiii and xv switch to their p = 3 presentations automatically.
/// The explicit variants `<row>_p3` and `<row>_general` pin one form.
struct CatalogId {
  std::string family;
  int p = 0;

  /// "table1_viii", "table1_viii:5", "table16_ix", "d4_example", ...
  static CatalogId parse(const std::string& text);
  std::string str() const;
};

/// Every family name, in table order.
std::vector<std::string> catalog_families();
/// Families that ship an explicit algebra.
std::vector<std::string> catalog_algebra_families();

/// Raw text of an embedded file, e.g. "groups/table16_ix"; nullopt when absent.
std::optional<std::string> catalog_source(const std::string& path);
std::vector<std::string> catalog_paths();

/// Resolves the presentation file and constants for an id (BadCatalogId).
struct CatalogEntry {
  std::string path;
  dsl::Document document;
  std::map<std::string, long long> constants;
};
CatalogEntry catalog_entry(const CatalogId& id, const std::string& kind = "groups");

GroupPtr catalog_group(const CatalogId& id);
bool has_catalog_algebra(const CatalogId& id);
/// The catalog algebra moved onto catalog_group(id).
TwistedAlgebra catalog_cocycle(const CatalogId& id);

/// Smallest quadratic non-residue modulo an odd prime.
long long smallest_nonresidue(long long p);
bool is_prime(long long n);

}  // namespace tga
