#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tga/catalog.hpp"
#include "tga/cocycles.hpp"
#include "tga/groups.hpp"
#include "tga/twisted.hpp"

namespace tga {

/// A structural reason for a group not to be of central type.
struct Obstruction {
  enum class Kind { NonSquareOrder, LargeElementOrder, CyclicCentralizer, CenterDoesNotEmbed };

  Kind kind = Kind::NonSquareOrder;
  std::string description;  // e.g. "element of order 8"
  Elem witness = 0;         // the element, for the centralizer and order tests
  Subgroup subgroup;        // C_G(witness), or Z(G)
  AbelianStructure center;  // Z(G) and G/G', for the embedding test
  AbelianStructure abelianization;
};

std::string to_string(Obstruction::Kind kind);

/// Every failing test among: |G| a square; element orders at most sqrt|G|;
/// C_G(g) non-cyclic for g != 1; Z(G) embedding into the character group.
std::vector<Obstruction> obstructions(const FiniteGroup& g);

/// Recomputes an obstruction from its witness alone.
bool recheck_obstruction(const FiniteGroup& g, const Obstruction& o);

enum class Verdict { CentralType, NotCentralType, Unknown };
std::string to_string(Verdict v);

struct Budget {
  long long max_classes = 1LL << 20;
  long long max_ms = 600000;
};

struct Certificate {
  enum class Kind { WitnessCocycle, Obstruction, ExhaustedClasses, BudgetExceeded };

  Kind kind = Kind::BudgetExceeded;
  // WitnessCocycle
  std::optional<Cocycle> witness;
  std::string witness_source;  // "catalog" or "enumeration"
  long long witness_index = -1;
  // Obstruction
  std::vector<Obstruction> obstructions;
  // ExhaustedClasses: one nontrivial f-regular element per class, and the
  // nontrivial elements regular for every class.
  long long class_count = 0;
  std::vector<Elem> class_witnesses;
  std::vector<Elem> universally_regular;
  // BudgetExceeded
  std::string reason;
};

std::string to_string(Certificate::Kind kind);

struct CentralTypeVerdict {
  std::string group;
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
  long long classes_tested = 0;
  long long elapsed_ms = 0;
};

struct VerdictOptions {
  Budget budget;
  /// When set and the catalog ships an algebra for it, that algebra is tried
  /// before enumeration.
  std::optional<CatalogId> catalog;
  bool use_catalog = true;
};

CentralTypeVerdict central_type_verdict(const GroupPtr& g, const VerdictOptions& options = {});

/// Re-validates a certificate against the group from scratch.
bool recheck_certificate(const GroupPtr& g, const CentralTypeVerdict& v);

/// For |G| = p^4: Z(G) is a proper subgroup of G' and |Z(G)| = p. A group
/// failing it has non-commutative Sz for every nondegenerate cocycle.
struct CommutativeSzFilter {
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  bool center_in_derived = false;
  bool passes = false;
};
CommutativeSzFilter commutative_sz_filter(const FiniteGroup& g);

struct TheoremRow {
  std::string item;
  std::string expected;
  std::string observed;
  std::string status;  // proved, corroborated, checked, cited
  bool pass = false;
};

struct TheoremReport {
  std::string name;
  int p = 0;
  bool pass = false;
  std::vector<TheoremRow> rows;
  std::vector<CentralTypeVerdict> verdicts;
  std::vector<std::string> notes;
};

/// Supported (n, p): (1, 3), (2, 2), (3, any prime), (4, 2), (4, 3), (5, any).
TheoremReport verify_theorem(int n, int p, const Budget& budget = {});

/// The order-8 dihedral example with commutative Sz on a non-simple algebra.
TheoremReport verify_d4_example();

struct PrimeLemmaRow {
  long long p = 0;
  bool divisible = false;  // p^3 | (p+1)^p - 1
  std::string residue;     // ((p+1)^p - 1) mod p^3
  bool residue_is_p_squared = false;
};

std::vector<PrimeLemmaRow> check_prime_power_lemma(long long p_max);

}  // namespace tga
