#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tga {

/// Dense element index into a group's Cayley table. The identity is always 0.
using Elem = std::int32_t;

/// A word in a group's generators: a sequence of generator positions, each
/// letter standing for one positive power of that generator.
using Word = std::vector<int>;

/// A finite group stored as a validated Cayley table.
///
/// Construction checks that the table is a Latin square with identity 0 and
/// that multiplication is associative on all n^3 triples; a failed check
/// raises NotAGroup. Instances are immutable afterwards.
class FiniteGroup {
 public:
  struct Generators {
    std::vector<Elem> elements;
    std::vector<std::string> names;
  };

  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table,
              std::vector<std::string> labels = {}, Generators generators = {},
              std::vector<Word> words = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }

  Elem mul(Elem a, Elem b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }
  Elem inv(Elem a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
  Elem conj(Elem g, Elem h) const noexcept { return mul(mul(g, h), inv(g)); }
  Elem commutator(Elem g, Elem h) const noexcept {
    return mul(mul(g, h), mul(inv(g), inv(h)));
  }
  Elem power(Elem a, long long k) const;
  int element_order(Elem a) const noexcept {
    return order_of_[static_cast<std::size_t>(a)];
  }
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }
  bool is_abelian() const noexcept;

  std::string label(Elem a) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Elem>& generator_indices() const noexcept {
    return generators_.elements;
  }
  const std::vector<std::string>& generator_names() const noexcept {
    return generators_.names;
  }
  /// Normal-form word of each element, when the group came from a presentation.
  const std::vector<Word>& words() const noexcept { return words_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  /// Label lookup; -1 when absent.
  Elem find_label(const std::string& label) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> order_of_;
  std::vector<std::string> labels_;
  Generators generators_;
  std::vector<Word> words_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup as a sorted element set of its parent group.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Elem g) const;
  bool operator==(const Subgroup&) const = default;
};

/// Invariant factors d1 | d2 | ... | dk of a finite abelian group, each > 1.
struct AbelianStructure {
  std::vector<long long> invariant_factors;

  long long order() const;
  bool operator==(const AbelianStructure&) const = default;
};

/// A one-dimensional character with values zeta_modulus^values[g].
struct Character {
  int modulus = 1;
  std::vector<int> values;

  bool is_trivial() const;
  bool operator==(const Character&) const = default;
};

struct CharacterGroup {
  int modulus = 1;  // exponent of G/G'
  std::vector<Character> characters;  // characters[0] is trivial
};

/// G/N with the projection map.
struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;
};

/// A subgroup re-indexed as a group of its own; embedding[i] is the parent
/// element of the i-th element.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Elem> embedding;
};

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Elem x);
Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup whole_group(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_cyclic(const FiniteGroup& g, const Subgroup& h);
int exponent(const FiniteGroup& g);

/// Greedy small generating set: repeatedly adds the element that enlarges the
/// generated subgroup the most (ties to the smallest index).
std::vector<Elem> small_generating_set(const FiniteGroup& g);

AbelianStructure abelian_structure(const FiniteGroup& g);
AbelianStructure abelian_structure(const FiniteGroup& g, const Subgroup& h);
bool embeds(const AbelianStructure& a, const AbelianStructure& b);
bool is_hall(const FiniteGroup& g, const Subgroup& h);

Quotient quotient(const FiniteGroup& g, const Subgroup& normal);
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);
CharacterGroup character_group(const FiniteGroup& g);

/// Direct product of cyclic groups of the given orders (lexicographic
/// coordinates, first factor slowest).
GroupPtr cyclic_product(std::span<const long long> orders, std::string name = {});

/// Searches for an isomorphism from `from` to `to`, mapping a small generating
/// set of `from` to all candidate images of matching order.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& from,
                                                  const FiniteGroup& to);

}  // namespace tga
