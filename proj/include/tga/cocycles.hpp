#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tga/groups.hpp"

namespace tga {

/// zeta_modulus^exponent.
struct RootOfUnity {
  int modulus = 1;
  int exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(int modulus, long long exponent);

  bool is_one() const noexcept { return exponent == 0; }
  /// Multiplicative order of the value.
  int order() const;
  RootOfUnity inverse() const;
  /// The same value written over modulus m, which must be a multiple of `modulus`.
  RootOfUnity embed(int m) const;
  /// Exact equality of complex values (moduli may differ).
  bool same_value(const RootOfUnity& other) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  bool operator==(const RootOfUnity&) const = default;
};

/// A normalized 2-cochain with values in mu_m, stored as an n x n exponent table.
class Cocycle {
 public:
  /// The trivial cocycle.
  Cocycle(GroupPtr group, int modulus);
  Cocycle(GroupPtr group, int modulus, std::vector<int> table);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int modulus() const noexcept { return modulus_; }
  int operator()(Elem x, Elem y) const noexcept {
    return table_[static_cast<std::size_t>(x) * group_->order() + static_cast<std::size_t>(y)];
  }
  RootOfUnity value(Elem x, Elem y) const { return {modulus_, (*this)(x, y)}; }
  const std::vector<int>& table() const noexcept { return table_; }

  bool is_normalized() const;
  /// Same cocycle with exponents over a multiple m of the modulus.
  Cocycle embed(int m) const;
  /// Pointwise product (common modulus lcm).
  friend Cocycle operator*(const Cocycle& a, const Cocycle& b);
  Cocycle pow(long long k) const;
  Cocycle inverse() const { return pow(-1); }

  bool operator==(const Cocycle& other) const {
    return group_ == other.group_ && modulus_ == other.modulus_ && table_ == other.table_;
  }

 private:
  GroupPtr group_;
  int modulus_;
  std::vector<int> table_;
};

/// Checks normalization and the cocycle identity on all n^3 triples.
void validate_cocycle(const Cocycle& f);

/// delta c with (delta c)(x,y) = c(x) + c(y) - c(xy); requires c[0] = 0.
Cocycle coboundary(GroupPtr g, std::span<const int> c, int modulus);

/// alpha_f(g,h) = f(g,h) f(h,g)^{-1}; g and h must commute.
RootOfUnity alpha_form(const Cocycle& f, Elem g, Elem h);

/// Whether f1/f2 is the coboundary of a C*-valued cochain.
bool cohomologous(const Cocycle& f1, const Cocycle& f2);

/// Restriction to a subgroup, reindexed over subgroup_as_group(h).
Cocycle restrict(const Cocycle& f, const Subgroup& h);

struct CohomologyBasis {
  GroupPtr group;
  int modulus = 1;
  std::vector<Cocycle> generators;
  std::vector<long long> orders;  // prime powers, one per generator

  long long class_count() const;
};

struct H2Options {
  std::size_t max_order = 100;
};

/// H^2(G, C*) as a product of cyclic groups of prime-power order.
CohomologyBasis h2_basis(const GroupPtr& g, const H2Options& options = {});

/// One representative per class, in mixed-radix order over generator
/// exponents (first generator fastest); the first is always trivial.
class ClassEnumerator {
 public:
  explicit ClassEnumerator(const CohomologyBasis& basis,
                           long long cap = 1LL << 20);

  std::optional<Cocycle> next();
  long long total() const noexcept { return total_; }
  long long index() const noexcept { return index_; }
  /// Exponent digits of the representative returned last.
  const std::vector<long long>& digits() const noexcept { return last_; }

 private:
  const CohomologyBasis* basis_;
  long long total_;
  long long index_ = 0;
  std::vector<long long> digit_;
  std::vector<long long> last_;
};

/// Normalized table of a cocycle given only its values f(x, s) on a generating
/// set s, extended by the cocycle identity; used internally and by tests.
Cocycle cocycle_from_columns(const GroupPtr& g, int modulus, std::span<const Elem> gens,
                             const std::vector<std::vector<int>>& columns);

/// Text form: header `cocycle modulus=<m> group=<id> n=<n>` then n rows.
void write_cocycle(std::ostream& out, const Cocycle& f, const std::string& group_id);
Cocycle read_cocycle(std::istream& in, const GroupPtr& g);

}  // namespace tga
