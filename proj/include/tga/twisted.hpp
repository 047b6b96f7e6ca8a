#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "tga/cocycles.hpp"
#include "tga/groups.hpp"

namespace tga {

/// Group data shared by every algebra over the same group.
struct GroupInfo {
  GroupPtr group;
  std::vector<std::vector<Elem>> classes;
  std::vector<int> class_of;             // element -> class index
  std::vector<Subgroup> centralizers;    // per class, of the representative
  Subgroup derived;                      // G'
  std::vector<Elem> derived_coset;       // element -> minimal element of xG'
  CharacterGroup characters;
  std::vector<std::size_t> coset_index;  // per class: [G : G'C_G(x)]

  /// Index of the character with the given values, or -1.
  int find_character(const std::vector<int>& values) const;
};

std::shared_ptr<const GroupInfo> group_info(const GroupPtr& g);

/// The twisted group algebra C^f G with basis u_g and u_x u_y = f(x,y) u_xy.
class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(Cocycle f);
  TwistedAlgebra(Cocycle f, std::shared_ptr<const GroupInfo> info);

  const FiniteGroup& group() const noexcept { return cocycle_.group(); }
  const GroupPtr& group_ptr() const noexcept { return cocycle_.group_ptr(); }
  const Cocycle& cocycle() const noexcept { return cocycle_; }
  const GroupInfo& info() const noexcept { return *info_; }
  const std::shared_ptr<const GroupInfo>& info_ptr() const noexcept { return info_; }
  int modulus() const noexcept { return cocycle_.modulus(); }

  /// Whether u_g^{o(g)} = 1 for every g, read off the table.
  bool power_normalized() const noexcept { return power_normalized_; }

  std::pair<RootOfUnity, Elem> basis_product(Elem g, Elem h) const;
  /// u_g u_h u_g^{-1} = scalar * u_{g h g^-1}.
  std::pair<RootOfUnity, Elem> conjugate_basis(Elem g, Elem h) const;
  /// u_g^{o(g)} as a scalar.
  RootOfUnity power_scalar(Elem g) const;

  bool is_f_regular(Elem g) const;
  /// lambda(g) = alpha_f(g, x) for every g in C_G(x).
  bool is_regular(const Character& lambda, Elem x) const;

 private:
  Cocycle cocycle_;
  std::shared_ptr<const GroupInfo> info_;
  bool power_normalized_ = false;
};

/// A cohomologous algebra with u_g^{o(g)} = 1 for all g (the modulus grows
/// by at most the group exponent).
TwistedAlgebra power_normalize(const TwistedAlgebra& a);

struct RegularityReport {
  std::vector<std::vector<Elem>> regular_classes;  // per character, class representatives
  std::vector<Elem> gamma;                         // union over characters
  std::vector<Elem> f_regular_classes;             // the trivial character's row
  std::size_t center_dim = 0;
  bool nondegenerate = false;
};

RegularityReport regularity_report(const TwistedAlgebra& a);

struct SemicenterVector {
  int character = 0;
  Elem representative = 0;
  std::vector<std::pair<Elem, RootOfUnity>> support;
};

std::vector<SemicenterVector> semicenter_basis(const TwistedAlgebra& a,
                                               const RegularityReport& r);

/// sum over Gamma(f) of [G : G'C_G(x)], checked against sum_lambda |Gamma(lambda,f)|.
std::size_t sz_dim(const TwistedAlgebra& a, const RegularityReport& r);

struct PhiMap {
  std::vector<Elem> coset;  // per character: minimal element of the image coset
  std::vector<int> kernel;  // character indices
};

PhiMap phi_map(const TwistedAlgebra& a, const RegularityReport& r);

struct SemicenterReport {
  std::size_t sz_dim = 0;
  std::vector<SemicenterVector> basis;
  PhiMap phi;
  bool commutative = false;
  bool simple = false;
};

SemicenterReport classify_semicenter(const TwistedAlgebra& a);
SemicenterReport classify_semicenter(const TwistedAlgebra& a, const RegularityReport& r);

/// Exact check that the semi-center basis vectors pairwise commute: first in
/// Z[x]/(x^M - 1), then, where that fails, modulo the cyclotomic polynomial.
bool sz_commutator_crosscheck(const TwistedAlgebra& a, const std::vector<SemicenterVector>& basis);

/// Coefficients of the M-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int m);

}  // namespace tga
