#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tga/twisted.hpp"

namespace tga {

/// g^exponent for a presentation generator.
struct Syllable {
  int generator = 0;
  long long exponent = 1;
  bool operator==(const Syllable&) const = default;
};
using Syllables = std::vector<Syllable>;

/// zeta_modulus^(exponent + sum of coefficient * parameter exponent).
/// A parameter declared in mu(k) with value v contributes v * modulus / k.
struct Scalar {
  long long exponent = 0;
  std::vector<std::pair<int, long long>> parameters;  // parameter index, coefficient
  bool operator==(const Scalar&) const = default;
};

/// u_lhs = scalar * u_rhs, where u_w is the product of u_g^{+-1} along w.
struct Relator {
  Syllables lhs;
  Scalar scalar;
  Syllables rhs;
  bool operator==(const Relator&) const = default;
};

struct ScalarParameter {
  std::string name;
  int root_order = 1;  // ranges over mu(root_order)
  bool operator==(const ScalarParameter&) const = default;
};

/// Generators with declared power exponents plus arbitrary relators. With
/// every scalar trivial it presents the underlying group.
struct CollectionPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<long long> orders;  // exponent of each generator's power relation
  int modulus = 1;
  std::vector<Relator> relations;
  std::vector<ScalarParameter> parameters;
};

struct CollectOptions {
  std::size_t coset_limit = 1u << 20;
  /// Reused when the enumerated group has the same table.
  GroupPtr group_hint;
  std::shared_ptr<const GroupInfo> info_hint;
};

/// The presented group. Scalars are ignored.
GroupPtr build_group(const CollectionPresentation& pres, const CollectOptions& opt = {});

/// The twisted algebra with u_g basis read off normal-form words. Parameter
/// values are exponents in mu(root_order), one per declared parameter.
TwistedAlgebra collect(const CollectionPresentation& pres, const std::vector<int>& parameter_values = {},
                       const CollectOptions& opt = {});

/// psi(u_h) = zeta_modulus^scalar u_image.
struct ActionImage {
  int scalar = 0;
  Elem image = 0;
};

struct CrossedProductSpec {
  TwistedAlgebra base;
  std::string generator;
  int order = 1;
  int modulus = 1;  // multiple of the base modulus
  std::vector<ActionImage> action;  // indexed by base element
};

/// Extends images of the base group's generators multiplicatively.
CrossedProductSpec action_from_generators(const TwistedAlgebra& base, std::string generator, int order,
                                          int modulus, const std::vector<ActionImage>& generator_images);

/// Multiplicativity on all pairs (NotMultiplicative) and psi^order = id
/// (WrongOrder carrying the true order of psi, or 0 past the search bound).
void verify_action(const CrossedProductSpec& spec);

/// The algebra spanned by u_h u_g^i; element index i*|H| + h.
TwistedAlgebra crossed_product(const CrossedProductSpec& spec);

struct SweepStats {
  std::size_t consistent = 0;
  std::size_t skipped = 0;
};

/// Runs collect over every parameter assignment (first parameter fastest).
/// Inconsistent assignments are counted and skipped.
SweepStats sweep_presentation_cocycles(
    const CollectionPresentation& pres,
    const std::function<void(const std::vector<int>&, const TwistedAlgebra&)>& visit,
    const CollectOptions& opt = {});

/// Sign exponents (0 for +1, 1 for -1) of the order-64 chain. R1 is the
/// commutative algebra on C2^3 with u_xi^2 = s_i; psi_j (j = 4, 5, 6) sends
/// u_xi to t_ij u_xi on R1, and on the earlier steps psi_5(u_x4) = delta u_x1 u_x4,
/// psi_6(u_x4) = gamma u_x2 u_x4, psi_6(u_x5) = lambda u_x3 u_x5.
struct Order64Signs {
  int t14 = 0, t15 = 0, t16 = 0, t24 = 0, t25 = 0, t26 = 0, t34 = 0, t35 = 0, t36 = 0;
  int s1 = 0, s2 = 0, s3 = 0;
  int delta = 0, gamma = 0, lambda = 0;

  /// t16 = t24 = t26 = t34 = t35 = t36 = -1, u_x2^2 = u_x3^2 = -1, others +1.
  static Order64Signs consistent_default();
};

/// The last step: psi_6 acting on R3 = (R1 * <x4>) * <x5>. The earlier steps
/// must be consistent (verify_action errors propagate).
CrossedProductSpec order64_last_step(const Order64Signs& signs);

/// Cocycle moved along an isomorphism iso: G -> H.
Cocycle transport(const Cocycle& f, const GroupPtr& target, const std::vector<Elem>& iso);

}  // namespace tga
