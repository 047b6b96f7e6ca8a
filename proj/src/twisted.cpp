#include "tga/twisted.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tga/errors.hpp"

namespace tga {

int GroupInfo::find_character(const std::vector<int>& values) const {
  for (std::size_t i = 0; i < characters.characters.size(); ++i)
    if (characters.characters[i].values == values) return static_cast<int>(i);
  return -1;
}

std::shared_ptr<const GroupInfo> group_info(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  auto info = std::make_shared<GroupInfo>();
  info->group = gp;
  info->classes = conjugacy_classes(g);
  info->class_of.assign(g.order(), -1);
  for (std::size_t c = 0; c < info->classes.size(); ++c)
    for (Elem x : info->classes[c]) info->class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  info->derived = commutator_subgroup(g);
  info->derived_coset.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (info->derived_coset[x] != -1) continue;
    for (Elem k : info->derived.elements)
      info->derived_coset[static_cast<std::size_t>(g.mul(static_cast<Elem>(x), k))] =
          static_cast<Elem>(x);
  }
  for (const auto& cls : info->classes) {
    Subgroup c = centralizer(g, cls.front());
    // |G'C| = |G'| |C| / |G' n C|
    std::size_t meet = 0;
    for (Elem x : c.elements) meet += info->derived.contains(x) ? 1 : 0;
    const std::size_t product = info->derived.order() * c.order() / meet;
    info->coset_index.push_back(g.order() / product);
    info->centralizers.push_back(std::move(c));
  }
  info->characters = character_group(g);
  return info;
}

namespace {

bool check_power_normalized(const Cocycle& f) {
  const FiniteGroup& g = f.group();
  for (std::size_t x = 1; x < g.order(); ++x) {
    const Elem a = static_cast<Elem>(x);
    long long s = 0;
    Elem p = a;
    for (int i = 1; i < g.element_order(a); ++i) {
      s += f(p, a);
      p = g.mul(p, a);
    }
    if (s % f.modulus() != 0) return false;
  }
  return true;
}

}  // namespace

TwistedAlgebra::TwistedAlgebra(Cocycle f) : TwistedAlgebra(f, group_info(f.group_ptr())) {}

TwistedAlgebra::TwistedAlgebra(Cocycle f, std::shared_ptr<const GroupInfo> info)
    : cocycle_(std::move(f)), info_(std::move(info)) {
  if (info_->group->order() != cocycle_.group().order())
    throw InvalidArgument("group data does not match the cocycle's group");
  validate_cocycle(cocycle_);
  power_normalized_ = check_power_normalized(cocycle_);
}

std::pair<RootOfUnity, Elem> TwistedAlgebra::basis_product(Elem g, Elem h) const {
  return {cocycle_.value(g, h), group().mul(g, h)};
}

std::pair<RootOfUnity, Elem> TwistedAlgebra::conjugate_basis(Elem g, Elem h) const {
  const FiniteGroup& G = group();
  const Elem gi = G.inv(g), gh = G.mul(g, h);
  const long long e = static_cast<long long>(cocycle_(g, h)) + cocycle_(gh, gi) - cocycle_(g, gi);
  return {RootOfUnity(modulus(), e), G.mul(gh, gi)};
}

RootOfUnity TwistedAlgebra::power_scalar(Elem g) const {
  long long s = 0;
  Elem p = g;
  for (int i = 1; i < group().element_order(g); ++i) {
    s += cocycle_(p, g);
    p = group().mul(p, g);
  }
  return {modulus(), s};
}

bool TwistedAlgebra::is_f_regular(Elem x) const {
  const auto& c = info_->centralizers[static_cast<std::size_t>(info_->class_of[static_cast<std::size_t>(x)])];
  if (info_->classes[static_cast<std::size_t>(info_->class_of[static_cast<std::size_t>(x)])].front() == x) {
    for (Elem g : c.elements)
      if (cocycle_(g, x) != cocycle_(x, g)) return false;
    return true;
  }
  for (std::size_t g = 0; g < group().order(); ++g) {
    const Elem h = static_cast<Elem>(g);
    if (group().commute(h, x) && cocycle_(h, x) != cocycle_(x, h)) return false;
  }
  return true;
}

bool TwistedAlgebra::is_regular(const Character& lambda, Elem x) const {
  const int l = std::lcm(lambda.modulus, modulus());
  const long long sl = l / lambda.modulus, sf = l / modulus();
  auto test = [&](Elem g) {
    const long long a = (static_cast<long long>(cocycle_(g, x)) - cocycle_(x, g)) * sf;
    return ((lambda.values[static_cast<std::size_t>(g)] * sl - a) % l + l) % l == 0;
  };
  const int cls = info_->class_of[static_cast<std::size_t>(x)];
  if (info_->classes[static_cast<std::size_t>(cls)].front() == x) {
    for (Elem g : info_->centralizers[static_cast<std::size_t>(cls)].elements)
      if (!test(g)) return false;
    return true;
  }
  for (std::size_t g = 0; g < group().order(); ++g)
    if (group().commute(static_cast<Elem>(g), x) && !test(static_cast<Elem>(g))) return false;
  return true;
}

TwistedAlgebra power_normalize(const TwistedAlgebra& a) {
  const FiniteGroup& g = a.group();
  const int e = exponent(g);
  const int big = a.modulus() * e;
  std::vector<int> c(g.order(), 0);
  for (std::size_t x = 1; x < g.order(); ++x) {
    const Elem el = static_cast<Elem>(x);
    const long long s = a.power_scalar(el).exponent;
    c[x] = static_cast<int>(((-s * (e / g.element_order(el))) % big + big) % big);
  }
  Cocycle f = a.cocycle().embed(big) * coboundary(a.group_ptr(), c, big);
  // shrink to the smallest modulus that still holds every value
  int m = big;
  for (int d = 1; d <= big; ++d) {
    if (big % d != 0) continue;
    const int step = big / d;
    if (std::all_of(f.table().begin(), f.table().end(), [&](int v) { return v % step == 0; })) {
      m = d;
      break;
    }
  }
  std::vector<int> t(f.table());
  for (auto& v : t) v /= big / m;
  return TwistedAlgebra(Cocycle(a.group_ptr(), m, std::move(t)), a.info_ptr());
}

RegularityReport regularity_report(const TwistedAlgebra& a) {
  const GroupInfo& info = a.info();
  RegularityReport r;
  std::vector<char> in_gamma(info.classes.size(), 0);
  for (const auto& lambda : info.characters.characters) {
    std::vector<Elem> row;
    for (std::size_t c = 0; c < info.classes.size(); ++c) {
      const Elem x = info.classes[c].front();
      if (a.is_regular(lambda, x)) {
        row.push_back(x);
        in_gamma[c] = 1;
      }
    }
    r.regular_classes.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < info.classes.size(); ++c)
    if (in_gamma[c]) r.gamma.push_back(info.classes[c].front());
  r.f_regular_classes = r.regular_classes.front();
  r.center_dim = r.f_regular_classes.size();
  r.nondegenerate = r.center_dim == 1;
  return r;
}

std::vector<SemicenterVector> semicenter_basis(const TwistedAlgebra& a, const RegularityReport& r) {
  const GroupInfo& info = a.info();
  const FiniteGroup& g = a.group();
  std::vector<SemicenterVector> basis;
  for (std::size_t li = 0; li < r.regular_classes.size(); ++li) {
    const Character& lambda = info.characters.characters[li];
    for (Elem x : r.regular_classes[li]) {
      const Subgroup& cent =
          info.centralizers[static_cast<std::size_t>(info.class_of[static_cast<std::size_t>(x)])];
      SemicenterVector v{static_cast<int>(li), x, {}};
      // minimal-index left coset representatives of C_G(x)
      std::vector<char> covered(g.order(), 0);
      for (std::size_t t = 0; t < g.order(); ++t) {
        if (covered[t]) continue;
        for (Elem h : cent.elements) covered[static_cast<std::size_t>(g.mul(static_cast<Elem>(t), h))] = 1;
        const auto [scalar, y] = a.conjugate_basis(static_cast<Elem>(t), x);
        const RootOfUnity weight(lambda.modulus, -lambda.values[t]);
        v.support.emplace_back(y, weight * scalar);
      }
      std::sort(v.support.begin(), v.support.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

std::size_t sz_dim(const TwistedAlgebra& a, const RegularityReport& r) {
  const GroupInfo& info = a.info();
  std::size_t by_weight = 0;
  for (const auto& row : r.regular_classes) by_weight += row.size();
  std::size_t by_index = 0;
  for (Elem x : r.gamma)
    by_index += info.coset_index[static_cast<std::size_t>(info.class_of[static_cast<std::size_t>(x)])];
  if (by_weight != by_index)
    throw InternalInconsistency("semi-center dimension counts disagree: " +
                                std::to_string(by_weight) + " by weight spaces, " +
                                std::to_string(by_index) + " by coset indices");
  return by_weight;
}

PhiMap phi_map(const TwistedAlgebra& a, const RegularityReport& r) {
  if (!r.nondegenerate) throw DegenerateCocycle("phi is only defined for nondegenerate cocycles");
  const GroupInfo& info = a.info();
  const FiniteGroup& g = a.group();
  const auto& chars = info.characters.characters;
  PhiMap phi;
  for (std::size_t li = 0; li < chars.size(); ++li) {
    if (r.regular_classes[li].size() != 1)
      throw InternalInconsistency("character " + std::to_string(li) + " has " +
                                  std::to_string(r.regular_classes[li].size()) +
                                  " regular classes; expected exactly one");
    const Elem x = r.regular_classes[li].front();
    phi.coset.push_back(info.derived_coset[static_cast<std::size_t>(x)]);
    if (phi.coset.back() == 0) phi.kernel.push_back(static_cast<int>(li));
  }
  const int m = info.characters.modulus;
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      std::vector<int> prod(g.order());
      for (std::size_t x = 0; x < g.order(); ++x)
        prod[x] = (chars[i].values[x] + chars[j].values[x]) % m;
      const int k = info.find_character(prod);
      const Elem expect = info.derived_coset[static_cast<std::size_t>(g.mul(phi.coset[i], phi.coset[j]))];
      if (k < 0 || phi.coset[static_cast<std::size_t>(k)] != expect)
        throw InternalInconsistency("phi is not a homomorphism");
    }
  return phi;
}

SemicenterReport classify_semicenter(const TwistedAlgebra& a) {
  return classify_semicenter(a, regularity_report(a));
}

SemicenterReport classify_semicenter(const TwistedAlgebra& a, const RegularityReport& r) {
  if (!r.nondegenerate)
    throw DegenerateCocycle("semi-center classification needs a nondegenerate cocycle");
  const GroupInfo& info = a.info();
  SemicenterReport s;
  s.sz_dim = sz_dim(a, r);
  s.basis = semicenter_basis(a, r);
  s.phi = phi_map(a, r);
  const std::size_t dual = info.characters.characters.size();
  s.commutative = s.phi.kernel.size() == dual;
  s.simple = s.phi.kernel.size() == 1;
  std::size_t inside = 0;
  for (Elem x : r.gamma)
    if (info.derived.contains(x))
      inside += info.coset_index[static_cast<std::size_t>(info.class_of[static_cast<std::size_t>(x)])];
  if ((inside == dual) != s.commutative)
    throw InternalInconsistency("commutativity by kernel and by regular classes in G' disagree");
  return s;
}

std::vector<long long> cyclotomic_polynomial(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long long> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const long long c = num[i];  // den is monic
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

namespace {

using Poly = std::vector<long long>;  // coefficients of zeta^k, k < M

std::map<Elem, Poly> multiply(const TwistedAlgebra& a, const SemicenterVector& x,
                              const SemicenterVector& y, int big) {
  std::map<Elem, Poly> out;
  for (const auto& [g, cg] : x.support)
    for (const auto& [h, ch] : y.support) {
      const RootOfUnity s = (cg * ch * a.cocycle().value(g, h)).embed(big);
      auto& p = out[a.group().mul(g, h)];
      if (p.empty()) p.assign(static_cast<std::size_t>(big), 0);
      p[static_cast<std::size_t>(s.exponent)] += 1;
    }
  return out;
}

bool zero_mod_cyclotomic(Poly p, const std::vector<long long>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    const long long c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * phi[j];
  }
  return std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; });
}

}  // namespace

bool sz_commutator_crosscheck(const TwistedAlgebra& a, const std::vector<SemicenterVector>& basis) {
  int big = a.modulus();
  for (const auto& v : basis)
    for (const auto& [g, c] : v.support) big = std::lcm(big, c.modulus);
  const auto phi = cyclotomic_polynomial(big);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto ab = multiply(a, basis[i], basis[j], big);
      const auto ba = multiply(a, basis[j], basis[i], big);
      for (const auto& [g, p] : ba) {
        auto& q = ab[g];
        if (q.empty()) q.assign(static_cast<std::size_t>(big), 0);
        for (std::size_t k = 0; k < p.size(); ++k) q[k] -= p[k];
      }
      for (const auto& [g, p] : ab) {
        if (std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; })) continue;
        if (!zero_mod_cyclotomic(p, phi)) return false;
      }
    }
  return true;
}

}  // namespace tga
