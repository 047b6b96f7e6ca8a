#include "tga/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tga/errors.hpp"

namespace tga {

namespace {

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order,
                         std::vector<Elem> table, std::vector<std::string> labels,
                         Generators generators, std::vector<Word> words)
    : name_(std::move(name)),
      n_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      generators_(std::move(generators)),
      words_(std::move(words)) {
  const std::size_t n = n_;
  if (n == 0) throw NotAGroup("group order must be positive");
  if (table_.size() != n * n) throw NotAGroup("Cayley table has wrong size");
  if (!labels_.empty() && labels_.size() != n)
    throw NotAGroup("label count does not match group order");
  if (!words_.empty() && words_.size() != n)
    throw NotAGroup("word count does not match group order");
  if (generators_.names.size() != generators_.elements.size())
    throw NotAGroup("generator names and indices differ in length");

  // Latin square with identity 0.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = table_[a * n + b];
      if (c < 0 || static_cast<std::size_t>(c) >= n)
        throw NotAGroup("table entry out of range");
      if (seen[static_cast<std::size_t>(c)]++)
        throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
    }
    if (table_[a] != static_cast<Elem>(a) || table_[a * n] != static_cast<Elem>(a))
      throw NotAGroup("element 0 is not a two-sided identity");
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a)
      if (seen[static_cast<std::size_t>(table_[a * n + b])]++)
        throw NotAGroup("column " + std::to_string(b) + " is not a permutation");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(table_[a * n + b]);
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = static_cast<std::size_t>(table_[b * n + c]);
        if (table_[ab * n + c] != table_[a * n + bc])
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }

  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
  order_of_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    Elem x = static_cast<Elem>(a);
    int k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Elem>(a));
      ++k;
    }
    order_of_[a] = k;
  }
}

Elem FiniteGroup::power(Elem a, long long k) const {
  const long long o = element_order(a);
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
  return true;
}

std::string FiniteGroup::label(Elem a) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(a)];
  return "g" + std::to_string(a);
}

Elem FiniteGroup::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Elem>(i);
  return -1;
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

long long AbelianStructure::order() const {
  long long o = 1;
  for (long long d : invariant_factors) o *= d;
  return o;
}

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (std::size_t h = 0; h < n; ++h) {
      const Elem y = g.conj(static_cast<Elem>(h), static_cast<Elem>(x));
      if (!done[static_cast<std::size_t>(y)]) {
        done[static_cast<std::size_t>(y)] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup centralizer(const FiniteGroup& g, Elem x) {
  Subgroup c;
  for (std::size_t h = 0; h < g.order(); ++h)
    if (g.commute(x, static_cast<Elem>(h))) c.elements.push_back(static_cast<Elem>(h));
  return c;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t h = 0; h < g.order() && central; ++h)
      central = g.commute(static_cast<Elem>(x), static_cast<Elem>(h));
    if (central) z.elements.push_back(static_cast<Elem>(x));
  }
  return z;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      const Elem y = g.mul(members[i], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<char> is_comm(g.order(), 0);
  std::vector<Elem> comms;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Elem c = g.commutator(static_cast<Elem>(a), static_cast<Elem>(b));
      if (!is_comm[static_cast<std::size_t>(c)]) {
        is_comm[static_cast<std::size_t>(c)] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_generated(g, comms);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements.front() != 0) return false;
  if (!std::is_sorted(h.elements.begin(), h.elements.end())) return false;
  for (Elem a : h.elements) {
    if (!h.contains(g.inv(a))) return false;
    for (Elem b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (Elem a : h.elements)
      if (!h.contains(g.conj(static_cast<Elem>(x), a))) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  return std::any_of(h.elements.begin(), h.elements.end(), [&](Elem a) {
    return static_cast<std::size_t>(g.element_order(a)) == h.order();
  });
}

int exponent(const FiniteGroup& g) {
  int e = 1;
  for (std::size_t a = 0; a < g.order(); ++a)
    e = std::lcm(e, g.element_order(static_cast<Elem>(a)));
  return e;
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup current = subgroup_generated(g, gens);
  while (current.order() < g.order()) {
    Elem best = -1;
    std::size_t best_size = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (current.contains(static_cast<Elem>(x))) continue;
      gens.push_back(static_cast<Elem>(x));
      const std::size_t size = subgroup_generated(g, gens).order();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = static_cast<Elem>(x);
      }
    }
    gens.push_back(best);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

namespace {

// Invariant factors from the counts |{x : x^(p^k) = 1}| of each p-primary part.
AbelianStructure structure_from_elements(const FiniteGroup& g,
                                         const std::vector<Elem>& elems) {
  const long long n = static_cast<long long>(elems.size());
  std::map<long long, std::vector<long long>> primary;  // p -> factor orders
  for (long long p : prime_factors(n)) {
    long long pk = 1;
    std::vector<long long> counts{0};  // log_p |Omega_k|
    long long p_part = 1;
    for (long long m = n; m % p == 0; m /= p) p_part *= p;
    while (true) {
      pk *= p;
      long long c = 0;
      for (Elem x : elems)
        if (pk % g.element_order(x) == 0 && g.element_order(x) % p == 0) ++c;
      // elements whose order is a power of p dividing pk, plus the identity
      long long omega = 1 + c;
      long long lg = 0;
      for (long long t = omega; t > 1; t /= p) ++lg;
      counts.push_back(lg);
      if (omega == p_part) break;
    }
    // number of cyclic factors of order >= p^k is counts[k] - counts[k-1]
    std::vector<long long> factors;
    const std::size_t kmax = counts.size() - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      const long long at_least_k = counts[k] - counts[k - 1];
      const long long at_least_k1 = k + 1 <= kmax ? counts[k + 1] - counts[k] : 0;
      long long q = 1;
      for (std::size_t i = 0; i < k; ++i) q *= p;
      for (long long j = 0; j < at_least_k - at_least_k1; ++j) factors.push_back(q);
    }
    std::sort(factors.begin(), factors.end(), std::greater<>());
    primary[p] = std::move(factors);
  }
  std::size_t len = 0;
  for (auto& [p, fs] : primary) len = std::max(len, fs.size());
  std::vector<long long> inv(len, 1);
  for (auto& [p, fs] : primary)
    for (std::size_t i = 0; i < fs.size(); ++i) inv[i] *= fs[i];
  std::reverse(inv.begin(), inv.end());
  return AbelianStructure{std::move(inv)};
}

}  // namespace

AbelianStructure abelian_structure(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("group '" + g.name() + "' is not abelian");
  return structure_from_elements(g, whole_group(g).elements);
}

AbelianStructure abelian_structure(const FiniteGroup& g, const Subgroup& h) {
  for (Elem a : h.elements)
    for (Elem b : h.elements)
      if (!g.commute(a, b)) throw NotAbelian("subgroup is not abelian");
  return structure_from_elements(g, h.elements);
}

bool embeds(const AbelianStructure& a, const AbelianStructure& b) {
  const auto& x = a.invariant_factors;
  const auto& y = b.invariant_factors;
  if (x.size() > y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[y.size() - 1 - i] % x[x.size() - 1 - i] != 0) return false;
  return true;
}

bool is_hall(const FiniteGroup& g, const Subgroup& h) {
  const long long order = static_cast<long long>(h.order());
  const long long index = static_cast<long long>(g.order()) / order;
  return std::gcd(order, index) == 1;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& normal) {
  if (!is_normal(g, normal)) throw InvalidArgument("quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  std::vector<Elem> rep(n, -1);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != -1) continue;
    for (Elem k : normal.elements)
      rep[static_cast<std::size_t>(g.mul(static_cast<Elem>(x), k))] =
          static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = rep[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(g.label(r));
  FiniteGroup::Generators gens;
  for (std::size_t i = 0; i < g.generator_indices().size(); ++i) {
    gens.elements.push_back(rep[static_cast<std::size_t>(g.generator_indices()[i])]);
    gens.names.push_back(g.generator_names()[i]);
  }
  auto group = std::make_shared<const FiniteGroup>(g.name() + "/N", q, std::move(table),
                                                   std::move(labels), std::move(gens));
  return Quotient{std::move(group), std::move(rep)};
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t k = h.order();
  std::vector<Elem> index(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i)
    index[static_cast<std::size_t>(h.elements[i])] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem p = index[static_cast<std::size_t>(g.mul(h.elements[i], h.elements[j]))];
      if (p < 0) throw InvalidArgument("subset is not closed under multiplication");
      table[i * k + j] = p;
    }
  std::vector<std::string> labels;
  for (Elem a : h.elements) labels.push_back(g.label(a));
  auto group = std::make_shared<const FiniteGroup>(g.name() + "|H", k, std::move(table),
                                                   std::move(labels));
  return SubgroupGroup{std::move(group), h.elements};
}

CharacterGroup character_group(const FiniteGroup& g) {
  const Subgroup derived = commutator_subgroup(g);
  const Quotient q = quotient(g, derived);
  const FiniteGroup& a = *q.group;
  const int m = exponent(a);
  const std::vector<Elem> gens = small_generating_set(a);

  // BFS tree over the abelianization: element = parent * gens[via].
  const std::size_t qn = a.order();
  std::vector<Elem> parent(qn, -1), via(qn, -1), bfs{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem y = a.mul(bfs[i], gens[s]);
      if (parent[static_cast<std::size_t>(y)] == -1) {
        parent[static_cast<std::size_t>(y)] = bfs[i];
        via[static_cast<std::size_t>(y)] = static_cast<Elem>(s);
        bfs.push_back(y);
      }
    }

  CharacterGroup result;
  result.modulus = m;
  std::vector<int> radix;
  for (Elem s : gens) radix.push_back(a.element_order(s));
  std::vector<int> digit(gens.size(), 0);
  std::vector<int> values(qn);
  while (true) {
    // generator s takes value digit[s] * m / order(s)
    values[0] = 0;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const std::size_t y = static_cast<std::size_t>(bfs[i]);
      const std::size_t s = static_cast<std::size_t>(via[y]);
      values[y] = (values[static_cast<std::size_t>(parent[y])] + digit[s] * (m / radix[s])) % m;
    }
    bool hom = true;
    for (std::size_t x = 0; x < qn && hom; ++x)
      for (std::size_t s = 0; s < gens.size() && hom; ++s) {
        const std::size_t y = static_cast<std::size_t>(a.mul(static_cast<Elem>(x), gens[s]));
        hom = values[y] == (values[x] + digit[s] * (m / radix[s])) % m;
      }
    if (hom) {
      Character chi;
      chi.modulus = m;
      chi.values.resize(g.order());
      for (std::size_t x = 0; x < g.order(); ++x)
        chi.values[x] = values[static_cast<std::size_t>(q.projection[x])];
      result.characters.push_back(std::move(chi));
    }
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == radix[pos]) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  if (result.characters.size() != qn)
    throw InternalInconsistency("character count " +
                                std::to_string(result.characters.size()) +
                                " differs from |G/G'| = " + std::to_string(qn));
  return result;
}

GroupPtr cyclic_product(std::span<const long long> orders, std::string name) {
  std::size_t n = 1;
  for (long long o : orders) n *= static_cast<std::size_t>(o);
  auto coords = [&](std::size_t x) {
    std::vector<long long> c(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      c[i] = static_cast<long long>(x % static_cast<std::size_t>(orders[i]));
      x /= static_cast<std::size_t>(orders[i]);
    }
    return c;
  };
  auto encode = [&](const std::vector<long long>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
      x = x * static_cast<std::size_t>(orders[i]) + static_cast<std::size_t>(c[i]);
    return static_cast<Elem>(x);
  };
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto cx = coords(x);
    std::string l;
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (cx[i] == 0) continue;
      if (!l.empty()) l += "*";
      l += "e" + std::to_string(i + 1);
      if (cx[i] > 1) l += "^" + std::to_string(cx[i]);
    }
    labels[x] = l.empty() ? "1" : l;
    for (std::size_t y = 0; y < n; ++y) {
      auto cy = coords(y);
      for (std::size_t i = 0; i < cy.size(); ++i) cy[i] = (cy[i] + cx[i]) % orders[i];
      table[x * n + y] = encode(cy);
    }
  }
  FiniteGroup::Generators gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<long long> c(orders.size(), 0);
    c[i] = 1;
    gens.elements.push_back(encode(c));
    gens.names.push_back("e" + std::to_string(i + 1));
  }
  if (name.empty()) {
    name = "C";
    for (std::size_t i = 0; i < orders.size(); ++i)
      name += (i ? "xC" : "") + std::to_string(orders[i]);
  }
  return std::make_shared<const FiniteGroup>(std::move(name), n, std::move(table),
                                             std::move(labels), std::move(gens));
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& from,
                                                  const FiniteGroup& to) {
  const std::size_t n = from.order();
  if (n != to.order()) return std::nullopt;
  std::map<int, int> profile_from, profile_to;
  for (std::size_t x = 0; x < n; ++x) {
    ++profile_from[from.element_order(static_cast<Elem>(x))];
    ++profile_to[to.element_order(static_cast<Elem>(x))];
  }
  if (profile_from != profile_to) return std::nullopt;

  const std::vector<Elem> gens = small_generating_set(from);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t y = 0; y < n; ++y)
      if (to.element_order(static_cast<Elem>(y)) == from.element_order(gens[s]))
        candidates[s].push_back(static_cast<Elem>(y));

  std::vector<Elem> chosen;
  std::vector<Elem> image(n);
  // Extends the map over <gens[0..k)> and checks it is an injective homomorphism there.
  auto consistent = [&](std::size_t k) {
    std::fill(image.begin(), image.end(), -1);
    std::vector<char> hit(n, 0);
    std::vector<Elem> bfs{0};
    image[0] = 0;
    hit[0] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t s = 0; s < k; ++s) {
        const std::size_t y = static_cast<std::size_t>(from.mul(bfs[i], gens[s]));
        const Elem t = to.mul(image[static_cast<std::size_t>(bfs[i])], chosen[s]);
        if (image[y] == -1) {
          if (hit[static_cast<std::size_t>(t)]++) return false;
          image[y] = t;
          bfs.push_back(static_cast<Elem>(y));
        } else if (image[y] != t) {
          return false;
        }
      }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) return consistent(k);
    for (Elem t : candidates[k]) {
      chosen.push_back(t);
      if (consistent(k + 1) && self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

}  // namespace tga
