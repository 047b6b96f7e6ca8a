#pragma once

#include <random>
#include <vector>

#include "tga/cocycles.hpp"
#include "tga/groups.hpp"

namespace tga::test {

/// Dihedral group of order 2n: element r^i s^j stored at index j*n + i.
inline GroupPtr dihedral(int n) {
  const int order = 2 * n;
  std::vector<Elem> table(static_cast<std::size_t>(order * order));
  auto idx = [n](int i, int j) { return j * n + ((i % n) + n) % n; };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
      table[static_cast<std::size_t>(a * order + b)] =
          idx(j1 ? i1 - i2 : i1 + i2, (j1 + j2) % 2);
    }
  std::vector<std::string> labels;
  for (int a = 0; a < order; ++a) {
    const int i = a % n, j = a / n;
    std::string l = i ? (i == 1 ? "r" : "r^" + std::to_string(i)) : "";
    if (j) l += l.empty() ? "s" : "*s";
    labels.push_back(l.empty() ? "1" : l);
  }
  FiniteGroup::Generators gens{{1, n}, {"r", "s"}};
  return std::make_shared<const FiniteGroup>("D" + std::to_string(n), order,
                                             std::move(table), std::move(labels),
                                             std::move(gens));
}

inline GroupPtr cyclic(long long n) {
  const long long o[] = {n};
  return cyclic_product(o);
}

inline GroupPtr abelian(std::vector<long long> orders) { return cyclic_product(orders); }

/// Random 1-cochain vanishing at the identity.
inline std::vector<int> random_cochain(std::size_t n, int modulus, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, modulus - 1);
  std::vector<int> c(n);
  for (std::size_t i = 1; i < n; ++i) c[i] = dist(rng);
  return c;
}

}  // namespace tga::test
