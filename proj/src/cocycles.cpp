#include "tga/cocycles.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/zmod.hpp"

namespace tga {

namespace {

int mod(long long a, int m) {
  a %= m;
  return static_cast<int>(a < 0 ? a + m : a);
}

struct BfsTree {
  std::vector<Elem> order;   // BFS order starting at the identity
  std::vector<Elem> parent;  // parent[y] * gens[via[y]] = y
  std::vector<int> via;
};

BfsTree bfs_tree(const FiniteGroup& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  BfsTree t{{0}, std::vector<Elem>(n, -1), std::vector<int>(n, -1)};
  t.parent[0] = 0;
  for (std::size_t i = 0; i < t.order.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Elem y = g.mul(t.order[i], gens[s]);
      if (t.parent[static_cast<std::size_t>(y)] == -1) {
        t.parent[static_cast<std::size_t>(y)] = t.order[i];
        t.via[static_cast<std::size_t>(y)] = static_cast<int>(s);
        t.order.push_back(y);
      }
    }
  return t;
}

// Generator columns of the coboundary map c |-> delta c, one row per unknown
// (x, s) with x != 1 and one column per c(y) with y != 1.
zmod::Matrix coboundary_matrix(const FiniteGroup& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  const std::size_t k = gens.size();
  zmod::Matrix d((n - 1) * k, zmod::Row(n - 1, 0));
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t s = 0; s < k; ++s) {
      auto& row = d[(x - 1) * k + s];
      auto add = [&](Elem y, int v) {
        if (y != 0) row[static_cast<std::size_t>(y) - 1] += v;
      };
      add(static_cast<Elem>(x), 1);
      add(gens[s], 1);
      add(g.mul(static_cast<Elem>(x), gens[s]), -1);
    }
  return d;
}

std::vector<long long> prime_power_split(long long o) {
  std::vector<long long> parts;
  for (long long p = 2; p * p <= o; ++p) {
    long long q = 1;
    while (o % p == 0) {
      o /= p;
      q *= p;
    }
    if (q > 1) parts.push_back(q);
  }
  if (o > 1) parts.push_back(o);
  return parts;
}

}  // namespace

RootOfUnity::RootOfUnity(int m, long long e) : modulus(m), exponent(mod(e, m)) {
  if (m <= 0) throw InvalidArgument("root of unity modulus must be positive");
}

int RootOfUnity::order() const { return modulus / std::gcd(modulus, exponent); }

RootOfUnity RootOfUnity::inverse() const { return {modulus, -exponent}; }

RootOfUnity RootOfUnity::embed(int m) const {
  if (m % modulus != 0)
    throw InvalidArgument("cannot embed mu_" + std::to_string(modulus) + " into mu_" +
                          std::to_string(m));
  return {m, static_cast<long long>(exponent) * (m / modulus)};
}

bool RootOfUnity::same_value(const RootOfUnity& other) const {
  const int l = std::lcm(modulus, other.modulus);
  return embed(l).exponent == other.embed(l).exponent;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const int l = std::lcm(a.modulus, b.modulus);
  return {l, static_cast<long long>(a.embed(l).exponent) + b.embed(l).exponent};
}

Cocycle::Cocycle(GroupPtr group, int modulus)
    : group_(std::move(group)), modulus_(modulus) {
  if (modulus_ <= 0) throw InvalidArgument("cocycle modulus must be positive");
  table_.assign(group_->order() * group_->order(), 0);
}

Cocycle::Cocycle(GroupPtr group, int modulus, std::vector<int> table)
    : group_(std::move(group)), modulus_(modulus), table_(std::move(table)) {
  if (modulus_ <= 0) throw InvalidArgument("cocycle modulus must be positive");
  if (table_.size() != group_->order() * group_->order())
    throw InvalidArgument("cocycle table size does not match the group");
  for (auto& v : table_) v = mod(v, modulus_);
}

bool Cocycle::is_normalized() const {
  const std::size_t n = group_->order();
  for (std::size_t x = 0; x < n; ++x)
    if (table_[x] != 0 || table_[x * n] != 0) return false;
  return true;
}

Cocycle Cocycle::embed(int m) const {
  if (m % modulus_ != 0)
    throw InvalidArgument("cannot embed modulus " + std::to_string(modulus_) + " into " +
                          std::to_string(m));
  std::vector<int> t(table_);
  for (auto& v : t) v *= m / modulus_;
  return Cocycle(group_, m, std::move(t));
}

Cocycle operator*(const Cocycle& a, const Cocycle& b) {
  if (a.group_->order() != b.group_->order())
    throw InvalidArgument("cocycles live on different groups");
  const int l = std::lcm(a.modulus_, b.modulus_);
  const Cocycle x = a.embed(l), y = b.embed(l);
  std::vector<int> t(x.table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (x.table_[i] + y.table_[i]) % l;
  return Cocycle(a.group_, l, std::move(t));
}

Cocycle Cocycle::pow(long long k) const {
  std::vector<int> t(table_.size());
  const long long kk = k % modulus_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod(kk * table_[i], modulus_);
  return Cocycle(group_, modulus_, std::move(t));
}

void validate_cocycle(const Cocycle& f) {
  const FiniteGroup& g = f.group();
  const std::size_t n = g.order();
  const int m = f.modulus();
  for (std::size_t x = 0; x < n; ++x) {
    const Elem e = static_cast<Elem>(x);
    if (f(0, e) != 0 || f(e, 0) != 0)
      throw NotACocycle("cocycle is not normalized", 0, e, 0);
  }
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t y = 1; y < n; ++y) {
      const Elem a = static_cast<Elem>(x), b = static_cast<Elem>(y), ab = g.mul(a, b);
      const int fab = f(a, b);
      for (std::size_t z = 1; z < n; ++z) {
        const Elem c = static_cast<Elem>(z);
        if ((fab + f(ab, c)) % m != (f(b, c) + f(a, g.mul(b, c))) % m)
          throw NotACocycle("cocycle identity fails", a, b, c);
      }
    }
}

Cocycle coboundary(GroupPtr g, std::span<const int> c, int modulus) {
  const std::size_t n = g->order();
  if (c.size() != n) throw InvalidArgument("cochain length does not match the group");
  if (mod(c[0], modulus) != 0) throw InvalidArgument("cochain must vanish at the identity");
  std::vector<int> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = mod(static_cast<long long>(c[x]) + c[y] -
                             c[static_cast<std::size_t>(g->mul(static_cast<Elem>(x),
                                                               static_cast<Elem>(y)))],
                         modulus);
  return Cocycle(std::move(g), modulus, std::move(t));
}

RootOfUnity alpha_form(const Cocycle& f, Elem g, Elem h) {
  if (!f.group().commute(g, h))
    throw NotCommuting("alpha_f(" + f.group().label(g) + ", " + f.group().label(h) +
                       ") needs commuting elements");
  return {f.modulus(), static_cast<long long>(f(g, h)) - f(h, g)};
}

bool cohomologous(const Cocycle& f1, const Cocycle& f2) {
  const FiniteGroup& g = f1.group();
  if (&g != &f2.group() && g.table() != f2.group().table())
    throw InvalidArgument("cocycles live on different groups");
  const std::size_t n = g.order();
  if (n == 1) return true;
  const Cocycle d = f1 * f2.inverse();
  const std::int64_t e = exponent(g);
  const std::int64_t big = d.modulus() * e;
  const std::vector<Elem> gens = small_generating_set(g);
  const zmod::Smith s =
      zmod::smith(coboundary_matrix(g, gens), n - 1, big, true, false);
  std::vector<std::int64_t> y;
  y.reserve((n - 1) * gens.size());
  for (std::size_t x = 1; x < n; ++x)
    for (Elem gen : gens) y.push_back(e * d(static_cast<Elem>(x), gen));
  return zmod::in_image(s, y);
}

Cocycle restrict(const Cocycle& f, const Subgroup& h) {
  const SubgroupGroup sg = subgroup_as_group(f.group(), h);
  const std::size_t k = h.order();
  std::vector<int> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = f(sg.embedding[i], sg.embedding[j]);
  return Cocycle(sg.group, f.modulus(), std::move(t));
}

long long CohomologyBasis::class_count() const {
  long long c = 1;
  for (long long o : orders) c *= o;
  return c;
}

Cocycle cocycle_from_columns(const GroupPtr& gp, int modulus, std::span<const Elem> gens,
                             const std::vector<std::vector<int>>& columns) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  const BfsTree tree = bfs_tree(g, gens);
  if (tree.order.size() != n) throw InvalidArgument("elements do not generate the group");
  std::vector<int> t(n * n, 0);
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t child = static_cast<std::size_t>(tree.order[i]);
      const std::size_t y = static_cast<std::size_t>(tree.parent[child]);
      const auto& col = columns[static_cast<std::size_t>(tree.via[child])];
      const std::size_t xy = static_cast<std::size_t>(g.mul(static_cast<Elem>(x),
                                                            static_cast<Elem>(y)));
      t[x * n + child] =
          mod(static_cast<long long>(t[x * n + y]) + col[xy] - col[y], modulus);
    }
  return Cocycle(gp, modulus, std::move(t));
}

CohomologyBasis h2_basis(const GroupPtr& gp, const H2Options& options) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  if (n > options.max_order)
    throw ResourceBudgetExceeded("H^2 computation capped at order " +
                                 std::to_string(options.max_order) + ", group has order " +
                                 std::to_string(n));
  CohomologyBasis basis{gp, static_cast<int>(n), {}, {}};
  if (n == 1) return basis;

  const std::int64_t m = static_cast<std::int64_t>(n);
  const std::int64_t e = exponent(g);
  const std::int64_t big = m * e;
  const std::vector<Elem> gens = small_generating_set(g);
  const std::size_t k = gens.size();
  const std::size_t unknowns = (n - 1) * k;
  auto unknown = [&](std::size_t x, std::size_t s) { return (x - 1) * k + s; };

  // Linear form of every table entry f(x, y) in the generator-column unknowns.
  const BfsTree tree = bfs_tree(g, gens);
  std::vector<std::int32_t> forms(n * n * unknowns, 0);
  auto form = [&](std::size_t x, std::size_t y) { return &forms[(x * n + y) * unknowns]; };
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t child = static_cast<std::size_t>(tree.order[i]);
      const std::size_t y = static_cast<std::size_t>(tree.parent[child]);
      const std::size_t s = static_cast<std::size_t>(tree.via[child]);
      const std::size_t xy = static_cast<std::size_t>(g.mul(static_cast<Elem>(x),
                                                            static_cast<Elem>(y)));
      std::int32_t* out = form(x, child);
      const std::int32_t* prev = form(x, y);
      std::copy(prev, prev + unknowns, out);
      if (xy != 0) out[unknown(xy, s)] += 1;
      if (y != 0) out[unknown(y, s)] -= 1;
      for (std::size_t u = 0; u < unknowns; ++u) out[u] = static_cast<std::int32_t>(mod(out[u], static_cast<int>(m)));
    }

  // Constraints: f(y,s) - f(xy,s) + f(x,ys) - f(x,y) = 0.
  zmod::RowEchelon echelon(unknowns, m);
  zmod::Row row(unknowns);
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = static_cast<std::size_t>(g.mul(static_cast<Elem>(x),
                                                            static_cast<Elem>(y)));
      for (std::size_t s = 0; s < k; ++s) {
        const std::size_t ys = static_cast<std::size_t>(g.mul(static_cast<Elem>(y), gens[s]));
        const std::int32_t* a = form(x, ys);
        const std::int32_t* b = form(x, y);
        bool nonzero = false;
        for (std::size_t u = 0; u < unknowns; ++u) {
          row[u] = a[u] - b[u];
          nonzero |= row[u] != 0;
        }
        if (y != 0) {
          row[unknown(y, s)] += 1;
          nonzero = true;
        }
        if (xy != 0) {
          row[unknown(xy, s)] -= 1;
          nonzero = true;
        }
        if (nonzero) echelon.add(row);
      }
    }
  const zmod::Matrix cocycles = zmod::kernel(echelon.rows(), unknowns, m);

  // Cokernel of the coboundary map over Z/(m e).
  const zmod::Smith dsnf =
      zmod::smith(coboundary_matrix(g, gens), n - 1, big, true, false);
  std::vector<std::int64_t> comp_mod(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) {
    const std::int64_t d = i < dsnf.diag.size() ? dsnf.diag[i] : 0;
    comp_mod[i] = std::gcd(d, big);
  }
  std::vector<std::size_t> comps;
  for (std::size_t i = 0; i < unknowns; ++i)
    if (comp_mod[i] > 1) comps.push_back(i);

  zmod::Matrix image(comps.size(), zmod::Row(cocycles.size(), 0));
  for (std::size_t j = 0; j < cocycles.size(); ++j)
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const std::size_t i = comps[c];
      std::int64_t v = 0;
      for (std::size_t u = 0; u < unknowns; ++u)
        v = (v + dsnf.P[i][u] * (e * cocycles[j][u] % big)) % big;
      image[c][j] = (v % comp_mod[i]) * (big / comp_mod[i]) % big;
    }

  struct Gen {
    long long order;
    zmod::Row columns;
  };
  std::vector<Gen> found;
  if (!comps.empty() && !cocycles.empty()) {
    const zmod::Smith w = zmod::smith(image, cocycles.size(), big, false, true);
    for (std::size_t i = 0; i < w.diag.size(); ++i) {
      const long long o = big / std::gcd(w.diag[i], big);
      if (o == 1 || w.diag[i] == 0) continue;
      zmod::Row combo(unknowns, 0);
      for (std::size_t j = 0; j < cocycles.size(); ++j)
        for (std::size_t u = 0; u < unknowns; ++u)
          combo[u] = (combo[u] + w.Q[j][i] * cocycles[j][u]) % m;
      for (long long q : prime_power_split(o)) {
        zmod::Row part(combo);
        for (auto& v : part) v = v * (o / q) % m;
        found.push_back({q, std::move(part)});
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Gen& a, const Gen& b) { return a.order < b.order; });

  for (const Gen& gen : found) {
    std::vector<std::vector<int>> columns(k, std::vector<int>(n, 0));
    for (std::size_t x = 1; x < n; ++x)
      for (std::size_t s = 0; s < k; ++s)
        columns[s][x] = static_cast<int>(gen.columns[unknown(x, s)]);
    Cocycle f = cocycle_from_columns(gp, static_cast<int>(m), gens, columns);
    try {
      validate_cocycle(f);
    } catch (const NotACocycle& err) {
      throw InternalInconsistency(std::string("H^2 generator fails validation: ") + err.what());
    }
    basis.generators.push_back(std::move(f));
    basis.orders.push_back(gen.order);
  }
  return basis;
}

ClassEnumerator::ClassEnumerator(const CohomologyBasis& basis, long long cap)
    : basis_(&basis), total_(1), digit_(basis.orders.size(), 0) {
  for (long long o : basis.orders) {
    if (total_ > cap / o)
      throw TooManyClasses("class count exceeds the cap of " + std::to_string(cap));
    total_ *= o;
  }
}

std::optional<Cocycle> ClassEnumerator::next() {
  if (index_ >= total_) return std::nullopt;
  Cocycle f(basis_->group, basis_->modulus);
  for (std::size_t i = 0; i < digit_.size(); ++i)
    if (digit_[i] != 0) f = f * basis_->generators[i].pow(digit_[i]);
  last_ = digit_;
  ++index_;
  for (std::size_t pos = 0; pos < digit_.size(); ++pos) {
    if (++digit_[pos] < basis_->orders[pos]) break;
    digit_[pos] = 0;
  }
  return f;
}

void write_cocycle(std::ostream& out, const Cocycle& f, const std::string& group_id) {
  const std::size_t n = f.group().order();
  out << "cocycle modulus=" << f.modulus() << " group=" << group_id << " n=" << n << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << f(static_cast<Elem>(x), static_cast<Elem>(y));
    }
    out << '\n';
  }
}

Cocycle read_cocycle(std::istream& in, const GroupPtr& g) {
  std::string header;
  while (std::getline(in, header))
    if (!header.empty() && header[0] != '#') break;
  std::istringstream hs(header);
  std::string word;
  hs >> word;
  if (word != "cocycle") throw FormatError("cocycle file must start with 'cocycle'");
  int modulus = 0;
  long long n = -1;
  while (hs >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw FormatError("malformed header field '" + word + "'");
    const std::string key = word.substr(0, eq), val = word.substr(eq + 1);
    try {
      if (key == "modulus") modulus = std::stoi(val);
      else if (key == "n") n = std::stoll(val);
    } catch (const std::exception&) {
      throw FormatError("bad value for '" + key + "'");
    }
  }
  if (modulus <= 0) throw FormatError("missing or invalid modulus");
  if (n != static_cast<long long>(g->order()))
    throw FormatError("cocycle size n=" + std::to_string(n) + " does not match group order " +
                      std::to_string(g->order()));
  std::vector<int> table(g->order() * g->order());
  for (auto& v : table)
    if (!(in >> v)) throw FormatError("cocycle table is truncated");
  Cocycle f(g, modulus, std::move(table));
  validate_cocycle(f);
  return f;
}

}  // namespace tga
