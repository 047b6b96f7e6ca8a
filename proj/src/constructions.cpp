#include "tga/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "tga/errors.hpp"

namespace tga {

namespace {

// Coset enumeration over the trivial subgroup (HLT with coincidence
// processing). Column 2i is generator i, column 2i+1 its inverse.
class CosetTable {
 public:
  CosetTable(int generators, std::size_t limit) : cols_(2 * generators), limit_(limit) { add_row(); }

  void enumerate(const std::vector<std::vector<int>>& relators) {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(static_cast<int>(c))) continue;
      for (const auto& r : relators) {
        scan_and_fill(static_cast<int>(c), r);
        if (!alive(static_cast<int>(c))) break;
      }
      if (!alive(static_cast<int>(c))) continue;
      for (int x = 0; x < cols_; ++x)
        if (at(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
    }
  }

  // Live cosets renumbered in order; returns the compact table.
  std::vector<std::vector<int>> compact() const {
    std::vector<int> index(parent_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) index[c] = n++;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(cols_)));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (index[c] < 0) continue;
      for (int x = 0; x < cols_; ++x)
        out[static_cast<std::size_t>(index[c])][static_cast<std::size_t>(x)] =
            index[static_cast<std::size_t>(at(static_cast<int>(c), x))];
    }
    return out;
  }

 private:
  static int inv(int x) { return x ^ 1; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  int at(int c, int x) const { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int add_row() {
    if (parent_.size() >= limit_)
      throw CollectionDiverged("coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    return c;
  }

  void define(int c, int x) {
    const int d = add_row();
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const int lo = std::min(k, l), hi = std::max(k, l);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int x = 0; x < cols_; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        at(d, inv(x)) = -1;
        const int mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0)
          merge(nu, at(mu, x), queue);
        else if (at(nu, inv(x)) >= 0)
          merge(mu, at(nu, inv(x)), queue);
        else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(int a, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(w[static_cast<std::size_t>(j)])) >= 0)
        b = at(b, inv(w[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, inv(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  int cols_;
  std::size_t limit_;
  std::vector<int> table_;
  std::vector<int> parent_;
};

void append(std::vector<int>& out, const Syllables& w, bool inverse) {
  auto put = [&](const Syllable& s, long long sign) {
    const long long e = s.exponent * sign;
    const int col = 2 * s.generator + (e < 0 ? 1 : 0);
    for (long long k = 0; k < (e < 0 ? -e : e); ++k) out.push_back(col);
  };
  if (!inverse)
    for (const auto& s : w) put(s, 1);
  else
    for (auto it = w.rbegin(); it != w.rend(); ++it) put(*it, -1);
}

long long scalar_exponent(const CollectionPresentation& pres, const Scalar& s, const std::vector<int>& values) {
  long long e = s.exponent;
  for (const auto& [p, coef] : s.parameters) {
    const int k = pres.parameters[static_cast<std::size_t>(p)].root_order;
    e += coef * values[static_cast<std::size_t>(p)] * (pres.modulus / k);
  }
  return ((e % pres.modulus) + pres.modulus) % pres.modulus;
}

std::string word_label(const CollectionPresentation& pres, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += pres.generators[static_cast<std::size_t>(w[i])];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// The central extension with z = zeta_M adjoined, quotiented back to G.
struct Extension {
  std::vector<std::vector<int>> cosets;  // regular action of the extension
  int z_col = 0;
  std::size_t z_order = 0;
  std::vector<int> coset_elem;      // extension element -> G element
  std::vector<int> coset_zpow;      // extension element -> z exponent relative to the lift
  std::vector<int> lift;            // G element -> extension element
  std::vector<Word> words;          // normal form of each G element
  std::vector<Elem> table;          // Cayley table of G
  std::vector<Elem> generator_elems;

  int trace(int c, const Word& w) const {
    for (int g : w) c = cosets[static_cast<std::size_t>(c)][static_cast<std::size_t>(2 * g)];
    return c;
  }
};

Extension enumerate(const CollectionPresentation& pres, int modulus, const std::vector<long long>& scalars,
                    std::size_t limit) {
  const int r = static_cast<int>(pres.generators.size());
  std::vector<std::vector<int>> relators;
  const int z = r;
  relators.emplace_back(static_cast<std::size_t>(modulus), 2 * z);
  for (int g = 0; g < r; ++g) relators.push_back({2 * z, 2 * g, 2 * z + 1, 2 * g + 1});
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    std::vector<int> w;
    append(w, pres.relations[i].lhs, false);
    append(w, pres.relations[i].rhs, true);
    for (long long k = 0; k < scalars[i]; ++k) w.push_back(2 * z + 1);
    relators.push_back(std::move(w));
  }
  CosetTable ct(r + 1, limit);
  ct.enumerate(relators);

  Extension ext;
  ext.cosets = ct.compact();
  for (std::size_t c = 0; c < ext.cosets.size(); ++c)
    for (const auto& w : relators) {
      int d = static_cast<int>(c);
      for (int x : w) {
        d = ext.cosets[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)];
        if (d < 0) throw InternalInconsistency("coset table incomplete after enumeration");
      }
      if (d != static_cast<int>(c)) throw InternalInconsistency("a relator fails on the enumerated cosets");
    }
  ext.z_col = 2 * z;
  const std::size_t total = ext.cosets.size();
  // z is central, so its orbits are the fibres over G
  ext.coset_elem.assign(total, -1);
  ext.coset_zpow.assign(total, 0);
  std::vector<int> fibre_rep;
  for (std::size_t c = 0; c < total; ++c) {
    if (ext.coset_elem[c] >= 0) continue;
    const int id = static_cast<int>(fibre_rep.size());
    fibre_rep.push_back(static_cast<int>(c));
    int d = static_cast<int>(c);
    int k = 0;
    do {
      ext.coset_elem[static_cast<std::size_t>(d)] = id;
      ext.coset_zpow[static_cast<std::size_t>(d)] = k++;
      d = ext.cosets[static_cast<std::size_t>(d)][static_cast<std::size_t>(ext.z_col)];
    } while (d != static_cast<int>(c));
  }
  ext.z_order = total / fibre_rep.size();
  const std::size_t n = fibre_rep.size();

  // normal forms: exponent vectors when they biject onto G, else shortlex BFS
  std::vector<Word> words;
  long long product = 1;
  for (long long o : pres.orders) product *= o;
  bool bijective = static_cast<std::size_t>(product) == n;
  if (bijective) {
    std::vector<char> hit(n, 0);
    std::vector<long long> digits(static_cast<std::size_t>(r), 0);
    for (long long idx = 0; idx < product && bijective; ++idx) {
      Word w;
      for (int g = 0; g < r; ++g)
        for (long long k = 0; k < digits[static_cast<std::size_t>(g)]; ++k) w.push_back(g);
      const int e = ext.coset_elem[static_cast<std::size_t>(ext.trace(0, w))];
      if (hit[static_cast<std::size_t>(e)]) bijective = false;
      hit[static_cast<std::size_t>(e)] = 1;
      words.push_back(std::move(w));
      for (int g = r - 1; g >= 0; --g) {
        if (++digits[static_cast<std::size_t>(g)] < pres.orders[static_cast<std::size_t>(g)]) break;
        digits[static_cast<std::size_t>(g)] = 0;
      }
    }
  }
  if (!bijective) {
    words.clear();
    std::vector<char> seen(n, 0);
    std::queue<std::pair<int, Word>> q;
    seen[static_cast<std::size_t>(ext.coset_elem[0])] = 1;
    q.push({0, {}});
    while (!q.empty()) {
      auto [c, w] = q.front();
      q.pop();
      for (int g = 0; g < r; ++g) {
        const int d = ext.cosets[static_cast<std::size_t>(c)][static_cast<std::size_t>(2 * g)];
        const int e = ext.coset_elem[static_cast<std::size_t>(d)];
        if (seen[static_cast<std::size_t>(e)]) continue;
        seen[static_cast<std::size_t>(e)] = 1;
        Word next = w;
        next.push_back(g);
        q.push({d, next});
      }
      words.push_back(std::move(w));
    }
  }

  // renumber G elements in normal-form order and fix lifts
  std::vector<int> renumber(n, -1);
  ext.lift.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int c = ext.trace(0, words[i]);
    renumber[static_cast<std::size_t>(ext.coset_elem[static_cast<std::size_t>(c)])] = static_cast<int>(i);
    ext.lift[i] = c;
  }
  for (std::size_t c = 0; c < total; ++c)
    ext.coset_elem[c] = renumber[static_cast<std::size_t>(ext.coset_elem[c])];
  for (std::size_t i = 0; i < n; ++i) {
    int d = ext.lift[i];
    for (std::size_t k = 0; k < ext.z_order; ++k) {
      ext.coset_zpow[static_cast<std::size_t>(d)] = static_cast<int>(k);
      d = ext.cosets[static_cast<std::size_t>(d)][static_cast<std::size_t>(ext.z_col)];
    }
  }
  ext.words = std::move(words);
  ext.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      ext.table[x * n + y] = ext.coset_elem[static_cast<std::size_t>(ext.trace(ext.lift[x], ext.words[y]))];
  for (int g = 0; g < r; ++g)
    ext.generator_elems.push_back(ext.coset_elem[static_cast<std::size_t>(ext.cosets[0][static_cast<std::size_t>(2 * g)])]);
  return ext;
}

GroupPtr make_group(const CollectionPresentation& pres, const Extension& ext, const CollectOptions& opt) {
  if (opt.group_hint && opt.group_hint->table() == ext.table) return opt.group_hint;
  std::vector<std::string> labels;
  for (const auto& w : ext.words) labels.push_back(word_label(pres, w));
  return std::make_shared<const FiniteGroup>(pres.name, ext.words.size(), ext.table, std::move(labels),
                                             FiniteGroup::Generators{ext.generator_elems, pres.generators},
                                             ext.words);
}

void check_presentation(const CollectionPresentation& pres) {
  if (pres.orders.size() != pres.generators.size())
    throw InvalidArgument("every generator needs a declared power exponent");
  if (pres.modulus < 1) throw InvalidArgument("modulus must be positive");
  for (const auto& p : pres.parameters)
    if (p.root_order < 1 || pres.modulus % p.root_order != 0)
      throw InvalidArgument("parameter " + p.name + " in mu(" + std::to_string(p.root_order) +
                            ") needs the modulus to be a multiple of " + std::to_string(p.root_order));
}

}  // namespace

GroupPtr build_group(const CollectionPresentation& pres, const CollectOptions& opt) {
  check_presentation(pres);
  const Extension ext = enumerate(pres, 1, std::vector<long long>(pres.relations.size(), 0), opt.coset_limit);
  return make_group(pres, ext, opt);
}

TwistedAlgebra collect(const CollectionPresentation& pres, const std::vector<int>& parameter_values,
                       const CollectOptions& opt) {
  check_presentation(pres);
  if (parameter_values.size() != pres.parameters.size())
    throw InvalidArgument("expected " + std::to_string(pres.parameters.size()) + " parameter values");
  std::vector<long long> scalars;
  for (const auto& rel : pres.relations) scalars.push_back(scalar_exponent(pres, rel.scalar, parameter_values));
  const Extension ext = enumerate(pres, pres.modulus, scalars, opt.coset_limit);
  if (ext.z_order != static_cast<std::size_t>(pres.modulus))
    throw NotACocycle("the scalar relations force zeta_" + std::to_string(pres.modulus) + " to have order " +
                      std::to_string(ext.z_order) + "; no cocycle satisfies them");
  GroupPtr g = make_group(pres, ext, opt);
  const std::size_t n = g->order();
  std::vector<int> f(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      f[x * n + y] = ext.coset_zpow[static_cast<std::size_t>(ext.trace(ext.lift[x], ext.words[y]))];
  Cocycle c(g, pres.modulus, std::move(f));
  if (opt.info_hint && opt.info_hint->group == g) return TwistedAlgebra(std::move(c), opt.info_hint);
  return TwistedAlgebra(std::move(c));
}

CrossedProductSpec action_from_generators(const TwistedAlgebra& base, std::string generator, int order,
                                          int modulus, const std::vector<ActionImage>& generator_images) {
  const FiniteGroup& h = base.group();
  const auto& gens = h.generator_indices();
  if (generator_images.size() != gens.size())
    throw InvalidArgument("one image per base generator is required");
  if (modulus % base.modulus() != 0) throw InvalidArgument("modulus must be a multiple of the base modulus");
  const Cocycle f = base.cocycle().embed(modulus);
  std::vector<ActionImage> action(h.order());
  std::vector<char> done(h.order(), 0);
  done[0] = 1;
  std::queue<Elem> q;
  q.push(0);
  while (!q.empty()) {
    const Elem p = q.front();
    q.pop();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem g = gens[i];
      const Elem x = h.mul(p, g);
      if (done[static_cast<std::size_t>(x)]) continue;
      done[static_cast<std::size_t>(x)] = 1;
      // u_x = f(p,g)^{-1} u_p u_g
      const ActionImage& ip = action[static_cast<std::size_t>(p)];
      const ActionImage& ig = generator_images[i];
      const long long s = static_cast<long long>(ip.scalar) + ig.scalar + f(ip.image, ig.image) - f(p, g);
      action[static_cast<std::size_t>(x)] = {static_cast<int>(((s % modulus) + modulus) % modulus),
                                             h.mul(ip.image, ig.image)};
      q.push(x);
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end())
    throw InvalidArgument("the base group's generators do not generate it");
  return CrossedProductSpec{base, std::move(generator), order, modulus, std::move(action)};
}

namespace {

// psi^i as (scalar, image) tables for i = 0..k.
std::vector<std::vector<ActionImage>> action_powers(const CrossedProductSpec& spec, int k) {
  const std::size_t n = spec.base.group().order();
  std::vector<std::vector<ActionImage>> pw;
  std::vector<ActionImage> id(n);
  for (std::size_t h = 0; h < n; ++h) id[h] = {0, static_cast<Elem>(h)};
  pw.push_back(id);
  for (int i = 0; i < k; ++i) {
    std::vector<ActionImage> next(n);
    for (std::size_t h = 0; h < n; ++h) {
      const ActionImage& cur = pw.back()[h];
      const ActionImage& step = spec.action[static_cast<std::size_t>(cur.image)];
      next[h] = {(cur.scalar + step.scalar) % spec.modulus, step.image};
    }
    pw.push_back(std::move(next));
  }
  return pw;
}

bool is_identity(const std::vector<ActionImage>& a) {
  for (std::size_t h = 0; h < a.size(); ++h)
    if (a[h].scalar != 0 || a[h].image != static_cast<Elem>(h)) return false;
  return true;
}

}  // namespace

void verify_action(const CrossedProductSpec& spec) {
  const FiniteGroup& h = spec.base.group();
  const std::size_t n = h.order();
  if (spec.action.size() != n) throw InvalidArgument("action must list an image for every base element");
  if (spec.order < 1) throw InvalidArgument("order must be positive");
  if (spec.modulus % spec.base.modulus() != 0)
    throw InvalidArgument("modulus must be a multiple of the base modulus");
  const Cocycle f = spec.base.cocycle().embed(spec.modulus);
  const int m = spec.modulus;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      const ActionImage& ia = spec.action[a];
      const ActionImage& ib = spec.action[b];
      const ActionImage& iab = spec.action[static_cast<std::size_t>(h.mul(x, y))];
      // psi(u_a u_b) = f(a,b) psi(u_ab) against psi(u_a) psi(u_b)
      const long long left = f(x, y) + iab.scalar;
      const long long right = static_cast<long long>(ia.scalar) + ib.scalar + f(ia.image, ib.image);
      if (iab.image != h.mul(ia.image, ib.image) || (left - right) % m != 0)
        throw NotMultiplicative("psi(u_" + h.label(x) + " u_" + h.label(y) + ") != psi(u_" + h.label(x) +
                                    ") psi(u_" + h.label(y) + ")",
                                x, y);
    }
  std::vector<char> hit(n, 0);
  for (const auto& a : spec.action) hit[static_cast<std::size_t>(a.image)] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw NotMultiplicative("psi is not a bijection on the basis", 0, 0);
  const auto pw = action_powers(spec, spec.order);
  if (!is_identity(pw.back())) {
    // the true order of psi, searched up to a generous bound
    const int bound = static_cast<int>(std::max<std::size_t>(4096, n * static_cast<std::size_t>(m)));
    const auto more = action_powers(spec, bound);
    int true_order = 0;
    for (int i = 1; i <= bound; ++i)
      if (is_identity(more[static_cast<std::size_t>(i)])) {
        true_order = i;
        break;
      }
    throw WrongOrder("psi^" + std::to_string(spec.order) + " is not the identity; psi has order " +
                         (true_order ? std::to_string(true_order) : std::string("above the search bound")),
                     true_order);
  }
}

TwistedAlgebra crossed_product(const CrossedProductSpec& spec) {
  verify_action(spec);
  const FiniteGroup& h = spec.base.group();
  const std::size_t nh = h.order();
  const std::size_t k = static_cast<std::size_t>(spec.order);
  const std::size_t n = nh * k;
  const auto pw = action_powers(spec, spec.order);
  const Cocycle fh = spec.base.cocycle().embed(spec.modulus);
  const int m = spec.modulus;

  std::vector<Elem> table(n * n);
  std::vector<int> f(n * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t h1 = 0; h1 < nh; ++h1)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          // (u_h1 u_g^i)(u_h2 u_g^j) = s_i(h2) f(h1, sigma^i h2) u_{h1 sigma^i h2} u_g^{i+j}
          const ActionImage& p = pw[i][h2];
          const Elem prod = h.mul(static_cast<Elem>(h1), p.image);
          const std::size_t x = i * nh + h1, y = j * nh + h2;
          table[x * n + y] = static_cast<Elem>(((i + j) % k) * nh + static_cast<std::size_t>(prod));
          f[x * n + y] = (p.scalar + fh(static_cast<Elem>(h1), p.image)) % m;
        }

  std::vector<std::string> labels;
  std::vector<Word> words;
  const int gpos = static_cast<int>(h.generator_indices().size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t x = 0; x < nh; ++x) {
      std::string l = x == 0 && i > 0 ? "" : h.label(static_cast<Elem>(x));
      if (i > 0) {
        if (!l.empty()) l += "*";
        l += spec.generator + (i > 1 ? "^" + std::to_string(i) : "");
      }
      labels.push_back(l);
      Word w = h.words().empty() ? Word{} : h.words()[x];
      w.insert(w.end(), i, gpos);
      words.push_back(std::move(w));
    }
  FiniteGroup::Generators gens{h.generator_indices(), h.generator_names()};
  if (k > 1) {
    gens.elements.push_back(static_cast<Elem>(nh));
    gens.names.push_back(spec.generator);
  }
  if (h.words().empty()) words.clear();
  auto g = std::make_shared<const FiniteGroup>(h.name() + "*" + spec.generator, n, std::move(table),
                                               std::move(labels), std::move(gens), std::move(words));
  return TwistedAlgebra(Cocycle(g, m, std::move(f)));
}

SweepStats sweep_presentation_cocycles(
    const CollectionPresentation& pres,
    const std::function<void(const std::vector<int>&, const TwistedAlgebra&)>& visit, const CollectOptions& opt) {
  check_presentation(pres);
  CollectOptions local = opt;
  if (!local.group_hint) local.group_hint = build_group(pres, opt);
  if (!local.info_hint) local.info_hint = group_info(local.group_hint);
  SweepStats stats;
  std::vector<int> values(pres.parameters.size(), 0);
  for (;;) {
    try {
      const TwistedAlgebra a = collect(pres, values, local);
      ++stats.consistent;
      visit(values, a);
    } catch (const NotACocycle&) {
      ++stats.skipped;
    }
    std::size_t i = 0;
    for (; i < values.size(); ++i) {
      if (++values[i] < pres.parameters[i].root_order) break;
      values[i] = 0;
    }
    if (i == values.size()) break;
  }
  return stats;
}

Cocycle transport(const Cocycle& f, const GroupPtr& target, const std::vector<Elem>& iso) {
  const std::size_t n = target->order();
  if (iso.size() != n || f.group().order() != n) throw InvalidArgument("isomorphism size mismatch");
  std::vector<int> t(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[static_cast<std::size_t>(iso[x]) * n + static_cast<std::size_t>(iso[y])] =
          f(static_cast<Elem>(x), static_cast<Elem>(y));
  return Cocycle(target, f.modulus(), std::move(t));
}

namespace {

Elem generator_named(const FiniteGroup& g, const std::string& name) {
  const auto& names = g.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return g.generator_indices()[i];
  throw InternalInconsistency("no generator " + name);
}

// zeta_m^s u_{g1} u_{g2} ... as one scaled basis element.
ActionImage monomial(const TwistedAlgebra& r, int m, int s, std::initializer_list<Elem> gs) {
  ActionImage acc{s % m, 0};
  for (Elem g : gs) {
    const auto [c, e] = r.basis_product(acc.image, g);
    acc.scalar = (acc.scalar + c.embed(m).exponent) % m;
    acc.image = e;
  }
  return acc;
}

}  // namespace

Order64Signs Order64Signs::consistent_default() {
  Order64Signs t;
  t.t16 = t.t24 = t.t26 = t.t34 = t.t35 = t.t36 = 1;
  t.s2 = t.s3 = 1;
  return t;
}

CrossedProductSpec order64_last_step(const Order64Signs& t) {
  CollectionPresentation r1p;
  r1p.name = "order64_base";
  r1p.generators = {"x1", "x2", "x3"};
  r1p.orders = {2, 2, 2};
  r1p.modulus = 2;
  const int s[3] = {t.s1, t.s2, t.s3};
  for (int i = 0; i < 3; ++i) r1p.relations.push_back({{{i, 2}}, {s[i] & 1, {}}, {}});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) r1p.relations.push_back({{{i, 1}, {j, 1}, {i, -1}, {j, -1}}, {}, {}});
  const TwistedAlgebra r1 = collect(r1p);
  const auto& g1 = r1.group();
  const Elem x1 = generator_named(g1, "x1"), x2 = generator_named(g1, "x2"), x3 = generator_named(g1, "x3");
  const TwistedAlgebra r2 =
      crossed_product(action_from_generators(r1, "x4", 2, 2, {{t.t14, x1}, {t.t24, x2}, {t.t34, x3}}));
  const Elem x4 = generator_named(r2.group(), "x4");
  const TwistedAlgebra r3 = crossed_product(action_from_generators(
      r2, "x5", 2, 2, {{t.t15, x1}, {t.t25, x2}, {t.t35, x3}, monomial(r2, 2, t.delta, {x1, x4})}));
  const Elem x5 = generator_named(r3.group(), "x5");
  return action_from_generators(r3, "x6", 2, 2,
                                {{t.t16, x1},
                                 {t.t26, x2},
                                 {t.t36, x3},
                                 monomial(r3, 2, t.gamma, {x2, x4}),
                                 monomial(r3, 2, t.lambda, {x3, x5})});
}

}  // namespace tga
