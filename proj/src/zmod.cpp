#include "tga/zmod.hpp"

#include <numeric>
#include <tuple>
#include <utility>

namespace tga::zmod {

std::int64_t reduce(std::int64_t a, std::int64_t n) noexcept {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) noexcept {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  s = s0;
  t = t0;
  return a;
}

Matrix identity(std::size_t n) {
  Matrix m(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// Replaces (x, y) by (s*x + t*y, -(b/g)*x + (a/g)*y), which zeroes the lead of y.
void combine(Row& x, Row& y, std::int64_t a, std::int64_t b, std::int64_t n,
             std::size_t from = 0) {
  std::int64_t s, t;
  const std::int64_t g = xgcd(a, b, s, t);
  const std::int64_t u = reduce(-(b / g), n), v = reduce(a / g, n);
  s = reduce(s, n);
  t = reduce(t, n);
  for (std::size_t k = from; k < x.size(); ++k) {
    const std::int64_t xk = x[k], yk = y[k];
    x[k] = (s * xk + t * yk) % n;
    y[k] = (u * xk + v * yk) % n;
  }
}

// Same transform applied to columns i and j of a matrix.
void combine_cols(Matrix& m, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b,
                  std::int64_t n) {
  std::int64_t s, t;
  const std::int64_t g = xgcd(a, b, s, t);
  const std::int64_t u = reduce(-(b / g), n), v = reduce(a / g, n);
  s = reduce(s, n);
  t = reduce(t, n);
  for (auto& row : m) {
    const std::int64_t xi = row[i], xj = row[j];
    row[i] = (s * xi + t * xj) % n;
    row[j] = (u * xi + v * xj) % n;
  }
}

}  // namespace

RowEchelon::RowEchelon(std::size_t columns, std::int64_t modulus)
    : columns_(columns), modulus_(modulus), pivot_(columns) {}

void RowEchelon::add(Row row) {
  for (auto& v : row) v = reduce(v, modulus_);
  for (std::size_t j = 0; j < columns_; ++j) {
    if (row[j] == 0) continue;
    Row& p = pivot_[j];
    if (p.empty()) {
      p = std::move(row);
      return;
    }
    if (row[j] % p[j] == 0) {
      const std::int64_t q = modulus_ - row[j] / p[j];
      for (std::size_t k = j; k < columns_; ++k) row[k] = (row[k] + q * p[k]) % modulus_;
    } else {
      combine(p, row, p[j], row[j], modulus_, j);
    }
  }
}

Matrix RowEchelon::rows() const {
  Matrix out;
  for (const auto& p : pivot_)
    if (!p.empty()) out.push_back(p);
  return out;
}

Smith smith(Matrix a, std::size_t cols, std::int64_t n, bool track_p, bool track_q) {
  Smith s;
  s.modulus = n;
  s.rows = a.size();
  s.cols = cols;
  for (auto& row : a)
    for (auto& v : row) v = reduce(v, n);
  if (track_p) s.P = identity(s.rows);
  if (track_q) s.Q = identity(cols);
  const std::size_t r = s.rows;
  const std::size_t steps = std::min(r, cols);
  s.diag.assign(steps, 0);

  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: the entry with the smallest gcd against n.
    std::size_t pi = r, pj = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          const std::int64_t g = std::gcd(a[i][j], n);
          if (pi == r || g < best) {
            best = g;
            pi = i;
            pj = j;
          }
        }
    if (pi == r) break;
    if (pi != t) {
      std::swap(a[pi], a[t]);
      if (track_p) std::swap(s.P[pi], s.P[t]);
    }
    if (pj != t) {
      for (auto& row : a) std::swap(row[pj], row[t]);
      if (track_q)
        for (auto& row : s.Q) std::swap(row[pj], row[t]);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        if (a[i][t] % a[t][t] == 0) {
          const std::int64_t q = n - a[i][t] / a[t][t];
          for (std::size_t k = t; k < cols; ++k) a[i][k] = (a[i][k] + q * a[t][k]) % n;
          if (track_p)
            for (std::size_t k = 0; k < r; ++k) s.P[i][k] = (s.P[i][k] + q * s.P[t][k]) % n;
        } else {
          const std::int64_t x = a[t][t], y = a[i][t];
          combine(a[t], a[i], x, y, n);
          if (track_p) combine(s.P[t], s.P[i], x, y, n);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        if (a[t][j] % a[t][t] == 0) {
          const std::int64_t q = n - a[t][j] / a[t][t];
          for (std::size_t k = t; k < r; ++k) a[k][j] = (a[k][j] + q * a[k][t]) % n;
          if (track_q)
            for (auto& row : s.Q) row[j] = (row[j] + q * row[t]) % n;
        } else {
          const std::int64_t x = a[t][t], y = a[t][j];
          combine_cols(a, t, j, x, y, n);
          if (track_q) combine_cols(s.Q, t, j, x, y, n);
          dirty = true;
        }
      }
    }
    s.diag[t] = a[t][t];
  }
  return s;
}

Matrix kernel(const Matrix& a, std::size_t cols, std::int64_t n) {
  const Smith s = smith(a, cols, n, false, true);
  Matrix gens;
  for (std::size_t i = 0; i < cols; ++i) {
    const std::int64_t d = i < s.diag.size() ? s.diag[i] : 0;
    const std::int64_t scale = n / std::gcd(d, n);  // gcd(0, n) = n
    if (scale == n) continue;
    Row v(cols);
    for (std::size_t k = 0; k < cols; ++k) v[k] = s.Q[k][i] * scale % n;
    gens.push_back(std::move(v));
  }
  return gens;
}

bool in_image(const Smith& s, std::span<const std::int64_t> y) {
  const std::int64_t n = s.modulus;
  for (std::size_t i = 0; i < s.rows; ++i) {
    std::int64_t py = 0;
    for (std::size_t k = 0; k < s.rows; ++k) py = (py + s.P[i][k] * reduce(y[k], n)) % n;
    const std::int64_t d = i < s.diag.size() ? s.diag[i] : 0;
    if (py % std::gcd(d, n) != 0) return false;
  }
  return true;
}

}  // namespace tga::zmod
