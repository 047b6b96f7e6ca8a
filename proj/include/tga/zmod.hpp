#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Linear algebra over Z/N for composite N.
namespace tga::zmod {

using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;

std::int64_t reduce(std::int64_t a, std::int64_t n) noexcept;

/// Extended gcd on non-negative integers: returns g and sets s, t with s*a + t*b = g.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) noexcept;

Matrix identity(std::size_t n);

/// Row span accumulator. Keeps at most one row per leading column; every
/// update is a unimodular 2x2 row operation, so the span is preserved exactly.
class RowEchelon {
 public:
  RowEchelon(std::size_t columns, std::int64_t modulus);

  void add(Row row);
  Matrix rows() const;
  std::size_t columns() const noexcept { return columns_; }

 private:
  std::size_t columns_;
  std::int64_t modulus_;
  std::vector<Row> pivot_;  // pivot_[j] is empty when column j has no pivot
};

/// Diagonal form P*A*Q = D over Z/N with P, Q invertible. `diag` has
/// min(rows, cols) entries; zeros past the rank.
struct Smith {
  std::int64_t modulus = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> diag;
  Matrix P;  // rows x rows, empty unless requested
  Matrix Q;  // cols x cols, empty unless requested
};

Smith smith(Matrix a, std::size_t cols, std::int64_t modulus, bool track_p, bool track_q);

/// Generators of {x : A x = 0} over Z/N.
Matrix kernel(const Matrix& a, std::size_t cols, std::int64_t modulus);

/// Test whether y lies in the column space of A, given smith(A) with P tracked.
bool in_image(const Smith& s, std::span<const std::int64_t> y);

}  // namespace tga::zmod
