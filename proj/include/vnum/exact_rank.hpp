#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vnum {

enum class Field { Rationals, GF2 };

/// "Q" or "GF2".
std::string to_string(Field k);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// arithmetic and restarts with GMP integers if an entry would overflow.
std::size_t rank_rational(const IntMatrix& m);

/// Rank of m reduced mod 2, by XOR elimination on packed 64-bit words.
std::size_t rank_gf2(const IntMatrix& m);

std::size_t rank(const IntMatrix& m, Field k);

}  // namespace vnum
