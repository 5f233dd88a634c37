#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace coxnerve {

/// Dense matrix over GF(2), one packed row of 64-bit words per row.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v = true) {
    auto& w = words_[r * stride_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  std::size_t column_weight(std::size_t c) const;
  GF2Matrix multiply(const GF2Matrix& rhs) const;
  bool is_zero() const;

  /// Rank by row reduction on a copy.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace coxnerve
