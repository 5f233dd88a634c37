#include "coxnerve/gf2matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxnerve {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

std::size_t GF2Matrix::column_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
  return w;
}

bool GF2Matrix::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("GF2Matrix::multiply: shape mismatch");
  GF2Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      for (std::size_t w = 0; w < rhs.stride_; ++w) {
        out.words_[r * out.stride_ + w] ^= rhs.words_[k * rhs.stride_ + w];
      }
    }
  }
  return out;
}

std::size_t GF2Matrix::rank() const {
  std::vector<std::uint64_t> m = words_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * stride_ + word] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + static_cast<long>(pivot * stride_),
                       m.begin() + static_cast<long>((pivot + 1) * stride_),
                       m.begin() + static_cast<long>(rank * stride_));
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (!(m[r * stride_ + word] & bit)) continue;
      // Columns left of `word` are already zero in both rows.
      for (std::size_t w = word; w < stride_; ++w) m[r * stride_ + w] ^= m[rank * stride_ + w];
    }
    ++rank;
  }
  return rank;
}

}  // namespace coxnerve
