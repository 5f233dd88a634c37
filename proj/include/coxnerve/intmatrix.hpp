#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxnerve {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix multiply(const IntMatrix& rhs) const;
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
  std::vector<BigInt> column(std::size_t c) const;
  /// Columns `which`, in that order.
  IntMatrix select_columns(const std::vector<std::size_t>& which) const;
  /// [this | rhs]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& rhs) const;
  bool is_zero() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// U * A * V = diag(invariants..., 0...), with U and V unimodular.
struct SmithForm {
  std::vector<BigInt> invariants;  // positive, each dividing the next
  IntMatrix left;                  // U, rows x rows
  IntMatrix right;                 // V, cols x cols

  std::size_t rank() const { return invariants.size(); }
};

/// Nonzero invariant factors d1 | d2 | ... of A. Pivots are chosen by
/// smallest absolute value; arithmetic runs in checked 64-bit integers and
/// restarts in arbitrary precision on overflow.
std::vector<BigInt> smith_normal_form(const IntMatrix& a);

SmithForm smith_decomposition(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, one vector per column.
IntMatrix integer_kernel(const IntMatrix& a);

/// Some integer x with A x = b, if one exists. `form` must be the
/// decomposition of A.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, const SmithForm& form,
                                                 const std::vector<BigInt>& b);

}  // namespace coxnerve
