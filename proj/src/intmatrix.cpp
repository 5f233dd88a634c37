#include "coxnerve/intmatrix.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace coxnerve {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::multiply: shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = (*this)(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += x * rhs(k, c);
    }
  }
  return out;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: shape mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  }
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw std::invalid_argument("IntMatrix::hconcat: row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

namespace {

struct Overflow {};

// int64 with overflow detection; lets the elimination run at machine speed
// and fall back to BigInt only when entries actually grow.
struct Checked64 {
  std::int64_t v = 0;

  Checked64() = default;
  Checked64(std::int64_t x) : v(x) {}  // NOLINT: implicit by design of the template

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1) throw Overflow{};
    return a.v / b.v;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v == -1) return 0;
    return a.v % b.v;
  }
  Checked64 operator-() const {
    if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v;
  }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
  friend auto operator<=>(Checked64 a, Checked64 b) { return a.v <=> b.v; }
};

Checked64 magnitude(Checked64 x) { return x.v < 0 ? -x : x; }
BigInt magnitude(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt to_big(Checked64 x) { return BigInt(x.v); }
BigInt to_big(const BigInt& x) { return x; }

template <class Int>
Int from_big(const BigInt& x);
template <>
Checked64 from_big<Checked64>(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw Overflow{};
  }
  return Checked64(static_cast<std::int64_t>(x));
}
template <>
BigInt from_big<BigInt>(const BigInt& x) {
  return x;
}

template <class Int>
class Dense {
 public:
  Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(at(j, c) == Int(0))) at(i, c) = at(i, c) + q * at(j, c);
    }
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!(at(r, j) == Int(0))) at(r, i) = at(r, i) + q * at(r, j);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

template <class Int>
struct Elimination {
  Dense<Int> a;
  std::optional<Dense<Int>> u;  // row operations, applied to the identity
  std::optional<Dense<Int>> v;  // column operations, applied to the identity
  std::size_t rank = 0;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  }
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    a.add_row(i, j, q);
    if (u) u->add_row(i, j, q);
  }
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    a.add_col(i, j, q);
    if (v) v->add_col(i, j, q);
  }

  void run() {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const Int zero(0);
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
      // Smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (a.at(r, c) == zero) continue;
          if (pr == rows || magnitude(a.at(r, c)) < magnitude(a.at(pr, pc))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) break;
      swap_rows(t, pr);
      swap_cols(t, pc);

      while (true) {
        bool changed = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (a.at(r, t) == zero) continue;
          const Int q = a.at(r, t) / a.at(t, t);
          add_row(r, t, -q);
          if (!(a.at(r, t) == zero)) {
            swap_rows(t, r);  // remainder is a strictly smaller pivot
            changed = true;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a.at(t, c) == zero) continue;
          const Int q = a.at(t, c) / a.at(t, t);
          add_col(c, t, -q);
          if (!(a.at(t, c) == zero)) {
            swap_cols(t, c);
            changed = true;
          }
        }
        if (changed) continue;

        // Row and column t are clear; enforce divisibility of the rest.
        bool divisible = true;
        for (std::size_t r = t + 1; r < rows && divisible; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (!(a.at(r, c) % a.at(t, t) == zero)) {
              add_row(t, r, Int(1));
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (a.at(t, t) < zero) {
        a.negate_row(t);
        if (u) u->negate_row(t);
      }
      rank = t + 1;
    }
  }
};

template <class Int>
Elimination<Int> load(const IntMatrix& m, bool transforms) {
  Elimination<Int> e{Dense<Int>(m.rows(), m.cols()), std::nullopt, std::nullopt, 0};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) e.a.at(r, c) = from_big<Int>(m(r, c));
  }
  if (transforms) {
    e.u.emplace(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) e.u->at(i, i) = Int(1);
    e.v.emplace(m.cols(), m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) e.v->at(i, i) = Int(1);
  }
  return e;
}

template <class Int>
IntMatrix to_matrix(const Dense<Int>& d) {
  IntMatrix out(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) out(r, c) = to_big(d.at(r, c));
  }
  return out;
}

template <class Int>
SmithForm finish(const Elimination<Int>& e) {
  SmithForm f;
  for (std::size_t t = 0; t < e.rank; ++t) f.invariants.push_back(to_big(e.a.at(t, t)));
  if (e.u) f.left = to_matrix(*e.u);
  if (e.v) f.right = to_matrix(*e.v);
  return f;
}

SmithForm compute(const IntMatrix& a, bool transforms) {
  try {
    auto e = load<Checked64>(a, transforms);
    e.run();
    return finish(e);
  } catch (const Overflow&) {
    auto e = load<BigInt>(a, transforms);
    e.run();
    return finish(e);
  }
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntMatrix& a) {
  return compute(a, false).invariants;
}

SmithForm smith_decomposition(const IntMatrix& a) { return compute(a, true); }

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm f = smith_decomposition(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = f.rank(); c < a.cols(); ++c) free_cols.push_back(c);
  return f.right.select_columns(free_cols);
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, const SmithForm& form,
                                                 const std::vector<BigInt>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
  // U A V = D, so A x = b  <=>  D y = U b with x = V y.
  const std::vector<BigInt> ub = form.left.apply(b);
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < form.rank()) {
      if (ub[i] % form.invariants[i] != 0) return std::nullopt;
      y[i] = ub[i] / form.invariants[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return form.right.apply(y);
}

}  // namespace coxnerve
