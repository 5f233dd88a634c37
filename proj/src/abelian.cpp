#include "coxnerve/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"

namespace coxnerve {

namespace {

bool in_s_oslash(const CoxeterMatrix& m, GeneratorSet t) {
  return is_connected(m, t) && is_spherical(m, t);
}

// Rows that are nonzero in some column of `m`.
std::vector<std::size_t> active_rows(const IntMatrix& m) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) {
        rows.push_back(r);
        break;
      }
    }
  }
  return rows;
}

IntMatrix select_rows(const IntMatrix& m, const std::vector<std::size_t>& rows) {
  IntMatrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(rows[i], c);
  }
  return out;
}

bool columns_in_span(const IntMatrix& cols, const IntMatrix& span) {
  const SmithForm f = smith_decomposition(span);
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    if (!solve_integer(span, f, cols.column(c))) return false;
  }
  return true;
}

// Small dense int64 matrix, row-major. Column operations only.
struct Small {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> v;
  Small(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

// col dst -= q * col src
bool sub_multiple(Small& a, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::int64_t p;
    if (__builtin_mul_overflow(q, a.at(r, src), &p) || __builtin_sub_overflow(a.at(r, dst), p, &a.at(r, dst))) {
      return false;
    }
  }
  return true;
}

void swap_cols(Small& a, std::size_t x, std::size_t y) {
  for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, x), a.at(r, y));
}

bool negate_col(Small& a, std::size_t c) {
  for (std::size_t r = 0; r < a.rows; ++r) {
    if (__builtin_sub_overflow(std::int64_t{0}, a.at(r, c), &a.at(r, c))) return false;
  }
  return true;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Column Hermite form in place: the first `rank` columns are the canonical
// basis of the column lattice, the rest are zero. `u` (if given) receives the
// same column operations. False on overflow.
bool hermite(Small& a, Small* u, std::size_t& rank) {
  rank = 0;
  auto sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    return sub_multiple(a, dst, src, q) && (!u || sub_multiple(*u, dst, src, q));
  };
  for (std::size_t i = 0; i < a.rows && rank < a.cols; ++i) {
    while (true) {
      std::size_t best = a.cols;
      for (std::size_t k = rank; k < a.cols; ++k) {
        if (a.at(i, k) != 0 && (best == a.cols || std::llabs(a.at(i, k)) < std::llabs(a.at(i, best)))) best = k;
      }
      if (best == a.cols) break;
      swap_cols(a, best, rank);
      if (u) swap_cols(*u, best, rank);
      bool done = true;
      for (std::size_t k = rank + 1; k < a.cols; ++k) {
        if (a.at(i, k) == 0) continue;
        if (!sub(k, rank, a.at(i, k) / a.at(i, rank))) return false;
        if (a.at(i, k) != 0) done = false;
      }
      if (done) break;
    }
    if (a.at(i, rank) == 0) continue;
    if (a.at(i, rank) < 0 && !(negate_col(a, rank) && (!u || negate_col(*u, rank)))) return false;
    for (std::size_t k = 0; k < rank; ++k) {
      if (!sub(k, rank, floor_div(a.at(i, k), a.at(i, rank)))) return false;
    }
    ++rank;
  }
  return true;
}

std::optional<bool> small_intersection_check(const JMatrix& j, const Simplex& alpha, const Simplex& beta,
                                             const Simplex& common) {
  if (j.columns64.size() != j.columns.size()) return std::nullopt;
  const std::size_t total = j.matrix.rows();
  std::vector<char> used(total, 0);
  for (const Simplex* f : {&alpha, &beta}) {
    for (int c : *f) {
      const auto& col = j.columns64[static_cast<std::size_t>(c)];
      for (std::size_t r = 0; r < total; ++r) used[r] |= col[r] != 0;
    }
  }
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < total; ++r) {
    if (used[r]) rows.push_back(r);
  }
  auto fill = [&](Small& out, std::size_t offset, const Simplex& face, std::int64_t sign) {
    for (std::size_t k = 0; k < face.size(); ++k) {
      const auto& col = j.columns64[static_cast<std::size_t>(face[k])];
      for (std::size_t i = 0; i < rows.size(); ++i) out.at(i, offset + k) = sign * col[rows[i]];
    }
  };
  const std::size_t na = alpha.size(), nb = beta.size();
  Small joined(rows.size(), na + nb);
  fill(joined, 0, alpha, 1);
  fill(joined, na, beta, -1);
  Small u(na + nb, na + nb);
  for (std::size_t k = 0; k < na + nb; ++k) u.at(k, k) = 1;
  std::size_t rank = 0;
  if (!hermite(joined, &u, rank)) return std::nullopt;

  // Intersection generators J_alpha x for each kernel vector (x, y).
  Small meet(rows.size(), na + nb - rank);
  for (std::size_t kv = rank; kv < na + nb; ++kv) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < na; ++k) {
        std::int64_t p;
        const auto e = j.columns64[static_cast<std::size_t>(alpha[k])][rows[i]];
        if (__builtin_mul_overflow(e, u.at(k, kv), &p) || __builtin_add_overflow(acc, p, &acc)) return std::nullopt;
      }
      meet.at(i, kv - rank) = acc;
    }
  }
  Small expected(rows.size(), common.size());
  fill(expected, 0, common, 1);
  std::size_t r1 = 0, r2 = 0;
  if (!hermite(meet, nullptr, r1) || !hermite(expected, nullptr, r2)) return std::nullopt;
  if (r1 != r2) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < r1; ++c) {
      if (meet.at(i, c) != expected.at(i, c)) return false;
    }
  }
  return true;
}

void require_face(const SimplicialComplex& k, const Simplex& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) || !k.contains(s)) {
    throw InputError("not a face of the subdivision");
  }
}

}  // namespace

ReflectionIndex::ReflectionIndex(const CoxeterMatrix& m) {
  std::map<std::vector<std::int64_t>, Root> by_key;
  for (GeneratorSet t : s_oslash(m)) {
    for (Root& r : positive_roots(m, t)) {
      auto key = r.key();
      by_key.try_emplace(std::move(key), std::move(r));
    }
  }
  for (auto& [key, r] : by_key) roots_.push_back(std::move(r));
  // Rows are listed by reflection length, then word: simple reflections first.
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < roots_.size(); ++i) rows_.emplace(roots_[i].key(), i);
}

long ReflectionIndex::row_of(const std::vector<double>& coeffs) const {
  auto it = rows_.find(root_key(coeffs));
  return it == rows_.end() ? -1 : static_cast<long>(it->second);
}

ReflectionIndex reflection_index(const CoxeterMatrix& m) { return ReflectionIndex(m); }

std::vector<int> e_vector(const CoxeterMatrix& m, GeneratorSet t, const ReflectionIndex& idx) {
  m.check_subset(t);
  if (!in_s_oslash(m, t)) {
    throw InputError(m.format_subset(t) + " is not an irreducible spherical subset");
  }
  std::vector<int> e(idx.size(), 0);
  for (const Root& r : positive_roots(m, t)) {
    const long row = idx.row_of(r.coeffs);
    if (row < 0) throw LemmaViolation("reflection of " + m.format_subset(t) + " missing from index");
    e[static_cast<std::size_t>(row)] = 1;
  }
  return e;
}

JMatrix j_matrix(const CoxeterMatrix& m) {
  JMatrix j{s_oslash(m), ReflectionIndex(m), {}, {}};
  j.matrix = IntMatrix(j.index.size(), j.columns.size());
  for (std::size_t c = 0; c < j.columns.size(); ++c) {
    const auto e = e_vector(m, j.columns[c], j.index);
    for (std::size_t r = 0; r < e.size(); ++r) j.matrix(r, c) = e[r];
    j.columns64.emplace_back(e.begin(), e.end());
  }
  return j;
}

std::size_t j_rank_checked(const JMatrix& j) {
  const std::size_t rank = smith_normal_form(j.matrix).size();
  if (rank != j.columns.size()) {
    throw LemmaViolation("j has rank " + std::to_string(rank) + " < |S_oslash| = " +
                         std::to_string(j.columns.size()));
  }
  return rank;
}

IntMatrix lattice_of(const JMatrix& j, const Simplex& face) {
  std::vector<std::size_t> cols(face.begin(), face.end());
  return j.matrix.select_columns(cols);
}

IntMatrix lattice_intersection(const JMatrix& j, const Simplex& alpha, const Simplex& beta) {
  const IntMatrix a = lattice_of(j, alpha);
  const IntMatrix b = lattice_of(j, beta);
  IntMatrix neg_b = b;
  for (std::size_t r = 0; r < neg_b.rows(); ++r) {
    for (std::size_t c = 0; c < neg_b.cols(); ++c) neg_b(r, c) = -neg_b(r, c);
  }
  const IntMatrix joined = a.hconcat(neg_b);
  const IntMatrix kernel = integer_kernel(select_rows(joined, active_rows(joined)));
  // a x = b y for each kernel vector (x, y); the intersection is spanned by a x.
  IntMatrix x(a.cols(), kernel.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < kernel.cols(); ++c) x(r, c) = kernel(r, c);
  }
  return a.multiply(x);
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  const auto rows = active_rows(a.hconcat(b));
  const IntMatrix ra = select_rows(a, rows);
  const IntMatrix rb = select_rows(b, rows);
  return columns_in_span(ra, rb) && columns_in_span(rb, ra);
}

bool lattice_intersection_check(const JMatrix& j, const SimplicialComplex& subdivision,
                                const Simplex& alpha, const Simplex& beta) {
  require_face(subdivision, alpha);
  require_face(subdivision, beta);
  Simplex common;
  std::set_intersection(alpha.begin(), alpha.end(), beta.begin(), beta.end(),
                        std::back_inserter(common));
  if (auto fast = small_intersection_check(j, alpha, beta, common)) return *fast;
  return same_lattice(lattice_intersection(j, alpha, beta), lattice_of(j, common));
}

StandardAbelianSubgroup standard_abelian_subgroup(const CoxeterMatrix& m, const Subdivision& sub,
                                                  const Simplex& face) {
  require_face(sub.complex, face);
  StandardAbelianSubgroup h;
  h.face = face;
  for (int v : face) {
    const GeneratorSet piece = sub.pieces[static_cast<std::size_t>(v)];
    h.generators.push_back({piece, delta_words(m, piece).delta});
  }
  h.rank = static_cast<int>(face.size());
  return h;
}

}  // namespace coxnerve
