#include "om/smith.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "om/error.hpp"

namespace om {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), data_(rows_ * cols_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::LengthMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::LengthMismatch, "matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
  SparseIntMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0) s.columns_[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
    }
  }
  return s;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  }
  return m;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::LengthMismatch, "matrix product dimension mismatch");
  SparseIntMatrix out(a.rows(), b.cols());
  std::vector<BigInt> acc(a.rows());
  std::vector<std::uint32_t> touched;
  std::vector<bool> seen(a.rows(), false);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    touched.clear();
    for (const auto& [k, bv] : b.column(c)) {
      for (const auto& [r, av] : a.column(k)) {
        if (!seen[r]) {
          seen[r] = true;
          touched.push_back(r);
        }
        acc[r] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseIntMatrix::Column col;
    for (std::uint32_t r : touched) {
      if (acc[r] != 0) col.emplace_back(r, acc[r]);
      acc[r] = 0;
      seen[r] = false;
    }
    out.set_column(c, std::move(col));
  }
  return out;
}

namespace {

template <bool Track>
struct DenseSmith {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;

  explicit DenseSmith(const IntMatrix& m) : a(m) {
    if constexpr (Track) {
      u = IntMatrix::identity(m.rows());
      v = IntMatrix::identity(m.cols());
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if constexpr (Track) {
      for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if constexpr (Track) {
      for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
  }
  // row i += f * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(j, c) != 0) a(i, c) += f * a(j, c);
    }
    if constexpr (Track) {
      for (std::size_t c = 0; c < u.cols(); ++c) {
        if (u(j, c) != 0) u(i, c) += f * u(j, c);
      }
    }
  }
  // col i += f * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, j) != 0) a(r, i) += f * a(r, j);
    }
    if constexpr (Track) {
      for (std::size_t r = 0; r < v.rows(); ++r) {
        if (v(r, j) != 0) v(r, i) += f * v(r, j);
      }
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if constexpr (Track) {
      for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
  }

  // Moves the smallest nonzero entry of row t / column t (from t on) to (t,t).
  bool bring_small_pivot(std::size_t t) {
    std::size_t best_r = t, best_c = t;
    BigInt best = -1;
    for (std::size_t r = t; r < a.rows(); ++r) {
      if (a(r, t) != 0 && (best < 0 || abs(a(r, t)) < best)) {
        best = abs(a(r, t));
        best_r = r;
        best_c = t;
      }
    }
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(t, c) != 0 && (best < 0 || abs(a(t, c)) < best)) {
        best = abs(a(t, c));
        best_r = t;
        best_c = c;
      }
    }
    if (best < 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void run() {
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      // global minimum over the remaining block starts the step
      std::size_t pr = a.rows(), pc = a.cols();
      BigInt best = -1;
      for (std::size_t r = t; r < a.rows(); ++r) {
        for (std::size_t c = t; c < a.cols(); ++c) {
          if (a(r, c) != 0 && (best < 0 || abs(a(r, c)) < best)) {
            best = abs(a(r, c));
            pr = r;
            pc = c;
          }
        }
      }
      if (best < 0) return;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        bool clean = true;
        for (std::size_t r = t + 1; r < a.rows(); ++r) {
          if (a(r, t) == 0) continue;
          const BigInt q = a(r, t) / a(t, t);
          if (q != 0) add_row(r, t, -q);
          if (a(r, t) != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (a(t, c) == 0) continue;
          const BigInt q = a(t, c) / a(t, t);
          if (q != 0) add_col(c, t, -q);
          if (a(t, c) != 0) clean = false;
        }
        if (!clean) {
          bring_small_pivot(t);
          continue;
        }
        // divisibility of the remaining block by the pivot
        bool divisible = true;
        for (std::size_t r = t + 1; r < a.rows() && divisible; ++r) {
          for (std::size_t c = t + 1; c < a.cols(); ++c) {
            if (a(r, c) % a(t, t) != 0) {
              add_row(t, r, 1);
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }

  SmithForm form() const {
    SmithForm out;
    for (std::size_t t = 0; t < std::min(a.rows(), a.cols()); ++t) {
      if (a(t, t) != 0) out.invariant_factors.push_back(a(t, t));
    }
    out.rank = out.invariant_factors.size();
    return out;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  DenseSmith<false> s(m);
  s.run();
  return s.form();
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  DenseSmith<true> s(m);
  s.run();
  return {std::move(s.u), std::move(s.a), std::move(s.v)};
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  std::vector<SparseIntMatrix::Column> cols(m.cols());
  std::vector<std::unordered_set<std::uint32_t>> row_members(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    cols[c] = m.column(c);
    for (const auto& [r, v] : cols[c]) row_members[r].insert(static_cast<std::uint32_t>(c));
  }
  std::vector<bool> col_done(m.cols(), false);
  std::size_t unit_rank = 0;

  auto eliminate = [&](std::uint32_t p, std::uint32_t r, const BigInt& pivot) {
    const SparseIntMatrix::Column pivot_col = cols[p];
    std::vector<std::uint32_t> targets;
    for (std::uint32_t c : row_members[r]) {
      if (c != p) targets.push_back(c);
    }
    for (std::uint32_t c : targets) {
      auto& col = cols[c];
      auto it = std::lower_bound(col.begin(), col.end(), r,
                                 [](const SparseIntMatrix::Entry& e, std::uint32_t row) { return e.first < row; });
      const BigInt factor = it->second * pivot;  // pivot is a unit, so pivot^-1 == pivot
      SparseIntMatrix::Column merged;
      merged.reserve(col.size() + pivot_col.size());
      auto a = col.begin();
      auto b = pivot_col.begin();
      while (a != col.end() || b != pivot_col.end()) {
        if (b == pivot_col.end() || (a != col.end() && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == col.end() || b->first < a->first) {
          merged.emplace_back(b->first, -factor * b->second);
          row_members[b->first].insert(c);
          ++b;
        } else {
          BigInt value = a->second - factor * b->second;
          if (value != 0) {
            merged.emplace_back(a->first, std::move(value));
          } else {
            row_members[a->first].erase(c);
          }
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
    for (const auto& [row, v] : pivot_col) row_members[row].erase(p);
    cols[p].clear();
    col_done[p] = true;
    ++unit_rank;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < cols.size(); ++c) {
      if (!col_done[c] && !cols[c].empty()) order.push_back(c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return cols[x].size() < cols[y].size(); });
    for (std::uint32_t p : order) {
      if (col_done[p] || cols[p].empty()) continue;
      std::size_t best_count = std::numeric_limits<std::size_t>::max();
      std::uint32_t best_row = 0;
      BigInt pivot;
      for (const auto& [r, v] : cols[p]) {
        if ((v == 1 || v == -1) && row_members[r].size() < best_count) {
          best_count = row_members[r].size();
          best_row = r;
          pivot = v;
        }
      }
      if (best_count == std::numeric_limits<std::size_t>::max()) continue;
      eliminate(p, best_row, pivot);
      progress = true;
    }
  }

  // non-unit remainder goes through the dense algorithm
  std::vector<std::uint32_t> rest_cols;
  std::vector<std::uint32_t> rest_rows;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    if (col_done[c] || cols[c].empty()) continue;
    rest_cols.push_back(c);
    for (const auto& [r, v] : cols[c]) rest_rows.push_back(r);
  }
  std::sort(rest_rows.begin(), rest_rows.end());
  rest_rows.erase(std::unique(rest_rows.begin(), rest_rows.end()), rest_rows.end());

  SmithForm out;
  out.invariant_factors.assign(unit_rank, BigInt(1));
  if (!rest_cols.empty()) {
    IntMatrix dense(rest_rows.size(), rest_cols.size());
    for (std::size_t j = 0; j < rest_cols.size(); ++j) {
      for (const auto& [r, v] : cols[rest_cols[j]]) {
        const auto i = std::lower_bound(rest_rows.begin(), rest_rows.end(), r) - rest_rows.begin();
        dense(static_cast<std::size_t>(i), j) = v;
      }
    }
    const SmithForm tail = smith_normal_form(dense);
    out.invariant_factors.insert(out.invariant_factors.end(), tail.invariant_factors.begin(),
                                 tail.invariant_factors.end());
  }
  out.rank = out.invariant_factors.size();
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::LengthMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace om
