#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "om/rational.hpp"

namespace om {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Column-compressed sparse integer matrix; each column keeps its nonzero
/// entries sorted by row.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, BigInt>;
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseIntMatrix from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  const Column& column(std::size_t c) const { return columns_[c]; }
  /// Entries must arrive sorted by row and nonzero.
  void set_column(std::size_t c, Column entries) { columns_[c] = std::move(entries); }

  bool is_zero() const;
  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

struct SmithForm {
  /// Nonzero invariant factors d1 | d2 | ... , all positive.
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
};

/// U * M * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_decomposition(const IntMatrix& m);

/// Sparse route: eliminates unit pivots with a Markowitz-style choice, then
/// hands whatever is left to the dense algorithm.
SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace om
