#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "tverberg/numeric.hpp"

namespace tverberg {

/// Row-major dense integer matrix.
class DenseIntMatrix {
 public:
  DenseIntMatrix() = default;
  DenseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  DenseIntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static DenseIntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[index(r, c)]; }
  const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }

  DenseIntMatrix operator*(const DenseIntMatrix& other) const;
  bool operator==(const DenseIntMatrix& other) const = default;
  bool is_diagonal() const;
  /// Exact determinant by fraction-free (Bareiss) elimination; square only.
  BigInt determinant() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

struct Triplet {
  int row;
  int col;
  BigInt value;
};

/// Compressed sparse column integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  struct Entry {
    int row;
    BigInt value;
  };

  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  /// Duplicate positions are summed; zeros are dropped.
  static IntMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
  static IntMatrix from_dense(const DenseIntMatrix& dense);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  /// nonzeros / (rows * cols); 0 for empty shapes.
  double fill() const;
  std::span<const Entry> column(int c) const;
  BigInt at(int r, int c) const;
  std::vector<Triplet> triplets() const;
  DenseIntMatrix to_dense() const;
  bool is_zero() const { return entries_.empty(); }

  IntMatrix operator*(const IntMatrix& other) const;
  /// Matrix times a dense column vector.
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<Entry> entries_;
};

/// Header `triplets v1 <rows> <cols>`, then one `row col value` line per
/// nonzero, column-major.
void write_triplets(std::ostream& out, const IntMatrix& m);

}  // namespace tverberg
