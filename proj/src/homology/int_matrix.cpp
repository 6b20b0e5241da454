#include "tverberg/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tverberg {

DenseIntMatrix::DenseIntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix");
    for (long v : row) data_.emplace_back(v);
  }
}

DenseIntMatrix DenseIntMatrix::identity(int n) {
  DenseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseIntMatrix DenseIntMatrix::operator*(const DenseIntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  DenseIntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool DenseIntMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

BigInt DenseIntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  DenseIntMatrix a = *this;
  BigInt previous = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (a(i, k) != 0) swap = i;
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), col_start_(static_cast<std::size_t>(cols) + 1, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

IntMatrix IntMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  IntMatrix m(rows, cols);
  for (const auto& t : triplets)
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::out_of_range("triplet index out of range");
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<std::size_t> counts(static_cast<std::size_t>(cols), 0);
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    BigInt sum = 0;
    while (j < triplets.size() && triplets[j].col == triplets[i].col &&
           triplets[j].row == triplets[i].row)
      sum += triplets[j++].value;
    if (sum != 0) {
      m.entries_.push_back({triplets[i].row, std::move(sum)});
      ++counts[static_cast<std::size_t>(triplets[i].col)];
    }
    i = j;
  }
  for (int c = 0; c < cols; ++c)
    m.col_start_[static_cast<std::size_t>(c) + 1] =
        m.col_start_[static_cast<std::size_t>(c)] + counts[static_cast<std::size_t>(c)];
  return m;
}

IntMatrix IntMatrix::from_dense(const DenseIntMatrix& dense) {
  std::vector<Triplet> t;
  for (int i = 0; i < dense.rows(); ++i)
    for (int j = 0; j < dense.cols(); ++j)
      if (dense(i, j) != 0) t.push_back({i, j, dense(i, j)});
  return from_triplets(dense.rows(), dense.cols(), std::move(t));
}

double IntMatrix::fill() const {
  if (rows_ == 0 || cols_ == 0) return 0.0;
  return static_cast<double>(entries_.size()) / (static_cast<double>(rows_) * cols_);
}

std::span<const IntMatrix::Entry> IntMatrix::column(int c) const {
  const auto b = col_start_[static_cast<std::size_t>(c)];
  const auto e = col_start_[static_cast<std::size_t>(c) + 1];
  return {entries_.data() + b, e - b};
}

BigInt IntMatrix::at(int r, int c) const {
  for (const auto& e : column(c))
    if (e.row == r) return e.value;
  return 0;
}

std::vector<Triplet> IntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(entries_.size());
  for (int c = 0; c < cols_; ++c)
    for (const auto& e : column(c)) out.push_back({e.row, c, e.value});
  return out;
}

DenseIntMatrix IntMatrix::to_dense() const {
  DenseIntMatrix d(rows_, cols_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& e : column(c)) d(e.row, c) = e.value;
  return d;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  std::vector<Triplet> t;
  std::vector<BigInt> acc(static_cast<std::size_t>(rows_));
  std::vector<int> touched;
  std::vector<bool> mark(static_cast<std::size_t>(rows_), false);
  for (int j = 0; j < other.cols_; ++j) {
    touched.clear();
    for (const auto& b : other.column(j))
      for (const auto& a : column(b.row)) {
        const auto r = static_cast<std::size_t>(a.row);
        if (!mark[r]) {
          mark[r] = true;
          touched.push_back(a.row);
          acc[r] = 0;
        }
        acc[r] += a.value * b.value;
      }
    std::sort(touched.begin(), touched.end());
    for (int r : touched) {
      mark[static_cast<std::size_t>(r)] = false;
      if (acc[static_cast<std::size_t>(r)] != 0) t.push_back({r, j, acc[static_cast<std::size_t>(r)]});
    }
  }
  return from_triplets(rows_, other.cols_, std::move(t));
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<BigInt> y(static_cast<std::size_t>(rows_));
  for (int c = 0; c < cols_; ++c) {
    if (x[static_cast<std::size_t>(c)] == 0) continue;
    for (const auto& e : column(c)) y[static_cast<std::size_t>(e.row)] += e.value * x[static_cast<std::size_t>(c)];
  }
  return y;
}

void write_triplets(std::ostream& out, const IntMatrix& m) {
  out << "triplets v1 " << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& t : m.triplets()) out << t.row << ' ' << t.col << ' ' << t.value.get_str() << '\n';
}

}  // namespace tverberg
