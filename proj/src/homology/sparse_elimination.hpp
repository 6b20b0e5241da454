#pragma once

// Unit-pivot sparse elimination shared by the integer and prime-field rank
// and Smith-invariant routines. Internal header.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tverberg/int_matrix.hpp"

namespace tverberg::detail {

struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("64-bit overflow in sparse elimination") {}
};

/// Integers in int64 with every product and difference overflow-checked.
struct CheckedIntRing {
  using Scalar = std::int64_t;
  Scalar from(const BigInt& z) const {
    if (!z.fits_slong_p()) throw Overflow();
    return z.get_si();
  }
  BigInt to_big(Scalar x) const { return BigInt(static_cast<long>(x)); }
  bool is_zero(Scalar x) const { return x == 0; }
  bool is_unit(Scalar x) const { return x == 1 || x == -1; }
  Scalar unit_inverse(Scalar x) const { return x; }
  Scalar mul(Scalar a, Scalar b) const {
    Scalar out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow();
    return out;
  }
  Scalar sub(Scalar a, Scalar b) const {
    Scalar out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow();
    return out;
  }
};

struct BigIntRing {
  using Scalar = BigInt;
  Scalar from(const BigInt& z) const { return z; }
  BigInt to_big(const Scalar& x) const { return x; }
  bool is_zero(const Scalar& x) const { return x == 0; }
  bool is_unit(const Scalar& x) const { return x == 1 || x == -1; }
  Scalar unit_inverse(const Scalar& x) const { return x; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
};

struct PrimeFieldRing {
  using Scalar = std::uint32_t;
  std::uint32_t p;
  Scalar from(const BigInt& z) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<Scalar>(r.get_ui());
  }
  BigInt to_big(Scalar x) const { return BigInt(static_cast<unsigned long>(x)); }
  bool is_zero(Scalar x) const { return x == 0; }
  bool is_unit(Scalar x) const { return x != 0; }
  Scalar unit_inverse(Scalar x) const {
    // Fermat: x^(p-2).
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Scalar>(result);
  }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p);
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p - b; }
};

template <class Ring>
class UnitPivotEliminator {
 public:
  using Scalar = typename Ring::Scalar;
  using Row = std::vector<std::pair<int, Scalar>>;

  UnitPivotEliminator(const IntMatrix& m, Ring ring)
      : ring_(std::move(ring)),
        rows_(static_cast<std::size_t>(m.rows())),
        col_rows_(static_cast<std::size_t>(m.cols())),
        col_count_(static_cast<std::size_t>(m.cols()), 0),
        row_alive_(static_cast<std::size_t>(m.rows()), true),
        col_alive_(static_cast<std::size_t>(m.cols()), true) {
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& e : m.column(c)) {
        Scalar v = ring_.from(e.value);
        if (ring_.is_zero(v)) continue;
        rows_[static_cast<std::size_t>(e.row)].emplace_back(c, std::move(v));
        col_rows_[static_cast<std::size_t>(c)].push_back(e.row);
        ++col_count_[static_cast<std::size_t>(c)];
      }
  }

  /// Runs unit pivots until none remain; returns the number of pivots.
  std::size_t eliminate() {
    bool progress = true;
    while (progress) {
      progress = false;
      Heap heap;
      for (std::size_t c = 0; c < col_count_.size(); ++c)
        if (col_alive_[c] && col_count_[c] > 0) heap.emplace(col_count_[c], static_cast<int>(c));
      while (!heap.empty()) {
        const auto [count, c] = heap.top();
        heap.pop();
        const auto cu = static_cast<std::size_t>(c);
        if (!col_alive_[cu] || count != col_count_[cu] || count == 0) continue;
        const int row = choose_unit_row(c);
        if (row < 0) continue;
        pivot(row, c, heap);
        ++pivots_;
        progress = true;
      }
    }
    return pivots_;
  }

  /// Remaining nonzero block, densified.
  DenseIntMatrix residual() const {
    std::vector<int> live_rows, live_cols;
    std::vector<int> col_pos(col_count_.size(), -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!row_alive_[r] || rows_[r].empty()) continue;
      live_rows.push_back(static_cast<int>(r));
      for (const auto& [c, v] : rows_[r])
        if (col_pos[static_cast<std::size_t>(c)] < 0) {
          col_pos[static_cast<std::size_t>(c)] = 0;
          live_cols.push_back(c);
        }
    }
    std::sort(live_cols.begin(), live_cols.end());
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      col_pos[static_cast<std::size_t>(live_cols[j])] = static_cast<int>(j);
    DenseIntMatrix out(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows_[static_cast<std::size_t>(live_rows[i])])
        out(static_cast<int>(i), col_pos[static_cast<std::size_t>(c)]) = ring_.to_big(v);
    return out;
  }

 private:
  using Heap = std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                                   std::greater<>>;

  const Scalar* find(int row, int col) const {
    const Row& r = rows_[static_cast<std::size_t>(row)];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != col) return nullptr;
    return &it->second;
  }

  // Drops stale and duplicate row references of column c.
  void clean_column(int c) {
    auto& list = col_rows_[static_cast<std::size_t>(c)];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](int r) {
                                return !row_alive_[static_cast<std::size_t>(r)] || find(r, c) == nullptr;
                              }),
               list.end());
  }

  int choose_unit_row(int c) {
    clean_column(c);
    int best = -1;
    std::size_t best_len = 0;
    for (int r : col_rows_[static_cast<std::size_t>(c)]) {
      if (!ring_.is_unit(*find(r, c))) continue;
      const std::size_t len = rows_[static_cast<std::size_t>(r)].size();
      if (best < 0 || len < best_len) {
        best = r;
        best_len = len;
      }
    }
    return best;
  }

  void pivot(int prow, int pcol, Heap& heap) {
    const Row pivot_row = rows_[static_cast<std::size_t>(prow)];
    const Scalar inverse = ring_.unit_inverse(*find(prow, pcol));
    const std::vector<int> targets = col_rows_[static_cast<std::size_t>(pcol)];
    for (int r : targets) {
      if (r == prow) continue;
      const Scalar factor = ring_.mul(*find(r, pcol), inverse);
      subtract_scaled(r, pivot_row, factor, heap);
    }
    for (const auto& [c, v] : pivot_row) {
      auto& cnt = col_count_[static_cast<std::size_t>(c)];
      --cnt;
      if (c != pcol) heap.emplace(cnt, c);
    }
    rows_[static_cast<std::size_t>(prow)].clear();
    row_alive_[static_cast<std::size_t>(prow)] = false;
    col_alive_[static_cast<std::size_t>(pcol)] = false;
  }

  // rows_[r] -= factor * source
  void subtract_scaled(int r, const Row& source, const Scalar& factor, Heap& heap) {
    Row& target = rows_[static_cast<std::size_t>(r)];
    Row merged;
    merged.reserve(target.size() + source.size());
    auto a = target.begin();
    auto b = source.begin();
    while (a != target.end() || b != source.end()) {
      if (b == source.end() || (a != target.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
        continue;
      }
      const int c = b->first;
      const auto cu = static_cast<std::size_t>(c);
      if (a == target.end() || b->first < a->first) {
        Scalar v = ring_.sub(Scalar{}, ring_.mul(factor, b->second));
        ++b;
        if (ring_.is_zero(v)) continue;
        merged.emplace_back(c, std::move(v));
        col_rows_[cu].push_back(r);
        heap.emplace(++col_count_[cu], c);
        continue;
      }
      Scalar v = ring_.sub(a->second, ring_.mul(factor, b->second));
      ++a;
      ++b;
      if (ring_.is_zero(v)) {
        heap.emplace(--col_count_[cu], c);
        continue;
      }
      merged.emplace_back(c, std::move(v));
    }
    target = std::move(merged);
  }

  Ring ring_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> col_count_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
  std::size_t pivots_ = 0;
};

}  // namespace tverberg::detail
