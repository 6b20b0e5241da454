#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "tverberg/numeric.hpp"

namespace tverberg {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector operator*(std::span<const Rational> x) const;
  /// Appends a row; the first row fixes the column count.
  void append_row(std::span<const Rational> row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Basis of {v : A v = 0}, one vector per non-pivot column, each scaled to a
/// primitive integer vector. Elimination runs fraction-free on the
/// denominator-cleared rows.
std::vector<RatVector> kernel_basis(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);

/// A y = b with y_i >= 0 where nonnegative[i], y_i free otherwise.
struct FeasibilityProblem {
  RatMatrix a;
  RatVector b;
  std::vector<bool> nonnegative;

  /// All variables nonnegative.
  static FeasibilityProblem standard(RatMatrix a, RatVector b);
  bool is_satisfied_by(std::span<const Rational> y) const;
};

/// Exact phase-1 simplex with Bland's rule. Returns a point that has been
/// verified by substitution, or nullopt when the phase-1 optimum is
/// positive (the system is infeasible).
std::optional<RatVector> feasible(const FeasibilityProblem& problem);

namespace detail {

enum class LpStatus { kOptimal, kUnbounded };

struct LpResult {
  LpStatus status;
  RatVector solution;
  Rational objective;
  std::size_t pivots = 0;
};

/// min c.y s.t. A y = b, y >= 0, b >= 0, starting from the basis `basis`
/// whose columns form an identity block in A. Bland's rule throughout.
LpResult minimize_from_basis(const RatMatrix& a, const RatVector& b, const RatVector& c,
                             std::vector<std::size_t> basis);

}  // namespace detail

}  // namespace tverberg
