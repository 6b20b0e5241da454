#include "tverberg/exactlp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tverberg {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& r : rows) append_row(std::vector<Rational>(r));
}

RatVector RatMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RatVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

void RatMatrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

struct Echelon {
  std::vector<std::vector<BigInt>> rows;  // nonzero echelon rows
  std::vector<std::size_t> pivots;        // pivot column per row
};

void divide_by_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Echelon integer_echelon(const RatMatrix& a) {
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    std::vector<BigInt> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j).get_num() * (l / a(i, j).get_den());
    rows.push_back(std::move(row));
  }
  Echelon e;
  std::size_t next = 0;
  for (std::size_t col = 0; col < a.cols() && next < rows.size(); ++col) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    const BigInt pivot = rows[next][col];
    for (std::size_t i = next + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const BigInt factor = rows[i][col];
      for (std::size_t j = col; j < a.cols(); ++j) rows[i][j] = pivot * rows[i][j] - factor * rows[next][j];
      divide_by_content(rows[i]);
    }
    e.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

std::size_t rank(const RatMatrix& a) { return integer_echelon(a).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
  const Echelon e = integer_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(a.cols());
    x[f] = 1;
    for (std::size_t i = e.rows.size(); i-- > 0;) {
      const std::size_t p = e.pivots[i];
      Rational s = 0;
      for (std::size_t j = p + 1; j < a.cols(); ++j)
        if (e.rows[i][j] != 0 && sgn(x[j]) != 0) s += Rational(e.rows[i][j]) * x[j];
      x[p] = -s / Rational(e.rows[i][p]);
    }
    // Scale to a primitive integer vector.
    BigInt l = 1, g = 0;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (auto& v : x) {
      v *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    for (auto& v : x) v /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

FeasibilityProblem FeasibilityProblem::standard(RatMatrix a, RatVector b) {
  const std::size_t n = a.cols();
  return {std::move(a), std::move(b), std::vector<bool>(n, true)};
}

bool FeasibilityProblem::is_satisfied_by(std::span<const Rational> y) const {
  if (y.size() != a.cols() || b.size() != a.rows()) return false;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (nonnegative[j] && sgn(y[j]) < 0) return false;
  const RatVector ay = a * y;
  return std::equal(ay.begin(), ay.end(), b.begin());
}

namespace detail {

LpResult minimize_from_basis(const RatMatrix& a, const RatVector& b, const RatVector& c,
                             std::vector<std::size_t> basis) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n || basis.size() != m) throw std::invalid_argument("shape mismatch");

  // Tableau rows hold B^-1 A | B^-1 b; the basis must start as an identity.
  std::vector<RatVector> t(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) throw std::invalid_argument("right-hand side must be nonnegative");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n] = b[i];
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < m; ++r)
      if (t[r][basis[i]] != (r == i ? 1 : 0)) throw std::invalid_argument("initial basis is not an identity block");

  LpResult result{LpStatus::kOptimal, RatVector(n), 0, 0};
  RatVector reduced(n);
  for (;;) {
    // Reduced costs c_j - c_B . column_j.
    for (std::size_t j = 0; j < n; ++j) {
      Rational r = c[j];
      for (std::size_t i = 0; i < m; ++i)
        if (sgn(c[basis[i]]) != 0 && sgn(t[i][j]) != 0) r -= c[basis[i]] * t[i][j];
      reduced[j] = r;
    }
    // Bland: smallest improving column, then smallest leaving basic index.
    std::size_t entering = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(reduced[j]) < 0) {
        entering = j;
        break;
      }
    if (entering == n) break;

    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][entering]) <= 0) continue;
      Rational ratio = t[i][n] / t[i][entering];
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == m) {
      result.status = LpStatus::kUnbounded;
      return result;
    }

    const Rational pivot = t[leaving][entering];
    for (auto& x : t[leaving]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leaving || sgn(t[i][entering]) == 0) continue;
      const Rational factor = t[i][entering];
      for (std::size_t j = 0; j <= n; ++j)
        if (sgn(t[leaving][j]) != 0) t[i][j] -= factor * t[leaving][j];
    }
    basis[leaving] = entering;
    ++result.pivots;
  }

  for (std::size_t i = 0; i < m; ++i) result.solution[basis[i]] = t[i][n];
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(c[j]) != 0) result.objective += c[j] * result.solution[j];
  return result;
}

}  // namespace detail

std::optional<RatVector> feasible(const FeasibilityProblem& problem) {
  const RatMatrix& a = problem.a;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (problem.b.size() != m || problem.nonnegative.size() != n)
    throw std::invalid_argument("feasibility problem shape mismatch");

  // Column map: free variable j becomes y+_j - y-_j.
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = cols++;
    if (!problem.nonnegative[j]) minus[j] = cols++;
  }
  const std::size_t total = cols + m;  // plus one artificial per row
  RatMatrix std_a(m, total);
  RatVector std_b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int flip = sgn(problem.b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = flip * a(i, j);
      std_a(i, plus[j]) = v;
      if (minus[j] != SIZE_MAX) std_a(i, minus[j]) = -v;
    }
    std_a(i, cols + i) = 1;
    std_b[i] = flip * problem.b[i];
  }
  RatVector cost(total);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    cost[cols + i] = 1;
    basis[i] = cols + i;
  }

  const auto phase1 = detail::minimize_from_basis(std_a, std_b, cost, std::move(basis));
  if (sgn(phase1.objective) > 0) return std::nullopt;

  RatVector y(n);
  for (std::size_t j = 0; j < n; ++j) {
    y[j] = phase1.solution[plus[j]];
    if (minus[j] != SIZE_MAX) y[j] -= phase1.solution[minus[j]];
  }
  if (!problem.is_satisfied_by(y)) throw std::logic_error("phase-1 point failed exact substitution");
  return y;
}

}  // namespace tverberg
