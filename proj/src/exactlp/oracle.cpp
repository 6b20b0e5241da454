#include "tverberg/oracle.hpp"

#include <functional>
#include <stdexcept>

namespace tverberg::oracle {

namespace {

// Solves A_S y_S = b by Gauss-Jordan; nullopt when the columns of A_S are
// dependent or the system is inconsistent.
std::optional<RatVector> solve_columns(const RatMatrix& a, const RatVector& b,
                                       const std::vector<std::size_t>& cols) {
  const std::size_t m = a.rows();
  const std::size_t k = cols.size();
  std::vector<RatVector> t(m, RatVector(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) t[i][j] = a(i, cols[j]);
    t[i][k] = b[i];
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t p = row;
    while (p < m && t[p][j] == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(t[p], t[row]);
    Rational inv = 1 / t[row][j];
    for (auto& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][j] == 0) continue;
      Rational f = t[i][j];
      for (std::size_t c = 0; c <= k; ++c) t[i][c] -= f * t[row][c];
    }
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (t[i][k] != 0) return std::nullopt;
  }
  RatVector y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = t[j][k];
  return y;
}

// Calls visit(y) for every basic feasible solution; stops when it returns true.
void for_each_vertex(const RatMatrix& a, const RatVector& b,
                     const std::function<bool(const RatVector&)>& visit) {
  const std::size_t n = a.cols();
  const std::size_t limit = std::min(a.rows(), n);
  std::vector<std::size_t> cols;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (stop) return;
    if (auto ys = solve_columns(a, b, cols)) {
      bool nonnegative = true;
      for (const auto& v : *ys) nonnegative = nonnegative && v >= 0;
      if (nonnegative) {
        RatVector y(n);
        for (std::size_t j = 0; j < cols.size(); ++j) y[cols[j]] = (*ys)[j];
        if (visit(y)) {
          stop = true;
          return;
        }
      }
    }
    if (cols.size() == limit) return;
    for (std::size_t c = from; c < n && !stop; ++c) {
      cols.push_back(c);
      rec(c + 1);
      cols.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::optional<RatVector> vertex_enumeration_feasible(const FeasibilityProblem& problem) {
  const std::size_t n = problem.a.cols();
  if (n > 16) throw std::invalid_argument("vertex enumeration oracle limited to 16 variables");
  const std::size_t none = n * 2 + 1;
  std::vector<std::size_t> negative_copy(n, none);
  std::size_t total = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (!problem.nonnegative[j]) negative_copy[j] = total++;
  }
  RatMatrix a(problem.a.rows(), total);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = problem.a(i, j);
      if (negative_copy[j] != none) a(i, negative_copy[j]) = -problem.a(i, j);
    }
  }
  std::optional<RatVector> found;
  for_each_vertex(a, problem.b, [&](const RatVector& y) {
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = y[j];
      if (negative_copy[j] != none) x[j] -= y[negative_copy[j]];
    }
    found = std::move(x);
    return true;
  });
  return found;
}

std::optional<Rational> vertex_enumeration_minimum(const RatMatrix& a, const RatVector& b,
                                                   const RatVector& c) {
  std::optional<Rational> best;
  for_each_vertex(a, b, [&](const RatVector& y) {
    Rational value = 0;
    for (std::size_t j = 0; j < y.size(); ++j) value += c[j] * y[j];
    if (!best || value < *best) best = value;
    return false;
  });
  return best;
}

}  // namespace tverberg::oracle
