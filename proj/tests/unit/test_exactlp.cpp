#include <doctest.h>

#include <random>

#include "tverberg/exactlp.hpp"
#include "tverberg/oracle.hpp"

using namespace tverberg;

namespace {

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(to_string(Rational(3) / 6) == "1/2");
  CHECK(to_string(Rational(-4) / 2) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("kernel basis examples") {
  auto sum = kernel_basis(RatMatrix{{1, 1, 1}});
  REQUIRE(sum.size() == 2);
  for (const auto& v : sum) CHECK(v[0] + v[1] + v[2] == 0);
  CHECK(kernel_basis(RatMatrix{{1, 0}, {0, 1}}).empty());
  auto radon = kernel_basis(RatMatrix{{0, 1, 2}, {1, 1, 1}});
  REQUIRE(radon.size() == 1);
  RatVector expected{1, -2, 1};
  RatVector negated{-1, 2, -1};
  CHECK((radon[0] == expected || radon[0] == negated));
}

TEST_CASE("kernel basis on random matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    RatMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3) a(i, j) = Rational(static_cast<long>(rng() % 11) - 5) / (1 + static_cast<long>(rng() % 4));
    // Occasionally duplicate a row to force rank deficiency.
    if (rows > 1 && trial % 4 == 0)
      for (std::size_t j = 0; j < cols; ++j) a(1, j) = a(0, j) * 3;
    auto basis = kernel_basis(a);
    CHECK(basis.size() == cols - rank(a));
    for (const auto& v : basis) CHECK(is_zero(a * v));
    RatMatrix stacked;
    for (const auto& v : basis) stacked.append_row(v);
    if (!basis.empty()) CHECK(rank(stacked) == basis.size());
  }
}

TEST_CASE("feasibility examples") {
  auto seg = FeasibilityProblem::standard(RatMatrix{{1, 1}}, {1});
  auto y = feasible(seg);
  REQUIRE(y.has_value());
  CHECK(seg.is_satisfied_by(*y));
  CHECK_FALSE(feasible(FeasibilityProblem::standard(RatMatrix{{1, 1}}, {-1})).has_value());

  // Diagonals of the unit square: a(0,0) + b(1,1) = c(1,0) + d(0,1).
  FeasibilityProblem diag;
  diag.a = RatMatrix{{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, -1, 0},
                     {0, 1, 0, 0, 0, -1}, {0, 0, 1, 0, -1, 0}, {0, 0, 0, 1, 0, -1}};
  diag.b = {1, 1, 0, 0, 0, 0};
  diag.nonnegative = {true, true, true, true, false, false};
  auto sol = feasible(diag);
  REQUIRE(sol.has_value());
  RatVector half(6, Rational(1, 2));
  CHECK(*sol == half);
}

TEST_CASE("free variables may go negative") {
  FeasibilityProblem p;
  p.a = RatMatrix{{1, 1}};
  p.b = {-3};
  p.nonnegative = {false, true};
  auto y = feasible(p);
  REQUIRE(y.has_value());
  CHECK(p.is_satisfied_by(*y));
  CHECK((*y)[0] <= -3);
}

TEST_CASE("Bland's rule terminates on a cycling instance") {
  // Beale's example; the textbook largest-coefficient rule cycles on it.
  RatMatrix a{{1, 0, 0, Rational(1, 4), -60, Rational(-1, 25), 9},
              {0, 1, 0, Rational(1, 2), -90, Rational(-1, 50), 3},
              {0, 0, 1, 0, 0, 1, 0}};
  RatVector b{0, 0, 1};
  RatVector c{0, 0, 0, Rational(-3, 4), 150, Rational(-1, 50), 6};
  auto result = detail::minimize_from_basis(a, b, c, {0, 1, 2});
  REQUIRE(result.status == detail::LpStatus::kOptimal);
  auto oracle = oracle::vertex_enumeration_minimum(a, b, c);
  REQUIRE(oracle.has_value());
  CHECK(result.objective == *oracle);
  CHECK(result.objective == Rational(-1, 20));
  CHECK(a * result.solution == b);
}

TEST_CASE("unbounded objectives are reported") {
  RatMatrix a{{1, -1}};
  auto result = detail::minimize_from_basis(a, {0}, {0, -1}, {0});
  CHECK(result.status == detail::LpStatus::kUnbounded);
}

TEST_CASE("feasibility verdicts agree with vertex enumeration") {
  std::mt19937 rng(99);
  int feasible_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
    FeasibilityProblem p;
    p.a = RatMatrix(rows, cols);
    p.b.resize(rows);
    p.nonnegative.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) p.nonnegative[j] = rng() % 4 != 0;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3) p.a(i, j) = static_cast<long>(rng() % 7) - 3;
      p.b[i] = static_cast<long>(rng() % 7) - 3;
    }
    auto y = feasible(p);
    auto o = oracle::vertex_enumeration_feasible(p);
    CHECK(y.has_value() == o.has_value());
    if (y) {
      CHECK(p.is_satisfied_by(*y));
      ++feasible_count;
    }
  }
  CHECK(feasible_count > 20);
  CHECK(feasible_count < 180);
}
