#include <doctest.h>

#include <cmath>
#include <random>

#include "tverberg/error.hpp"
#include "tverberg/partitions.hpp"

using namespace tverberg;

namespace {

PointConfiguration line(std::initializer_list<long> values) {
  std::vector<RatVector> pts;
  for (long v : values) pts.push_back({Rational(v)});
  return PointConfiguration(1, pts);
}

PointConfiguration random_points(std::mt19937& rng, std::size_t d, std::size_t n) {
  std::uniform_int_distribution<long> coord(-100, 100);
  std::vector<RatVector> pts(n, RatVector(d));
  for (auto& p : pts)
    for (auto& x : p) x = coord(rng);
  return PointConfiguration(d, pts);
}

const Rational kHalf(1, 2);

}  // namespace

TEST_CASE("radon examples") {
  auto c = radon_partition(line({0, 1, 2}));
  CHECK(c.parts == std::vector<Part>{{0, 2}, {1}});
  CHECK(c.point == RatVector{1});
  CHECK(c.coefficients == std::vector<RatVector>{{kHalf, kHalf}, {1}});

  PointConfiguration square(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto s = radon_partition(square);
  CHECK(s.parts == std::vector<Part>{{0, 2}, {1, 3}});
  CHECK(s.point == RatVector{kHalf, kHalf});

  PointConfiguration dup(2, {{0, 0}, {0, 0}, {3, 7}, {9, 1}});
  auto d = radon_partition(dup);
  CHECK(d.parts == std::vector<Part>{{0}, {1}});
  CHECK(d.point == RatVector{0, 0});
  CHECK(verify_certificate(dup, d));

  CHECK_THROWS_AS(radon_partition(line({0, 1})), BadArity);
}

TEST_CASE("radon on random configurations") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 1 + trial % 5;
    auto p = random_points(rng, d, d + 2);
    auto c = radon_partition(p);
    CHECK(verify_certificate(p, c));
    CHECK(tverberg_search(p, 2).has_value());
  }
}

TEST_CASE("tverberg on a line") {
  auto mid = tverberg_line({0, 1, 2}, 2);
  CHECK(mid.parts == std::vector<Part>{{0, 2}, {1}});
  CHECK(mid.point == RatVector{1});

  RatVector values{3, 1, 4, 1, 5};
  auto c = tverberg_line(values, 3);
  CHECK(c.parts == std::vector<Part>{{1, 4}, {2, 3}, {0}});
  CHECK(c.point == RatVector{3});
  std::vector<RatVector> pts;
  for (const auto& v : values) pts.push_back({v});
  CHECK(verify_certificate(PointConfiguration(1, pts), c));

  auto flat = tverberg_line({0, 0, 0, 0, 0}, 3);
  CHECK(flat.point == RatVector{0});
  CHECK(verify_certificate(line({0, 0, 0, 0, 0}), flat));
  CHECK_THROWS_AS(tverberg_line({1, 2}, 2), BadArity);
}

TEST_CASE("tverberg_line agrees with exhaustive search") {
  for (int r = 2; r <= 4; ++r) {
    const int n = 2 * r - 1;
    std::vector<long> v(static_cast<std::size_t>(n), 0);
    // Every vector in {0..3}^n for r <= 3; a deterministic sample for r = 4.
    const long total = r <= 3 ? static_cast<long>(std::pow(4, n)) : 300;
    std::mt19937 rng(static_cast<unsigned>(r));
    for (long code = 0; code < total; ++code) {
      long c = code;
      RatVector values;
      std::vector<RatVector> pts;
      for (int i = 0; i < n; ++i) {
        long x = r <= 3 ? c % 4 : static_cast<long>(rng() % 4);
        c /= 4;
        values.push_back(x);
        pts.push_back({Rational(x)});
      }
      PointConfiguration p(1, pts);
      auto cert = tverberg_line(values, r);
      CHECK(verify_certificate(p, cert));
      if (r <= 3 || code < 30) CHECK(tverberg_search(p, r).has_value());
    }
  }
}

TEST_CASE("intersection point") {
  PointConfiguration square(2, {{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  auto w = intersection_point(square, {{0, 1}, {2, 3}});
  REQUIRE(w.has_value());
  CHECK(w->point == RatVector{kHalf, kHalf});
  CHECK(w->coefficients == std::vector<RatVector>{{kHalf, kHalf}, {kHalf, kHalf}});

  CHECK_FALSE(intersection_point(line({0, 1, 2, 3}), {{0, 1}, {2, 3}}).has_value());
  CHECK(intersection_point(witness_configuration(2, 3), {{0, 2, 4}, {1, 3, 5}}).has_value());
  CHECK_THROWS_AS(intersection_point(square, {{0, 1}, {1, 2}}), OverlappingParts);
}

TEST_CASE("search examples") {
  PointConfiguration p(2, {{1, 1}, {1, 1}, {1, 1}, {5, 0}, {0, 5}, {-3, 2}, {7, 7}});
  auto c = tverberg_search(p, 3);
  REQUIRE(c.has_value());
  CHECK(c->parts == std::vector<Part>{{0}, {1}, {2}});
  CHECK(c->point == RatVector{1, 1});

  PointConfiguration cross(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 2}, {-2, -2}});
  SearchConstraints rainbow;
  rainbow.rainbow = Coloring(6, {{0, 1}, {2, 3}, {4, 5}});
  auto l = tverberg_search(cross, 2, rainbow);
  REQUIRE(l.has_value());
  // First hit in canonical order, cross-checked with scipy (tests/oracle).
  CHECK(l->parts == std::vector<Part>{{0, 2}, {1, 3, 4}});
  CHECK(verify_certificate(cross, *l, rainbow));

  PointConfiguration sob = line({0, 2, 1, 3});
  SearchConstraints equal;
  equal.rainbow = Coloring(4, {{0, 1}, {2, 3}});
  equal.equal_coefficients = true;
  auto s = tverberg_search(sob, 2, equal);
  REQUIRE(s.has_value());
  CHECK(s->parts == std::vector<Part>{{0, 3}, {1, 2}});
  CHECK(s->coefficients == std::vector<RatVector>{{kHalf, kHalf}, {kHalf, kHalf}});
  CHECK(s->point == RatVector{Rational(3, 2)});
  CHECK(verify_certificate(sob, *s, equal));

  SearchConstraints bad;
  bad.equal_coefficients = true;
  CHECK_THROWS_AS(tverberg_search(sob, 2, bad), InconsistentConstraints);
}

TEST_CASE("skeleton restriction") {
  // Four points in convex position in the plane: the Radon partition is the
  // pair of diagonals, which needs edges.
  PointConfiguration square(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  SearchConstraints vertices_only;
  vertices_only.max_face_dimension = 0;
  CHECK_FALSE(tverberg_search(square, 2, vertices_only).has_value());
  SearchConstraints edges;
  edges.max_face_dimension = 1;
  auto c = tverberg_search(square, 2, edges);
  REQUIRE(c.has_value());
  CHECK(verify_certificate(square, *c, edges));
  CHECK_FALSE(verify_certificate(square, *c, vertices_only));
}

TEST_CASE("parallel search matches the serial reference") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_points(rng, 2, 7);
    auto a = tverberg_search(p, 3);
    auto b = tverberg_search_serial(p, 3);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
  }
}

TEST_CASE("witness configurations") {
  auto w = witness_configuration(2, 3);
  CHECK(w.points() == std::vector<RatVector>{{0, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}});
  CHECK(witness_configuration(1, 2).points() == std::vector<RatVector>{{0}, {1}});
  CHECK(witness_configuration(3, 2).size() == 4);
  CHECK(verify_no_partition(witness_configuration(2, 3), 3));
  CHECK(verify_no_partition(witness_configuration(1, 4), 4));
  std::mt19937 rng(23);
  CHECK_FALSE(verify_no_partition(random_points(rng, 2, 7), 3));
  CHECK_THROWS_AS(verify_no_partition(random_points(rng, 2, 20), 3), SizeExceeded);
}

TEST_CASE("family counts") {
  CHECK(candidate_family_count(7, 3) == 1701);
  CHECK(candidate_family_count(4, 2) == 25);
  CHECK(candidate_family_count(1, 2) == 0);
}

TEST_CASE("counting audit") {
  auto a = counting_audit(2, 2, 1);
  CHECK(a.skeleton_lhs == 6);
  CHECK(a.skeleton_rhs == 6);
  CHECK(a.skeleton_forced);
  auto b = counting_audit(2, 3, 2);
  CHECK(b.n == 8);
  CHECK(b.skeleton_lhs == 12);
  CHECK(b.skeleton_forced);
  auto c = counting_audit(2, 3, 1);
  CHECK(c.skeleton_lhs == 9);
  CHECK(c.skeleton_rhs == 10);
  CHECK_FALSE(c.skeleton_forced);
  CHECK(c.skeleton_bound == 2);
  CHECK(c.color_forced);
  CHECK(c.color_class_bound == 5);
}

TEST_CASE("certificates are checked exactly") {
  PointConfiguration square(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto c = radon_partition(square);
  auto bad = c;
  bad.point[0] += Rational(1, 1000000);
  CHECK_FALSE(verify_certificate(square, bad));
  bad = c;
  bad.coefficients[0][0] = -bad.coefficients[0][0];
  CHECK_FALSE(verify_certificate(square, bad));
  bad = c;
  bad.parts[1] = {0, 3};
  CHECK_FALSE(verify_certificate(square, bad));
}
