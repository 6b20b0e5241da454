#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tverberg/constructions.hpp"
#include "tverberg/equivariant.hpp"
#include "tverberg/error.hpp"
#include "tverberg/homology.hpp"

using namespace tverberg;

namespace {

std::vector<std::size_t> fv(const SimplicialComplex& k) { return k.f_vector(); }

SimplicialComplex random_complex(std::mt19937& rng, int n) {
  std::vector<Simplex> gens;
  std::uniform_int_distribution<int> count(1, 3);
  int c = count(rng);
  for (int i = 0; i < c; ++i) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) vs.push_back(v);
    }
    if (vs.empty()) vs.push_back(static_cast<Vertex>(rng() % n));
    gens.emplace_back(vs);
  }
  return SimplicialComplex(n, gens);
}

}  // namespace

TEST_CASE("simplex canonical form") {
  Simplex s{3, 1, 2};
  CHECK(s.vertices()[0] == 1);
  CHECK(s.dimension() == 2);
  CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Simplex({-1, 2}), std::invalid_argument);
  CHECK(s.without(0) == Simplex{2, 3});
}

TEST_CASE("full simplex") {
  CHECK(full_simplex(0).vertex_count() == 1);
  CHECK(full_simplex(0).dimension() == 0);
  auto t = full_simplex(2);
  REQUIRE(t.facets().size() == 1);
  CHECK(t.facets()[0] == Simplex{0, 1, 2});
  auto d4 = full_simplex(4);
  CHECK(d4.vertex_count() == 5);
  CHECK(d4.facets().size() == 1);
  CHECK(d4.dimension() == 4);
}

TEST_CASE("skeleton") {
  auto cycle = skeleton(full_simplex(2), 1);
  CHECK(cycle.facets() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(skeleton(full_simplex(4), 4) == full_simplex(4));
  auto k5 = skeleton(full_simplex(4), 1);
  CHECK(k5.facets().size() == 10);
  CHECK(k5.dimension() == 1);
  CHECK(skeleton(full_simplex(3), -1).dimension() == -1);
}

TEST_CASE("join") {
  auto square = join(isolated_points(2), isolated_points(2));
  CHECK(square.facets().size() == 4);
  CHECK(fv(square) == std::vector<std::size_t>{4, 4});
  CHECK(are_isomorphic(square, simplex_boundary(1)) == std::nullopt);
  CHECK(homology(square).betti(1) == 1);
  CHECK(join(full_simplex(2), SimplicialComplex()) == full_simplex(2));
  CHECK(are_isomorphic(join(full_simplex(1), full_simplex(1)), full_simplex(3)).has_value());
}

TEST_CASE("deleted join examples") {
  auto edge = deleted_join(full_simplex(1), 2, 2);
  CHECK(fv(edge.complex) == std::vector<std::size_t>{4, 4});
  CHECK(homology(edge.complex).betti(1) == 1);
  CHECK(edge.complex.is_pure());

  auto three = deleted_join(isolated_points(3), 2, 2);
  CHECK(fv(three.complex) == std::vector<std::size_t>{6, 6});
  CHECK(homology(three.complex).betti(0) == 1);
  CHECK(homology(three.complex).betti(1) == 1);

  for (int k = 1; k <= 3; ++k) {
    for (int r = 2; r <= 4; ++r) {
      auto dj = deleted_join(isolated_points(k), r, 2);
      CHECK(are_isomorphic(dj.complex, chessboard(k, r).complex).has_value());
    }
  }
}

TEST_CASE("deleted join shape and action") {
  for (int n = 0; n <= 3; ++n) {
    for (int r = 2; r <= 3; ++r) {
      auto dj = deleted_join(full_simplex(n), r, 2);
      CHECK(dj.complex.vertex_count() == r * (n + 1));
      CHECK(dj.complex.dimension() == n);
      CHECK(acts_simplicially(dj.complex, dj.action));
      auto elements = dj.action.elements(static_cast<std::size_t>(dj.complex.vertex_count()));
      CHECK(elements.size() == (r == 2 ? 2u : 6u));
      // No non-identity element fixes a facet that meets every copy pointwise.
      for (const auto& f : dj.complex.facets()) {
        std::set<int> copies;
        for (Vertex v : f) copies.insert(v / (n + 1));
        if (static_cast<int>(copies.size()) < r && r > 2) continue;
        for (std::size_t e = 1; e < elements.size(); ++e) {
          bool fixed = std::all_of(f.begin(), f.end(), [&](Vertex v) { return elements[e][v] == v; });
          CHECK_FALSE(fixed);
        }
      }
    }
  }
}

TEST_CASE("k-wise deleted join admits repeated vertices") {
  auto dj = deleted_join(isolated_points(1), 3, 3);
  // One original vertex in at most two of three copies.
  CHECK(fv(dj.complex) == std::vector<std::size_t>{3, 3});
  auto full = deleted_join(isolated_points(1), 3, 2);
  CHECK(fv(full.complex) == std::vector<std::size_t>{3});
}

TEST_CASE("chessboard examples") {
  auto c23 = chessboard(2, 3);
  CHECK(fv(c23.complex) == std::vector<std::size_t>{6, 6});
  CHECK(homology(c23.complex).betti(1) == 1);
  auto c1 = chessboard(1, 5);
  CHECK(fv(c1.complex) == std::vector<std::size_t>{5});
  auto c34 = chessboard(3, 4);
  CHECK(c34.complex.dimension() == 2);
  CHECK(euler_characteristic(c34.complex) == 0);
  CHECK(acts_simplicially(c34.complex, c34.column_rotation));
  CHECK(acts_simplicially(c34.complex, c34.row_column_symmetry));
  CHECK(c34.row_column_symmetry.elements(12).size() == 144);
}

TEST_CASE("chessboard faces are rook placements") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = m; n <= 6; ++n) {
      auto c = chessboard(m, n);
      CHECK(c.complex.facets().size() == static_cast<std::size_t>(
                                             BigInt(factorial(static_cast<unsigned>(n)) /
                                              factorial(static_cast<unsigned>(n - m)))
                                                 .get_ui()));
      if (m * n > 20) continue;
      for (int q = 0; q <= c.complex.dimension(); ++q) {
        for (const auto& f : c.complex.faces(q)) {
          std::set<int> rows, cols;
          for (Vertex v : f) {
            rows.insert(v / n);
            cols.insert(v % n);
          }
          CHECK(rows.size() == f.size());
          CHECK(cols.size() == f.size());
        }
      }
    }
  }
}

TEST_CASE("deleted product examples") {
  auto s0 = deleted_product_chain(full_simplex(1), 2);
  CHECK(s0.top_degree() == 0);
  CHECK(s0.rank(0) == 2);

  auto hex = deleted_product_chain(full_simplex(2), 2);
  CHECK(hex.rank(0) == 6);
  CHECK(hex.rank(1) == 6);
  auto h = homology(hex);
  CHECK(h.betti(0) == 1);
  CHECK(h.betti(1) == 1);
  CHECK(h.degrees[0].torsion.empty());
  CHECK(h.degrees[1].torsion.empty());

  // Ordered set partitions of N+1 labels into r blocks (oracle enumeration).
  const std::size_t expected[8][4] = {{}, {}, {0, 0, 2, 0},   {0, 0, 6, 6},     {0, 0, 14, 36},
                                      {0, 0, 30, 150}, {0, 0, 62, 540}, {0, 0, 126, 1806}};
  for (int labels = 2; labels <= 7; ++labels) {
    for (int r = 2; r <= 3 && r <= labels; ++r) {
      auto c = deleted_product_chain(full_simplex(labels - 1), r);
      CHECK(c.top_degree() == labels - r);
      CHECK(c.rank(labels - r) == expected[labels][r]);
      CHECK(boundary_squares_vanish(c));
    }
  }
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(are_isomorphic(full_simplex(2), full_simplex(1)).has_value());
  auto c = chessboard(2, 3).complex;
  auto iso = are_isomorphic(c, barycentric_subdivision(simplex_boundary(2)));
  REQUIRE(iso.has_value());
  CHECK(iso->size() == 6);
  CHECK_FALSE(are_isomorphic(chessboard(2, 4).complex, join(isolated_points(2), isolated_points(4))).has_value());
  CHECK_THROWS_AS(are_isomorphic(isolated_points(41), isolated_points(41)), SizeExceeded);
}

TEST_CASE("deleted join of a join splits") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    int a = 1 + static_cast<int>(rng() % 3);
    int b = 1 + static_cast<int>(rng() % 3);
    auto k = random_complex(rng, a);
    auto l = random_complex(rng, b);
    int r = 2 + trial % 2;
    auto lhs = deleted_join(join(k, l), r, 2).complex;
    auto rhs = join(deleted_join(k, r, 2).complex, deleted_join(l, r, 2).complex);
    CHECK(are_isomorphic(lhs, rhs).has_value());
  }
}

TEST_CASE("deleted join of a simplex is a join of point sets") {
  for (int n = 0; n <= 3; ++n) {
    for (int r = 2; r <= 3; ++r) {
      CHECK(are_isomorphic(deleted_join(full_simplex(n), r, 2).complex,
                           join_power(isolated_points(r), n + 1))
                .has_value());
    }
  }
}

TEST_CASE("barycentric subdivision") {
  auto path = barycentric_subdivision(full_simplex(1));
  CHECK(fv(path) == std::vector<std::size_t>{3, 2});
  auto hex = barycentric_subdivision(simplex_boundary(2));
  CHECK(fv(hex) == std::vector<std::size_t>{6, 6});
  CHECK(homology(hex).betti(1) == 1);
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto k = random_complex(rng, 5);
    CHECK(euler_characteristic(barycentric_subdivision(k)) == euler_characteristic(k));
  }
  auto sub = barycentric_subdivision_with_faces(full_simplex(2));
  CHECK(sub.vertex_faces.size() == 7);
}

TEST_CASE("quotient complexes") {
  auto c13 = chessboard(1, 3);
  auto point = quotient_complex(c13.complex, c13.column_rotation);
  CHECK(point.complex.vertex_count() == 1);
  CHECK_FALSE(point.subdivided);

  auto c23 = chessboard(2, 3);
  auto q = quotient_complex(c23.complex, c23.column_rotation);
  CHECK(euler_characteristic(q.complex) == 0);
  CHECK(q.subdivided);

  GroupAction fake;
  fake.kind = GroupKind::kCyclic;
  fake.order = 3;
  Permutation id(6);
  for (int i = 0; i < 6; ++i) id[i] = i;
  fake.generators = {id};
  CHECK_THROWS_AS(quotient_complex(c23.complex, fake), NotFree);
}

TEST_CASE("column rotation is setwise free") {
  for (int p : {3, 5}) {
    for (int k = 1; k <= p - 1; ++k) {
      auto c = chessboard(k, p);
      auto elements = c.column_rotation.elements(static_cast<std::size_t>(k * p));
      for (int q = 0; q <= c.complex.dimension(); ++q) {
        for (const auto& f : c.complex.faces(q)) {
          for (std::size_t e = 1; e < elements.size(); ++e) CHECK(tverberg::apply(elements[e], f) != f);
        }
      }
      auto quotient = quotient_complex(c.complex, c.column_rotation);
      CHECK(euler_characteristic(c.complex) == p * euler_characteristic(quotient.complex));
    }
  }
}

TEST_CASE("equivariant chessboard collapse") {
  auto c2 = equivariant_collapse_chessboard(2);
  CHECK(c2.complex.dimension() == 0);
  CHECK(c2.complex.vertex_count() == 2);

  // Delta_{3,3}: betti (1, 4, 0) from the sympy oracle.
  auto c3 = equivariant_collapse_chessboard(3);
  CHECK(c3.complex.dimension() == 1);
  auto h3 = homology(c3.complex);
  CHECK(h3.betti(0) == 1);
  CHECK(h3.betti(1) == 4);
  CHECK(replay_collapses(chessboard(3, 3).complex, c3.trace) == c3.complex);

  // Delta_{4,4}: betti (1, 0, 15, 0).
  auto c4 = equivariant_collapse_chessboard(4);
  CHECK(c4.complex.dimension() == 2);
  auto h4 = homology(c4.complex);
  CHECK(h4.betti(0) == 1);
  CHECK(h4.betti(1) == 0);
  CHECK(h4.betti(2) == 15);
  for (const auto& d : h4.degrees) CHECK(d.torsion.empty());
}

TEST_CASE("collapse replay rejects a non-free face") {
  CollapseTrace bad{{Simplex{0}, Simplex{0, 1}}};
  CHECK_THROWS_AS(replay_collapses(simplex_boundary(2), bad), InvalidComplex);
}
