#include <doctest.h>

#include <random>

#include "tverberg/chain_complex.hpp"
#include "tverberg/constructions.hpp"
#include "tverberg/error.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/smith.hpp"

using namespace tverberg;

namespace {

DenseIntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int range) {
  DenseIntMatrix m(rows, cols);
  std::uniform_int_distribution<int> entry(-range, range);
  std::uniform_int_distribution<int> zero(0, 2);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = zero(rng) == 0 ? 0 : entry(rng);
  return m;
}

void check_smith(const DenseIntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.d.is_diagonal());
  CHECK(s.u * s.u_inverse == DenseIntMatrix::identity(m.rows()));
  CHECK(s.v * s.v_inverse == DenseIntMatrix::identity(m.cols()));
  if (m.rows() <= 12) CHECK(abs(s.u.determinant()) == 1);
  if (m.cols() <= 12) CHECK(abs(s.v.determinant()) == 1);
  int n = std::min(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) {
    CHECK(s.d(i, i) >= 0);
    if (i + 1 < n && s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    if (s.d(i, i) == 0 && i + 1 < n) CHECK(s.d(i + 1, i + 1) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form(DenseIntMatrix{{2, 4}, {6, 8}});
  CHECK(s.d == DenseIntMatrix{{2, 0}, {0, 4}});
  CHECK(smith_normal_form(DenseIntMatrix::identity(3)).d == DenseIntMatrix::identity(3));

  auto tri = chain_complex(simplex_boundary(2));
  auto d1 = smith_normal_form(tri.boundary(1).to_dense());
  CHECK(d1.d == DenseIntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(smith_invariants(tri.boundary(1)).rank == 2);
}

TEST_CASE("smith normal form postconditions on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 7);
    int cols = 1 + static_cast<int>(rng() % 7);
    check_smith(random_matrix(rng, rows, cols, 9));
  }
}

TEST_CASE("sparse and dense invariants agree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 30);
    int cols = 2 + static_cast<int>(rng() % 30);
    DenseIntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (rng() % 12 == 0) m(i, j) = static_cast<long>(rng() % 7) - 3;
    auto sparse = smith_invariants(IntMatrix::from_dense(m));
    auto dense = smith_invariants_dense(m);
    CHECK(sparse.rank == dense.rank);
    CHECK(sparse.torsion == dense.torsion);
    CHECK(rank_over_q(IntMatrix::from_dense(m)) == dense.rank);
  }
}

TEST_CASE("overflowing entries fall back to big integers") {
  DenseIntMatrix m(3, 3);
  m(0, 0) = BigInt("4611686018427387904");
  m(0, 1) = BigInt("4611686018427387903");
  m(1, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = BigInt("9223372036854775807");
  auto sparse = smith_invariants(IntMatrix::from_dense(m));
  auto dense = smith_invariants_dense(m);
  CHECK(sparse.rank == 3);
  CHECK(sparse.torsion == dense.torsion);
}

TEST_CASE("chessboard homology matches the oracle table") {
  struct Row {
    int m, n;
    std::vector<std::size_t> betti;
  };
  // Computed independently with sympy (tests/oracle/homology_oracle.py).
  std::vector<Row> table = {{1, 5, {5}},          {2, 2, {2, 0}},       {2, 3, {1, 1}},
                            {2, 4, {1, 5}},       {2, 5, {1, 11}},      {3, 3, {1, 4, 0}},
                            {3, 4, {1, 2, 1}},    {3, 5, {1, 0, 14}},   {4, 4, {1, 0, 15, 0}}};
  for (const auto& row : table) {
    CAPTURE(row.m);
    CAPTURE(row.n);
    auto h = homology(chessboard(row.m, row.n).complex);
    REQUIRE(h.degrees.size() == row.betti.size());
    for (std::size_t q = 0; q < row.betti.size(); ++q) {
      CHECK(h.betti(static_cast<int>(q)) == row.betti[q]);
      CHECK(h.degrees[q].torsion.empty());
    }
  }
}

TEST_CASE("chessboard 5x5 carries 3-torsion") {
  auto board = chessboard(5, 5).complex;
  auto z = homology(board);
  CHECK(z.betti(2) == 0);
  REQUIRE(z.degrees[2].torsion.size() == 1);
  CHECK(z.degrees[2].torsion[0] == 3);
  CHECK(z.betti(3) == 56);
  auto f3 = homology(board, Coefficients::field(3));
  CHECK(f3.betti(2) == 1);
  CHECK(f3.betti(3) == 57);
  auto f2 = homology(board, Coefficients::field(2));
  CHECK(f2.betti(2) == 0);
  CHECK(f2.betti(3) == 56);
  CHECK(homological_connectivity(board) == 1);
}

TEST_CASE("parallel homology matches the serial reference") {
  for (auto [m, n] : {std::pair{3, 4}, {4, 5}, {5, 5}}) {
    auto c = chain_complex(chessboard(m, n).complex);
    auto a = homology(c);
    auto b = homology_serial(c);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (std::size_t q = 0; q < a.degrees.size(); ++q) {
      CHECK(a.degrees[q].betti == b.degrees[q].betti);
      CHECK(a.degrees[q].torsion == b.degrees[q].torsion);
    }
    CHECK(boundary_squares_vanish(c) == boundary_squares_vanish_serial(c));
  }
}

TEST_CASE("homology rejects a non-complex") {
  std::vector<std::vector<Cell>> bases(3);
  bases[0] = {{Simplex{0}}};
  bases[1] = {{Simplex{0, 1}}};
  bases[2] = {{Simplex{0, 1, 2}}};
  auto d1 = IntMatrix::from_triplets(1, 1, {{0, 0, 1}});
  auto d2 = IntMatrix::from_triplets(1, 1, {{0, 0, 1}});
  ChainComplex bad(bases, {IntMatrix::from_triplets(0, 1, {}), d1, d2});
  CHECK_THROWS_AS(homology(bad), InvalidComplex);
  CHECK_FALSE(boundary_squares_vanish(bad));
}

TEST_CASE("connectivity") {
  CHECK(homological_connectivity(chessboard(1, 5).complex) == -1);
  CHECK(homological_connectivity(chessboard(3, 4).complex) == 0);
  CHECK(homological_connectivity(full_simplex(3)) == kAllVanish);
  CHECK(homological_connectivity(simplex_boundary(3)) == 1);
  CHECK(homological_connectivity(chessboard(4, 4).complex) == 1);
  CHECK_THROWS_AS(homological_connectivity(SimplicialComplex()), std::invalid_argument);
  auto h = homology(chessboard(1, 5).complex);
  CHECK(h.reduced_betti(0) == 4);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(chessboard(2, 3).complex) == 0);
  CHECK(euler_characteristic(simplex_boundary(3)) == 2);
  CHECK(euler_characteristic(chessboard(3, 3).complex) == -3);
}

TEST_CASE("fundamental cycle and degree") {
  for (int p : {3, 4, 5}) {
    auto z = fundamental_cycle_chessboard(p);
    auto k = chessboard(p - 1, p).complex;
    CHECK(z.coefficients.size() == factorial(static_cast<unsigned>(p)).get_ui());
    CHECK_NOTHROW(require_generator(k, z));
  }
  CHECK(abs(chessboard_column_degree(3)) == 2);
  CHECK(abs(chessboard_column_degree(5)) == 24);
}

TEST_CASE("generator checks") {
  auto circle = simplex_boundary(2);
  auto z = simplex_boundary_cycle(2);
  CHECK_NOTHROW(require_generator(circle, z));
  Chain twice = z;
  for (auto& [i, c] : twice.coefficients) c *= 2;
  CHECK_THROWS_AS(require_generator(circle, twice), NotAGenerator);
  Chain edge{1, {{0, 1}}};
  CHECK_THROWS_AS(require_generator(circle, edge), NotACycle);

  // Identity map has degree 1, a reflection degree -1.
  std::vector<Vertex> id{0, 1, 2};
  std::vector<Vertex> flip{1, 0, 2};
  CHECK(simplicial_map_degree(id, circle, circle, z, z) == 1);
  CHECK(simplicial_map_degree(flip, circle, circle, z, z) == -1);

  // Lower-degree cycles go through the dense coordinate.
  auto cone_free = skeleton(simplex_boundary(3), 1);
  Chain loop{1, {}};
  loop.coefficients[*cone_free.index_of(Simplex{0, 1})] = 1;
  loop.coefficients[*cone_free.index_of(Simplex{1, 2})] = 1;
  loop.coefficients[*cone_free.index_of(Simplex{0, 2})] = -1;
  CHECK_THROWS_AS(require_generator(cone_free, loop), NotAGenerator);
}

TEST_CASE("push forward rejects non-simplicial maps") {
  auto path = skeleton(full_simplex(2), 1);
  auto two = isolated_points(3);
  Chain e{1, {{0, 1}}};
  CHECK_THROWS_AS(push_forward({0, 1, 2}, path, two, e), NoIntegerSolution);
}
