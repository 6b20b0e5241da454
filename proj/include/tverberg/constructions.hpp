#pragma once

#include <vector>

#include "tverberg/chain_complex.hpp"
#include "tverberg/simplicial_complex.hpp"

namespace tverberg {

/// The n-simplex on vertices {0, ..., n}.
SimplicialComplex full_simplex(int n);
/// The boundary of the n-simplex (n >= 1).
SimplicialComplex simplex_boundary(int n);
/// [n]: n isolated vertices.
SimplicialComplex isolated_points(int n);

/// All faces of dimension <= k. k = -1 gives the void complex.
SimplicialComplex skeleton(const SimplicialComplex& k, int max_dim);

/// K * L with L's vertices shifted by K.vertex_count(). Labels are
/// (0, v) for K and (1, v) for L.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// K * K * ... * K (`times` factors); times = 0 gives the void complex.
SimplicialComplex join_power(const SimplicialComplex& k, int times);

struct DeletedJoin {
  SimplicialComplex complex;
  /// Sym_r permuting the copies.
  GroupAction action;
};

/// r-fold k-wise deleted join. Vertex (copy c, original v) gets the label
/// c * K.vertex_count() + v. A tuple of faces (sigma_1, ..., sigma_r), empty
/// constituents allowed, is a face iff no original vertex lies in k of them.
DeletedJoin deleted_join(const SimplicialComplex& k, int r, int wise);

struct Chessboard {
  int rows = 0;
  int cols = 0;
  SimplicialComplex complex;
  /// Z/cols acting by (i, j) -> (i, j + 1 mod cols).
  GroupAction column_rotation;
  /// Sym_rows x Sym_cols permuting rows and columns independently.
  GroupAction row_column_symmetry;

  Vertex vertex(int row, int col) const { return row * cols + col; }
};

/// Non-attacking rook placements on an m x n board; cell (i, j) is vertex
/// i * n + j.
Chessboard chessboard(int m, int n);

/// Cellular chain complex of the r-fold 2-wise deleted product of K, as the
/// subcomplex of the r-fold tensor power of C_*(K) spanned by tuples of
/// pairwise-disjoint nonempty faces. Graded Leibniz boundary.
ChainComplex deleted_product_chain(const SimplicialComplex& k, int r);

struct Subdivision {
  SimplicialComplex complex;
  /// The face of the original complex that each new vertex stands for.
  std::vector<Simplex> vertex_faces;
};

Subdivision barycentric_subdivision_with_faces(const SimplicialComplex& k);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

}  // namespace tverberg
