#pragma once

#include <vector>

#include "tverberg/int_matrix.hpp"

namespace tverberg {

/// U * M * V = D with D diagonal, d_1 | d_2 | ... and d_i >= 0. U and V are
/// unimodular; their inverses are accumulated alongside.
struct SmithForm {
  DenseIntMatrix d;
  DenseIntMatrix u;
  DenseIntMatrix v;
  DenseIntMatrix u_inverse;
  DenseIntMatrix v_inverse;
};

SmithForm smith_normal_form(const DenseIntMatrix& m);

/// Rank and the nonzero diagonal of the Smith form (sorted, divisibility
/// chain), computed without transforms.
struct MatrixInvariants {
  std::size_t rank = 0;
  /// Invariant factors > 1.
  std::vector<BigInt> torsion;
};

/// Invariants of a sparse integer matrix. Sparse input (fill < 10%) is first
/// reduced by unit-pivot elimination in checked 64-bit arithmetic (retried
/// with GMP integers on overflow); the residual block goes to dense Smith
/// reduction.
MatrixInvariants smith_invariants(const IntMatrix& m);
/// Dense route only; the reference for smith_invariants.
MatrixInvariants smith_invariants_dense(const DenseIntMatrix& m);

/// Rank over F_p, p prime.
std::size_t rank_mod_p(const IntMatrix& m, unsigned p);
/// Rank over Q.
std::size_t rank_over_q(const IntMatrix& m);

}  // namespace tverberg
