#pragma once

#include <climits>
#include <cstddef>
#include <vector>

#include "tverberg/chain_complex.hpp"
#include "tverberg/numeric.hpp"
#include "tverberg/simplicial_complex.hpp"

namespace tverberg {

/// Z when prime == 0, F_p otherwise.
struct Coefficients {
  unsigned prime = 0;

  static Coefficients integers() { return {}; }
  static Coefficients field(unsigned p) { return {p}; }
  bool is_integral() const { return prime == 0; }
};

struct DegreeHomology {
  int degree = 0;
  std::size_t betti = 0;
  /// Invariant factors > 1, each dividing the next. Always empty over F_p.
  std::vector<BigInt> torsion;
};

/// Unreduced homology per degree 0..top, with a reduced view.
struct HomologySummary {
  std::vector<DegreeHomology> degrees;

  std::size_t betti(int q) const;
  /// betti(0) - 1 in degree 0 for a nonempty complex.
  std::size_t reduced_betti(int q) const;
  /// Reduced H_q is the zero group.
  bool reduced_vanishes(int q) const;
};

/// Per-degree boundary invariants are computed in parallel. Throws
/// InvalidComplex when some boundary composite is nonzero.
HomologySummary homology(const ChainComplex& c, Coefficients coefficients = {});
/// Single-threaded reference for homology().
HomologySummary homology_serial(const ChainComplex& c, Coefficients coefficients = {});
HomologySummary homology(const SimplicialComplex& k, Coefficients coefficients = {});

/// Sentinel returned when every reduced group up to the top degree vanishes.
inline constexpr int kAllVanish = INT_MAX;

/// Largest c with reduced H_i = 0 (integral) for all i <= c; -1 when H_0 is
/// not Z. Degrees are examined upward and the search stops at the first
/// nonvanishing group, or once degree `ceiling` has been cleared, in which
/// case `ceiling` is returned. Throws std::invalid_argument on the void
/// complex.
int homological_connectivity(const SimplicialComplex& k, int ceiling = kAllVanish);
int homological_connectivity(const ChainComplex& c, int ceiling = kAllVanish);

long long euler_characteristic(const SimplicialComplex& k);

/// sum over pi in Sym_n of sgn(pi) <(0, pi(0)), ..., (n-2, pi(n-2))> as a
/// chain on chessboard(n - 1, n), indices into its faces(n - 2).
Chain fundamental_cycle_chessboard(int n);

/// sum_k (-1)^k <0, ..., k^, ..., n> on simplex_boundary(n), degree n - 1.
Chain simplex_boundary_cycle(int n);

/// Degree of the simplicial map `vertex_map` : K -> L with respect to the
/// generating cycles zK and zL of degree q: the integer m with
/// f_#(zK) = m * zL + boundary. Signed relative to sorted-order orientation.
BigInt simplicial_map_degree(const std::vector<Vertex>& vertex_map, const SimplicialComplex& k,
                             const SimplicialComplex& l, const Chain& zk, const Chain& zl);

/// Chain-level push-forward; degenerate images contribute 0. Throws
/// NoIntegerSolution when some image is not a face of L.
Chain push_forward(const std::vector<Vertex>& vertex_map, const SimplicialComplex& k,
                   const SimplicialComplex& l, const Chain& z);

/// Degree of (i, j) -> j from chessboard(p - 1, p) to simplex_boundary(p - 1)
/// with respect to the two cycles above.
BigInt chessboard_column_degree(int p);

/// Throws NotACycle / NotAGenerator unless z generates H_q(K; Z) = Z.
void require_generator(const SimplicialComplex& k, const Chain& z);

}  // namespace tverberg
