#pragma once

#include <optional>
#include <vector>

#include "tverberg/simplicial_complex.hpp"

namespace tverberg {

/// Vertex bijection f with f(facets(K)) = facets(L), found by backtracking
/// over degree-compatible vertices. Both complexes must have <= 40 vertices
/// (SizeExceeded otherwise).
std::optional<Permutation> are_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l);

/// True iff every generator maps faces of K to faces of K.
bool acts_simplicially(const SimplicialComplex& k, const GroupAction& action);

struct QuotientComplex {
  SimplicialComplex complex;
  /// Vertex of `complex` for each vertex of the (possibly subdivided) carrier.
  std::vector<Vertex> orbit_of;
  /// Whether one barycentric subdivision was needed before the orbit map
  /// became a simplicial quotient.
  bool subdivided = false;
};

/// Orbit complex K/G of a vertex-free action. When the orbit map does not
/// identify faces orbit-by-orbit (two vertices of a face in one orbit, or two
/// face orbits with the same orbit image) the quotient is taken of sd(K)
/// instead; if that still fails NotFree is thrown. NotFree is also thrown
/// when some non-identity element fixes a vertex.
QuotientComplex quotient_complex(const SimplicialComplex& k, const GroupAction& action);

struct ElementaryCollapse {
  Simplex free_face;
  Simplex coface;
};

using CollapseTrace = std::vector<ElementaryCollapse>;

/// Applies the collapses in order. Throws InvalidComplex when a step's free
/// face is not contained in exactly one face of the current complex (that
/// face being the recorded coface).
SimplicialComplex replay_collapses(const SimplicialComplex& k, const CollapseTrace& trace);

struct CollapsedChessboard {
  SimplicialComplex complex;
  CollapseTrace trace;
};

/// Collapses Delta_{r,r} onto an (r-2)-dimensional subcomplex: each facet,
/// taken in lexicographic order of its row-to-column bijection, is removed
/// together with its ridge avoiding the last column. Every such ridge lies in
/// exactly one facet, so the collapses commute, and the rule commutes with
/// row permutations.
CollapsedChessboard equivariant_collapse_chessboard(int r);

}  // namespace tverberg
