#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tverberg/int_matrix.hpp"
#include "tverberg/simplicial_complex.hpp"

namespace tverberg {

/// A basis cell: a tuple of simplices. Simplicial cells are 1-tuples; cells
/// of a deleted product are r-tuples of pairwise-disjoint faces.
using Cell = std::vector<Simplex>;

/// Graded free abelian chain complex with fixed ordered bases.
/// boundary(q) maps degree-q chains to degree-(q-1) chains; boundary(0) is
/// the 0 x |basis(0)| matrix (no augmentation).
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(std::vector<std::vector<Cell>> bases, std::vector<IntMatrix> boundaries);

  /// Highest degree with a nonempty basis, -1 if none.
  int top_degree() const { return static_cast<int>(bases_.size()) - 1; }
  std::span<const Cell> basis(int q) const;
  std::size_t rank(int q) const { return basis(q).size(); }
  const IntMatrix& boundary(int q) const;
  std::size_t cell_count() const;

 private:
  std::vector<std::vector<Cell>> bases_;
  std::vector<IntMatrix> boundaries_;
  IntMatrix empty_;
};

/// Simplicial chain complex of K over the lexicographically ordered faces.
ChainComplex chain_complex(const SimplicialComplex& k);

/// A q-chain: basis index -> nonzero integer coefficient.
struct Chain {
  int degree = 0;
  std::map<std::size_t, BigInt> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  bool operator==(const Chain&) const = default;
};

Chain boundary_of(const ChainComplex& c, const Chain& z);

/// True iff boundary(q-1) * boundary(q) vanishes for every q. Degrees are
/// checked in parallel.
bool boundary_squares_vanish(const ChainComplex& c);
/// Single-threaded reference for boundary_squares_vanish.
bool boundary_squares_vanish_serial(const ChainComplex& c);

}  // namespace tverberg
