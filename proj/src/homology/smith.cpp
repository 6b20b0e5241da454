#include "tverberg/smith.hpp"

#include <algorithm>

#include "sparse_elimination.hpp"

namespace tverberg {

namespace {

// Dense Smith reduction. With kTrack, every elementary operation is mirrored
// on U, V and their inverses.
template <bool kTrack>
class DenseSmith {
 public:
  explicit DenseSmith(const DenseIntMatrix& m) : d_(m) {
    if constexpr (kTrack) {
      u_ = DenseIntMatrix::identity(m.rows());
      u_inv_ = u_;
      v_ = DenseIntMatrix::identity(m.cols());
      v_inv_ = v_;
    }
  }

  void run() {
    const int rows = d_.rows();
    const int cols = d_.cols();
    for (int t = 0; t < std::min(rows, cols); ++t) {
      if (!bring_smallest_to(t)) break;
      for (;;) {
        bool changed = false;
        for (int i = t + 1; i < rows; ++i)
          while (d_(i, t) != 0) {
            BigInt q;
            mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
            if (q != 0) add_row(i, t, -q);
            if (d_(i, t) != 0) {
              swap_rows(i, t);
              changed = true;
            }
          }
        for (int j = t + 1; j < cols; ++j)
          while (d_(t, j) != 0) {
            BigInt q;
            mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
            if (q != 0) add_col(j, t, -q);
            if (d_(t, j) != 0) {
              swap_cols(j, t);
              changed = true;
            }
          }
        if (changed) continue;
        const int bad = row_with_nondivisible_entry(t);
        if (bad < 0) break;
        add_row(t, bad, BigInt(1));
      }
      if (d_(t, t) < 0) negate_row(t);
    }
  }

  DenseIntMatrix d_, u_, u_inv_, v_, v_inv_;

 private:
  bool bring_smallest_to(int t) {
    int bi = -1, bj = -1;
    for (int i = t; i < d_.rows(); ++i)
      for (int j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        if (bi < 0 || mpz_cmpabs(d_(i, j).get_mpz_t(), d_(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  int row_with_nondivisible_entry(int t) const {
    for (int i = t + 1; i < d_.rows(); ++i)
      for (int j = t + 1; j < d_.cols(); ++j)
        if (d_(i, j) != 0 && !mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) return i;
    return -1;
  }

  // row_i += c * row_k
  void add_row(int i, int k, const BigInt& c) {
    for (int j = 0; j < d_.cols(); ++j) d_(i, j) += c * d_(k, j);
    if constexpr (kTrack) {
      for (int j = 0; j < u_.cols(); ++j) u_(i, j) += c * u_(k, j);
      for (int r = 0; r < u_inv_.rows(); ++r) u_inv_(r, k) -= c * u_inv_(r, i);
    }
  }
  // col_j += c * col_k
  void add_col(int j, int k, const BigInt& c) {
    for (int i = 0; i < d_.rows(); ++i) d_(i, j) += c * d_(i, k);
    if constexpr (kTrack) {
      for (int i = 0; i < v_.rows(); ++i) v_(i, j) += c * v_(i, k);
      for (int col = 0; col < v_inv_.cols(); ++col) v_inv_(k, col) -= c * v_inv_(j, col);
    }
  }
  void swap_rows(int a, int b) {
    for (int j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    if constexpr (kTrack) {
      for (int j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
      for (int r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, a), u_inv_(r, b));
    }
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    if constexpr (kTrack) {
      for (int i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
      for (int c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(a, c), v_inv_(b, c));
    }
  }
  void negate_row(int i) {
    for (int j = 0; j < d_.cols(); ++j) d_(i, j) = -d_(i, j);
    if constexpr (kTrack) {
      for (int j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
      for (int r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
    }
  }
};

template <class Ring>
MatrixInvariants sparse_invariants(const IntMatrix& m, Ring ring) {
  detail::UnitPivotEliminator<Ring> elim(m, std::move(ring));
  const std::size_t pivots = elim.eliminate();
  MatrixInvariants out = smith_invariants_dense(elim.residual());
  out.rank += pivots;
  return out;
}

}  // namespace

SmithForm smith_normal_form(const DenseIntMatrix& m) {
  DenseSmith<true> s(m);
  s.run();
  return {std::move(s.d_), std::move(s.u_), std::move(s.v_), std::move(s.u_inv_),
          std::move(s.v_inv_)};
}

MatrixInvariants smith_invariants_dense(const DenseIntMatrix& m) {
  DenseSmith<false> s(m);
  s.run();
  MatrixInvariants out;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    const BigInt& d = s.d_(t, t);
    if (d == 0) break;
    ++out.rank;
    if (d != 1) out.torsion.push_back(d);
  }
  return out;
}

MatrixInvariants smith_invariants(const IntMatrix& m) {
  if (m.fill() >= 0.10) return smith_invariants_dense(m.to_dense());
  try {
    return sparse_invariants(m, detail::CheckedIntRing{});
  } catch (const detail::Overflow&) {
    return sparse_invariants(m, detail::BigIntRing{});
  }
}

std::size_t rank_mod_p(const IntMatrix& m, unsigned p) {
  detail::UnitPivotEliminator<detail::PrimeFieldRing> elim(m, detail::PrimeFieldRing{p});
  return elim.eliminate();
}

std::size_t rank_over_q(const IntMatrix& m) { return smith_invariants(m).rank; }

}  // namespace tverberg
