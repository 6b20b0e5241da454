#include "tverberg/homology.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "tverberg/constructions.hpp"
#include "tverberg/error.hpp"
#include "tverberg/smith.hpp"

namespace tverberg {

std::size_t HomologySummary::betti(int q) const {
  if (q < 0 || q >= static_cast<int>(degrees.size())) return 0;
  return degrees[static_cast<std::size_t>(q)].betti;
}

std::size_t HomologySummary::reduced_betti(int q) const {
  const std::size_t b = betti(q);
  return (q == 0 && b > 0) ? b - 1 : b;
}

bool HomologySummary::reduced_vanishes(int q) const {
  if (q < 0 || q >= static_cast<int>(degrees.size())) return true;
  return reduced_betti(q) == 0 && degrees[static_cast<std::size_t>(q)].torsion.empty();
}

namespace {

MatrixInvariants invariants(const IntMatrix& m, Coefficients coefficients) {
  if (coefficients.is_integral()) return smith_invariants(m);
  return {rank_mod_p(m, coefficients.prime), {}};
}

HomologySummary assemble(const ChainComplex& c, const std::vector<MatrixInvariants>& inv) {
  // inv[q] describes boundary(q); inv[top + 1] is the zero map.
  HomologySummary out;
  for (int q = 0; q <= c.top_degree(); ++q) {
    const auto& in = inv[static_cast<std::size_t>(q)];
    const auto& out_of = inv[static_cast<std::size_t>(q) + 1];
    DegreeHomology h;
    h.degree = q;
    h.betti = c.rank(q) - in.rank - out_of.rank;
    h.torsion = out_of.torsion;
    out.degrees.push_back(std::move(h));
  }
  return out;
}

}  // namespace

HomologySummary homology_serial(const ChainComplex& c, Coefficients coefficients) {
  if (!boundary_squares_vanish_serial(c)) throw InvalidComplex("boundary of boundary is nonzero");
  std::vector<MatrixInvariants> inv(static_cast<std::size_t>(c.top_degree()) + 2);
  for (int q = 1; q <= c.top_degree(); ++q)
    inv[static_cast<std::size_t>(q)] = invariants(c.boundary(q), coefficients);
  return assemble(c, inv);
}

HomologySummary homology(const ChainComplex& c, Coefficients coefficients) {
  if (!boundary_squares_vanish(c)) throw InvalidComplex("boundary of boundary is nonzero");
  const int top = c.top_degree();
  std::vector<MatrixInvariants> inv(static_cast<std::size_t>(top) + 2);
#pragma omp parallel for schedule(dynamic)
  for (int q = 1; q <= top; ++q)
    inv[static_cast<std::size_t>(q)] = invariants(c.boundary(q), coefficients);
  return assemble(c, inv);
}

HomologySummary homology(const SimplicialComplex& k, Coefficients coefficients) {
  return homology(chain_complex(k), coefficients);
}

int homological_connectivity(const ChainComplex& c, int ceiling) {
  if (c.top_degree() < 0) throw std::invalid_argument("connectivity of the void complex");
  MatrixInvariants incoming;  // boundary(0) has rank 0
  for (int q = 0; q <= c.top_degree(); ++q) {
    if (q > ceiling) return ceiling;
    MatrixInvariants outgoing;
    if (q + 1 <= c.top_degree()) outgoing = smith_invariants(c.boundary(q + 1));
    std::size_t betti = c.rank(q) - incoming.rank - outgoing.rank;
    if (q == 0) --betti;
    if (betti != 0 || !outgoing.torsion.empty()) return q - 1;
    incoming = std::move(outgoing);
  }
  return kAllVanish;
}

int homological_connectivity(const SimplicialComplex& k, int ceiling) {
  if (k.vertex_count() == 0) throw std::invalid_argument("connectivity of the void complex");
  return homological_connectivity(chain_complex(k), ceiling);
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  const auto f = k.f_vector();
  for (std::size_t q = 0; q < f.size(); ++q)
    chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(f[q]);
  return chi;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<BigInt> to_dense(const Chain& z, std::size_t n) {
  std::vector<BigInt> out(n);
  for (const auto& [i, c] : z.coefficients) {
    if (i >= n) throw std::out_of_range("chain cell outside basis");
    out[i] = c;
  }
  return out;
}

// Coordinate of a q-cycle in H_q = Z, built from Smith forms of the boundary
// maps around degree q. Only for small complexes.
class CyclicCoordinate {
 public:
  static std::optional<CyclicCoordinate> build(const ChainComplex& c, int q) {
    const IntMatrix& in = c.boundary(q);
    const IntMatrix& out = c.boundary(q + 1);
    if (c.rank(q) > 400 || c.rank(q + 1) > 2000)
      throw SizeExceeded("dense homology coordinate limited to 400 q-cells and 2000 (q+1)-cells");
    CyclicCoordinate coord;
    const SmithForm s = smith_normal_form(in.to_dense());
    std::size_t rank = 0;
    while (rank < static_cast<std::size_t>(std::min(s.d.rows(), s.d.cols())) &&
           s.d(static_cast<int>(rank), static_cast<int>(rank)) != 0)
      ++rank;
    coord.n_ = c.rank(q);
    coord.rank_ = rank;
    coord.v_inverse_ = s.v_inverse;
    const std::size_t k = coord.n_ - rank;  // rank of the cycle group
    if (k == 0) return std::nullopt;

    // Boundaries in cycle-basis coordinates.
    DenseIntMatrix b(static_cast<int>(k), out.cols());
    for (int j = 0; j < out.cols(); ++j) {
      std::vector<BigInt> col(coord.n_);
      for (const auto& e : out.column(j)) col[static_cast<std::size_t>(e.row)] = e.value;
      const auto w = coord.kernel_coordinates(col);
      for (std::size_t i = 0; i < k; ++i) b(static_cast<int>(i), j) = w[i];
    }
    const SmithForm sb = smith_normal_form(b);
    std::size_t brank = 0;
    for (int t = 0; t < std::min(sb.d.rows(), sb.d.cols()); ++t) {
      if (sb.d(t, t) == 0) break;
      if (sb.d(t, t) != 1) return std::nullopt;  // torsion
      ++brank;
    }
    if (brank + 1 != k) return std::nullopt;
    coord.u_boundary_ = sb.u;
    return coord;
  }

  BigInt operator()(const std::vector<BigInt>& cycle) const {
    const auto w = kernel_coordinates(cycle);
    BigInt value = 0;
    const int last = u_boundary_.rows() - 1;
    for (int j = 0; j < u_boundary_.cols(); ++j) value += u_boundary_(last, j) * w[static_cast<std::size_t>(j)];
    return value;
  }

 private:
  std::vector<BigInt> kernel_coordinates(const std::vector<BigInt>& cycle) const {
    std::vector<BigInt> w(n_ - rank_);
    for (std::size_t i = rank_; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        w[i - rank_] += v_inverse_(static_cast<int>(i), static_cast<int>(j)) * cycle[j];
    return w;
  }

  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  DenseIntMatrix v_inverse_;
  DenseIntMatrix u_boundary_;
};

BigInt content(const Chain& z) {
  BigInt g = 0;
  for (const auto& [i, c] : z.coefficients) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

Chain fundamental_cycle_chessboard(int n) {
  if (n < 3) throw std::invalid_argument("fundamental_cycle_chessboard needs n >= 3");
  const Chessboard board = chessboard(n - 1, n);
  Chain z;
  z.degree = n - 2;
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::vector<Vertex> face;
    for (int i = 0; i < n - 1; ++i) face.push_back(board.vertex(i, pi[static_cast<std::size_t>(i)]));
    const auto index = board.complex.index_of(Simplex(std::move(face)));
    z.coefficients[*index] = permutation_sign(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return z;
}

Chain simplex_boundary_cycle(int n) {
  if (n < 1) throw std::invalid_argument("simplex_boundary_cycle needs n >= 1");
  const SimplicialComplex sphere = simplex_boundary(n);
  Chain z;
  z.degree = n - 1;
  const Simplex all = full_simplex(n).facets().front();
  for (int k = 0; k <= n; ++k) {
    z.coefficients[*sphere.index_of(all.without(static_cast<std::size_t>(k)))] = k % 2 == 0 ? 1 : -1;
  }
  return z;
}

BigInt chessboard_column_degree(int p) {
  const Chessboard board = chessboard(p - 1, p);
  std::vector<Vertex> columns(static_cast<std::size_t>(board.complex.vertex_count()));
  for (std::size_t v = 0; v < columns.size(); ++v) columns[v] = static_cast<Vertex>(v) % p;
  return simplicial_map_degree(columns, board.complex, simplex_boundary(p - 1), fundamental_cycle_chessboard(p),
                               simplex_boundary_cycle(p - 1));
}

Chain push_forward(const std::vector<Vertex>& vertex_map, const SimplicialComplex& k,
                   const SimplicialComplex& l, const Chain& z) {
  if (static_cast<int>(vertex_map.size()) != k.vertex_count())
    throw std::invalid_argument("vertex map size does not match the source complex");
  Chain out;
  out.degree = z.degree;
  const auto faces = k.faces(z.degree);
  for (const auto& [index, coeff] : z.coefficients) {
    if (index >= faces.size()) throw std::out_of_range("chain cell outside basis");
    std::vector<Vertex> image;
    for (Vertex v : faces[index]) image.push_back(vertex_map[static_cast<std::size_t>(v)]);
    std::vector<Vertex> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!l.contains(Simplex(sorted)))
      throw NoIntegerSolution("vertex map is not simplicial: image of a face is not a face");
    if (sorted.size() != image.size()) continue;
    std::vector<int> order;
    for (Vertex v : image)
      order.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
    const auto target = *l.index_of(Simplex(sorted));
    BigInt& slot = out.coefficients[target];
    slot += permutation_sign(order) * coeff;
    if (slot == 0) out.coefficients.erase(target);
  }
  return out;
}

void require_generator(const SimplicialComplex& k, const Chain& z) {
  const ChainComplex c = chain_complex(k);
  const int q = z.degree;
  if (q < 0 || q > c.top_degree()) throw NotAGenerator("chain degree outside the complex");
  if (!boundary_of(c, z).is_zero()) throw NotACycle("chain has nonzero boundary");
  if (z.is_zero()) throw NotAGenerator("zero chain");
  if (q == c.top_degree()) {
    // No (q+1)-cells: H_q is the kernel, a saturated lattice; it is Z iff the
    // rational nullity is 1, and then a cycle generates iff it is primitive.
    const std::size_t nullity = c.rank(q) - rank_over_q(c.boundary(q));
    if (nullity != 1) throw NotAGenerator("top homology is not infinite cyclic");
    if (content(z) != 1) throw NotAGenerator("cycle is a proper multiple of a generator");
    return;
  }
  const auto coord = CyclicCoordinate::build(c, q);
  if (!coord) throw NotAGenerator("homology in this degree is not infinite cyclic");
  const BigInt value = (*coord)(to_dense(z, c.rank(q)));
  if (value != 1 && value != -1) throw NotAGenerator("cycle class is not a generator");
}

BigInt simplicial_map_degree(const std::vector<Vertex>& vertex_map, const SimplicialComplex& k,
                             const SimplicialComplex& l, const Chain& zk, const Chain& zl) {
  if (zk.degree != zl.degree) throw std::invalid_argument("cycles of different degrees");
  require_generator(k, zk);
  require_generator(l, zl);
  const Chain image = push_forward(vertex_map, k, l, zk);
  const int q = zl.degree;

  if (q == l.dimension()) {
    // No boundaries in the top degree: the image must be an exact multiple.
    const auto& [pivot, pivot_coeff] = *zl.coefficients.begin();
    auto found = image.coefficients.find(pivot);
    BigInt m = found == image.coefficients.end() ? BigInt(0) : found->second;
    if (!mpz_divisible_p(m.get_mpz_t(), pivot_coeff.get_mpz_t()))
      throw NoIntegerSolution("image is not an integer multiple of the target cycle");
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pivot_coeff.get_mpz_t());
    Chain expected;
    expected.degree = q;
    if (m != 0)
      for (const auto& [i, c] : zl.coefficients) expected.coefficients[i] = m * c;
    if (expected != image) throw NoIntegerSolution("image is not an integer multiple of the target cycle");
    return m;
  }

  const ChainComplex c = chain_complex(l);
  const auto coord = CyclicCoordinate::build(c, q);
  if (!coord) throw NotAGenerator("target homology is not infinite cyclic");
  const BigInt target = (*coord)(to_dense(zl, c.rank(q)));
  return (*coord)(to_dense(image, c.rank(q))) * target;  // target is +-1
}

}  // namespace tverberg
