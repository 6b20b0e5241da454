#include "tverberg/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "tverberg/error.hpp"

namespace tverberg {

namespace {

std::vector<Vertex> iota_vector(int n, int start = 0) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), start);
  return v;
}

std::size_t factorial_size(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

SimplicialComplex full_simplex(int n) {
  if (n < 0) throw std::invalid_argument("full_simplex needs n >= 0");
  return SimplicialComplex(n + 1, {Simplex(iota_vector(n + 1))});
}

SimplicialComplex simplex_boundary(int n) {
  if (n < 1) throw std::invalid_argument("simplex_boundary needs n >= 1");
  const Simplex top(iota_vector(n + 1));
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < top.size(); ++i) facets.push_back(top.without(i));
  return SimplicialComplex(n + 1, std::move(facets));
}

SimplicialComplex isolated_points(int n) { return SimplicialComplex(n, {}); }

SimplicialComplex skeleton(const SimplicialComplex& k, int max_dim) {
  if (max_dim < -1) throw std::invalid_argument("skeleton needs k >= -1");
  if (max_dim == -1) return SimplicialComplex();
  if (max_dim >= k.dimension()) return k;
  auto top = k.faces(max_dim);
  std::vector<Simplex> generators(top.begin(), top.end());
  for (const auto& f : k.facets())
    if (f.dimension() < max_dim) generators.push_back(f);
  return SimplicialComplex(k.vertex_count(), std::move(generators), k.labels());
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  const int offset = k.vertex_count();
  std::vector<Simplex> facets;
  auto shifted = [&](const Simplex& s) {
    std::vector<Vertex> v(s.begin(), s.end());
    for (auto& x : v) x += offset;
    return Simplex(std::move(v));
  };
  if (k.facets().empty()) {
    for (const auto& t : l.facets()) facets.push_back(shifted(t));
  } else if (l.facets().empty()) {
    facets = k.facets();
  } else {
    for (const auto& s : k.facets())
      for (const auto& t : l.facets()) facets.push_back(s.united_with(shifted(t)));
  }
  std::vector<VertexLabel> labels;
  for (int v = 0; v < k.vertex_count(); ++v) labels.push_back({0, v});
  for (int v = 0; v < l.vertex_count(); ++v) labels.push_back({1, v});
  return SimplicialComplex(offset + l.vertex_count(), std::move(facets), std::move(labels));
}

SimplicialComplex join_power(const SimplicialComplex& k, int times) {
  if (times < 0) throw std::invalid_argument("join_power needs times >= 0");
  SimplicialComplex out;
  for (int i = 0; i < times; ++i) out = join(out, k);
  if (times > 0) {
    std::vector<VertexLabel> labels;
    for (int c = 0; c < times; ++c)
      for (int v = 0; v < k.vertex_count(); ++v) labels.push_back({c, v});
    out = SimplicialComplex(out.vertex_count(), out.facets(), std::move(labels));
  }
  return out;
}

DeletedJoin deleted_join(const SimplicialComplex& k, int r, int wise) {
  if (r < 2) throw std::invalid_argument("deleted_join needs r >= 2");
  if (wise < 2 || wise > r) throw std::invalid_argument("deleted_join needs 2 <= k <= r");
  const int n = k.vertex_count();

  // Candidate constituents: the empty face plus every face of K.
  std::vector<Simplex> constituents{Simplex{}};
  for (int q = 0; q <= k.dimension(); ++q)
    for (const auto& s : k.faces(q)) constituents.push_back(s);

  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  std::vector<const Simplex*> chosen(static_cast<std::size_t>(r), nullptr);
  std::vector<Simplex> facets;

  auto is_maximal = [&]() {
    for (int c = 0; c < r; ++c) {
      const Simplex& s = *chosen[static_cast<std::size_t>(c)];
      for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v) || uses[static_cast<std::size_t>(v)] >= wise - 1) continue;
        if (k.contains(s.united_with(Simplex{v}))) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, int copy) -> void {
    if (copy == r) {
      if (!is_maximal()) return;
      std::vector<Vertex> face;
      for (int c = 0; c < r; ++c)
        for (Vertex v : *chosen[static_cast<std::size_t>(c)]) face.push_back(c * n + v);
      facets.emplace_back(std::move(face));
      return;
    }
    for (const auto& s : constituents) {
      bool ok = true;
      for (Vertex v : s)
        if (uses[static_cast<std::size_t>(v)] >= wise - 1) ok = false;
      if (!ok) continue;
      for (Vertex v : s) ++uses[static_cast<std::size_t>(v)];
      chosen[static_cast<std::size_t>(copy)] = &s;
      self(self, copy + 1);
      for (Vertex v : s) --uses[static_cast<std::size_t>(v)];
    }
  };
  recurse(recurse, 0);

  std::vector<VertexLabel> labels;
  for (int c = 0; c < r; ++c)
    for (int v = 0; v < n; ++v) labels.push_back({c, v});

  auto lift = [&](const std::vector<int>& copy_perm) {
    Permutation p(static_cast<std::size_t>(r * n));
    for (int c = 0; c < r; ++c)
      for (int v = 0; v < n; ++v)
        p[static_cast<std::size_t>(c * n + v)] = copy_perm[static_cast<std::size_t>(c)] * n + v;
    return p;
  };
  std::vector<int> swap01 = iota_vector(r);
  std::swap(swap01[0], swap01[1]);
  std::vector<int> cycle(static_cast<std::size_t>(r));
  for (int c = 0; c < r; ++c) cycle[static_cast<std::size_t>(c)] = (c + 1) % r;

  GroupAction action{GroupKind::kSymmetric, factorial_size(r), {lift(swap01)}};
  if (r > 2) action.generators.push_back(lift(cycle));

  return {SimplicialComplex(r * n, std::move(facets), std::move(labels)), std::move(action)};
}

Chessboard chessboard(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("chessboard needs m, n >= 1");
  Chessboard board;
  board.rows = m;
  board.cols = n;

  std::vector<Simplex> facets;
  const bool by_rows = m <= n;
  const int placed = std::min(m, n);
  const int range = std::max(m, n);
  std::vector<int> target(static_cast<std::size_t>(placed));
  std::vector<bool> used(static_cast<std::size_t>(range), false);
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == placed) {
      std::vector<Vertex> face;
      for (int a = 0; a < placed; ++a) {
        const int t = target[static_cast<std::size_t>(a)];
        face.push_back(by_rows ? a * n + t : t * n + a);
      }
      facets.emplace_back(std::move(face));
      return;
    }
    for (int t = 0; t < range; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = true;
      target[static_cast<std::size_t>(depth)] = t;
      self(self, depth + 1);
      used[static_cast<std::size_t>(t)] = false;
    }
  };
  recurse(recurse, 0);

  std::vector<VertexLabel> labels;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) labels.push_back({i, j});
  board.complex = SimplicialComplex(m * n, std::move(facets), std::move(labels));

  auto cell_perm = [&](const std::vector<int>& row_perm, const std::vector<int>& col_perm) {
    Permutation p(static_cast<std::size_t>(m * n));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        p[static_cast<std::size_t>(i * n + j)] =
            row_perm[static_cast<std::size_t>(i)] * n + col_perm[static_cast<std::size_t>(j)];
    return p;
  };
  auto rotate = [](int size) {
    std::vector<int> c(static_cast<std::size_t>(size));
    for (int a = 0; a < size; ++a) c[static_cast<std::size_t>(a)] = (a + 1) % size;
    return c;
  };
  auto transpose01 = [](int size) {
    std::vector<int> t = iota_vector(size);
    std::swap(t[0], t[1]);
    return t;
  };

  board.column_rotation = {GroupKind::kCyclic, static_cast<std::size_t>(n),
                           {cell_perm(iota_vector(m), rotate(n))}};
  board.row_column_symmetry.kind = GroupKind::kSymmetricProduct;
  board.row_column_symmetry.order = factorial_size(m) * factorial_size(n);
  if (m >= 2) {
    board.row_column_symmetry.generators.push_back(cell_perm(transpose01(m), iota_vector(n)));
    if (m > 2) board.row_column_symmetry.generators.push_back(cell_perm(rotate(m), iota_vector(n)));
  }
  if (n >= 2) {
    board.row_column_symmetry.generators.push_back(cell_perm(iota_vector(m), transpose01(n)));
    if (n > 2) board.row_column_symmetry.generators.push_back(cell_perm(iota_vector(m), rotate(n)));
  }
  return board;
}

ChainComplex deleted_product_chain(const SimplicialComplex& k, int r) {
  if (r < 2) throw std::invalid_argument("deleted_product_chain needs r >= 2");
  std::vector<Simplex> faces;
  for (int q = 0; q <= k.dimension(); ++q)
    for (const auto& s : k.faces(q)) faces.push_back(s);

  std::vector<std::vector<Cell>> bases;
  Cell current;
  auto recurse = [&](auto&& self, int dim) -> void {
    if (static_cast<int>(current.size()) == r) {
      if (static_cast<int>(bases.size()) <= dim) bases.resize(static_cast<std::size_t>(dim) + 1);
      bases[static_cast<std::size_t>(dim)].push_back(current);
      return;
    }
    for (const auto& s : faces) {
      bool disjoint = true;
      for (const auto& t : current)
        if (!s.is_disjoint_from(t)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      current.push_back(s);
      self(self, dim + s.dimension());
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  for (auto& b : bases) std::sort(b.begin(), b.end());

  auto index_in = [&](int q, const Cell& c) {
    const auto& b = bases[static_cast<std::size_t>(q)];
    return static_cast<int>(std::lower_bound(b.begin(), b.end(), c) - b.begin());
  };

  std::vector<IntMatrix> boundaries;
  for (std::size_t q = 0; q < bases.size(); ++q) {
    const auto& b = bases[q];
    if (q == 0) {
      boundaries.emplace_back(0, static_cast<int>(b.size()));
      continue;
    }
    std::vector<Triplet> t;
    for (std::size_t j = 0; j < b.size(); ++j) {
      int prefix = 0;
      for (std::size_t i = 0; i < b[j].size(); ++i) {
        const Simplex& s = b[j][i];
        if (s.dimension() >= 1) {
          Cell face = b[j];
          for (std::size_t v = 0; v < s.size(); ++v) {
            face[i] = s.without(v);
            const int sign = ((prefix + static_cast<int>(v)) % 2 == 0) ? 1 : -1;
            t.push_back({index_in(static_cast<int>(q) - 1, face), static_cast<int>(j), BigInt(sign)});
          }
        }
        prefix += s.dimension();
      }
    }
    boundaries.push_back(IntMatrix::from_triplets(static_cast<int>(bases[q - 1].size()),
                                                  static_cast<int>(b.size()), std::move(t)));
  }
  return ChainComplex(std::move(bases), std::move(boundaries));
}

Subdivision barycentric_subdivision_with_faces(const SimplicialComplex& k) {
  Subdivision out;
  std::map<Simplex, Vertex> id;
  for (int q = 0; q <= k.dimension(); ++q)
    for (const auto& s : k.faces(q)) {
      id.emplace(s, static_cast<Vertex>(out.vertex_faces.size()));
      out.vertex_faces.push_back(s);
    }

  std::vector<Simplex> chains;
  for (const auto& f : k.facets()) {
    std::vector<Vertex> order(f.begin(), f.end());
    do {
      std::vector<Vertex> chain;
      std::vector<Vertex> prefix;
      for (Vertex v : order) {
        prefix.push_back(v);
        chain.push_back(id.at(Simplex(prefix)));
      }
      chains.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.complex = SimplicialComplex(static_cast<int>(out.vertex_faces.size()), std::move(chains));
  return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  return barycentric_subdivision_with_faces(k).complex;
}

}  // namespace tverberg
