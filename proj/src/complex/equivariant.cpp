#include "tverberg/equivariant.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#include "tverberg/constructions.hpp"
#include "tverberg/error.hpp"

namespace tverberg {

namespace {

using Mask = std::uint64_t;

Mask mask_of(const Simplex& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

struct IsoData {
  int n = 0;
  std::vector<Mask> adjacency;
  std::vector<std::vector<Mask>> facets_at;  // facets containing each vertex
  std::vector<std::vector<std::size_t>> signature;
  std::unordered_set<Mask> facet_set;

  explicit IsoData(const SimplicialComplex& k) : n(k.vertex_count()) {
    adjacency.assign(static_cast<std::size_t>(n), 0);
    facets_at.resize(static_cast<std::size_t>(n));
    const auto dims = static_cast<std::size_t>(k.dimension() + 1);
    signature.assign(static_cast<std::size_t>(n), std::vector<std::size_t>(2 * dims, 0));
    for (const auto& e : k.faces(1)) {
      adjacency[static_cast<std::size_t>(e[0])] |= Mask{1} << e[1];
      adjacency[static_cast<std::size_t>(e[1])] |= Mask{1} << e[0];
    }
    for (int q = 0; q <= k.dimension(); ++q)
      for (const auto& s : k.faces(q))
        for (Vertex v : s) ++signature[static_cast<std::size_t>(v)][static_cast<std::size_t>(q)];
    for (const auto& f : k.facets()) {
      facet_set.insert(mask_of(f));
      for (Vertex v : f) {
        facets_at[static_cast<std::size_t>(v)].push_back(mask_of(f));
        ++signature[static_cast<std::size_t>(v)][dims + static_cast<std::size_t>(f.dimension())];
      }
    }
  }
};

Mask image_mask(Mask m, const std::vector<Vertex>& map) {
  Mask out = 0;
  while (m) {
    const int v = __builtin_ctzll(m);
    m &= m - 1;
    out |= Mask{1} << map[static_cast<std::size_t>(v)];
  }
  return out;
}

}  // namespace

std::optional<Permutation> are_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.vertex_count() > 40 || l.vertex_count() > 40)
    throw SizeExceeded("isomorphism search is limited to 40 vertices");
  if (k.vertex_count() != l.vertex_count() || k.f_vector() != l.f_vector() ||
      k.facets().size() != l.facets().size())
    return std::nullopt;
  const IsoData a(k);
  const IsoData b(l);
  {
    auto sa = a.signature;
    auto sb = b.signature;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const int n = a.n;

  // Connected-first ordering so adjacency constraints bite early.
  std::vector<Vertex> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<std::size_t> position(static_cast<std::size_t>(n));
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    int best_links = -1;
    int best_degree = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (Vertex u : order) links += (a.adjacency[static_cast<std::size_t>(v)] >> u) & 1;
      const int degree = __builtin_popcountll(a.adjacency[static_cast<std::size_t>(v)]);
      if (links > best_links || (links == best_links && degree > best_degree)) {
        best = v;
        best_links = links;
        best_degree = degree;
      }
    }
    position[static_cast<std::size_t>(best)] = order.size();
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }

  // Facets of K to check once their last vertex (in `order`) is assigned.
  std::vector<std::vector<Mask>> due(static_cast<std::size_t>(n));
  for (const auto& f : k.facets()) {
    std::size_t last = 0;
    for (Vertex v : f) last = std::max(last, position[static_cast<std::size_t>(v)]);
    due[last].push_back(mask_of(f));
  }

  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);

  auto search = [&](auto&& self, std::size_t t) -> bool {
    if (t == order.size()) return true;
    const Vertex v = order[t];
    for (Vertex w = 0; w < n; ++w) {
      if (taken[static_cast<std::size_t>(w)]) continue;
      if (a.signature[static_cast<std::size_t>(v)] != b.signature[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const Vertex u = order[s];
        const bool ka = (a.adjacency[static_cast<std::size_t>(v)] >> u) & 1;
        const bool lb = (b.adjacency[static_cast<std::size_t>(w)] >> map[static_cast<std::size_t>(u)]) & 1;
        ok = ka == lb;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      for (Mask f : due[t])
        if (!b.facet_set.count(image_mask(f, map))) {
          ok = false;
          break;
        }
      if (ok) {
        taken[static_cast<std::size_t>(w)] = true;
        if (self(self, t + 1)) return true;
        taken[static_cast<std::size_t>(w)] = false;
      }
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

bool acts_simplicially(const SimplicialComplex& k, const GroupAction& action) {
  for (const auto& g : action.generators) {
    if (static_cast<int>(g.size()) != k.vertex_count()) return false;
    std::vector<bool> hit(g.size(), false);
    for (Vertex v : g) {
      if (v < 0 || v >= k.vertex_count() || hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& f : k.facets())
      if (!k.contains(apply(g, f))) return false;
  }
  return true;
}

namespace {

void require_vertex_free(const std::vector<Permutation>& elements, const GroupAction& action,
                         std::size_t n) {
  if (action.kind != GroupKind::kCyclic && elements.size() < action.order)
    throw NotFree("action is not faithful: a non-identity element acts trivially");
  for (std::size_t e = 1; e < elements.size(); ++e)
    for (std::size_t v = 0; v < n; ++v)
      if (elements[e][v] == static_cast<Vertex>(v))
        throw NotFree("vertex " + std::to_string(v) + " has a nontrivial stabilizer");
}

std::optional<QuotientComplex> regular_quotient(const SimplicialComplex& k,
                                                const std::vector<Permutation>& elements) {
  const auto n = static_cast<std::size_t>(k.vertex_count());
  std::vector<Vertex> orbit(n, -1);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (orbit[v] >= 0) continue;
    for (const auto& g : elements) orbit[static_cast<std::size_t>(g[v])] = next;
    ++next;
  }

  std::map<Simplex, Simplex> orbit_rep_of_image;
  std::vector<Simplex> generators;
  for (int q = 0; q <= k.dimension(); ++q) {
    for (const auto& s : k.faces(q)) {
      std::vector<Vertex> image;
      for (Vertex v : s) image.push_back(orbit[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return std::nullopt;
      Simplex rep = s;
      for (const auto& g : elements) rep = std::min(rep, apply(g, s));
      Simplex img(std::move(image));
      auto [it, inserted] = orbit_rep_of_image.emplace(img, rep);
      if (!inserted && it->second != rep) return std::nullopt;
    }
  }
  for (const auto& f : k.facets()) {
    std::vector<Vertex> image;
    for (Vertex v : f) image.push_back(orbit[static_cast<std::size_t>(v)]);
    generators.emplace_back(std::move(image));
  }
  return QuotientComplex{SimplicialComplex(next, std::move(generators)), std::move(orbit), false};
}

}  // namespace

QuotientComplex quotient_complex(const SimplicialComplex& k, const GroupAction& action) {
  if (!acts_simplicially(k, action))
    throw std::invalid_argument("generators are not simplicial automorphisms");
  const auto n = static_cast<std::size_t>(k.vertex_count());
  const auto elements = action.elements(n);
  require_vertex_free(elements, action, n);
  if (auto q = regular_quotient(k, elements)) return std::move(*q);

  const Subdivision sd = barycentric_subdivision_with_faces(k);
  std::map<Simplex, Vertex> id;
  for (std::size_t i = 0; i < sd.vertex_faces.size(); ++i)
    id.emplace(sd.vertex_faces[i], static_cast<Vertex>(i));
  std::vector<Permutation> lifted;
  for (const auto& g : elements) {
    Permutation p(sd.vertex_faces.size());
    for (std::size_t i = 0; i < sd.vertex_faces.size(); ++i) p[i] = id.at(apply(g, sd.vertex_faces[i]));
    lifted.push_back(std::move(p));
  }
  require_vertex_free(lifted, action, sd.vertex_faces.size());
  auto q = regular_quotient(sd.complex, lifted);
  if (!q) throw NotFree("orbit map is not simplicial even after one barycentric subdivision");
  q->subdivided = true;
  return std::move(*q);
}

SimplicialComplex replay_collapses(const SimplicialComplex& k, const CollapseTrace& trace) {
  std::set<Simplex> faces;
  for (int q = 0; q <= k.dimension(); ++q)
    for (const auto& s : k.faces(q)) faces.insert(s);

  for (std::size_t step = 0; step < trace.size(); ++step) {
    const auto& [free_face, coface] = trace[step];
    const std::string where = "collapse step " + std::to_string(step);
    if (!faces.count(free_face) || !faces.count(coface) || free_face.size() + 1 != coface.size() ||
        !free_face.is_subset_of(coface))
      throw InvalidComplex(where + ": faces missing or not a codimension-one pair");
    for (Vertex v = 0; v < k.vertex_count(); ++v) {
      if (free_face.contains(v)) continue;
      Simplex up = free_face.united_with(Simplex{v});
      if (up != coface && faces.count(up)) throw InvalidComplex(where + ": face is not free");
      if (up == coface) {
        for (Vertex w = 0; w < k.vertex_count(); ++w)
          if (!coface.contains(w) && faces.count(coface.united_with(Simplex{w})))
            throw InvalidComplex(where + ": coface is not maximal");
      }
    }
    faces.erase(free_face);
    faces.erase(coface);
  }
  // Vertices removed by a collapse are dropped and the rest relabelled
  // densely; labels keep the provenance.
  std::vector<Vertex> relabel(static_cast<std::size_t>(k.vertex_count()), -1);
  std::vector<VertexLabel> labels;
  for (const auto& s : faces)
    if (s.size() == 1) {
      relabel[static_cast<std::size_t>(s[0])] = static_cast<Vertex>(labels.size());
      labels.push_back(k.labels().empty() ? VertexLabel{0, s[0]}
                                          : k.labels()[static_cast<std::size_t>(s[0])]);
    }
  std::vector<Simplex> remaining;
  for (const auto& s : faces) {
    std::vector<Vertex> v;
    for (Vertex x : s) v.push_back(relabel[static_cast<std::size_t>(x)]);
    remaining.emplace_back(std::move(v));
  }
  const auto count = static_cast<int>(labels.size());
  return SimplicialComplex(count, std::move(remaining), std::move(labels));
}

CollapsedChessboard equivariant_collapse_chessboard(int r) {
  if (r < 2) throw std::invalid_argument("equivariant_collapse_chessboard needs r >= 2");
  const Chessboard board = chessboard(r, r);
  CollapseTrace trace;
  // Facet vertices are sorted by row, so lexicographic facet order is the
  // lexicographic order of the row-to-column bijections.
  for (const auto& facet : board.complex.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i)
      if (facet[i] % r == r - 1) {
        trace.push_back({facet.without(i), facet});
        break;
      }
  }
  return {replay_collapses(board.complex, trace), std::move(trace)};
}

}  // namespace tverberg
