#include "tverberg/simplicial_complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "tverberg/error.hpp"

namespace tverberg {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 0)
    throw std::invalid_argument("negative vertex label");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("repeated vertex in simplex");
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

bool Simplex::is_disjoint_from(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<Vertex> v;
  v.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (k != i) v.push_back(vertices_[k]);
  return Simplex(Trusted{}, std::move(v));
}

Simplex Simplex::united_with(const Simplex& other) const {
  std::vector<Vertex> v;
  v.reserve(vertices_.size() + other.vertices_.size());
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(v));
  return Simplex(Trusted{}, std::move(v));
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Simplex apply(const Permutation& g, const Simplex& s) {
  std::vector<Vertex> image;
  image.reserve(s.size());
  for (Vertex v : s) image.push_back(g[static_cast<std::size_t>(v)]);
  return Simplex(std::move(image));
}

Permutation inverse(const Permutation& g) {
  Permutation inv(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    inv[static_cast<std::size_t>(g[i])] = static_cast<Vertex>(i);
  return inv;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

std::vector<Permutation> GroupAction::elements(std::size_t vertex_count) const {
  Permutation identity(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) identity[i] = static_cast<Vertex>(i);
  for (const auto& g : generators)
    if (g.size() != vertex_count)
      throw std::invalid_argument("generator size does not match vertex count");

  if (kind == GroupKind::kCyclic) {
    std::vector<Permutation> out{identity};
    if (generators.empty()) return out;
    for (std::size_t k = 1; k < order; ++k) out.push_back(compose(generators[0], out.back()));
    return out;
  }

  std::vector<Permutation> out{identity};
  std::set<Permutation> seen{identity};
  std::deque<Permutation> queue{identity};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation q = compose(g, p);
      if (seen.insert(q).second) {
        out.push_back(q);
        queue.push_back(std::move(q));
        if (out.size() > order)
          throw std::invalid_argument("generators produce more elements than the group order");
      }
    }
  }
  return out;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> generators,
                                     std::vector<VertexLabel> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(vertex_count))
    throw std::invalid_argument("label count does not match vertex count");

  std::vector<bool> covered(static_cast<std::size_t>(vertex_count), false);
  for (const auto& g : generators) {
    if (g.empty()) continue;
    if (g.back() >= vertex_count)
      throw std::invalid_argument("vertex label " + std::to_string(g.back()) +
                                  " out of range");
    if (g.size() > 24) throw SizeExceeded("face with more than 24 vertices");
    for (Vertex v : g) covered[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!covered[static_cast<std::size_t>(v)]) generators.push_back(Simplex{v});

  std::unordered_set<Simplex, SimplexHash> all;
  std::vector<Vertex> buffer;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    const std::size_t k = g.size();
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      buffer.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1U << i)) buffer.push_back(g[i]);
      all.insert(Simplex(buffer));
    }
  }

  for (const auto& s : all) {
    const auto q = static_cast<std::size_t>(s.dimension());
    if (faces_.size() <= q) faces_.resize(q + 1);
    faces_[q].push_back(s);
  }
  for (auto& level : faces_) std::sort(level.begin(), level.end());

  for (const auto& s : all) {
    bool maximal = true;
    const auto q = static_cast<std::size_t>(s.dimension());
    if (q + 1 < faces_.size()) {
      std::vector<Vertex> grown(s.begin(), s.end());
      grown.push_back(0);
      for (Vertex v = 0; v < vertex_count && maximal; ++v) {
        if (s.contains(v)) continue;
        grown.back() = v;
        if (all.count(Simplex(grown))) maximal = false;
      }
    }
    if (maximal) facets_.push_back(s);
  }
  std::sort(facets_.begin(), facets_.end());
}

std::span<const Simplex> SimplicialComplex::faces(int q) const {
  if (q < 0 || q >= static_cast<int>(faces_.size())) return {};
  return faces_[static_cast<std::size_t>(q)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_) f.push_back(level.size());
  return f;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& level : faces_) n += level.size();
  return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto level = faces(s.dimension());
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return s.empty() || index_of(s).has_value();
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.dimension() == dimension(); });
}

}  // namespace tverberg
