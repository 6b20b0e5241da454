#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tverberg {

using Vertex = int;

/// A face given by its strictly increasing vertex labels. The sorted order is
/// the positive orientation; every boundary sign in the toolkit derives from
/// it.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the labels; throws std::invalid_argument on repeats or negatives.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_subset_of(const Simplex& other) const;
  bool is_disjoint_from(const Simplex& other) const;
  /// The face obtained by deleting the i-th vertex (in sorted order).
  Simplex without(std::size_t i) const;
  Simplex united_with(const Simplex& other) const;

  // Lexicographic on the sorted vertex sequence.
  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Provenance of a relabelled vertex: (copy, original) for joins and deleted
/// joins, (row, column) for chessboards. All 0-based.
struct VertexLabel {
  int first = 0;
  int second = 0;
  auto operator<=>(const VertexLabel&) const = default;
};

using Permutation = std::vector<Vertex>;

enum class GroupKind { kCyclic, kSymmetric, kSymmetricProduct };

/// A finite group acting on vertex labels through generator permutations.
/// `order` is the abstract group order; an action that is not faithful has
/// fewer distinct permutations than `order` elements.
struct GroupAction {
  GroupKind kind = GroupKind::kCyclic;
  std::size_t order = 1;
  std::vector<Permutation> generators;

  /// Every group element as a vertex permutation, identity first. Cyclic
  /// groups list g^0..g^(order-1) (repeats possible for unfaithful actions);
  /// the other kinds list the closure of the generators.
  std::vector<Permutation> elements(std::size_t vertex_count) const;
};

Simplex apply(const Permutation& g, const Simplex& s);
Permutation inverse(const Permutation& g);
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Finite abstract simplicial complex on the vertex set {0, ..., n-1}.
/// Immutable; faces are enumerated once at construction.
class SimplicialComplex {
 public:
  /// The void complex on zero vertices.
  SimplicialComplex() = default;
  /// `generators` may be any faces; they are reduced to the inclusion-maximal
  /// ones. Vertices not covered by a generator become isolated points.
  SimplicialComplex(int vertex_count, std::vector<Simplex> generators,
                    std::vector<VertexLabel> labels = {});

  int vertex_count() const { return vertex_count_; }
  /// -1 for the void complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  /// Inclusion-maximal faces in lexicographic order.
  const std::vector<Simplex>& facets() const { return facets_; }
  /// Nonempty faces of dimension q in lexicographic order (empty list when q
  /// is out of range).
  std::span<const Simplex> faces(int q) const;
  std::vector<std::size_t> f_vector() const;
  std::size_t face_count() const;
  bool contains(const Simplex& s) const;
  /// Position of `s` inside faces(s.dimension()), if it is a face.
  std::optional<std::size_t> index_of(const Simplex& s) const;

  const std::vector<VertexLabel>& labels() const { return labels_; }
  bool is_pure() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && facets_ == other.facets_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> faces_;
  std::vector<VertexLabel> labels_;
};

}  // namespace tverberg
