#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/numeric.hpp"

namespace tverberg {

/// Images f(e_0), ..., f(e_{n-1}) in Q^d of the vertices of a simplex; they
/// determine the affine map f.
class PointConfiguration {
 public:
  PointConfiguration(std::size_t dimension, std::vector<RatVector> points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  const RatVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<RatVector>& points() const { return points_; }

 private:
  std::size_t dimension_;
  std::vector<RatVector> points_;
};

/// Partition of the vertex indices 0..n-1 into nonempty color classes.
class Coloring {
 public:
  Coloring(std::size_t vertex_count, std::vector<std::vector<std::size_t>> classes);

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t color_of(std::size_t vertex) const { return color_of_[vertex]; }
  std::size_t vertex_count() const { return color_of_.size(); }

 private:
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> color_of_;
};

struct SearchConstraints {
  /// Faces restricted to this skeleton.
  std::optional<int> max_face_dimension;
  /// Faces must be rainbow: at most one vertex per class.
  std::optional<Coloring> rainbow;
  /// Equal barycentric coordinates color by color (requires `rainbow`).
  bool equal_coefficients = false;
};

using Part = std::vector<std::size_t>;

/// r pairwise-disjoint parts, a common point, and for every part convex
/// coefficients (aligned with the part's sorted vertices) reaching it.
struct PartitionCertificate {
  std::vector<Part> parts;
  RatVector point;
  std::vector<RatVector> coefficients;

  bool operator==(const PartitionCertificate&) const = default;
};

/// Exact check of disjointness, convexity and the common-point equalities,
/// plus the skeleton / rainbow / equal-coefficient constraints when given.
bool verify_certificate(const PointConfiguration& p, const PartitionCertificate& c,
                        const SearchConstraints& constraints = {});

/// Radon partition of exactly d + 2 points from the sign pattern of a
/// primitive kernel vector a of the homogeneous system (points; all-ones);
/// a is normalised so its first nonzero entry is positive. Parts are
/// {i : a_i > 0} and {i : a_i < 0}. Throws BadArity.
PartitionCertificate radon_partition(const PointConfiguration& p);

/// Tverberg partition of 2r - 1 reals from the sorted order pi: parts
/// {pi(j), pi(2r-2-j)} for j < r-1 and {pi(r-1)}; the common point is the
/// median. Throws BadArity.
PartitionCertificate tverberg_line(const RatVector& values, int r);

struct IntersectionWitness {
  RatVector point;
  std::vector<RatVector> coefficients;
};

/// A point in the intersection of the convex hulls of the parts, found by
/// exact phase-1 simplex, or nullopt when the hulls have no common point.
/// Throws OverlappingParts (or std::invalid_argument for an empty part).
std::optional<IntersectionWitness> intersection_point(const PointConfiguration& p,
                                                      const std::vector<Part>& parts);

/// First certificate in canonical order: unordered families of r pairwise
/// disjoint admissible faces, parts ordered by smallest vertex, compared
/// lexicographically with faces in lexicographic order. The first part is
/// distributed over threads; the lowest hit wins. Throws
/// InconsistentConstraints.
std::optional<PartitionCertificate> tverberg_search(const PointConfiguration& p, int r,
                                                    const SearchConstraints& constraints = {});
/// Single-threaded reference for tverberg_search.
std::optional<PartitionCertificate> tverberg_search_serial(const PointConfiguration& p, int r,
                                                           const SearchConstraints& constraints = {});

/// Number of unordered families of r disjoint nonempty subsets of n labels:
/// an upper bound for the work of an unconstrained search.
BigInt candidate_family_count(std::size_t n, int r);

/// Each of 0, e_1, ..., e_d repeated r - 1 times: the map
/// e_i -> u_{floor(i / (r-1))} (0-based) with u = (0, e_1, ..., e_d).
PointConfiguration witness_configuration(int d, int r);

/// True iff an exhaustive unconstrained search finds no certificate. Throws
/// SizeExceeded when more than `max_families` candidates would be visited.
bool verify_no_partition(const PointConfiguration& p, int r, std::size_t max_families = 10'000'000);

struct CountingAudit {
  int d = 0, r = 0, k = 0;
  /// (d + 2)(r - 1): simplex dimension of the skeleton version.
  int n = 0;
  /// r(k + 2) >= N + 2: parts cannot all avoid the k-skeleton.
  int skeleton_lhs = 0;
  int skeleton_rhs = 0;
  bool skeleton_forced = false;
  /// ceil((r-1)d / r): smallest k the skeleton statement allows.
  int skeleton_bound = 0;
  /// Classes of size <= 2r - 1 cannot meet all r parts twice (sum >= 2r).
  int color_class_bound = 0;
  int color_lhs = 0;
  bool color_forced = false;
};

CountingAudit counting_audit(int d, int r, int k);

}  // namespace tverberg
