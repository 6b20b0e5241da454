#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>

#include "tverberg/error.hpp"
#include "tverberg/exactlp.hpp"
#include "tverberg/partitions.hpp"

namespace tverberg {

namespace {

constexpr std::size_t kMaxVertices = 62;
constexpr std::size_t kMaxFaces = std::size_t{1} << 22;

struct Face {
  Part vertices;
  std::uint64_t mask = 0;
  std::uint64_t colors = 0;
  std::size_t min = 0;
  RatVector lo, hi;
};

enum class Phase { kPlain, kSameSupport, kZeroPadded };

class Search {
 public:
  Search(const PointConfiguration& p, int r, const SearchConstraints& c) : p_(p), r_(r), c_(c) {
    if (r < 2) throw std::invalid_argument("tverberg_search needs r >= 2");
    if (c.equal_coefficients && !c.rainbow) {
      throw InconsistentConstraints("equal coefficients need a rainbow coloring");
    }
    if (c.rainbow && c.rainbow->vertex_count() != p.size()) {
      throw InconsistentConstraints("coloring does not cover the point configuration");
    }
    if (c.max_face_dimension && *c.max_face_dimension < 0) {
      throw InconsistentConstraints("negative maximal face dimension");
    }
    if (p.size() > kMaxVertices) {
      throw SizeExceeded("search supports at most " + std::to_string(kMaxVertices) + " points");
    }
    Face empty;
    extend(empty, 0);
    first_from_.assign(p.size() + 1, faces_.size());
    for (std::size_t i = faces_.size(); i-- > 0;) first_from_[faces_[i].min] = i;
    for (std::size_t v = p.size(); v-- > 0;) first_from_[v] = std::min(first_from_[v], first_from_[v + 1]);
  }

  std::size_t face_count() const { return faces_.size(); }

  std::vector<Phase> phases() const {
    if (!c_.equal_coefficients) return {Phase::kPlain};
    return {Phase::kSameSupport, Phase::kZeroPadded};
  }

  // First certificate whose first part is faces_[index].
  std::optional<PartitionCertificate> from_first(std::size_t index, Phase phase) const {
    const Face& f = faces_[index];
    if (!enough_left(f.mask, f.min, 1)) return std::nullopt;
    std::vector<std::size_t> chosen{index};
    return dfs(chosen, f.mask, f.lo, f.hi, phase);
  }

 private:
  void extend(const Face& face, std::size_t from) {
    const std::size_t limit =
        c_.max_face_dimension ? static_cast<std::size_t>(*c_.max_face_dimension) + 1 : p_.size();
    if (face.vertices.size() >= limit) return;
    for (std::size_t v = from; v < p_.size(); ++v) {
      std::uint64_t color = 0;
      if (c_.rainbow) {
        color = std::uint64_t{1} << c_.rainbow->color_of(v);
        if (face.colors & color) continue;
      }
      Face next = face;
      if (next.vertices.empty()) {
        next.min = v;
        next.lo = next.hi = p_[v];
      } else {
        for (std::size_t t = 0; t < p_.dimension(); ++t) {
          if (p_[v][t] < next.lo[t]) next.lo[t] = p_[v][t];
          if (p_[v][t] > next.hi[t]) next.hi[t] = p_[v][t];
        }
      }
      next.vertices.push_back(v);
      next.mask |= std::uint64_t{1} << v;
      next.colors |= color;
      if (faces_.size() >= kMaxFaces) throw SizeExceeded("too many admissible faces");
      faces_.push_back(next);
      extend(next, v + 1);
    }
  }

  // At least `needed` unused vertices above `min`.
  bool enough_left(std::uint64_t used, std::size_t min, int placed) const {
    std::uint64_t all = p_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p_.size()) - 1;
    std::uint64_t above = all & ~((std::uint64_t{2} << min) - 1);
    return std::popcount(above & ~used) >= r_ - placed;
  }

  std::optional<PartitionCertificate> dfs(std::vector<std::size_t>& chosen, std::uint64_t used,
                                          const RatVector& lo, const RatVector& hi,
                                          Phase phase) const {
    if (static_cast<int>(chosen.size()) == r_) return solve(chosen, phase);
    const Face& last = faces_[chosen.back()];
    for (std::size_t i = first_from_[last.min + 1]; i < faces_.size(); ++i) {
      const Face& f = faces_[i];
      if (f.mask & used) continue;
      if (phase == Phase::kSameSupport && f.colors != faces_[chosen.front()].colors) continue;
      if (!enough_left(used | f.mask, f.min, static_cast<int>(chosen.size()) + 1)) continue;
      RatVector nlo = lo, nhi = hi;
      bool empty_box = false;
      for (std::size_t t = 0; t < p_.dimension() && !empty_box; ++t) {
        if (f.lo[t] > nlo[t]) nlo[t] = f.lo[t];
        if (f.hi[t] < nhi[t]) nhi[t] = f.hi[t];
        empty_box = nlo[t] > nhi[t];
      }
      if (empty_box) continue;
      chosen.push_back(i);
      auto found = dfs(chosen, used | f.mask, nlo, nhi, phase);
      chosen.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<PartitionCertificate> solve(const std::vector<std::size_t>& chosen,
                                            Phase phase) const {
    std::vector<Part> parts;
    for (std::size_t i : chosen) parts.push_back(faces_[i].vertices);
    if (phase == Phase::kPlain) {
      auto w = intersection_point(p_, parts);
      if (!w) return std::nullopt;
      return PartitionCertificate{std::move(parts), std::move(w->point), std::move(w->coefficients)};
    }
    return solve_equal(parts);
  }

  std::optional<PartitionCertificate> solve_equal(std::vector<Part> parts) const {
    const Coloring& col = *c_.rainbow;
    const std::size_t d = p_.dimension();
    std::vector<std::size_t> offset;
    std::size_t lambdas = 0;
    for (const auto& part : parts) {
      offset.push_back(lambdas);
      lambdas += part.size();
    }
    // Lambda index of `color` in each part, or npos when absent.
    const std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> slot(col.class_count(),
                                               std::vector<std::size_t>(parts.size(), npos));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts[i].size(); ++j) {
        slot[col.color_of(parts[i][j])][i] = offset[i] + j;
      }
    }
    const std::size_t vars = lambdas + d;
    FeasibilityProblem problem;
    problem.nonnegative.assign(vars, true);
    for (std::size_t t = 0; t < d; ++t) problem.nonnegative[lambdas + t] = false;
    RatVector row(vars);
    auto add = [&](const Rational& rhs) {
      problem.a.append_row(row);
      problem.b.push_back(rhs);
      std::fill(row.begin(), row.end(), Rational(0));
    };
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts[i].size(); ++j) row[offset[i] + j] = 1;
      add(1);
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t j = 0; j < parts[i].size(); ++j) row[offset[i] + j] = p_[parts[i][j]][t];
        row[lambdas + t] = -1;
        add(0);
      }
    }
    for (const auto& s : slot) {
      bool everywhere = std::none_of(s.begin(), s.end(), [&](std::size_t k) { return k == npos; });
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == npos) continue;
        if (everywhere) {
          if (i == 0) continue;
          row[s[0]] = 1;
          row[s[i]] = -1;
        } else {
          row[s[i]] = 1;
        }
        add(0);
      }
    }
    auto y = feasible(problem);
    if (!y) return std::nullopt;
    PartitionCertificate cert;
    cert.point.assign(y->begin() + static_cast<std::ptrdiff_t>(lambdas), y->end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto begin = y->begin() + static_cast<std::ptrdiff_t>(offset[i]);
      cert.coefficients.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(parts[i].size()));
    }
    cert.parts = std::move(parts);
    return cert;
  }

  const PointConfiguration& p_;
  int r_;
  const SearchConstraints& c_;
  std::vector<Face> faces_;
  std::vector<std::size_t> first_from_;
};

}  // namespace

std::optional<PartitionCertificate> tverberg_search_serial(const PointConfiguration& p, int r,
                                                           const SearchConstraints& constraints) {
  Search search(p, r, constraints);
  for (Phase phase : search.phases()) {
    for (std::size_t i = 0; i < search.face_count(); ++i) {
      if (auto found = search.from_first(i, phase)) return found;
    }
  }
  return std::nullopt;
}

std::optional<PartitionCertificate> tverberg_search(const PointConfiguration& p, int r,
                                                    const SearchConstraints& constraints) {
  Search search(p, r, constraints);
  const auto count = static_cast<std::ptrdiff_t>(search.face_count());
  for (Phase phase : search.phases()) {
    std::ptrdiff_t best = count;
    std::optional<PartitionCertificate> result;
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      std::ptrdiff_t current;
#pragma omp atomic read
      current = best;
      if (i > current) continue;
      try {
        auto found = search.from_first(static_cast<std::size_t>(i), phase);
        if (found) {
#pragma omp critical(tverberg_search_best)
          if (i < best) {
#pragma omp atomic write
            best = i;
            result = std::move(found);
          }
        }
      } catch (...) {
#pragma omp critical(tverberg_search_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    if (result) return result;
  }
  return std::nullopt;
}

}  // namespace tverberg
