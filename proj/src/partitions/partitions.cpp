#include "tverberg/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tverberg/error.hpp"
#include "tverberg/exactlp.hpp"

namespace tverberg {

PointConfiguration::PointConfiguration(std::size_t dimension, std::vector<RatVector> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("point configuration is empty");
  for (const auto& p : points_) {
    if (p.size() != dimension_) throw std::invalid_argument("point has wrong dimension");
  }
}

Coloring::Coloring(std::size_t vertex_count, std::vector<std::vector<std::size_t>> classes)
    : classes_(std::move(classes)), color_of_(vertex_count, vertex_count) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) throw std::invalid_argument("empty color class");
    std::sort(classes_[c].begin(), classes_[c].end());
    for (std::size_t v : classes_[c]) {
      if (v >= vertex_count) throw std::invalid_argument("color class vertex out of range");
      if (color_of_[v] != vertex_count) throw std::invalid_argument("color classes overlap");
      color_of_[v] = c;
    }
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (color_of_[v] == vertex_count) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no color");
    }
  }
}

namespace {

void check_parts(std::size_t n, const std::vector<Part>& parts) {
  std::vector<bool> used(n, false);
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (std::size_t v : part) {
      if (v >= n) throw std::invalid_argument("part vertex out of range");
      if (used[v]) throw OverlappingParts("vertex " + std::to_string(v) + " lies in two parts");
      used[v] = true;
    }
  }
}

RatVector combination(const PointConfiguration& p, const Part& part, const RatVector& coeffs) {
  RatVector x(p.dimension());
  for (std::size_t j = 0; j < part.size(); ++j) {
    for (std::size_t t = 0; t < p.dimension(); ++t) x[t] += coeffs[j] * p[part[j]][t];
  }
  return x;
}

}  // namespace

bool verify_certificate(const PointConfiguration& p, const PartitionCertificate& c,
                        const SearchConstraints& constraints) {
  try {
    check_parts(p.size(), c.parts);
  } catch (const std::exception&) {
    return false;
  }
  if (c.coefficients.size() != c.parts.size() || c.point.size() != p.dimension()) return false;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const Part& part = c.parts[i];
    if (!std::is_sorted(part.begin(), part.end())) return false;
    const RatVector& coeffs = c.coefficients[i];
    if (coeffs.size() != part.size()) return false;
    Rational sum = 0;
    for (const auto& a : coeffs) {
      if (a < 0) return false;
      sum += a;
    }
    if (sum != 1) return false;
    if (combination(p, part, coeffs) != c.point) return false;
    if (constraints.max_face_dimension &&
        static_cast<int>(part.size()) - 1 > *constraints.max_face_dimension) {
      return false;
    }
  }
  if (constraints.rainbow) {
    const Coloring& col = *constraints.rainbow;
    if (col.vertex_count() != p.size()) return false;
    for (const auto& part : c.parts) {
      std::vector<bool> seen(col.class_count(), false);
      for (std::size_t v : part) {
        if (seen[col.color_of(v)]) return false;
        seen[col.color_of(v)] = true;
      }
    }
    if (constraints.equal_coefficients) {
      // A color missing from a part counts as coefficient 0 there.
      for (std::size_t color = 0; color < col.class_count(); ++color) {
        std::optional<Rational> common;
        for (std::size_t i = 0; i < c.parts.size(); ++i) {
          Rational value = 0;
          for (std::size_t j = 0; j < c.parts[i].size(); ++j) {
            if (col.color_of(c.parts[i][j]) == color) value = c.coefficients[i][j];
          }
          if (common && *common != value) return false;
          common = value;
        }
      }
    }
  } else if (constraints.equal_coefficients) {
    return false;
  }
  return true;
}

PartitionCertificate radon_partition(const PointConfiguration& p) {
  const std::size_t d = p.dimension();
  const std::size_t n = p.size();
  if (n != d + 2) {
    throw BadArity("Radon partition needs exactly d + 2 = " + std::to_string(d + 2) +
                   " points, got " + std::to_string(n));
  }
  RatMatrix system(d + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < d; ++t) system(t, i) = p[i][t];
    system(d, i) = 1;
  }
  auto kernel = kernel_basis(system);
  RatVector a = kernel.front();
  auto first = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
  if (*first < 0) {
    for (auto& x : a) x = -x;
  }
  PartitionCertificate cert;
  cert.parts.resize(2);
  cert.coefficients.resize(2);
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) total += a[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) {
      cert.parts[0].push_back(i);
      cert.coefficients[0].push_back(a[i] / total);
    } else if (a[i] < 0) {
      cert.parts[1].push_back(i);
      cert.coefficients[1].push_back(-a[i] / total);
    }
  }
  cert.point = combination(p, cert.parts[0], cert.coefficients[0]);
  return cert;
}

PartitionCertificate tverberg_line(const RatVector& values, int r) {
  if (r < 1 || values.size() != static_cast<std::size_t>(2 * r - 1)) {
    throw BadArity("tverberg_line needs 2r - 1 values");
  }
  std::vector<std::size_t> pi(values.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::stable_sort(pi.begin(), pi.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  const std::size_t m = static_cast<std::size_t>(r - 1);
  PartitionCertificate cert;
  cert.point = {values[pi[m]]};
  const Rational& x = cert.point[0];
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t lo = pi[j];
    std::size_t hi = pi[2 * m - j];
    // x = t * values[lo] + (1 - t) * values[hi]
    Rational t = values[lo] == values[hi] ? Rational(1, 2)
                                          : Rational((values[hi] - x) / (values[hi] - values[lo]));
    Part part{std::min(lo, hi), std::max(lo, hi)};
    RatVector coeffs = lo < hi ? RatVector{t, 1 - t} : RatVector{1 - t, t};
    cert.parts.push_back(part);
    cert.coefficients.push_back(coeffs);
  }
  cert.parts.push_back({pi[m]});
  cert.coefficients.push_back({Rational(1)});
  return cert;
}

std::optional<IntersectionWitness> intersection_point(const PointConfiguration& p,
                                                      const std::vector<Part>& parts) {
  check_parts(p.size(), parts);
  const std::size_t d = p.dimension();
  std::size_t lambdas = 0;
  for (const auto& part : parts) lambdas += part.size();
  // Variables: all lambda_{i,j}, then x (free).
  const std::size_t vars = lambdas + d;
  FeasibilityProblem problem;
  problem.a = RatMatrix(parts.size() * (d + 1), vars);
  problem.b.assign(parts.size() * (d + 1), 0);
  problem.nonnegative.assign(vars, true);
  for (std::size_t t = 0; t < d; ++t) problem.nonnegative[lambdas + t] = false;
  std::size_t offset = 0;
  std::size_t row = 0;
  for (const auto& part : parts) {
    for (std::size_t j = 0; j < part.size(); ++j) problem.a(row, offset + j) = 1;
    problem.b[row++] = 1;
    for (std::size_t t = 0; t < d; ++t, ++row) {
      for (std::size_t j = 0; j < part.size(); ++j) problem.a(row, offset + j) = p[part[j]][t];
      problem.a(row, lambdas + t) = -1;
    }
    offset += part.size();
  }
  auto y = feasible(problem);
  if (!y) return std::nullopt;
  IntersectionWitness w;
  w.point.assign(y->begin() + static_cast<std::ptrdiff_t>(lambdas), y->end());
  offset = 0;
  for (const auto& part : parts) {
    w.coefficients.emplace_back(y->begin() + static_cast<std::ptrdiff_t>(offset),
                                y->begin() + static_cast<std::ptrdiff_t>(offset + part.size()));
    offset += part.size();
  }
  return w;
}

BigInt candidate_family_count(std::size_t n, int r) {
  // Surjections of n labels onto r parts plus a leftover block, divided by r!.
  BigInt total = 0;
  BigInt binom = 1;
  for (int j = 0; j <= r; ++j) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r + 1 - j), n);
    if (j % 2 == 0) {
      total += binom * power;
    } else {
      total -= binom * power;
    }
    binom = binom * (r - j) / (j + 1);
  }
  return total / factorial(static_cast<unsigned>(r));
}

PointConfiguration witness_configuration(int d, int r) {
  if (d < 1 || r < 2) throw std::invalid_argument("witness_configuration needs d >= 1, r >= 2");
  std::vector<RatVector> points;
  for (int u = 0; u <= d; ++u) {
    RatVector point(static_cast<std::size_t>(d));
    if (u > 0) point[static_cast<std::size_t>(u - 1)] = 1;
    for (int c = 0; c < r - 1; ++c) points.push_back(point);
  }
  return PointConfiguration(static_cast<std::size_t>(d), std::move(points));
}

bool verify_no_partition(const PointConfiguration& p, int r, std::size_t max_families) {
  BigInt count = candidate_family_count(p.size(), r);
  if (count > BigInt(std::to_string(max_families))) {
    throw SizeExceeded(to_string(count) + " candidate families exceed the limit of " +
                       std::to_string(max_families));
  }
  return !tverberg_search(p, r).has_value();
}

CountingAudit counting_audit(int d, int r, int k) {
  if (d < 1 || r < 1 || k < 0) throw std::invalid_argument("counting_audit needs positive parameters");
  CountingAudit a;
  a.d = d;
  a.r = r;
  a.k = k;
  a.n = (d + 2) * (r - 1);
  a.skeleton_lhs = r * (k + 2);
  a.skeleton_rhs = a.n + 2;
  a.skeleton_forced = a.skeleton_lhs >= a.skeleton_rhs;
  a.skeleton_bound = ((r - 1) * d + r - 1) / r;
  a.color_class_bound = 2 * r - 1;
  a.color_lhs = 2 * r;
  a.color_forced = a.color_class_bound < a.color_lhs;
  return a;
}

}  // namespace tverberg
