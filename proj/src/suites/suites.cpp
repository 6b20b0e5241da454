#include "tverberg/suites.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "tverberg/chain_complex.hpp"
#include "tverberg/constructions.hpp"
#include "tverberg/equivariant.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/oracle.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/smith.hpp"

namespace tverberg {

namespace {

struct Outcome {
  Json expected;
  Json observed;
  bool pass = false;
};

struct Check {
  std::string id;
  Json parameters;
  std::function<Outcome()> run;
};

// Modulo reduction keeps the stream identical across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, const std::string& salt, std::uint64_t index) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (char c : salt) h = mix(h ^ static_cast<unsigned char>(c));
    engine_.seed(mix(h ^ mix(index + 1)));
  }

  long between(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(between(0, static_cast<long>(i) - 1))]);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

std::string pad(long i, int width = 4) {
  std::ostringstream s;
  s << std::setw(width) << std::setfill('0') << i;
  return s.str();
}

Rational random_rational(Rng& rng, bool dense) {
  Rational q(rng.between(-100, 100));
  if (dense) q /= rng.between(1, 100);
  return q;
}

PointConfiguration random_configuration(Rng& rng, std::size_t d, std::size_t n, bool dense) {
  std::vector<RatVector> pts(n, RatVector(d));
  for (auto& p : pts)
    for (auto& x : p) x = random_rational(rng, dense);
  return PointConfiguration(d, std::move(pts));
}

Coloring random_coloring(Rng& rng, std::size_t n, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<std::vector<std::size_t>> classes;
  std::size_t at = 0;
  for (std::size_t s : sizes) {
    classes.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(at),
                         order.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += s;
  }
  return Coloring(n, std::move(classes));
}

SimplicialComplex random_complex(Rng& rng, int n) {
  std::vector<Simplex> gens;
  const long count = rng.between(1, 4);
  for (long i = 0; i < count; ++i) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (rng.between(0, 1)) vs.push_back(v);
    if (vs.empty()) vs.push_back(static_cast<Vertex>(rng.between(0, n - 1)));
    gens.emplace_back(std::move(vs));
  }
  return SimplicialComplex(n, std::move(gens));
}

Json betti_json(const HomologySummary& h) {
  Json betti = Json::array();
  for (const auto& d : h.degrees) betti.push_back(d.betti);
  return betti;
}

bool torsion_free(const HomologySummary& h) {
  return std::all_of(h.degrees.begin(), h.degrees.end(), [](const auto& d) { return d.torsion.empty(); });
}

Json points_json(const PointConfiguration& p) {
  Json j = Json::array();
  for (const auto& x : p.points()) j.push_back(rationals_to_json(x));
  return j;
}

Outcome certificate_outcome(const PointConfiguration& p, const std::optional<PartitionCertificate>& c,
                            const SearchConstraints& constraints = {}) {
  Outcome o;
  o.expected = "verified certificate";
  if (!c) {
    o.observed = "none found";
    o.observed = {{"result", "none"}, {"points", points_json(p)}};
    return o;
  }
  o.pass = verify_certificate(p, *c, constraints);
  o.observed = certificate_to_json(*c);
  if (!o.pass) o.observed["points"] = points_json(p);
  return o;
}

int trials(const SuiteOptions& options, int fallback) { return options.trials.value_or(fallback); }

// Suites ---------------------------------------------------------------------

std::vector<Check> chessboard_connectivity(const SuiteOptions&) {
  std::vector<Check> checks;
  for (auto [m, n, betti] : {std::tuple{2, 3, std::vector<std::size_t>{1, 1}},
                             std::tuple{3, 4, std::vector<std::size_t>{1, 2, 1}}}) {
    checks.push_back({"betti/" + std::to_string(m) + "x" + std::to_string(n),
                      {{"m", m}, {"n", n}},
                      [m = m, n = n, betti = betti] {
                        auto h = homology(chessboard(m, n).complex);
                        Outcome o;
                        o.expected = {{"betti", betti}, {"torsion_free", true}};
                        o.observed = {{"betti", betti_json(h)}, {"torsion_free", torsion_free(h)}};
                        o.pass = o.expected == o.observed;
                        return o;
                      }});
  }
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const int nu = std::min({m, n, (m + n + 1) / 3}) - 2;
      checks.push_back({"vanishing/" + std::to_string(m) + "x" + std::to_string(n),
                        {{"m", m}, {"n", n}},
                        [m, n, nu] {
                          Outcome o;
                          o.expected = {{"reduced_homology_vanishes_through", nu}};
                          int c = homological_connectivity(chessboard(m, n).complex, nu);
                          o.observed = {{"reduced_homology_vanishes_through", c}};
                          o.pass = c >= nu;
                          return o;
                        }});
    }
  }
  return checks;
}

std::vector<Check> deleted_join_iso(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 50);
  for (int i = 0; i < count; ++i) {
    checks.push_back({"join-split/" + pad(i), {{"instance", i}}, [i, seed = options.seed] {
                        Rng rng(seed, "deleted-join-iso", static_cast<std::uint64_t>(i));
                        const int a = static_cast<int>(rng.between(1, 4));
                        const int b = static_cast<int>(rng.between(1, 4));
                        const int r = static_cast<int>(rng.between(2, 3));
                        auto k = random_complex(rng, a);
                        auto l = random_complex(rng, b);
                        auto lhs = deleted_join(join(k, l), r, 2).complex;
                        auto rhs = join(deleted_join(k, r, 2).complex, deleted_join(l, r, 2).complex);
                        Outcome o;
                        o.expected = "isomorphic";
                        o.pass = are_isomorphic(lhs, rhs).has_value();
                        o.observed = {{"r", r},
                                      {"K", complex_to_json(k)},
                                      {"L", complex_to_json(l)},
                                      {"isomorphic", o.pass}};
                        return o;
                      }});
  }
  for (int n = 0; n <= 3; ++n) {
    for (int r = 2; r <= 3; ++r) {
      checks.push_back({"simplex/N=" + std::to_string(n) + ",r=" + std::to_string(r),
                        {{"N", n}, {"r", r}},
                        [n, r] {
                          auto dj = deleted_join(full_simplex(n), r, 2).complex;
                          Outcome o;
                          o.expected = {{"vertices", r * (n + 1)}, {"dimension", n}, {"isomorphic", true}};
                          o.observed = {{"vertices", dj.vertex_count()},
                                        {"dimension", dj.dimension()},
                                        {"isomorphic",
                                         are_isomorphic(dj, join_power(isolated_points(r), n + 1)).has_value()}};
                          o.pass = o.expected == o.observed;
                          return o;
                        }});
    }
  }
  return checks;
}

std::vector<Check> deleted_product_connectivity(const SuiteOptions&) {
  std::vector<Check> checks;
  for (int r = 2; r <= 4; ++r) {
    for (int n = r - 1; n <= 8; ++n) {
      const BigInt cells = candidate_family_count(static_cast<std::size_t>(n + 1), r) *
                           factorial(static_cast<unsigned>(r));
      if (cells > 20000) continue;
      checks.push_back({"r=" + std::to_string(r) + "/N=" + std::to_string(n),
                        {{"N", n}, {"r", r}, {"cells", cells.get_si()}},
                        [n, r] {
                          auto c = deleted_product_chain(full_simplex(n), r);
                          auto h = homology(c);
                          const int conn = homological_connectivity(c);
                          Outcome o;
                          o.expected = {{"connectivity_at_least", n - r}, {"top_torsion", Json::array()}};
                          Json top = Json::array();
                          for (const auto& t : h.degrees.back().torsion) top.push_back(t.get_str());
                          o.observed = {{"connectivity", conn},
                                        {"top_degree", c.top_degree()},
                                        {"top_torsion", top},
                                        {"boundary_squares_vanish", boundary_squares_vanish(c)}};
                          o.pass = conn >= n - r && top.empty() && c.top_degree() == n - r + 1;
                          return o;
                        }});
    }
  }
  return checks;
}

std::vector<Check> degree_factorial(const SuiteOptions& options) {
  std::vector<Check> checks;
  for (int p : options.primes) {
    checks.push_back({"p=" + pad(p, 2), {{"p", p}}, [p] {
                        if (p < 3) throw std::invalid_argument("degree check needs p >= 3");
                        Outcome o;
                        const BigInt expected = factorial(static_cast<unsigned>(p - 1));
                        const BigInt degree = chessboard_column_degree(p);
                        o.expected = {{"abs_degree", expected.get_str()}};
                        o.observed = {{"degree", degree.get_str()}};
                        o.pass = abs(degree) == expected;
                        return o;
                      }});
  }
  return checks;
}

std::vector<Check> radon_random(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 1000);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 5);
    checks.push_back({"radon/" + pad(i), {{"d", d}}, [i, d, options] {
                        Rng rng(options.seed, "radon-random", static_cast<std::uint64_t>(i));
                        auto p = random_configuration(rng, d, d + 2, options.dense_rationals);
                        return certificate_outcome(p, radon_partition(p));
                      }});
  }
  return checks;
}

std::vector<Check> tverberg_random(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 100);
  for (auto [d, r] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
    const std::size_t n = static_cast<std::size_t>((d + 1) * (r - 1) + 1);
    for (int i = 0; i < count; ++i) {
      const std::string key = "d=" + std::to_string(d) + ",r=" + std::to_string(r);
      checks.push_back({key + "/" + pad(i), {{"d", d}, {"r", r}, {"points", n}},
                        [i, d = d, r = r, n, key, options] {
                          Rng rng(options.seed, "tverberg-random/" + key, static_cast<std::uint64_t>(i));
                          auto p = random_configuration(rng, static_cast<std::size_t>(d), n, options.dense_rationals);
                          return certificate_outcome(p, tverberg_search(p, r));
                        }});
    }
  }
  return checks;
}

std::vector<Check> witness_none(const SuiteOptions&) {
  std::vector<Check> checks;
  for (auto [d, r] : {std::pair{1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
    checks.push_back({"d=" + std::to_string(d) + ",r=" + std::to_string(r), {{"d", d}, {"r", r}},
                      [d = d, r = r] {
                        auto w = witness_configuration(d, r);
                        Outcome o;
                        o.expected = {{"partition", "none"}};
                        o.pass = verify_no_partition(w, r);
                        o.observed = {{"partition", o.pass ? "none" : "found"},
                                      {"points", w.size()},
                                      {"families", candidate_family_count(w.size(), r).get_str()}};
                        return o;
                      }});
  }
  return checks;
}

Check colored_check(const std::string& family, int i, std::size_t d, int r, std::size_t n,
                    std::vector<std::size_t> sizes, bool equal, const SuiteOptions& options) {
  Json params = {{"d", d}, {"r", r}, {"points", n}, {"class_sizes", sizes}};
  return {family + "/" + pad(i), params, [=] {
            Rng rng(options.seed, family, static_cast<std::uint64_t>(i));
            auto p = random_configuration(rng, d, n, options.dense_rationals);
            SearchConstraints c;
            c.rainbow = random_coloring(rng, n, sizes);
            c.equal_coefficients = equal;
            auto o = certificate_outcome(p, tverberg_search(p, r, c), c);
            if (!o.pass) o.observed["colors"] = c.rainbow->classes();
            return o;
          }};
}

std::vector<Check> colored(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 100);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (int i = 0; i < count; ++i) {
      checks.push_back(colored_check("rainbow-pair/d=" + std::to_string(d), i, d, 2, 2 * (d + 1),
                                     std::vector<std::size_t>(d + 1, 2), false, options));
    }
  }
  for (int i = 0; i < count; ++i) checks.push_back(colored_check("weak-colored/d=2,r=2", i, 2, 2, 7, {3, 2, 2}, false, options));
  for (int i = 0; i < count; ++i) checks.push_back(colored_check("optimal-colored/d=2,r=3", i, 2, 3, 7, {2, 2, 2, 1}, false, options));
  return checks;
}

std::vector<Check> soberon(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 50);
  for (auto [d, r] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
    const std::size_t classes = static_cast<std::size_t>((r - 1) * d + 1);
    const std::size_t n = classes * static_cast<std::size_t>(r);
    for (int i = 0; i < count; ++i) {
      checks.push_back(colored_check("equal-coefficients/d=" + std::to_string(d) + ",r=" + std::to_string(r), i,
                                     static_cast<std::size_t>(d), r, n,
                                     std::vector<std::size_t>(classes, static_cast<std::size_t>(r)), true, options));
    }
  }
  return checks;
}

std::vector<Check> collapse(const SuiteOptions&) {
  std::vector<Check> checks;
  for (int r = 2; r <= 5; ++r) {
    checks.push_back({"r=" + std::to_string(r), {{"r", r}}, [r] {
                        auto collapsed = equivariant_collapse_chessboard(r);
                        auto before = homology(chessboard(r, r).complex);
                        auto after = homology(collapsed.complex);
                        Json torsion_before = Json::array(), torsion_after = Json::array();
                        for (const auto& d : before.degrees) torsion_before.push_back(d.torsion.size());
                        for (const auto& d : after.degrees) torsion_after.push_back(d.torsion.size());
                        auto same = [&] {
                          const std::size_t top = std::max(before.degrees.size(), after.degrees.size());
                          for (std::size_t q = 0; q < top; ++q) {
                            const int qi = static_cast<int>(q);
                            if (before.betti(qi) != after.betti(qi)) return false;
                            const auto* tb = q < before.degrees.size() ? &before.degrees[q].torsion : nullptr;
                            const auto* ta = q < after.degrees.size() ? &after.degrees[q].torsion : nullptr;
                            if ((tb && !tb->empty()) || (ta && !ta->empty())) {
                              if (!tb || !ta || *tb != *ta) return false;
                            }
                          }
                          return true;
                        };
                        Outcome o;
                        o.expected = {{"dimension", r - 2}, {"betti", betti_json(before)}, {"same_homology", true}};
                        o.observed = {{"dimension", collapsed.complex.dimension()},
                                      {"betti", betti_json(after)},
                                      {"same_homology", same()},
                                      {"collapses", collapsed.trace.size()}};
                        o.pass = collapsed.complex.dimension() == r - 2 && same();
                        return o;
                      }});
  }
  return checks;
}

std::vector<Check> quotient_euler(const SuiteOptions&) {
  std::vector<Check> checks;
  for (int p : {3, 5}) {
    for (int k = 1; k <= p - 1; ++k) {
      checks.push_back({"p=" + std::to_string(p) + "/k=" + std::to_string(k), {{"p", p}, {"k", k}}, [p, k] {
                          auto c = chessboard(k, p);
                          auto q = quotient_complex(c.complex, c.column_rotation);
                          const long long chi = euler_characteristic(c.complex);
                          const long long chi_q = euler_characteristic(q.complex);
                          Outcome o;
                          o.expected = {{"euler", chi}, {"p_times_quotient_euler", chi}};
                          o.observed = {{"euler", chi},
                                        {"p_times_quotient_euler", p * chi_q},
                                        {"subdivided", q.subdivided}};
                          o.pass = chi == p * chi_q;
                          return o;
                        }});
    }
  }
  return checks;
}

std::vector<Check> snf_props(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 500);
  for (int i = 0; i < count; ++i) {
    checks.push_back({"smith/" + pad(i), {{"instance", i}}, [i, seed = options.seed] {
                        Rng rng(seed, "snf-props", static_cast<std::uint64_t>(i));
                        const int rows = static_cast<int>(rng.between(1, 8));
                        const int cols = static_cast<int>(rng.between(1, 8));
                        DenseIntMatrix m(rows, cols);
                        for (int a = 0; a < rows; ++a)
                          for (int b = 0; b < cols; ++b)
                            if (rng.between(0, 2)) m(a, b) = rng.between(-9, 9);
                        const SmithForm s = smith_normal_form(m);
                        bool divides = true;
                        const int n = std::min(rows, cols);
                        for (int t = 0; t < n; ++t) {
                          divides = divides && s.d(t, t) >= 0;
                          if (t + 1 < n) {
                            divides = divides && (s.d(t, t) == 0 ? s.d(t + 1, t + 1) == 0
                                                                 : s.d(t + 1, t + 1) % s.d(t, t) == 0);
                          }
                        }
                        Json observed = {
                            {"u_m_v_equals_d", s.u * m * s.v == s.d},
                            {"diagonal", s.d.is_diagonal()},
                            {"divisibility_chain", divides},
                            {"u_unimodular", abs(s.u.determinant()) == 1 &&
                                                 s.u * s.u_inverse == DenseIntMatrix::identity(rows)},
                            {"v_unimodular", abs(s.v.determinant()) == 1 &&
                                                 s.v * s.v_inverse == DenseIntMatrix::identity(cols)},
                            {"sparse_invariants_agree",
                             smith_invariants(IntMatrix::from_dense(m)).torsion == smith_invariants_dense(m).torsion}};
                        Outcome o;
                        o.expected = {{"u_m_v_equals_d", true}, {"diagonal", true}, {"divisibility_chain", true},
                                      {"u_unimodular", true},   {"v_unimodular", true}, {"sparse_invariants_agree", true}};
                        o.observed = observed;
                        o.pass = o.expected == o.observed;
                        return o;
                      }});
  }
  // Boundary composites of every construction.
  std::vector<std::pair<std::string, std::function<ChainComplex()>>> complexes;
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 5; ++n)
      complexes.push_back({"chessboard/" + std::to_string(m) + "x" + std::to_string(n),
                           [m, n] { return chain_complex(chessboard(m, n).complex); }});
  for (int n = 0; n <= 3; ++n)
    for (int r = 2; r <= 3; ++r)
      complexes.push_back({"deleted-join/N=" + std::to_string(n) + ",r=" + std::to_string(r),
                           [n, r] { return chain_complex(deleted_join(full_simplex(n), r, 2).complex); }});
  for (int n = 1; n <= 6; ++n)
    for (int r = 2; r <= 3 && r <= n + 1; ++r)
      complexes.push_back({"deleted-product/N=" + std::to_string(n) + ",r=" + std::to_string(r),
                           [n, r] { return deleted_product_chain(full_simplex(n), r); }});
  for (int r = 2; r <= 4; ++r)
    complexes.push_back({"collapsed/r=" + std::to_string(r),
                         [r] { return chain_complex(equivariant_collapse_chessboard(r).complex); }});
  complexes.push_back({"subdivision/chessboard-2x3", [] {
                         return chain_complex(barycentric_subdivision(chessboard(2, 3).complex));
                       }});
  complexes.push_back({"quotient/chessboard-2x5", [] {
                         auto c = chessboard(2, 5);
                         return chain_complex(quotient_complex(c.complex, c.column_rotation).complex);
                       }});
  complexes.push_back({"join/skeleton", [] {
                         return chain_complex(join(skeleton(full_simplex(4), 1), simplex_boundary(2)));
                       }});
  for (auto& [name, build] : complexes) {
    checks.push_back({"boundary/" + name, {{"complex", name}}, [build = build] {
                        auto c = build();
                        Outcome o;
                        o.expected = {{"boundary_squares_vanish", true}};
                        o.observed = {{"boundary_squares_vanish", boundary_squares_vanish(c)},
                                      {"cells", c.cell_count()}};
                        o.pass = o.observed["boundary_squares_vanish"] == true;
                        return o;
                      }});
  }
  return checks;
}

std::vector<Check> lp_oracle(const SuiteOptions& options) {
  std::vector<Check> checks;
  const int count = trials(options, 200);
  for (int i = 0; i < count; ++i) {
    checks.push_back({"system/" + pad(i), {{"instance", i}}, [i, options] {
                        Rng rng(options.seed, "lp-oracle", static_cast<std::uint64_t>(i));
                        const auto rows = static_cast<std::size_t>(rng.between(1, 4));
                        const auto cols = static_cast<std::size_t>(rng.between(1, 6));
                        FeasibilityProblem p;
                        p.a = RatMatrix(rows, cols);
                        p.b.resize(rows);
                        p.nonnegative.resize(cols);
                        for (std::size_t j = 0; j < cols; ++j) p.nonnegative[j] = rng.between(0, 3) != 0;
                        for (std::size_t r = 0; r < rows; ++r) {
                          for (std::size_t c = 0; c < cols; ++c)
                            if (rng.between(0, 2)) p.a(r, c) = Rational(rng.between(-3, 3));
                          p.b[r] = rng.between(-3, 3);
                          if (options.dense_rationals) p.b[r] /= rng.between(1, 5);
                        }
                        const auto y = feasible(p);
                        const auto oracle = oracle::vertex_enumeration_feasible(p);
                        Outcome o;
                        o.expected = {{"feasible", oracle.has_value()}};
                        o.observed = {{"feasible", y.has_value()}};
                        if (y) o.observed["solution"] = rationals_to_json(*y);
                        o.pass = y.has_value() == oracle.has_value() && (!y || p.is_satisfied_by(*y));
                        if (!o.pass) o.observed["system"] = write_rat_triplets(p.a);
                        return o;
                      }});
  }
  return checks;
}

using SuiteFn = std::vector<Check> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"chessboard-connectivity", chessboard_connectivity},
      {"deleted-join-iso", deleted_join_iso},
      {"deleted-product-connectivity", deleted_product_connectivity},
      {"degree-factorial", degree_factorial},
      {"radon-random", radon_random},
      {"tverberg-random", tverberg_random},
      {"witness-none", witness_none},
      {"colored", colored},
      {"soberon", soberon},
      {"collapse", collapse},
      {"quotient-euler", quotient_euler},
      {"snf-props", snf_props},
      {"lp-oracle", lp_oracle},
  };
  return suites;
}

}  // namespace

bool Report::pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

Json Report::to_json(const SuiteOptions& options) const {
  Json j;
  j["suite"] = suite;
  j["seed"] = options.seed;
  j["pass"] = pass();
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.pass ? 0 : 1;
  j["checks"] = records.size();
  j["failed"] = failed;
  Json list = Json::array();
  for (const auto& r : records) {
    Json e;
    e["id"] = r.id;
    e["parameters"] = r.parameters;
    e["expected"] = r.expected;
    e["observed"] = r.observed;
    e["pass"] = r.pass;
    if (options.timing) e["elapsed_ms"] = r.elapsed_ms;
    list.push_back(std::move(e));
  }
  j["records"] = std::move(list);
  return j;
}

std::string Report::to_table(const SuiteOptions& options) const {
  std::size_t width = 2;
  for (const auto& r : records) width = std::max(width, r.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "id" << "  result";
  if (options.timing) out << "  " << std::right << std::setw(10) << "ms";
  out << "  observed\n";
  for (const auto& r : records) {
    out << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << (r.pass ? "pass  " : "FAIL  ");
    if (options.timing) out << "  " << std::right << std::setw(10) << std::fixed << std::setprecision(1) << r.elapsed_ms;
    std::string observed = r.observed.dump();
    if (observed.size() > 100) observed = observed.substr(0, 97) + "...";
    out << "  " << observed << '\n';
  }
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.pass ? 0 : 1;
  out << suite << ": " << records.size() - failed << "/" << records.size() << " passed\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  std::vector<Check> checks = it->second(options);
  Report report;
  report.suite = name;
  report.records.resize(checks.size());
  const auto count = static_cast<std::ptrdiff_t>(checks.size());
  const int threads = options.jobs > 0 ? options.jobs : 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Check& check = checks[static_cast<std::size_t>(i)];
    CheckRecord& record = report.records[static_cast<std::size_t>(i)];
    record.id = check.id;
    record.parameters = check.parameters;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = check.run();
      record.expected = std::move(o.expected);
      record.observed = std::move(o.observed);
      record.pass = o.pass;
    } catch (const std::exception& e) {
      record.observed = {{"error", e.what()}};
      record.pass = false;
    }
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return report;
}

}  // namespace tverberg
