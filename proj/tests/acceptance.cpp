// Acceptance gate: nine checks covering the headline identities of the
// library at desk scale, each with a pinned tolerance and a wall-clock
// budget. Run with no arguments for the full gate or with a list of check
// numbers (1..9) for a subset.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tropcurv/amoeba.hpp"
#include "tropcurv/curvature.hpp"
#include "tropcurv/io.hpp"
#include "tropcurv/tropical.hpp"

namespace {

using namespace tropcurv;

std::string fixture(const std::string& name) {
  return std::string(TROPCURV_FIXTURE_DIR) + "/" + name;
}

struct Check {
  int number;
  const char* name;
  const char* intent;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

TropicalPolynomial tropical_line() {
  TropicalPolynomial f(2);
  f.add_term({0, 0}, 0);
  f.add_term({1, 0}, 0);
  f.add_term({0, 1}, 0);
  return f;
}

// Plane curve of the given degree with a strictly convex quadratic lift:
// the induced subdivision is the Delaunay triangulation of the support
// under the form, so generic lifts are unimodular triangulations.
TropicalPolynomial quadratic_lift_curve(int degree, std::int64_t a, std::int64_t b,
                                        std::int64_t c) {
  TropicalPolynomial f(2);
  for (std::int64_t i = 0; i <= degree; ++i)
    for (std::int64_t j = 0; j + i <= degree; ++j)
      f.add_term(LatticeVector{i, j}, Rational(-(a * i * i + b * i * j + c * j * j)));
  return f;
}

// Random positive definite integer form (4ac > b^2).
TropicalPolynomial random_curve(std::mt19937_64& rng, int degree) {
  for (;;) {
    const std::int64_t a = 1 + std::int64_t(rng() % 400);
    const std::int64_t c = 1 + std::int64_t(rng() % 400);
    const std::int64_t bound = std::int64_t(std::floor(2.0 * std::sqrt(double(a) * double(c))));
    const std::int64_t b = std::int64_t(rng() % (2 * bound + 1)) - bound;
    if (4 * a * c <= b * b) continue;
    auto f = quadratic_lift_curve(degree, a, b, c);
    if (classify(f).non_singular) return f;
  }
}

SignDistribution random_signs(std::mt19937_64& rng, const TropicalPolynomial& f) {
  SignDistribution theta;
  for (const auto& [e, c] : f.terms()) theta.signs[e] = rng() % 2 ? -1 : +1;
  return theta;
}

// Random full-dimensional lattice simplex with vertices in [-4, 4]^d,
// filtered to odd edge determinant (elementary) when `odd` is set, even
// and non-degenerate otherwise.
LatticeSimplex random_simplex(std::mt19937_64& rng, int d, bool odd) {
  for (;;) {
    std::vector<LatticeVector> vs;
    for (int i = 0; i <= d; ++i) {
      LatticeVector v(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) v[j] = std::int64_t(rng() % 9) - 4;
      vs.push_back(v);
    }
    LatticeSimplex s{vs};
    BigInt det;
    try {
      det = normalized_volume(s);
    } catch (const DegenerateSimplex&) {
      continue;
    }
    const bool is_odd = (det % 2) != 0;
    if (is_odd == odd) return s;
  }
}

SignDistribution mask_signs(const LatticeSimplex& s, unsigned mask) {
  SignDistribution theta;
  for (std::size_t i = 0; i < s.vertices.size(); ++i)
    theta.signs[s.vertices[i]] = (mask >> i) & 1 ? -1 : +1;
  return theta;
}

// 1. Sign independence on the line: every one of the 2^3 distributions
//    yields total curvature exactly pi through the exact angle path.
bool check_line_sign_independence(std::string& detail) {
  auto f = tropical_line();
  for (unsigned mask = 0; mask < 8; ++mask) {
    SignDistribution theta;
    unsigned bit = 0;
    for (const auto& [e, c] : f.terms()) theta.signs[e] = (mask >> bit++) & 1 ? -1 : +1;
    auto rep = polyhedral_total_curvature(f, theta);
    if (!rep.polyhedral.exact) {
      detail = "expected the exact angle path";
      return false;
    }
    if (!close(rep.polyhedral.value, M_PI, 1e-9)) {
      detail = "mask " + std::to_string(mask) + " total " + std::to_string(rep.polyhedral.value);
      return false;
    }
  }
  detail = "8/8 distributions at pi";
  return true;
}

// 2. Degree invariance: 100 random non-singular curves of degree <= 6, 10
//    random sign distributions each; total = d^2 pi independent of signs.
bool check_degree_squared(std::string& detail) {
  std::mt19937_64 rng(20260813);
  int curves = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 1 + int(rng() % 6);
    auto f = random_curve(rng, degree);
    auto sub = dual_subdivision(f);
    if (int(sub.cells.size()) != degree * degree) {
      detail = "degree " + std::to_string(degree) + " produced " +
               std::to_string(sub.cells.size()) + " cells";
      return false;
    }
    // One public-API reference total, then per-cell sums for the rest (the
    // per-vertex totals over a fixed subdivision are what the full call
    // assembles, so the two must agree exactly).
    auto theta0 = random_signs(rng, f);
    auto rep = polyhedral_total_curvature(f, theta0);
    const double target = double(degree * degree) * M_PI;
    double reference = 0;
    for (const auto& cell : sub.cells)
      reference += per_vertex_total(LatticeSimplex{cell.exponents}, theta0).value;
    if (reference != rep.polyhedral.value) {
      detail = "per-vertex assembly disagrees with the full report";
      return false;
    }
    for (int k = 0; k < 10; ++k) {
      auto theta = k == 0 ? theta0 : random_signs(rng, f);
      double total = 0;
      for (const auto& cell : sub.cells)
        total += per_vertex_total(LatticeSimplex{cell.exponents}, theta).value;
      if (!close(total, target, 1e-9)) {
        detail = "degree " + std::to_string(degree) + " total " + std::to_string(total) +
                 " expected " + std::to_string(target);
        return false;
      }
    }
    ++curves;
  }
  detail = std::to_string(curves) + " curves x 10 sign choices at d^2 pi";
  return true;
}

// 3. Surface vertices: random elementary 3-simplices, all 2^4 sign
//    distributions, per-vertex total 2 pi through exact spherical angles.
bool check_surface_vertex_totals(std::string& detail) {
  std::mt19937_64 rng(31415926);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = random_simplex(rng, 3, true);
    for (unsigned mask = 0; mask < 16; ++mask) {
      auto m = per_vertex_total(s, mask_signs(s, mask));
      if (m.method != AngleMethod::exact) {
        detail = "expected exact spherical angles";
        return false;
      }
      if (!close(m.value, 2 * M_PI, 1e-8)) {
        detail = "trial " + std::to_string(trial) + " mask " + std::to_string(mask) + " total " +
                 std::to_string(m.value);
        return false;
      }
    }
  }
  detail = "25 simplices x 16 distributions at sigma_2/2";
  return true;
}

// 4. Partition: curvature cones tile the half-space below the smallest
//    vertex; sampled directions land in exactly one cone.
bool check_partition(std::string& detail) {
  std::mt19937_64 rng(577215664);
  std::uint64_t samples_total = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = trial % 2 == 0 ? 2 : 3;
    auto s = random_simplex(rng, d, true);
    auto rep = partition_check(s, 100000, kDefaultSeed + trial);
    if (!rep.passed || rep.zero_hits != 0 || rep.multi_hits != 0 ||
        rep.description_mismatches != 0) {
      detail = "trial " + std::to_string(trial) + ": zero=" + std::to_string(rep.zero_hits) +
               " multi=" + std::to_string(rep.multi_hits) +
               " mismatch=" + std::to_string(rep.description_mismatches);
      return false;
    }
    samples_total += rep.samples;
  }
  detail = std::to_string(samples_total) + " directions, zero violations";
  return true;
}

// 5. Equality for non-singular fixtures, strict inequality for the
//    volume-3 witness.
bool check_equality_cases(std::string& detail) {
  struct Case {
    const char* file;
    double tol;
  };
  for (const Case& c : {Case{"line.json", 1e-9}, Case{"conic.json", 1e-9},
                        Case{"surface3.json", 1e-8}}) {
    auto doc = load_input(fixture(c.file));
    auto rep = verify_inequality(doc.poly, doc.signs);
    if (!rep.holds || !rep.non_singular || !rep.equality ||
        !close(rep.lhs, rep.rhs, c.tol * std::max(1.0, rep.rhs))) {
      detail = std::string(c.file) + ": lhs " + std::to_string(rep.lhs) + " rhs " +
               std::to_string(rep.rhs);
      return false;
    }
  }
  auto doc = load_input(fixture("strict_witness.json"));
  auto rep = verify_inequality(doc.poly, doc.signs);
  if (!rep.holds || rep.non_singular || rep.equality || !close(rep.lhs, 2 * M_PI, 1e-9) ||
      !close(rep.rhs, 6 * M_PI, 1e-9)) {
    detail = "witness: lhs " + std::to_string(rep.lhs) + " rhs " + std::to_string(rep.rhs);
    return false;
  }
  detail = "3 equalities + strict witness 2pi < 6pi";
  return true;
}

// 6. Euler characteristic route: chi = -d^2 and total = -4 pi vol for
//    curves up to degree 6; chi = 3! vol and total = 8 pi^2 vol for the
//    cubic surface.
bool check_gauss_bonnet(std::string& detail) {
  for (int degree = 1; degree <= 6; ++degree) {
    auto f = quadratic_lift_curve(degree, 1, 1, 1);
    auto gb = gauss_bonnet(f);
    const double vol = double(degree * degree) / 2.0;
    if (gb.chi != -degree * degree || !gb.holds || gb.residual > 1e-12 ||
        !close(gb.complex_value, -4 * M_PI * vol, 1e-12 * std::max(1.0, 4 * M_PI * vol))) {
      detail = "degree " + std::to_string(degree);
      return false;
    }
  }
  auto doc = load_input(fixture("surface3.json"));
  auto gb = gauss_bonnet(doc.poly);
  const double vol = 4.5;
  if (gb.chi != 27 || !gb.holds || gb.residual > 1e-12 ||
      !close(gb.complex_value, 8 * M_PI * M_PI * vol, 1e-10)) {
    detail = "cubic surface: chi " + gb.chi.str() + " total " + std::to_string(gb.complex_value);
    return false;
  }
  detail = "curves d=1..6 and the cubic surface, residuals < 1e-12";
  return true;
}

// 7. Twist transitivity characterizes elementary simplices, checked against
//    exhaustive enumeration of all 2^{d} twists.
bool check_orbit_transitivity(std::string& detail) {
  std::mt19937_64 rng(1644934066);
  auto exhaustive_orbit = [](const LatticeSimplex& s) {
    const int d = int(s.ambient_dim());
    std::set<std::vector<int>> classes;
    for (unsigned code = 0; code < (1u << d); ++code) {
      std::vector<int> twisted;
      for (const auto& v : s.vertices) {
        std::int64_t par = 0;
        for (int i = 0; i < d; ++i) par += ((code >> i) & 1) * v[i];
        twisted.push_back(((par % 2) + 2) % 2 == 0 ? +1 : -1);
      }
      if (twisted[0] == -1)
        for (auto& t : twisted) t = -t;
      classes.insert(twisted);
    }
    return int(classes.size());
  };
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + trial % 2;
    auto good = random_simplex(rng, d, true);
    auto bad = random_simplex(rng, d, false);
    auto rep_good = orbit_analysis(good);
    auto rep_bad = orbit_analysis(bad);
    if (!rep_good.transitive || !rep_good.elementary ||
        rep_good.orbit_size != exhaustive_orbit(good) || rep_good.orbit_size != (1 << d)) {
      detail = "elementary trial " + std::to_string(trial);
      return false;
    }
    if (rep_bad.transitive || rep_bad.elementary ||
        rep_bad.orbit_size != exhaustive_orbit(bad) || rep_bad.orbit_size >= (1 << d)) {
      detail = "non-elementary trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "25 elementary transitive, 25 non-elementary not";
  return true;
}

// 8. Amoeba totals approach r pi along decreasing t.
bool check_amoeba_convergence(std::string& detail) {
  auto line = load_input(fixture("line.json"));
  auto table_line =
      convergence_experiment(line.poly, line.signs, {0.5, 0.2, 0.05}, 128);
  if (!close(table_line.target, M_PI, 1e-12)) {
    detail = "line target " + std::to_string(table_line.target);
    return false;
  }
  for (std::size_t i = 0; i + 1 < table_line.rows.size(); ++i) {
    if (table_line.rows[i + 1].rel_error > table_line.rows[i].rel_error + 1e-9) {
      detail = "line errors increase along the t-list";
      return false;
    }
  }
  if (table_line.rows.back().rel_error >= 0.02) {
    detail = "line error " + std::to_string(table_line.rows.back().rel_error) + " at t=0.05";
    return false;
  }

  auto conic = load_input(fixture("conic.json"));
  auto table_conic =
      convergence_experiment(conic.poly, conic.signs, {0.2, 0.05, 0.01}, 256);
  if (!close(table_conic.target, 4 * M_PI, 1e-12)) {
    detail = "conic target " + std::to_string(table_conic.target);
    return false;
  }
  for (std::size_t i = 0; i + 1 < table_conic.rows.size(); ++i) {
    if (table_conic.rows[i + 1].rel_error > table_conic.rows[i].rel_error + 1e-9) {
      detail = "conic errors increase along the t-list";
      return false;
    }
  }
  if (table_conic.rows.back().rel_error >= 0.05) {
    detail = "conic error " + std::to_string(table_conic.rows.back().rel_error) + " at t=0.01";
    return false;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "line %.2e -> %.2e, conic %.2e -> %.2e",
                table_line.rows.front().rel_error, table_line.rows.back().rel_error,
                table_conic.rows.front().rel_error, table_conic.rows.back().rel_error);
  detail = buf;
  return true;
}

// 9. Monte Carlo octant estimate: 4 pi / 8 within 4 stderr, bit-identical
//    on rerun with the same seed.
bool check_monte_carlo(std::string& detail) {
  Cone c = make_cone(3, {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}});
  ensure_facets(c);
  AngleConfig cfg;
  cfg.force_monte_carlo = true;
  cfg.samples = 200000;
  auto m1 = solid_angle(c, cfg);
  const double target = 4 * M_PI / 8;
  if (std::fabs(m1.value - target) > 4 * m1.stderr_) {
    detail = "estimate " + std::to_string(m1.value) + " stderr " + std::to_string(m1.stderr_);
    return false;
  }
  auto m2 = solid_angle(c, cfg);
  if (m1.value != m2.value || m1.stderr_ != m2.stderr_) {
    detail = "rerun with the same seed is not bit-identical";
    return false;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "pi/2 %+.2e at %.1e samples, deterministic",
                m1.value - target, double(cfg.samples));
  detail = buf;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Check> checks = {
      {1, "line_sign_independence", "total curvature pi for all 8 sign choices", 1.0,
       check_line_sign_independence},
      {2, "degree_squared_totals", "100 random curves x 10 signs: total = d^2 pi", 30.0,
       check_degree_squared},
      {3, "surface_vertex_totals", "25 elementary 3-simplices x 16 signs: 2 pi", 30.0,
       check_surface_vertex_totals},
      {4, "cone_partition", "50 x 10^5 directions in exactly one curvature cone", 60.0,
       check_partition},
      {5, "equality_and_strict_witness", "real = complex iff non-singular", 60.0,
       check_equality_cases},
      {6, "gauss_bonnet_route", "chi route matches closed forms, residual < 1e-12", 1.0,
       check_gauss_bonnet},
      {7, "twist_orbit_transitivity", "transitive iff elementary (exhaustive twists)", 5.0,
       check_orbit_transitivity},
      {8, "amoeba_convergence", "traced totals approach r pi along the t-list", 60.0,
       check_amoeba_convergence},
      {9, "monte_carlo_octant", "4pi/8 within 4 stderr, bit-identical rerun", 5.0,
       check_monte_carlo},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_passed = true;
  int ran = 0;
  for (const auto& check : checks) {
    if (!selected.empty() && !selected.count(check.number)) continue;
    ++ran;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = check.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= check.budget_seconds;
    if (passed && !in_budget) {
      detail += " (budget " + std::to_string(check.budget_seconds) + "s exceeded)";
    }
    const bool ok = passed && in_budget;
    std::printf("[%s] %d. %s - %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", check.number, check.name,
                check.intent, detail.c_str(), seconds);
    all_passed = all_passed && ok;
  }

  if (ran == 0) {
    std::fprintf(stderr, "no checks selected\n");
    return 2;
  }
  if (!all_passed) {
    std::fprintf(stderr, "acceptance failed\n");
    return 1;
  }
  std::printf("acceptance passed (%d checks)\n", ran);
  return 0;
}
