#include <algorithm>
#include <cmath>

#include "gaussian.hpp"
#include "tropcurv/errors.hpp"
#include "tropcurv/geometry.hpp"

namespace tropcurv {

namespace {

int generator_rank(const std::vector<LatticeVector>& gens) {
  RationalMatrix m;
  for (const auto& g : gens) {
    RationalVector row;
    row.reserve(g.dim());
    for (auto x : g.c) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

AngleMeasure exact_value(double v) {
  AngleMeasure m;
  m.value = v;
  m.method = AngleMethod::exact;
  return m;
}

std::int64_t cross2(const LatticeVector& a, const LatticeVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// Planar sector angle between the two boundary rays of a rank-2 cone in R^2.
AngleMeasure planar_angle(const std::vector<LatticeVector>& gens) {
  std::vector<LatticeVector> boundary;
  for (const auto& g : gens) {
    bool pos = false, neg = false;
    for (const auto& h : gens) {
      std::int64_t c = cross2(g, h);
      if (c > 0) pos = true;
      if (c < 0) neg = true;
    }
    if (!(pos && neg)) boundary.push_back(g);
  }
  if (boundary.empty()) return exact_value(sphere_volume(1));  // whole plane
  double best = 0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    for (std::size_t j = i + 1; j < boundary.size(); ++j) {
      double cr = double(cross2(boundary[i], boundary[j]));
      double dt = double(dot(boundary[i], boundary[j]).convert_to<double>());
      best = std::max(best, std::atan2(std::abs(cr), dt));
    }
  }
  return exact_value(best);
}

std::array<double, 3> unit3(const LatticeVector& v) {
  double x = double(v[0]), y = double(v[1]), z = double(v[2]);
  double n = std::sqrt(x * x + y * y + z * z);
  return {x / n, y / n, z / n};
}

// Van Oosterom-Strackee spherical triangle solid angle of a simplicial cone.
double spherical_triangle(const LatticeVector& a, const LatticeVector& b,
                          const LatticeVector& c) {
  auto u = unit3(a), v = unit3(b), w = unit3(c);
  double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
               u[2] * (v[0] * w[1] - v[1] * w[0]);
  double duv = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  double duw = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
  double dvw = v[0] * w[0] + v[1] * w[1] + v[2] * w[2];
  return std::abs(2.0 * std::atan2(std::abs(det), 1.0 + duv + duw + dvw));
}

double angle_between(const LatticeVector& a, const LatticeVector& b) {
  double ax = 0, bx = 0, ab = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ax += double(a[i]) * a[i];
    bx += double(b[i]) * b[i];
    ab += double(a[i]) * b[i];
  }
  double cr = std::sqrt(std::max(0.0, ax * bx - ab * ab));
  return std::atan2(cr, ab);
}

// Extreme rays of the facet's 2-dimensional cone: the pair through which all
// other incident rays are non-negative combinations.
std::pair<LatticeVector, LatticeVector> facet_extremes(const std::vector<LatticeVector>& rays) {
  if (rays.size() == 2) return {rays[0], rays[1]};
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      bool all_inside = true;
      for (std::size_t k = 0; k < rays.size() && all_inside; ++k) {
        if (k == i || k == j) continue;
        RationalMatrix m(rays[0].dim(), RationalVector(2));
        RationalVector b(rays[0].dim());
        for (std::size_t r = 0; r < rays[0].dim(); ++r) {
          m[r][0] = rays[i][r];
          m[r][1] = rays[j][r];
          b[r] = rays[k][r];
        }
        auto sol = solve_particular(std::move(m), std::move(b));
        if (!sol || (*sol)[0] < 0 || (*sol)[1] < 0) all_inside = false;
      }
      if (all_inside) return {rays[i], rays[j]};
    }
  }
  throw Error("facet extreme rays not found");  // unreachable for valid cones
}

// Facet normals flipped so that the cone side is always { n . x >= 0 }.
std::vector<LatticeVector> inward_normals(const std::vector<HalfSpace>& facets) {
  std::vector<LatticeVector> normals;
  normals.reserve(facets.size());
  for (const auto& f : facets) normals.push_back(f.nonneg ? f.normal : -f.normal);
  return normals;
}

// Exact spherical-excess measure of a full-dimensional cone in R^3 with
// cached facets: fan decomposition from one extreme ray, one spherical
// triangle per facet avoiding it. Non-pointed full-dimensional cones are
// half-spaces or wedges and are handled directly.
AngleMeasure spherical_measure(const std::vector<LatticeVector>& gens,
                               const std::vector<HalfSpace>& facets) {
  if (facets.empty()) return exact_value(sphere_volume(2));  // whole space
  std::vector<LatticeVector> normals = inward_normals(facets);
  int nrank = generator_rank(normals);
  if (nrank == 1) return exact_value(sphere_volume(2) / 2.0);  // half-space
  if (nrank == 2) {
    // wedge: lune of dihedral angle pi - angle(n1, n2)
    double theta = M_PI - angle_between(normals[0], normals[1]);
    return exact_value(2.0 * theta);
  }
  // pointed: extreme rays lie on >= 2 independent facet hyperplanes
  std::vector<LatticeVector> extremes;
  for (const auto& g : gens) {
    std::vector<LatticeVector> incident;
    for (const auto& n : normals)
      if (dot(n, g) == 0) incident.push_back(n);
    if (incident.size() >= 2 && generator_rank(incident) >= 2) extremes.push_back(g);
  }
  if (extremes.empty()) throw Error("pointed cone without extreme rays");
  const LatticeVector r0 = extremes.front();
  double total = 0;
  for (const auto& n : normals) {
    if (dot(n, r0) == 0) continue;  // facet contains r0
    std::vector<LatticeVector> on_facet;
    for (const auto& g : extremes)
      if (dot(n, g) == 0) on_facet.push_back(g);
    auto [u, v] = facet_extremes(on_facet);
    total += spherical_triangle(r0, u, v);
  }
  return exact_value(total);
}

using internal::GaussianStream;

AngleMeasure monte_carlo_measure(int d, const std::vector<HalfSpace>& facets,
                                 const AngleConfig& cfg) {
  double sigma = sphere_volume(d - 1);
  if (facets.empty()) return exact_value(sigma);
  // Canonical orientation: measure whichever of C, -C has the smaller sorted
  // normal list, making the estimate invariant under global sign flips.
  std::vector<LatticeVector> pos = inward_normals(facets);
  std::vector<LatticeVector> neg;
  neg.reserve(pos.size());
  for (const auto& n : pos) neg.push_back(-n);
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  const double flip = neg < pos ? -1.0 : 1.0;

  GaussianStream gs(cfg.seed);
  std::vector<double> x(d);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    double norm2 = 0;
    do {
      norm2 = 0;
      for (int i = 0; i < d; ++i) {
        x[i] = gs.next();
        norm2 += x[i] * x[i];
      }
    } while (norm2 == 0);
    double inv = flip / std::sqrt(norm2);
    for (int i = 0; i < d; ++i) x[i] *= inv;
    bool inside = true;
    for (const auto& n : pos) {
      if (dot(n, x.data()) < 0) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }
  double p = double(hits) / double(cfg.samples);
  AngleMeasure m;
  m.value = sigma * p;
  m.method = AngleMethod::monte_carlo;
  m.stderr_ = sigma * std::sqrt(p * (1.0 - p) / double(cfg.samples));
  m.seed = cfg.seed;
  m.samples = cfg.samples;
  return m;
}

}  // namespace

AngleMeasure solid_angle(const Cone& c, const AngleConfig& cfg) {
  const int d = c.ambient_dim;
  if (d < 2) throw NonPositiveDimension("solid_angle needs ambient dimension >= 2");
  if (cfg.samples == 0) throw InvalidSampleCount("sample count must be >= 1");

  auto gens = dedup_primitive(c.generators);
  if (gens.empty()) return exact_value(0);          // cone reduced to the origin
  if (generator_rank(gens) < d) return exact_value(0);  // empty interior

  const bool needs_facets = cfg.force_monte_carlo || d >= 3;
  if (needs_facets && !c.facets) throw MissingFacets("cone facets not computed");

  if (cfg.force_monte_carlo) return monte_carlo_measure(d, *c.facets, cfg);
  if (d == 2) return planar_angle(gens);
  if (d == 3) return spherical_measure(gens, *c.facets);
  return monte_carlo_measure(d, *c.facets, cfg);
}

}  // namespace tropcurv
