#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropcurv/constants.hpp"
#include "tropcurv/geometry.hpp"
#include "tropcurv/patchwork.hpp"
#include "tropcurv/tropical.hpp"

namespace tropcurv {

/// Cone spanned at a hypersurface vertex by the edge vectors of its dual
/// simplex oriented from minus-signed to plus-signed vertices. Constant
/// signs give the empty cone (solid angle 0).
struct CurvatureConeAt {
  int vertex = -1;
  Orthant orthant;
  Cone cone;
};

Cone curvature_cone(const LatticeSimplex& dual, const std::vector<int>& vertex_signs);

/// Solid angle of the curvature cone of the twisted signs S_z(theta) on the
/// dual simplex. The Monte Carlo stream, when used, is seeded per
/// (vertex_id, orthant) from cfg.seed.
AngleMeasure vertex_curvature(const LatticeSimplex& dual, const SignDistribution& theta,
                              const Orthant& z, const AngleConfig& cfg = {},
                              std::uint64_t vertex_id = 0);

/// Sum over all 2^d orthant copies of the vertex. For an elementary dual
/// simplex this equals sigma_n / 2 for every theta.
AngleMeasure per_vertex_total(const LatticeSimplex& dual, const SignDistribution& theta,
                              const AngleConfig& cfg = {}, std::uint64_t vertex_id = 0);

struct PerVertexCurvature {
  int vertex = -1;
  RationalVector position;
  AngleMeasure total;
  bool dual_elementary = false;
};

struct CurvatureTotal {
  double value = 0;
  bool exact = true;
  double stderr_ = 0;
};

struct CurvatureReport {
  int n = 0;
  CurvatureConstants constants;
  Rational newton_volume = 0;
  std::vector<PerVertexCurvature> per_vertex;
  CurvatureTotal polyhedral;                    // sum of per-vertex totals
  double complex_value = 0;                     // signed total of the complex model
  double complex_abs = 0;
  double ratio = 0;                             // (sigma_2n/sigma_n) polyhedral / |complex|
  std::optional<double> expected_non_singular;  // r sigma_n / 2 when non-singular
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

/// Sum of per-vertex curvatures over all orthants. Throws NotGeneric when
/// some maximal cell of the dual subdivision is not a simplex.
CurvatureReport polyhedral_total_curvature(const TropicalPolynomial& f,
                                           const SignDistribution& theta,
                                           const AngleConfig& cfg = {});

/// (-1)^n a_n (n+1)! vol(Newton polytope) vol_{FS}(CP^n), with
/// vol_{FS}(CP^n) = sigma_{2n+1} / sigma_1. Exact volume, closed form.
CurvatureReport complex_total_curvature(const TropicalPolynomial& f);

/// r sigma_n / 2 where r is the number of hypersurface vertices.
/// Throws NotNonSingular.
double real_total_curvature_nonsingular(const TropicalPolynomial& f);

struct InequalityReport {
  double lhs = 0;           // (sigma_2n / sigma_n) * polyhedral total
  double rhs = 0;           // |complex total|
  bool holds = false;       // lhs <= rhs within the error margin
  bool non_singular = false;
  bool equality = false;    // |lhs - rhs| within tolerance (expected iff non-singular)
  double tolerance = 0;
  double margin = 0;        // Monte Carlo allowance added to the comparison
  CurvatureReport report;
};

InequalityReport verify_inequality(const TropicalPolynomial& f, const SignDistribution& theta,
                                   const AngleConfig& cfg = {});

/// Checks that the curvature cones of all non-constant sign choices fixing
/// phi(v0) = -1 tile the half-space below the facet hyperplane opposite the
/// lexicographically smallest vertex v0: every sampled direction lies in
/// exactly one cone, and the generator-facet description agrees with the
/// intersection of vertex half-spaces. Throws NotElementary.
struct PartitionReport {
  struct ConeEntry {
    std::vector<int> signs;     // per simplex vertex, +1/-1
    std::uint64_t hits = 0;
  };
  std::vector<ConeEntry> cones;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t multi_hits = 0;       // sample in more than one cone
  std::uint64_t zero_hits = 0;        // sample in no cone
  std::uint64_t description_mismatches = 0;
  bool passed = false;
};

PartitionReport partition_check(const LatticeSimplex& s, std::uint64_t samples = 100000,
                                std::uint64_t seed = kDefaultSeed);

/// Euler characteristic route: chi = (-1)^n (n+1)! vol, complex total
/// = a_n (sigma_{2n+1} / sigma_1) chi, and chi = (-1)^n r.
/// Throws NotNonSingular.
struct GaussBonnetReport {
  BigInt chi = 0;
  std::int64_t vertex_count = 0;
  double complex_value = 0;
  double expected_from_chi = 0;
  double residual = 0;      // relative
  bool holds = false;
};

GaussBonnetReport gauss_bonnet(const TropicalPolynomial& f);

}  // namespace tropcurv
