#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropcurv/constants.hpp"
#include "tropcurv/lattice.hpp"
#include "tropcurv/linalg.hpp"

namespace tropcurv {

/// Full-dimensional lattice simplex: d+1 vertices in R^d (d = n+1).
struct LatticeSimplex {
  std::vector<LatticeVector> vertices;

  std::size_t ambient_dim() const {
    return vertices.empty() ? 0 : vertices.front().dim();
  }
};

/// Closed half-space through the origin: { x : normal . x >= 0 } when
/// nonneg, else { x : normal . x <= 0 }. Normals are primitive integer.
struct HalfSpace {
  LatticeVector normal;
  bool nonneg = true;

  bool contains(const LatticeVector& x) const {
    BigInt s = dot(normal, x);
    return nonneg ? s >= 0 : s <= 0;
  }
  bool contains(const double* x, std::size_t) const {
    double s = dot(normal, x);
    return nonneg ? s >= 0 : s <= 0;
  }
};

/// Convex polyhedral cone given by generators (apex at the origin).
/// Facet half-spaces are cached once computed; for full-dimensional cones
/// the cone equals the intersection of its facets.
struct Cone {
  int ambient_dim = 0;
  std::vector<LatticeVector> generators;
  std::optional<std::vector<HalfSpace>> facets;
};

/// Builds a cone, rejecting zero generators and dimension mismatches.
Cone make_cone(int ambient_dim, std::vector<LatticeVector> generators);

/// Primitive representatives of the generator rays, deduplicated and sorted.
std::vector<LatticeVector> dedup_primitive(const std::vector<LatticeVector>& gens);

/// Facet half-spaces of the conical hull: candidate normals come from exact
/// null spaces of (d-1)-subsets of generators; a candidate is kept when all
/// generators lie weakly on one side. Deduplicated by primitive normal and
/// sorted. For cones whose span is not full-dimensional the result also
/// contains pairs of opposite half-spaces pinning the span.
std::vector<HalfSpace> cone_facets(const Cone& c);

/// Computes and caches facets.
void ensure_facets(Cone& c);

enum class AngleMethod { exact, monte_carlo };

/// Solid angle value in [0, sigma_n]. Exact methods report stderr 0 and
/// seed/samples 0.
struct AngleMeasure {
  double value = 0;
  AngleMethod method = AngleMethod::exact;
  double stderr_ = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x74726f70637576ULL;  // arbitrary fixed seed
inline constexpr std::uint64_t kDefaultSamples = 200000;

struct AngleConfig {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  bool force_monte_carlo = false;
};

/// Solid angle of the cone at the origin, measured on the unit sphere S^n
/// (ambient dimension n+1 >= 2).
///   n = 1: exact planar angle between the boundary rays,
///   n = 2: exact spherical excess over a fan of simplicial subcones,
///   n >= 3 (or forced): Monte Carlo over facet sign tests, deterministic
///   for a fixed seed; the seed and sample count are recorded in the result.
/// Cones with empty interior (including the empty cone) measure 0 exactly;
/// a cone equal to the whole space measures sigma_n exactly.
/// Throws MissingFacets when a facet-based path runs on a cone without
/// cached facets, and InvalidSampleCount when samples == 0.
AngleMeasure solid_angle(const Cone& c, const AngleConfig& cfg = {});

/// Euclidean volume |det| / d! of the simplex. Throws DegenerateSimplex.
Rational simplex_lattice_volume(const LatticeSimplex& s);

/// Normalized volume |det| of the edge matrix (d! times the volume).
BigInt normalized_volume(const LatticeSimplex& s);

/// Normalized volume 1.
bool is_primitive(const LatticeSimplex& s);

/// Edge vectors from any base vertex reduce mod 2 to a basis of GF(2)^d;
/// equivalently the edge determinant is odd. Base-vertex independent.
bool is_elementary(const LatticeSimplex& s);

/// Primitive inward normals of the facets opposite each vertex: normal_v
/// vanishes on the facet not containing v and is positive on v.
std::vector<LatticeVector> inward_facet_normals(const LatticeSimplex& s);

/// Deterministic per-(vertex, orthant) stream seed derived from a master seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t vertex_id, std::uint64_t orthant_code);

}  // namespace tropcurv
