#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "tropcurv/errors.hpp"
#include "tropcurv/geometry.hpp"

using namespace tropcurv;

namespace {

// Independent 2x2 / 3x3 integer determinants for the volume oracles.
std::int64_t det2(const LatticeVector& a, const LatticeVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

std::int64_t det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

LatticeSimplex simplex(std::initializer_list<LatticeVector> vs) { return {std::vector(vs)}; }

bool tight_for_some_generator(const HalfSpace& h, const std::vector<LatticeVector>& gens) {
  for (const auto& g : gens)
    if (dot(h.normal, g) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("make_cone validates generators") {
  CHECK_THROWS_AS(make_cone(2, {LatticeVector{0, 0}}), ZeroGenerator);
  CHECK_THROWS_AS(make_cone(2, {LatticeVector{1, 0, 0}}), DimensionMismatch);
  Cone c = make_cone(2, {LatticeVector{1, 0}, LatticeVector{0, 1}});
  CHECK(c.ambient_dim == 2);
  CHECK_FALSE(c.facets.has_value());
}

TEST_CASE("dedup_primitive collapses scaled duplicates and sorts") {
  auto rays = dedup_primitive({LatticeVector{2, 4}, LatticeVector{1, 2}, LatticeVector{3, 0},
                               LatticeVector{1, 0}, LatticeVector{-2, -4}});
  CHECK(rays == std::vector<LatticeVector>{{-1, -2}, {1, 0}, {1, 2}});
}

TEST_CASE("cone facets bound all generators and each facet is tight") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + int(rng() % 2);
    std::vector<LatticeVector> gens;
    for (int i = 0; i < d + 2; ++i) {
      LatticeVector g(static_cast<std::size_t>(d));
      bool zero = true;
      for (int j = 0; j < d; ++j) {
        g[j] = std::int64_t(rng() % 9) - 4;
        if (g[j] != 0) zero = false;
      }
      if (zero) g[0] = 1;
      gens.push_back(g);
    }
    Cone c = make_cone(d, gens);
    ensure_facets(c);
    REQUIRE(c.facets.has_value());
    for (const auto& f : *c.facets) {
      CAPTURE(trial);
      for (const auto& g : gens) CHECK(f.contains(g));
      CHECK(tight_for_some_generator(f, gens));
    }
  }
}

TEST_CASE("octant facets are the coordinate planes") {
  Cone c = make_cone(3, {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}});
  ensure_facets(c);
  REQUIRE(c.facets.has_value());
  CHECK(c.facets->size() == 3);
  // Interior point passes all facets, exterior points fail at least one.
  LatticeVector inside{1, 1, 1}, outside{-1, 1, 1};
  int in_count = 0, out_count = 0;
  for (const auto& f : *c.facets) {
    if (f.contains(inside)) ++in_count;
    if (f.contains(outside)) ++out_count;
  }
  CHECK(in_count == 3);
  CHECK(out_count == 2);
}

TEST_CASE("simplex volumes match determinant oracles") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + int(rng() % 2);
    std::vector<LatticeVector> vs;
    for (int i = 0; i <= d; ++i) {
      LatticeVector v(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) v[j] = std::int64_t(rng() % 11) - 5;
      vs.push_back(v);
    }
    LatticeSimplex s{vs};
    std::int64_t det = d == 2 ? det2(vs[1] - vs[0], vs[2] - vs[0])
                              : det3(vs[1] - vs[0], vs[2] - vs[0], vs[3] - vs[0]);
    CAPTURE(trial);
    if (det == 0) {
      CHECK_THROWS_AS(simplex_lattice_volume(s), DegenerateSimplex);
      continue;
    }
    const std::int64_t vol = det < 0 ? -det : det;
    CHECK(normalized_volume(s) == vol);
    Rational fact = d == 2 ? 2 : 6;
    CHECK(simplex_lattice_volume(s) == Rational(vol) / fact);
    CHECK(is_primitive(s) == (vol == 1));
    CHECK(is_elementary(s) == (vol % 2 == 1));
  }
}

TEST_CASE("elementary and primitive flags on hand-picked simplices") {
  auto unit2 = simplex({LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{0, 1}});
  CHECK(is_primitive(unit2));
  CHECK(is_elementary(unit2));

  // Normalized volume 3: elementary (odd) but not primitive.
  auto tall = simplex({LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{0, 3}});
  CHECK_FALSE(is_primitive(tall));
  CHECK(is_elementary(tall));

  // Doubled edge: even determinant, not elementary.
  auto doubled = simplex({LatticeVector{0, 0}, LatticeVector{2, 0}, LatticeVector{0, 1}});
  CHECK_FALSE(is_primitive(doubled));
  CHECK_FALSE(is_elementary(doubled));
}

TEST_CASE("elementary is base-vertex independent") {
  std::vector<LatticeVector> vs{{1, 2, 0}, {2, 2, 1}, {1, 3, 3}, {0, 0, 1}};
  const bool ref = is_elementary(LatticeSimplex{vs});
  std::sort(vs.begin(), vs.end());
  do {
    CHECK(is_elementary(LatticeSimplex{vs}) == ref);
  } while (std::next_permutation(vs.begin(), vs.end()));
}

TEST_CASE("inward facet normals vanish on the opposite facet and point at the vertex") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + int(rng() % 2);
    std::vector<LatticeVector> vs;
    for (int i = 0; i <= d; ++i) {
      LatticeVector v(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) v[j] = std::int64_t(rng() % 9) - 4;
      vs.push_back(v);
    }
    LatticeSimplex s{vs};
    try {
      simplex_lattice_volume(s);
    } catch (const DegenerateSimplex&) {
      continue;
    }
    auto normals = inward_facet_normals(s);
    REQUIRE(normals.size() == vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      CAPTURE(trial);
      CAPTURE(i);
      // The facet opposite vertex i is { vs[j] : j != i }; the normal is
      // constant on it and strictly larger at vs[i].
      std::size_t ref = i == 0 ? 1 : 0;
      BigInt offset = dot(normals[i], vs[ref]);
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (j == i) continue;
        CHECK(dot(normals[i], vs[j]) == offset);
      }
      CHECK(dot(normals[i], vs[i]) > offset);
    }
  }
}

TEST_CASE("standard simplex inward normals") {
  auto s = simplex({LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{0, 1}});
  auto normals = inward_facet_normals(s);
  REQUIRE(normals.size() == 3);
  CHECK(normals[0] == LatticeVector({-1, -1}));
  CHECK(normals[1] == LatticeVector({1, 0}));
  CHECK(normals[2] == LatticeVector({0, 1}));
}

TEST_CASE("mix_seed is deterministic and separates streams") {
  CHECK(mix_seed(1, 2, 3) == mix_seed(1, 2, 3));
  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 2, 4));
  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 3));
  CHECK(mix_seed(1, 2, 3) != mix_seed(2, 2, 3));
}
