#include "tropcurv/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropcurv/errors.hpp"

namespace tropcurv {

namespace {

void check_simplex_shape(const LatticeSimplex& s) {
  if (s.vertices.empty()) throw DegenerateSimplex("simplex has no vertices");
  std::size_t d = s.vertices.front().dim();
  if (d == 0) throw DegenerateSimplex("simplex in dimension 0");
  if (s.vertices.size() != d + 1)
    throw DimensionMismatch("simplex in R^d needs exactly d+1 vertices");
  for (const auto& v : s.vertices)
    if (v.dim() != d) throw DimensionMismatch("mixed vertex dimensions");
}

RationalMatrix edge_matrix(const LatticeSimplex& s) {
  RationalMatrix m;
  for (std::size_t i = 1; i < s.vertices.size(); ++i) {
    LatticeVector e = s.vertices[i] - s.vertices[0];
    RationalVector row;
    row.reserve(e.dim());
    for (auto x : e.c) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<LatticeVector> edge_vectors(const LatticeSimplex& s) {
  std::vector<LatticeVector> e;
  for (std::size_t i = 1; i < s.vertices.size(); ++i)
    e.push_back(s.vertices[i] - s.vertices[0]);
  return e;
}

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Cone make_cone(int ambient_dim, std::vector<LatticeVector> generators) {
  if (ambient_dim < 1) throw NonPositiveDimension("cone ambient dimension must be >= 1");
  for (const auto& g : generators) {
    if (static_cast<int>(g.dim()) != ambient_dim)
      throw DimensionMismatch("generator dimension mismatch");
    if (g.is_zero()) throw ZeroGenerator("cone generators must be nonzero");
  }
  Cone c;
  c.ambient_dim = ambient_dim;
  c.generators = std::move(generators);
  return c;
}

std::vector<LatticeVector> dedup_primitive(const std::vector<LatticeVector>& gens) {
  std::set<LatticeVector> seen;
  std::vector<LatticeVector> out;
  for (const auto& g : gens) {
    LatticeVector p = make_primitive(g);
    if (seen.insert(p).second) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HalfSpace> cone_facets(const Cone& c) {
  const int d = c.ambient_dim;
  auto gens = dedup_primitive(c.generators);
  std::set<LatticeVector> normals;
  if (static_cast<int>(gens.size()) >= d - 1 && d >= 2) {
    std::vector<int> idx(d - 1);
    // enumerate (d-1)-subsets
    std::vector<int> comb(d - 1);
    for (int i = 0; i < d - 1; ++i) comb[i] = i;
    const int m = static_cast<int>(gens.size());
    while (true) {
      RationalMatrix rows;
      for (int i : comb) {
        RationalVector row;
        row.reserve(d);
        for (auto x : gens[i].c) row.emplace_back(x);
        rows.push_back(std::move(row));
      }
      auto ns = nullspace(rows);
      if (ns.size() == 1) {
        LatticeVector n = primitive_direction(ns[0]);
        bool pos = false, neg = false;
        for (const auto& g : gens) {
          BigInt s = dot(n, g);
          if (s > 0) pos = true;
          if (s < 0) neg = true;
          if (pos && neg) break;
        }
        if (!neg) normals.insert(n);
        if (!pos) normals.insert(-n);
      }
      // next combination
      int i = d - 2;
      while (i >= 0 && comb[i] == m - (d - 1) + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  std::vector<HalfSpace> facets;
  facets.reserve(normals.size());
  for (const auto& n : normals) facets.push_back(HalfSpace{n, true});
  return facets;
}

void ensure_facets(Cone& c) {
  if (!c.facets) c.facets = cone_facets(c);
}

Rational simplex_lattice_volume(const LatticeSimplex& s) {
  check_simplex_shape(s);
  Rational det = determinant(edge_matrix(s));
  if (det == 0) throw DegenerateSimplex("simplex has zero volume");
  if (det < 0) det = -det;
  return det / Rational(factorial(s.vertices.front().dim()));
}

BigInt normalized_volume(const LatticeSimplex& s) {
  check_simplex_shape(s);
  Rational det = determinant(edge_matrix(s));
  BigInt n = numerator(det);
  return n < 0 ? BigInt(-n) : n;
}

bool is_primitive(const LatticeSimplex& s) {
  BigInt v = normalized_volume(s);
  if (v == 0) throw DegenerateSimplex("simplex has zero volume");
  return v == 1;
}

bool is_elementary(const LatticeSimplex& s) {
  check_simplex_shape(s);
  return rank_mod2(edge_vectors(s)) == static_cast<int>(s.vertices.front().dim());
}

std::vector<LatticeVector> inward_facet_normals(const LatticeSimplex& s) {
  check_simplex_shape(s);
  const std::size_t d = s.vertices.front().dim();
  std::vector<LatticeVector> normals;
  normals.reserve(d + 1);
  for (std::size_t v = 0; v <= d; ++v) {
    // hyperplane of the facet not containing vertex v
    std::vector<LatticeVector> facet;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != v) facet.push_back(s.vertices[i]);
    RationalMatrix rows;
    for (std::size_t i = 1; i < facet.size(); ++i) {
      LatticeVector e = facet[i] - facet[0];
      RationalVector row;
      for (auto x : e.c) row.emplace_back(x);
      rows.push_back(std::move(row));
    }
    auto ns = nullspace(rows);
    if (ns.size() != 1) throw DegenerateSimplex("degenerate facet hyperplane");
    LatticeVector n = primitive_direction(ns[0]);
    if (dot(n, s.vertices[v] - facet[0]) < 0) n = -n;
    normals.push_back(n);
  }
  return normals;
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t vertex_id, std::uint64_t orthant_code) {
  // splitmix64 steps over the combined identifiers
  std::uint64_t x = master;
  for (std::uint64_t salt : {vertex_id + 1, orthant_code + 1}) {
    x += 0x9E3779B97F4A7C15ULL * salt;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    x = z ^ (z >> 31);
  }
  return x;
}

}  // namespace tropcurv
