#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropcurv/geometry.hpp"
#include "tropcurv/tropical.hpp"

namespace tropcurv {

/// Sign vector z in {0,1}^d indexing an orthant of R^d; coordinate i of the
/// orthant has sign (-1)^{z_i}. Binary code = sum z_i 2^i.
struct Orthant {
  std::vector<int> z;

  static Orthant from_code(unsigned code, int dim);
  unsigned code() const;
  int dim() const { return static_cast<int>(z.size()); }
  /// "10" style digit string.
  std::string digits() const;
  /// "-+" style sign string (0 -> '+', 1 -> '-').
  std::string sign_string() const;

  friend bool operator==(const Orthant&, const Orthant&) = default;
};

/// Parses either "10"-style digits or "-+"-style signs. Throws InputError.
Orthant parse_orthant(const std::string& text, int dim);

/// Assignment of +1/-1 to exponents.
struct SignDistribution {
  std::map<LatticeVector, int> signs;

  int at(const LatticeVector& e) const;  // throws UnknownExponent
  bool has(const LatticeVector& e) const { return signs.count(e) != 0; }

  friend bool operator==(const SignDistribution&, const SignDistribution&) = default;
};

SignDistribution constant_signs(const TropicalPolynomial& f, int sign = +1);

/// S_z(theta)(a) = (-1)^{z.a} theta(a). An involution in each coordinate;
/// twisting by z1 then z2 equals twisting by z1 xor z2.
SignDistribution twist(const SignDistribution& theta, const Orthant& z);

/// A copy of a cell is present in orthant z iff the twisted signs are
/// non-constant on the dual cell's vertex set. Only vertices of the dual
/// cell matter; exponents interior to the cell are ignored.
bool cell_present(const std::vector<LatticeVector>& dual_vertices,
                  const SignDistribution& theta, const Orthant& z);

/// Per-orthant presence of vertex and edge copies, orthants in binary order.
struct RealPart {
  int ambient_dim = 0;
  struct OrthantPart {
    Orthant orthant;
    std::vector<int> vertices;  // vertex ids present in this orthant
    std::vector<int> edges;     // edge ids present in this orthant
  };
  std::vector<OrthantPart> parts;
};

/// Signs on exponents never appearing as dual-cell vertices are accepted and
/// ignored; a note is appended to `warnings` when provided. Invariant under
/// the global flip theta -> -theta.
RealPart real_part(const HypersurfaceComplex& complex, const SignDistribution& theta,
                   std::vector<std::string>* warnings = nullptr);

/// Orbit of a sign distribution on the simplex vertices under all 2^d
/// twists, counted modulo global flip. The action is transitive exactly for
/// elementary simplices.
struct OrbitReport {
  int num_classes = 0;  // 2^{d+1} / 2 distributions modulo flip
  int orbit_size = 0;
  bool transitive = false;
  bool elementary = false;
};

OrbitReport orbit_analysis(const LatticeSimplex& s);

}  // namespace tropcurv
