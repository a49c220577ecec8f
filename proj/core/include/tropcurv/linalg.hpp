#pragma once

#include <optional>
#include <vector>

#include "tropcurv/lattice.hpp"
#include "tropcurv/rational.hpp"

namespace tropcurv {

using RationalMatrix = std::vector<RationalVector>;

Rational determinant(RationalMatrix m);

int rank(RationalMatrix m);

/// Exact solve of the square system A x = b; nullopt when A is singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

/// Particular solution of a (possibly underdetermined) consistent system,
/// free variables set to zero; nullopt when inconsistent.
std::optional<RationalVector> solve_particular(RationalMatrix a, RationalVector b);

/// Basis of the right null space of a (rows are constraints).
std::vector<RationalVector> nullspace(RationalMatrix a);

/// Rank of an integer matrix over GF(2).
int rank_mod2(const std::vector<LatticeVector>& rows);

/// Clears denominators of a rational direction vector and divides by the
/// content, producing a primitive integer vector with the same orientation.
LatticeVector primitive_direction(const RationalVector& v);

/// Affine dimension of a point set (rank of differences to the first point).
int affine_dim(const std::vector<LatticeVector>& points);

}  // namespace tropcurv
