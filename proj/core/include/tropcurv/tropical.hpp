#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropcurv/geometry.hpp"
#include "tropcurv/lattice.hpp"
#include "tropcurv/rational.hpp"

namespace tropcurv {

/// Max-plus polynomial f(X) = max_a { u_a + X . a } with rational
/// coefficients u_a over integer exponents a in Z^{d}, d = n+1.
class TropicalPolynomial {
 public:
  TropicalPolynomial() = default;
  explicit TropicalPolynomial(int ambient_dim) : dim_(ambient_dim) {}

  int ambient_dim() const { return dim_; }
  const std::map<LatticeVector, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Throws DuplicateExponent / DimensionMismatch.
  void add_term(const LatticeVector& exponent, const Rational& coeff);

  const Rational& coeff(const LatticeVector& exponent) const;

  Rational evaluate(const RationalVector& point) const;

  /// Sub-polynomial of the terms attaining the maximum at `point`.
  TropicalPolynomial initial_part(const RationalVector& point) const;

  /// Exponents attaining the maximum at `point`, sorted.
  std::vector<LatticeVector> argmax(const RationalVector& point) const;

 private:
  int dim_ = 0;
  std::map<LatticeVector, Rational> terms_;
};

/// Parses the textual grammar: terms are `c` or `c*x1^a1*...*xk^ak`,
/// separated by `+`; coefficients are integers or `p/q`; exponents are
/// non-negative integers; variables are x1..xd. When ambient_dim == 0 the
/// dimension is inferred as the largest variable index used.
/// Throws SyntaxError (with position) and DuplicateExponent.
TropicalPolynomial parse_tropical(const std::string& text, int ambient_dim = 0);

/// Cell of the dual subdivision: the full set of exponents whose terms tie
/// at the witness point (so non-vertex exponents lying on the lifted face
/// are members), plus the geometric vertex subset.
struct Cell {
  std::vector<LatticeVector> exponents;     // sorted
  std::vector<LatticeVector> vertex_set;    // hull vertices of the cell, sorted
  int dim = 0;                              // affine dimension
  RationalVector witness;                   // argmax(f, witness) == exponents
};

/// Regular subdivision of the Newton polytope dual to f: cells are the
/// projections of the upper faces of the coefficient lift a -> u_a.
struct DualSubdivision {
  int ambient_dim = 0;
  int newton_dim = 0;                 // affine dimension of the Newton polytope
  std::vector<Cell> cells;            // maximal cells, sorted by exponent lists
  Rational newton_volume = 0;         // full-dimensional volume (0 when degenerate)
};

DualSubdivision dual_subdivision(const TropicalPolynomial& f);

struct HypersurfaceVertex {
  RationalVector position;
  int cell = -1;  // index of the dual maximal cell
};

enum class EdgeKind { segment, ray, line };

/// 1-cell of the hypersurface, dual to a (d-1)-dimensional cell of the
/// subdivision. Segments join two vertices; rays leave one vertex in a
/// primitive integer direction; lines (no vertex at all) carry a base point.
struct HypersurfaceEdge {
  EdgeKind kind = EdgeKind::segment;
  int v0 = -1;
  int v1 = -1;
  RationalVector point;                       // line base point
  LatticeVector direction;                    // ray / line direction
  std::vector<LatticeVector> dual;            // dual cell exponents, sorted
  std::vector<LatticeVector> dual_vertices;   // its hull vertices, sorted
};

struct HypersurfaceComplex {
  int ambient_dim = 0;
  DualSubdivision subdivision;
  std::vector<HypersurfaceVertex> vertices;   // one per full-dimensional cell
  std::vector<HypersurfaceEdge> edges;
  bool edges_built = false;
};

/// Vertices are exact solutions of the tie system of their dual cell and
/// dominate all other terms. Edges are built for ambient dimension 2 and 3
/// when every maximal cell is a simplex; otherwise edges_built stays false.
HypersurfaceComplex hypersurface(const TropicalPolynomial& f);

/// Edge list for a complex whose subdivision is not generic cannot be
/// constructed; this variant throws NotGeneric in that case.
HypersurfaceComplex hypersurface_with_edges(const TropicalPolynomial& f);

struct Classification {
  bool generic = false;               // every maximal cell is a simplex
  bool non_singular = false;          // full-dimensional and all cells primitive
  bool primitive = false;             // Newton polytope itself a primitive simplex
  bool all_duals_elementary = false;  // generic and every maximal cell elementary
};

Classification classify(const DualSubdivision& s);
Classification classify(const TropicalPolynomial& f);

/// Translates every exponent by `shift` and adds `c` to every coefficient:
/// tropically this multiplies f by the monomial c + X.shift, which leaves
/// the hypersurface and the shape of the dual subdivision unchanged.
TropicalPolynomial monomial_shift(const TropicalPolynomial& f, const LatticeVector& shift,
                                  const Rational& c = 0);

}  // namespace tropcurv
