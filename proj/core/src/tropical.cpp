#include "tropcurv/tropical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "tropcurv/errors.hpp"

namespace tropcurv {

void TropicalPolynomial::add_term(const LatticeVector& exponent, const Rational& coeff) {
  if (static_cast<int>(exponent.dim()) != dim_)
    throw DimensionMismatch("exponent dimension does not match ambient dimension");
  if (!terms_.emplace(exponent, coeff).second)
    throw DuplicateExponent("duplicate exponent in polynomial");
}

const Rational& TropicalPolynomial::coeff(const LatticeVector& exponent) const {
  auto it = terms_.find(exponent);
  if (it == terms_.end()) throw UnknownExponent("exponent not present in polynomial");
  return it->second;
}

Rational TropicalPolynomial::evaluate(const RationalVector& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw DimensionMismatch("evaluation point dimension mismatch");
  if (terms_.empty()) throw Error("empty polynomial");
  bool first = true;
  Rational best = 0;
  for (const auto& [e, u] : terms_) {
    Rational v = u + dot(e, point);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

std::vector<LatticeVector> TropicalPolynomial::argmax(const RationalVector& point) const {
  Rational best = evaluate(point);
  std::vector<LatticeVector> out;
  for (const auto& [e, u] : terms_)
    if (u + dot(e, point) == best) out.push_back(e);
  return out;
}

TropicalPolynomial TropicalPolynomial::initial_part(const RationalVector& point) const {
  TropicalPolynomial g(dim_);
  for (const auto& e : argmax(point)) g.add_term(e, terms_.at(e));
  return g;
}

TropicalPolynomial monomial_shift(const TropicalPolynomial& f, const LatticeVector& shift,
                                  const Rational& c) {
  if (static_cast<int>(shift.dim()) != f.ambient_dim())
    throw DimensionMismatch("shift dimension mismatch");
  TropicalPolynomial g(f.ambient_dim());
  for (const auto& [e, u] : f.terms()) g.add_term(e + shift, u + c);
  return g;
}

namespace {

BigInt cross_at(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return BigInt(b[0] - a[0]) * (c[1] - a[1]) - BigInt(b[1] - a[1]) * (c[0] - a[0]);
}

// Monotone chain; returns the hull cycle counterclockwise, corners only.
std::vector<LatticeVector> hull_cycle_2d(std::vector<LatticeVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticeVector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross_at(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross_at(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  return h;
}

Rational polygon_volume_2d(const std::vector<LatticeVector>& pts) {
  auto cycle = hull_cycle_2d(pts);
  if (cycle.size() < 3) return 0;
  BigInt twice = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& a = cycle[i];
    const auto& b = cycle[(i + 1) % cycle.size()];
    twice += BigInt(a[0]) * b[1] - BigInt(a[1]) * b[0];
  }
  if (twice < 0) twice = -twice;
  return Rational(twice) / 2;
}

struct SupportPlane {
  LatticeVector normal;  // points with normal . x == offset, others < offset
  BigInt offset;
  std::vector<int> members;
};

// Supporting planes of the hull of a full-dimensional point set in R^3,
// by brute force over triples.
std::vector<SupportPlane> hull_facets_3d(const std::vector<LatticeVector>& pts) {
  std::map<std::pair<LatticeVector, BigInt>, std::vector<int>> found;
  const int m = static_cast<int>(pts.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        LatticeVector u = pts[j] - pts[i], v = pts[k] - pts[i];
        LatticeVector n({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                         u[0] * v[1] - u[1] * v[0]});
        if (n.is_zero()) continue;
        n = make_primitive(n);
        for (int sign = 0; sign < 2; ++sign) {
          LatticeVector nn = sign ? -n : n;
          BigInt c = dot(nn, pts[i]);
          bool ok = true;
          for (int t = 0; t < m && ok; ++t)
            if (dot(nn, pts[t]) > c) ok = false;
          if (!ok) continue;
          auto key = std::make_pair(nn, c);
          if (found.count(key)) continue;
          std::vector<int> mem;
          for (int t = 0; t < m; ++t)
            if (dot(nn, pts[t]) == c) mem.push_back(t);
          found.emplace(std::move(key), std::move(mem));
        }
      }
    }
  }
  std::vector<SupportPlane> out;
  for (auto& [key, mem] : found) out.push_back({key.first, key.second, std::move(mem)});
  return out;
}

Rational tet_volume(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c,
                    const LatticeVector& d) {
  LatticeVector u = b - a, v = c - a, w = d - a;
  BigInt det = BigInt(u[0]) * (BigInt(v[1]) * w[2] - BigInt(v[2]) * w[1]) -
               BigInt(u[1]) * (BigInt(v[0]) * w[2] - BigInt(v[2]) * w[0]) +
               BigInt(u[2]) * (BigInt(v[0]) * w[1] - BigInt(v[1]) * w[0]);
  if (det < 0) det = -det;
  return Rational(det) / 6;
}

// Orders coplanar 3D points into their polygon corner cycle by projecting
// out the normal's largest coordinate.
std::vector<LatticeVector> facet_cycle(const std::vector<LatticeVector>& pts,
                                       const LatticeVector& normal) {
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(normal[i]) > std::abs(normal[drop])) drop = i;
  std::vector<LatticeVector> proj;
  std::map<LatticeVector, LatticeVector> back;
  for (const auto& p : pts) {
    LatticeVector q({p[(drop + 1) % 3], p[(drop + 2) % 3]});
    proj.push_back(q);
    back.emplace(q, p);
  }
  std::vector<LatticeVector> out;
  for (const auto& q : hull_cycle_2d(proj)) out.push_back(back.at(q));
  return out;
}

Rational hull_volume_3d(const std::vector<LatticeVector>& pts) {
  auto facets = hull_facets_3d(pts);
  const LatticeVector& apex = pts.front();
  Rational vol = 0;
  for (const auto& f : facets) {
    if (dot(f.normal, apex) == f.offset) continue;
    std::vector<LatticeVector> fp;
    for (int i : f.members) fp.push_back(pts[i]);
    auto cycle = facet_cycle(fp, f.normal);
    for (std::size_t i = 1; i + 1 < cycle.size(); ++i)
      vol += tet_volume(apex, cycle[0], cycle[i], cycle[i + 1]);
  }
  return vol;
}

// Exact test for q in conv(pts) where the configuration has affine
// dimension adim: Caratheodory over affinely independent subsets.
bool in_convex_hull(const LatticeVector& q, const std::vector<LatticeVector>& pts, int adim) {
  const int m = static_cast<int>(pts.size());
  const int k = adim + 1;
  if (m < k) return false;
  const std::size_t d = q.dim();
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    std::vector<LatticeVector> sub;
    for (int i : comb) sub.push_back(pts[i]);
    if (affine_dim(sub) == adim) {
      RationalMatrix a(d + 1, RationalVector(k));
      RationalVector b(d + 1);
      for (std::size_t r = 0; r < d; ++r) {
        for (int cidx = 0; cidx < k; ++cidx) a[r][cidx] = sub[cidx][r];
        b[r] = q[r];
      }
      for (int cidx = 0; cidx < k; ++cidx) a[d][cidx] = 1;
      b[d] = 1;
      auto sol = solve_particular(std::move(a), std::move(b));
      if (sol) {
        bool nonneg = true;
        for (const auto& l : *sol)
          if (l < 0) nonneg = false;
        if (nonneg) return true;
      }
    }
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return false;
}

std::vector<LatticeVector> hull_vertices(const std::vector<LatticeVector>& pts, int adim) {
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others, adim)) out.push_back(pts[i]);
  }
  return out;
}

Rational cell_volume(const Cell& cell, int d) {
  if (cell.dim != d) return 0;
  if (static_cast<int>(cell.exponents.size()) == d + 1) {
    LatticeSimplex s{cell.exponents};
    return simplex_lattice_volume(s);
  }
  if (d == 1) {
    std::int64_t lo = cell.exponents.front()[0], hi = lo;
    for (const auto& e : cell.exponents) {
      lo = std::min(lo, e[0]);
      hi = std::max(hi, e[0]);
    }
    return Rational(hi - lo);
  }
  if (d == 2) return polygon_volume_2d(cell.exponents);
  if (d == 3) return hull_volume_3d(cell.exponents);
  throw Error("exact volume of non-simplicial cells beyond dimension 3 is not supported");
}

// Fast affine-independence filter for subsets in low dimension.
bool affinely_independent(const std::vector<LatticeVector>& pts) {
  const std::size_t k = pts.size();
  if (k == 2) return !(pts[1] - pts[0]).is_zero();
  if (k == 3 && pts[0].dim() == 2) return cross_at(pts[0], pts[1], pts[2]) != 0;
  if (k == 4 && pts[0].dim() == 3) return tet_volume(pts[0], pts[1], pts[2], pts[3]) != 0;
  return affine_dim(pts) == static_cast<int>(k) - 1;
}

}  // namespace

DualSubdivision dual_subdivision(const TropicalPolynomial& f) {
  if (f.term_count() == 0) throw Error("empty polynomial");
  const int d = f.ambient_dim();
  std::vector<LatticeVector> exps;
  std::vector<Rational> coeffs;
  exps.reserve(f.term_count());
  for (const auto& [e, u] : f.terms()) {
    exps.push_back(e);
    coeffs.push_back(u);
  }
  DualSubdivision out;
  out.ambient_dim = d;
  out.newton_dim = affine_dim(exps);
  const int D = out.newton_dim;
  const int m = static_cast<int>(exps.size());

  if (m == 1) {
    Cell c;
    c.exponents = exps;
    c.vertex_set = exps;
    c.dim = 0;
    c.witness = RationalVector(d, 0);
    out.cells.push_back(std::move(c));
    return out;
  }

  // Every maximal cell is the argmax set of the tie witness of one of its
  // affinely independent (D+1)-subsets; enumerate them all.
  std::set<std::vector<LatticeVector>> seen;
  const int k = D + 1;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    std::vector<LatticeVector> sub;
    sub.reserve(k);
    for (int i : comb) sub.push_back(exps[i]);
    if (affinely_independent(sub)) {
      RationalMatrix a;
      RationalVector b;
      for (int i : comb) {
        RationalVector row;
        row.reserve(d + 1);
        for (auto x : exps[i].c) row.emplace_back(x);
        row.emplace_back(-1);
        a.push_back(std::move(row));
        b.push_back(-coeffs[i]);
      }
      auto sol = solve_particular(std::move(a), std::move(b));
      if (sol) {
        RationalVector w(sol->begin(), sol->begin() + d);
        Rational big = (*sol)[d];
        bool dominated = true;
        for (int t = 0; t < m && dominated; ++t)
          if (coeffs[t] + dot(exps[t], w) > big) dominated = false;
        if (dominated) {
          std::vector<LatticeVector> support;
          for (int t = 0; t < m; ++t)
            if (coeffs[t] + dot(exps[t], w) == big) support.push_back(exps[t]);
          if (seen.insert(support).second) {
            Cell c;
            c.exponents = support;
            c.dim = D;
            c.witness = std::move(w);
            out.cells.push_back(std::move(c));
          }
        }
      }
    }
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }

  std::sort(out.cells.begin(), out.cells.end(),
            [](const Cell& x, const Cell& y) { return x.exponents < y.exponents; });
  for (auto& c : out.cells) {
    if (static_cast<int>(c.exponents.size()) == D + 1)
      c.vertex_set = c.exponents;
    else
      c.vertex_set = hull_vertices(c.exponents, D);
  }
  if (D == d)
    for (const auto& c : out.cells) out.newton_volume += cell_volume(c, d);
  return out;
}

Classification classify(const DualSubdivision& s) {
  Classification c;
  const int d = s.ambient_dim;
  c.generic = true;
  for (const auto& cell : s.cells)
    if (static_cast<int>(cell.exponents.size()) != cell.dim + 1) c.generic = false;

  c.non_singular = (s.newton_dim == d) && c.generic;
  if (c.non_singular) {
    for (const auto& cell : s.cells) {
      if (normalized_volume(LatticeSimplex{cell.exponents}) != 1) {
        c.non_singular = false;
        break;
      }
    }
  }

  // the Newton polytope is a primitive simplex iff the support is exactly
  // d+1 points spanning normalized volume 1
  std::set<LatticeVector> support;
  for (const auto& cell : s.cells)
    for (const auto& e : cell.exponents) support.insert(e);
  if (s.newton_dim == d && support.size() == std::size_t(d) + 1) {
    LatticeSimplex simplex{{support.begin(), support.end()}};
    c.primitive = normalized_volume(simplex) == 1;
  }

  c.all_duals_elementary = (s.newton_dim == d) && c.generic;
  if (c.all_duals_elementary) {
    for (const auto& cell : s.cells) {
      if (!is_elementary(LatticeSimplex{cell.exponents})) {
        c.all_duals_elementary = false;
        break;
      }
    }
  }
  return c;
}

Classification classify(const TropicalPolynomial& f) { return classify(dual_subdivision(f)); }

namespace {

// Outward primitive normal of the facet `facet` of the full-dimensional
// simplex cell `cell` (normal value is constant on the facet and smaller on
// the remaining vertex).
LatticeVector outward_normal(const std::vector<LatticeVector>& cell,
                             const std::vector<LatticeVector>& facet) {
  RationalMatrix rows;
  for (std::size_t i = 1; i < facet.size(); ++i) {
    LatticeVector e = facet[i] - facet[0];
    RationalVector row;
    for (auto x : e.c) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  auto ns = nullspace(rows);
  LatticeVector n = primitive_direction(ns.at(0));
  for (const auto& v : cell) {
    BigInt s = dot(n, v - facet[0]);
    if (s > 0) return -n;
    if (s < 0) return n;
  }
  throw Error("degenerate facet normal");
}

std::vector<LatticeVector> sorted_intersection(const std::vector<LatticeVector>& a,
                                               const std::vector<LatticeVector>& b) {
  std::vector<LatticeVector> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

HypersurfaceComplex hypersurface(const TropicalPolynomial& f) {
  HypersurfaceComplex h;
  h.ambient_dim = f.ambient_dim();
  h.subdivision = dual_subdivision(f);
  const int d = h.ambient_dim;
  const int D = h.subdivision.newton_dim;
  const auto& cells = h.subdivision.cells;

  if (D == d) {
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
      h.vertices.push_back({cells[i].witness, i});
  }

  if (d > 3) return h;  // vertex positions only

  if (D == d) {
    bool generic = true;
    for (const auto& c : cells)
      if (static_cast<int>(c.exponents.size()) != D + 1) generic = false;
    if (!generic) return h;  // edges refused; edges_built stays false

    // bounded edges: pairs of cells sharing a (d-1)-dimensional face
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        auto shared = sorted_intersection(cells[i].exponents, cells[j].exponents);
        if (static_cast<int>(shared.size()) == d && affine_dim(shared) == d - 1) {
          HypersurfaceEdge e;
          e.kind = EdgeKind::segment;
          e.v0 = static_cast<int>(i);
          e.v1 = static_cast<int>(j);
          e.dual = shared;
          e.dual_vertices = shared;
          h.edges.push_back(std::move(e));
        }
      }
    }
    // unbounded edges: cell facets on the Newton polytope boundary
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& cell = cells[i].exponents;
      for (std::size_t skip = 0; skip < cell.size(); ++skip) {
        std::vector<LatticeVector> facet;
        for (std::size_t t = 0; t < cell.size(); ++t)
          if (t != skip) facet.push_back(cell[t]);
        bool is_shared = false;
        for (std::size_t j = 0; j < cells.size() && !is_shared; ++j) {
          if (j == i) continue;
          if (std::includes(cells[j].exponents.begin(), cells[j].exponents.end(),
                            facet.begin(), facet.end()))
            is_shared = true;
        }
        if (is_shared) continue;
        HypersurfaceEdge e;
        e.kind = EdgeKind::ray;
        e.v0 = static_cast<int>(i);
        e.direction = outward_normal(cell, facet);
        e.dual = facet;
        e.dual_vertices = facet;
        h.edges.push_back(std::move(e));
      }
    }
    h.edges_built = true;
    return h;
  }

  if (D == d - 1) {
    // no vertices; each maximal cell is dual to a full line
    for (std::size_t i = 0; i < cells.size(); ++i) {
      RationalMatrix rows;
      for (std::size_t t = 1; t < cells[i].vertex_set.size(); ++t) {
        LatticeVector e = cells[i].vertex_set[t] - cells[i].vertex_set[0];
        RationalVector row;
        for (auto x : e.c) row.emplace_back(x);
        rows.push_back(std::move(row));
      }
      auto ns = nullspace(rows);
      if (ns.size() != 1) continue;
      HypersurfaceEdge e;
      e.kind = EdgeKind::line;
      e.point = cells[i].witness;
      e.direction = primitive_direction(ns[0]);
      e.dual = cells[i].exponents;
      e.dual_vertices = cells[i].vertex_set;
      h.edges.push_back(std::move(e));
    }
    h.edges_built = true;
    return h;
  }

  h.edges_built = true;  // nothing of the tracked dimensions exists
  return h;
}

HypersurfaceComplex hypersurface_with_edges(const TropicalPolynomial& f) {
  HypersurfaceComplex h = hypersurface(f);
  if (!h.edges_built) {
    if (h.ambient_dim > 3)
      throw Error("edge construction supports ambient dimension at most 3");
    throw NotGeneric("dual subdivision has a non-simplicial maximal cell; edges unavailable");
  }
  return h;
}

}  // namespace tropcurv
