#include "tropcurv/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "tropcurv/errors.hpp"

namespace tropcurv {

RealFamily make_family(const TropicalPolynomial& f, const SignDistribution& theta) {
  RealFamily fam;
  fam.ambient_dim = f.ambient_dim();
  for (const auto& [e, u] : f.terms()) fam.terms.push_back({e, theta.at(e), u});
  return fam;
}

FamilyField::FamilyField(const RealFamily& fam, double t) : t_(t) {
  if (fam.ambient_dim != 2) throw NotPlaneCurve("family tracing supports plane curves only");
  if (!(t >= kMinFamilyT && t < 1.0))
    throw InvalidT("t must lie in [" + std::to_string(kMinFamilyT) + ", 1)");
  if (fam.terms.empty()) throw InputError("family has no terms");
  log_t_ = std::log(t);
  for (const auto& term : fam.terms) {
    Term c;
    c.e0 = static_cast<double>(term.exponent[0]);
    c.e1 = static_cast<double>(term.exponent[1]);
    c.par0 = static_cast<int>(((term.exponent[0] % 2) + 2) % 2);
    c.par1 = static_cast<int>(((term.exponent[1] % 2) + 2) % 2);
    c.val = to_double(term.valuation);
    c.base_sign = term.sign >= 0 ? 1.0 : -1.0;
    terms_.push_back(c);
  }
}

// Exponent of t carried by term a at X: a.X - val_a; the dominant term
// minimizes it (t < 1). Dividing by t^min keeps every summand in [-1, 1].
double FamilyField::value(const Orthant& q, double X, double Y) const {
  double low = terms_[0].e0 * X + terms_[0].e1 * Y - terms_[0].val;
  for (const auto& c : terms_) low = std::min(low, c.e0 * X + c.e1 * Y - c.val);
  double sum = 0;
  for (const auto& c : terms_) {
    double w = c.e0 * X + c.e1 * Y - c.val;
    double s = c.base_sign;
    if ((q.z[0] & c.par0) ^ (q.z[1] & c.par1)) s = -s;
    sum += s * std::exp(log_t_ * (w - low));
  }
  return sum;
}

std::array<double, 2> FamilyField::gradient(const Orthant& q, double X, double Y) const {
  double low = terms_[0].e0 * X + terms_[0].e1 * Y - terms_[0].val;
  double g0 = terms_[0].e0, g1 = terms_[0].e1;
  for (const auto& c : terms_) {
    double w = c.e0 * X + c.e1 * Y - c.val;
    if (w < low) {
      low = w;
      g0 = c.e0;
      g1 = c.e1;
    }
  }
  std::array<double, 2> grad{0, 0};
  for (const auto& c : terms_) {
    double w = c.e0 * X + c.e1 * Y - c.val;
    double s = c.base_sign;
    if ((q.z[0] & c.par0) ^ (q.z[1] & c.par1)) s = -s;
    double weight = s * std::exp(log_t_ * (w - low)) * log_t_;
    grad[0] += weight * (c.e0 - g0);
    grad[1] += weight * (c.e1 - g1);
  }
  return grad;
}

FamilyField evaluate_family(const RealFamily& fam, double t) { return FamilyField(fam, t); }

namespace {

// Key of a grid edge: horizontal (between nodes (i,j)-(i+1,j)) or vertical.
std::int64_t edge_key(bool horizontal, int i, int j) {
  return ((horizontal ? 1LL : 0LL) << 60) | (static_cast<std::int64_t>(i) << 30) | j;
}

struct QuadrantTracer {
  const FamilyField& field;
  const Orthant& quadrant;
  int grid;
  double x0, y0, dx, dy;
  std::vector<double> values;  // (grid+1)^2 node values

  double node(int i, int j) const { return values[std::size_t(j) * (grid + 1) + i]; }
  double xat(int i) const { return x0 + dx * i; }
  double yat(int j) const { return y0 + dy * j; }

  Point2 refine(bool horizontal, int i, int j) const {
    Point2 a{xat(i), yat(j)};
    Point2 b = horizontal ? Point2{xat(i + 1), yat(j)} : Point2{xat(i), yat(j + 1)};
    double fa = node(i, j);
    double fb = horizontal ? node(i + 1, j) : node(i, j + 1);
    if (std::abs(fa) < 1e-10) return a;
    if (std::abs(fb) < 1e-10) return b;
    bool pa = fa > 0;
    for (int it = 0; it < 200; ++it) {
      Point2 m{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
      double fm = field.value(quadrant, m[0], m[1]);
      if (std::abs(fm) < 1e-10) return m;
      if ((fm > 0) == pa)
        a = m;
      else
        b = m;
    }
    return {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
  }
};

}  // namespace

TracedCurve trace_real_curve(const RealFamily& fam, double t, int grid,
                             std::optional<Orthant> only_quadrant) {
  if (grid < 8) throw InsufficientResolution("grid must have at least 8 cells per axis");
  FamilyField field(fam, t);

  // Window: symmetric hull of the tropical vertex positions (the traced
  // curve approaches the reflection of the tropical curve), padded so that
  // every unbounded branch settles into its asymptotic direction.
  TropicalPolynomial f(2);
  for (const auto& term : fam.terms) f.add_term(term.exponent, term.valuation);
  HypersurfaceComplex h = hypersurface(f);
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& v : h.vertices) {
    double px = to_double(v.position[0]), py = to_double(v.position[1]);
    lo_x = std::min({lo_x, px, -px});
    hi_x = std::max({hi_x, px, -px});
    lo_y = std::min({lo_y, py, -py});
    hi_y = std::max({hi_y, py, -py});
  }
  const double pad = 10.0 / std::abs(std::log(t));
  TracedCurve tc;
  tc.t = t;
  tc.grid = grid;
  tc.window = {lo_x - pad, lo_y - pad, hi_x + pad, hi_y + pad};

  std::vector<Orthant> quads;
  if (only_quadrant) {
    if (only_quadrant->dim() != 2) throw DimensionMismatch("quadrant must be 2-dimensional");
    quads.push_back(*only_quadrant);
  } else {
    for (unsigned code = 0; code < 4; ++code) quads.push_back(Orthant::from_code(code, 2));
  }

  for (const auto& q : quads) {
    QuadrantTracer tracer{field, q, grid,
                          tc.window[0], tc.window[1],
                          (tc.window[2] - tc.window[0]) / grid,
                          (tc.window[3] - tc.window[1]) / grid,
                          {}};
    tracer.values.resize(std::size_t(grid + 1) * (grid + 1));
    for (int j = 0; j <= grid; ++j)
      for (int i = 0; i <= grid; ++i)
        tracer.values[std::size_t(j) * (grid + 1) + i] =
            field.value(q, tracer.xat(i), tracer.yat(j));

    // marching squares; edge-slot order bottom, right, top, left
    std::vector<std::pair<std::int64_t, std::int64_t>> segments;
    for (int j = 0; j < grid; ++j) {
      for (int i = 0; i < grid; ++i) {
        int code = 0;
        if (tracer.node(i, j) > 0) code |= 1;
        if (tracer.node(i + 1, j) > 0) code |= 2;
        if (tracer.node(i + 1, j + 1) > 0) code |= 4;
        if (tracer.node(i, j + 1) > 0) code |= 8;
        if (code == 0 || code == 15) continue;
        std::int64_t bottom = edge_key(true, i, j);
        std::int64_t top = edge_key(true, i, j + 1);
        std::int64_t left = edge_key(false, i, j);
        std::int64_t right = edge_key(false, i + 1, j);
        auto add = [&](std::int64_t a, std::int64_t b) { segments.emplace_back(a, b); };
        switch (code) {
          case 1:  add(left, bottom); break;
          case 2:  add(bottom, right); break;
          case 3:  add(left, right); break;
          case 4:  add(right, top); break;
          case 6:  add(bottom, top); break;
          case 7:  add(left, top); break;
          case 8:  add(left, top); break;
          case 9:  add(bottom, top); break;
          case 11: add(right, top); break;
          case 12: add(left, right); break;
          case 13: add(bottom, right); break;
          case 14: add(left, bottom); break;
          case 5: {
            double c = field.value(q, tracer.xat(i) + tracer.dx / 2,
                                   tracer.yat(j) + tracer.dy / 2);
            if (c > 0) {
              add(left, top);
              add(bottom, right);
            } else {
              add(left, bottom);
              add(right, top);
            }
            break;
          }
          case 10: {
            double c = field.value(q, tracer.xat(i) + tracer.dx / 2,
                                   tracer.yat(j) + tracer.dy / 2);
            if (c > 0) {
              add(left, bottom);
              add(right, top);
            } else {
              add(left, top);
              add(bottom, right);
            }
            break;
          }
          default: break;
        }
      }
    }

    // refine each crossing once, then stitch segments into polylines
    std::map<std::int64_t, Point2> points;
    auto point_of = [&](std::int64_t key) -> const Point2& {
      auto it = points.find(key);
      if (it == points.end()) {
        bool horizontal = (key >> 60) & 1;
        int i = static_cast<int>((key >> 30) & ((1LL << 30) - 1));
        int j = static_cast<int>(key & ((1LL << 30) - 1));
        it = points.emplace(key, tracer.refine(horizontal, i, j)).first;
      }
      return it->second;
    };

    std::map<std::int64_t, std::vector<int>> incident;
    for (int sidx = 0; sidx < static_cast<int>(segments.size()); ++sidx) {
      incident[segments[sidx].first].push_back(sidx);
      incident[segments[sidx].second].push_back(sidx);
    }
    std::vector<bool> used(segments.size(), false);
    QuadrantTrace qt;
    qt.quadrant = q;

    auto walk = [&](std::int64_t start_key, int start_seg) {
      Polyline line;
      line.pts.push_back(point_of(start_key));
      std::int64_t key = start_key;
      int seg = start_seg;
      while (true) {
        used[seg] = true;
        key = segments[seg].first == key ? segments[seg].second : segments[seg].first;
        line.pts.push_back(point_of(key));
        int next = -1;
        for (int cand : incident[key])
          if (!used[cand]) next = cand;
        if (next < 0) break;
        seg = next;
      }
      qt.components.push_back(std::move(line));
    };

    for (const auto& [key, segs] : incident)  // open curves start at degree-1 keys
      if (segs.size() == 1 && !used[segs[0]]) walk(key, segs[0]);
    for (int sidx = 0; sidx < static_cast<int>(segments.size()); ++sidx)  // cycles
      if (!used[sidx]) walk(segments[sidx].first, sidx);

    std::sort(qt.components.begin(), qt.components.end(),
              [](const Polyline& a, const Polyline& b) {
                if (a.pts.front() != b.pts.front()) return a.pts.front() < b.pts.front();
                return a.pts.size() < b.pts.size();
              });
    tc.quadrants.push_back(std::move(qt));
  }
  return tc;
}

namespace {

double polyline_turning(const Polyline& line) {
  const auto& p = line.pts;
  if (p.size() < 3) return 0;
  std::vector<double> angles;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    double ux = p[i + 1][0] - p[i][0], uy = p[i + 1][1] - p[i][1];
    if (ux == 0 && uy == 0) continue;
    angles.push_back(std::atan2(uy, ux));
  }
  if (angles.size() < 2) return 0;
  bool closed = std::abs(p.front()[0] - p.back()[0]) < 1e-12 &&
                std::abs(p.front()[1] - p.back()[1]) < 1e-12;
  double total = 0;
  std::size_t steps = closed ? angles.size() : angles.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    double delta = angles[(i + 1) % angles.size()] - angles[i];
    while (delta > M_PI) delta -= 2 * M_PI;
    while (delta <= -M_PI) delta += 2 * M_PI;
    total += std::abs(delta);
  }
  return total;
}

}  // namespace

double amoeba_total_curvature(const TracedCurve& tc) {
  double total = 0;
  for (const auto& qt : tc.quadrants)
    for (const auto& line : qt.components) total += polyline_turning(line);
  return total;
}

double converged_total_curvature(const RealFamily& fam, double t, int grid,
                                 std::optional<Orthant> only_quadrant) {
  double coarse = amoeba_total_curvature(trace_real_curve(fam, t, grid, only_quadrant));
  double fine = amoeba_total_curvature(trace_real_curve(fam, t, 2 * grid, only_quadrant));
  double scale = std::max(std::abs(fine), 1e-12);
  if (std::abs(fine - coarse) / scale >= 0.01)
    throw InsufficientResolution("curvature totals " + std::to_string(coarse) + " and " +
                                 std::to_string(fine) + " have not converged at grid " +
                                 std::to_string(grid));
  return fine;
}

ConvergenceTable convergence_experiment(const TropicalPolynomial& f,
                                        const SignDistribution& theta,
                                        const std::vector<double>& t_values, int grid) {
  if (f.ambient_dim() != 2)
    throw NotPlaneCurve("the convergence experiment is defined for plane curves");
  DualSubdivision s = dual_subdivision(f);
  if (!classify(s).non_singular)
    throw NotNonSingular("the convergence experiment requires a non-singular curve");

  ConvergenceTable table;
  table.target = static_cast<double>(s.cells.size()) * M_PI;
  RealFamily fam = make_family(f, theta);
  for (double t : t_values) {
    ConvergenceRow row;
    row.t = t;
    row.grid = grid;
    row.curvature = converged_total_curvature(fam, t, grid);
    row.target = table.target;
    row.rel_error = std::abs(row.curvature - table.target) / table.target;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace tropcurv
