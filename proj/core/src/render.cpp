#include "tropcurv/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "tropcurv/errors.hpp"

namespace tropcurv {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Svg {
  double width = 0, height = 0;
  std::string body;

  void line(double x1, double y1, double x2, double y2, const char* stroke,
            double stroke_width, bool dashed = false) {
    body += "  <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
            "\" y2=\"" + fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
            fmt(stroke_width) + "\"";
    if (dashed) body += " stroke-dasharray=\"4 3\"";
    body += "/>\n";
  }
  void circle(double x, double y, double r, const char* fill) {
    body += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" + fmt(r) +
            "\" fill=\"" + std::string(fill) + "\"/>\n";
  }
  void text(double x, double y, const std::string& s, const char* fill = "#444") {
    body += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
            "\" font-family=\"monospace\" font-size=\"12\" fill=\"" + fill + "\">" + s +
            "</text>\n";
  }
  void rect(double x, double y, double w, double h, const char* stroke) {
    body += "  <rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) +
            "\" height=\"" + fmt(h) + "\" fill=\"none\" stroke=\"" + stroke + "\"/>\n";
  }
  std::string finish() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
           fmt(height) + "\">\n" + body + "</svg>\n";
  }
};

// Maps a world rectangle into a screen panel, y axis flipped.
struct Panel {
  double x0, y0, x1, y1;          // world
  double sx, sy, sw, sh;          // screen
  double px(double x) const { return sx + (x - x0) / (x1 - x0) * sw; }
  double py(double y) const { return sy + sh - (y - y0) / (y1 - y0) * sh; }
};

Panel make_panel(double x0, double y0, double x1, double y1, double sx, double sy,
                 double size) {
  if (x1 - x0 < 1e-9) x1 = x0 + 1;
  if (y1 - y0 < 1e-9) y1 = y0 + 1;
  double w = x1 - x0, h = y1 - y0;
  double scale = size / std::max(w, h);
  return Panel{x0, y0, x0 + size / scale, y0 + size / scale, sx, sy, w * scale,
               h * scale};
}

// Clips the ray p + t dir, t >= 0, to the world rectangle of the panel.
bool clip_ray(const Panel& pn, double pxw, double pyw, double dx, double dy,
              double& qx, double& qy) {
  double t = 1e18;
  if (dx > 0) t = std::min(t, (pn.x1 - pxw) / dx);
  if (dx < 0) t = std::min(t, (pn.x0 - pxw) / dx);
  if (dy > 0) t = std::min(t, (pn.y1 - pyw) / dy);
  if (dy < 0) t = std::min(t, (pn.y0 - pyw) / dy);
  if (t <= 0 || t >= 1e18) return false;
  qx = pxw + t * dx;
  qy = pyw + t * dy;
  return true;
}

struct CurveGeometry {
  std::vector<std::array<double, 2>> vertices;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

CurveGeometry curve_geometry(const HypersurfaceComplex& h) {
  CurveGeometry g;
  for (const auto& v : h.vertices)
    g.vertices.push_back({to_double(v.position[0]), to_double(v.position[1])});
  for (const auto& e : h.edges)
    if (e.kind == EdgeKind::line)
      g.vertices.push_back({to_double(e.point[0]), to_double(e.point[1])});
  if (g.vertices.empty()) g.vertices.push_back({0, 0});
  g.x0 = g.x1 = g.vertices[0][0];
  g.y0 = g.y1 = g.vertices[0][1];
  for (const auto& p : g.vertices) {
    g.x0 = std::min(g.x0, p[0]);
    g.x1 = std::max(g.x1, p[0]);
    g.y0 = std::min(g.y0, p[1]);
    g.y1 = std::max(g.y1, p[1]);
  }
  double pad = std::max({1.0, 0.35 * (g.x1 - g.x0), 0.35 * (g.y1 - g.y0)});
  g.x0 -= pad;
  g.x1 += pad;
  g.y0 -= pad;
  g.y1 += pad;
  return g;
}

void draw_plane_curve(Svg& svg, const Panel& pn, const HypersurfaceComplex& h,
                      const CurveGeometry& g, const std::set<int>* present_edges,
                      const std::set<int>* present_vertices) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    bool on = !present_edges || present_edges->count(static_cast<int>(i)) != 0;
    const char* stroke = on ? "#c62828" : "#bbbbbb";
    double width = on ? 2.0 : 1.0;
    bool dashed = !on;
    if (e.kind == EdgeKind::segment) {
      const auto& a = g.vertices[std::size_t(e.v0)];
      const auto& b = g.vertices[std::size_t(e.v1)];
      svg.line(pn.px(a[0]), pn.py(a[1]), pn.px(b[0]), pn.py(b[1]), stroke, width, dashed);
    } else if (e.kind == EdgeKind::ray) {
      const auto& a = g.vertices[std::size_t(e.v0)];
      double qx, qy;
      if (clip_ray(pn, a[0], a[1], double(e.direction[0]), double(e.direction[1]), qx, qy))
        svg.line(pn.px(a[0]), pn.py(a[1]), pn.px(qx), pn.py(qy), stroke, width, dashed);
    } else {
      double bx = to_double(e.point[0]), by = to_double(e.point[1]);
      double qx, qy, rx, ry;
      bool f = clip_ray(pn, bx, by, double(e.direction[0]), double(e.direction[1]), qx, qy);
      bool b = clip_ray(pn, bx, by, -double(e.direction[0]), -double(e.direction[1]), rx, ry);
      if (f && b) svg.line(pn.px(rx), pn.py(ry), pn.px(qx), pn.py(qy), stroke, width, dashed);
    }
  }
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    bool on = !present_vertices || present_vertices->count(static_cast<int>(i)) != 0;
    const auto& p = g.vertices[i];
    svg.circle(pn.px(p[0]), pn.py(p[1]), on ? 3.0 : 2.0, on ? "#c62828" : "#bbbbbb");
  }
}

}  // namespace

std::string render_newton_svg(const DualSubdivision& s, const SignDistribution& theta) {
  if (s.ambient_dim != 2) throw NotPlaneCurve("Newton rendering supports plane curves only");
  std::vector<LatticeVector> exps;
  for (const auto& c : s.cells)
    for (const auto& e : c.exponents) exps.push_back(e);
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  for (const auto& e : exps) {
    x0 = std::min(x0, double(e[0]));
    x1 = std::max(x1, double(e[0]));
    y0 = std::min(y0, double(e[1]));
    y1 = std::max(y1, double(e[1]));
  }
  Svg svg;
  svg.width = 420;
  svg.height = 420;
  Panel pn = make_panel(x0 - 0.7, y0 - 0.7, x1 + 0.7, y1 + 0.7, 30, 30, 360);

  for (const auto& c : s.cells) {
    // convex cell outline: angular order around the centroid
    std::vector<std::array<double, 2>> pts;
    double cx = 0, cy = 0;
    for (const auto& v : c.vertex_set) {
      pts.push_back({double(v[0]), double(v[1])});
      cx += double(v[0]);
      cy += double(v[1]);
    }
    cx /= double(pts.size());
    cy /= double(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& a = pts[i];
      const auto& b = pts[(i + 1) % pts.size()];
      svg.line(pn.px(a[0]), pn.py(a[1]), pn.px(b[0]), pn.py(b[1]), "#1565c0", 1.5);
    }
  }
  std::set<LatticeVector> seen(exps.begin(), exps.end());
  for (const auto& e : seen) {
    double x = pn.px(double(e[0])), y = pn.py(double(e[1]));
    int sign = theta.has(e) ? theta.at(e) : 1;
    svg.circle(x, y, 9, sign > 0 ? "#e3f2fd" : "#ffebee");
    svg.text(x - 4, y + 4, sign > 0 ? "+" : "-", sign > 0 ? "#1565c0" : "#c62828");
  }
  svg.text(10, 16, "newton polytope / dual subdivision / signs");
  return svg.finish();
}

std::string render_curve_svg(const HypersurfaceComplex& h) {
  if (h.ambient_dim != 2) throw NotPlaneCurve("curve rendering supports plane curves only");
  CurveGeometry g = curve_geometry(h);
  Svg svg;
  svg.width = 420;
  svg.height = 420;
  Panel pn = make_panel(g.x0, g.y0, g.x1, g.y1, 30, 30, 360);
  svg.rect(pn.sx, pn.sy, pn.sw, pn.sh, "#dddddd");
  draw_plane_curve(svg, pn, h, g, nullptr, nullptr);
  svg.text(10, 16, "tropical curve");
  return svg.finish();
}

std::string render_real_part_svg(const HypersurfaceComplex& h, const RealPart& rp) {
  const int d = h.ambient_dim;
  if (d == 2) {
    CurveGeometry g = curve_geometry(h);
    Svg svg;
    const double size = 250, gap = 30;
    svg.width = 2 * size + 3 * gap;
    svg.height = 2 * size + 3 * gap + 10;
    for (std::size_t k = 0; k < rp.parts.size(); ++k) {
      const auto& part = rp.parts[k];
      double sx = gap + (k % 2) * (size + gap);
      double sy = gap + 10 + (k / 2) * (size + gap);
      Panel pn = make_panel(g.x0, g.y0, g.x1, g.y1, sx, sy, size);
      svg.rect(pn.sx, pn.sy, pn.sw, pn.sh, "#dddddd");
      std::set<int> edges(part.edges.begin(), part.edges.end());
      std::set<int> vertices(part.vertices.begin(), part.vertices.end());
      draw_plane_curve(svg, pn, h, g, &edges, &vertices);
      svg.text(sx, sy - 4, "quadrant " + part.orthant.sign_string());
    }
    return svg.finish();
  }
  if (d != 3) throw InputError("real part rendering supports ambient dimension 2 or 3");

  // isometric wireframe, present edges only, one panel per orthant
  std::vector<std::array<double, 3>> pos;
  for (const auto& v : h.vertices)
    pos.push_back({to_double(v.position[0]), to_double(v.position[1]),
                   to_double(v.position[2])});
  if (pos.empty()) pos.push_back({0, 0, 0});
  double lo = pos[0][0], hi = pos[0][0];
  for (const auto& p : pos)
    for (double c : p) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  double pad = std::max(1.0, 0.35 * (hi - lo));
  lo -= pad;
  hi += pad;
  auto proj = [](const std::array<double, 3>& p) -> std::array<double, 2> {
    return {(p[0] - p[1]) * 0.8660254037844386, (p[0] + p[1]) * 0.5 - p[2]};
  };
  auto clip3 = [&](const std::array<double, 3>& p, const LatticeVector& dir,
                   std::array<double, 3>& q) {
    double t = 1e18;
    for (int i = 0; i < 3; ++i) {
      double di = double(dir[i]);
      if (di > 0) t = std::min(t, (hi - p[i]) / di);
      if (di < 0) t = std::min(t, (lo - p[i]) / di);
    }
    if (t <= 0 || t >= 1e18) return false;
    for (int i = 0; i < 3; ++i) q[i] = p[i] + t * double(dir[i]);
    return true;
  };

  double wx0 = 0, wx1 = 0, wy0 = 0, wy1 = 0;
  for (double cx : {lo, hi})
    for (double cy : {lo, hi})
      for (double cz : {lo, hi}) {
        auto s = proj({cx, cy, cz});
        wx0 = std::min(wx0, s[0]);
        wx1 = std::max(wx1, s[0]);
        wy0 = std::min(wy0, s[1]);
        wy1 = std::max(wy1, s[1]);
      }

  Svg svg;
  const double size = 200, gap = 26;
  svg.width = 4 * size + 5 * gap;
  svg.height = 2 * size + 3 * gap + 10;
  for (std::size_t k = 0; k < rp.parts.size(); ++k) {
    const auto& part = rp.parts[k];
    double sx = gap + (k % 4) * (size + gap);
    double sy = gap + 10 + (k / 4) * (size + gap);
    Panel pn = make_panel(wx0, wy0, wx1, wy1, sx, sy, size);
    svg.rect(pn.sx, pn.sy, pn.sw, pn.sh, "#dddddd");
    for (int ei : part.edges) {
      const auto& e = h.edges[std::size_t(ei)];
      if (e.kind == EdgeKind::segment) {
        auto a = proj(pos[std::size_t(e.v0)]);
        auto b = proj(pos[std::size_t(e.v1)]);
        svg.line(pn.px(a[0]), pn.py(a[1]), pn.px(b[0]), pn.py(b[1]), "#c62828", 1.5);
      } else if (e.kind == EdgeKind::ray) {
        std::array<double, 3> q;
        if (clip3(pos[std::size_t(e.v0)], e.direction, q)) {
          auto a = proj(pos[std::size_t(e.v0)]);
          auto b = proj(q);
          svg.line(pn.px(a[0]), pn.py(a[1]), pn.px(b[0]), pn.py(b[1]), "#c62828", 1.5);
        }
      }
    }
    for (int vi : part.vertices) {
      auto a = proj(pos[std::size_t(vi)]);
      svg.circle(pn.px(a[0]), pn.py(a[1]), 2.5, "#c62828");
    }
    svg.text(sx, sy - 4, "orthant " + part.orthant.sign_string());
  }
  return svg.finish();
}

std::string render_amoeba_svg(const TracedCurve& tc) {
  Svg svg;
  const double size = 250, gap = 30;
  int cols = tc.quadrants.size() > 1 ? 2 : 1;
  int rows = (static_cast<int>(tc.quadrants.size()) + cols - 1) / cols;
  svg.width = cols * size + (cols + 1) * gap;
  svg.height = rows * size + (rows + 1) * gap + 10;
  for (std::size_t k = 0; k < tc.quadrants.size(); ++k) {
    const auto& qt = tc.quadrants[k];
    double sx = gap + double(k % std::size_t(cols)) * (size + gap);
    double sy = gap + 10 + double(k / std::size_t(cols)) * (size + gap);
    Panel pn = make_panel(tc.window[0], tc.window[1], tc.window[2], tc.window[3], sx, sy,
                          size);
    svg.rect(pn.sx, pn.sy, pn.sw, pn.sh, "#dddddd");
    for (const auto& line : qt.components)
      for (std::size_t i = 0; i + 1 < line.pts.size(); ++i)
        svg.line(pn.px(line.pts[i][0]), pn.py(line.pts[i][1]), pn.px(line.pts[i + 1][0]),
                 pn.py(line.pts[i + 1][1]), "#2e7d32", 1.2);
    svg.text(sx, sy - 4, "quadrant " + qt.quadrant.sign_string());
  }
  return svg.finish();
}

}  // namespace tropcurv
