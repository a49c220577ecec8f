#include "tropcurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "gaussian.hpp"
#include "tropcurv/errors.hpp"
#include "tropcurv/linalg.hpp"

namespace tropcurv {

namespace {

int linear_rank(const std::vector<LatticeVector>& gens) {
  RationalMatrix m;
  for (const auto& g : gens) {
    RationalVector row;
    row.reserve(g.dim());
    for (auto x : g.c) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double complex_closed_form(int n, const CurvatureConstants& k, const Rational& volume) {
  Rational normalized = Rational(factorial(n + 1)) * volume;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * k.a_n * to_double(normalized) * k.sigma_2n_plus_1 / sphere_volume(1);
}

AngleMeasure combine(const std::vector<AngleMeasure>& parts, std::uint64_t master_seed) {
  AngleMeasure total;
  total.method = AngleMethod::exact;
  double var = 0;
  for (const auto& p : parts) {
    total.value += p.value;
    if (p.method == AngleMethod::monte_carlo) {
      total.method = AngleMethod::monte_carlo;
      var += p.stderr_ * p.stderr_;
      total.samples += p.samples;
    }
  }
  total.stderr_ = std::sqrt(var);
  total.seed = master_seed;
  return total;
}

}  // namespace

Cone curvature_cone(const LatticeSimplex& dual, const std::vector<int>& vertex_signs) {
  const int d = static_cast<int>(dual.ambient_dim());
  if (vertex_signs.size() != dual.vertices.size())
    throw DimensionMismatch("one sign per simplex vertex required");
  for (int s : vertex_signs)
    if (s != 1 && s != -1) throw InputError("vertex signs must be +1 or -1");

  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < dual.vertices.size(); ++i) {
    if (vertex_signs[i] != -1) continue;
    for (std::size_t j = 0; j < dual.vertices.size(); ++j) {
      if (vertex_signs[j] != 1) continue;
      gens.push_back(dual.vertices[j] - dual.vertices[i]);
    }
  }
  gens = dedup_primitive(gens);
  Cone c = make_cone(d, gens);
  if (!gens.empty() && linear_rank(gens) == d) c.facets = cone_facets(c);
  return c;
}

AngleMeasure vertex_curvature(const LatticeSimplex& dual, const SignDistribution& theta,
                              const Orthant& z, const AngleConfig& cfg,
                              std::uint64_t vertex_id) {
  std::vector<int> signs;
  signs.reserve(dual.vertices.size());
  for (const auto& v : dual.vertices) {
    int s = theta.at(v);
    std::int64_t parity = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) parity += z.z[i] * v[i];
    signs.push_back(((parity % 2) + 2) % 2 ? -s : s);
  }
  Cone cone = curvature_cone(dual, signs);
  AngleConfig local = cfg;
  local.seed = mix_seed(cfg.seed, vertex_id, z.code());
  return solid_angle(cone, local);
}

AngleMeasure per_vertex_total(const LatticeSimplex& dual, const SignDistribution& theta,
                              const AngleConfig& cfg, std::uint64_t vertex_id) {
  const int d = static_cast<int>(dual.ambient_dim());
  std::vector<AngleMeasure> parts;
  parts.reserve(std::size_t(1) << d);
  for (unsigned code = 0; code < (1u << d); ++code)
    parts.push_back(vertex_curvature(dual, theta, Orthant::from_code(code, d), cfg, vertex_id));
  return combine(parts, cfg.seed);
}

CurvatureReport polyhedral_total_curvature(const TropicalPolynomial& f,
                                           const SignDistribution& theta,
                                           const AngleConfig& cfg) {
  const int d = f.ambient_dim();
  if (d < 2) throw NonPositiveDimension("curvature requires ambient dimension at least 2");

  HypersurfaceComplex h = hypersurface(f);
  const DualSubdivision& s = h.subdivision;
  const int n = d - 1;

  CurvatureReport rep;
  rep.n = n;
  rep.constants = curvature_constants(n);
  rep.newton_volume = s.newton_volume;
  rep.seed = cfg.seed;

  if (s.newton_dim == d) {
    for (const auto& cell : s.cells)
      if (static_cast<int>(cell.exponents.size()) != d + 1)
        throw NotGeneric("curvature requires every maximal dual cell to be a simplex");
  }

  std::vector<AngleMeasure> vertex_totals;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    LatticeSimplex dual{s.cells[h.vertices[i].cell].exponents};
    AngleMeasure total = per_vertex_total(dual, theta, cfg, i);
    PerVertexCurvature pv;
    pv.vertex = static_cast<int>(i);
    pv.position = h.vertices[i].position;
    pv.total = total;
    pv.dual_elementary = is_elementary(dual);
    rep.per_vertex.push_back(std::move(pv));
    vertex_totals.push_back(total);
  }

  AngleMeasure sum = combine(vertex_totals, cfg.seed);
  rep.polyhedral.value = sum.value;
  rep.polyhedral.exact = sum.method == AngleMethod::exact;
  rep.polyhedral.stderr_ = sum.stderr_;
  rep.samples = sum.samples;

  rep.complex_value = complex_closed_form(n, rep.constants, s.newton_volume);
  rep.complex_abs = std::abs(rep.complex_value);
  double lhs = rep.constants.sigma_2n / rep.constants.sigma_n * rep.polyhedral.value;
  rep.ratio = rep.complex_abs > 0 ? lhs / rep.complex_abs : 0.0;

  Classification cls = classify(s);
  if (cls.non_singular)
    rep.expected_non_singular =
        static_cast<double>(h.vertices.size()) * rep.constants.sigma_n / 2.0;
  return rep;
}

CurvatureReport complex_total_curvature(const TropicalPolynomial& f) {
  const int d = f.ambient_dim();
  if (d < 2) throw NonPositiveDimension("curvature requires ambient dimension at least 2");
  DualSubdivision s = dual_subdivision(f);
  const int n = d - 1;

  CurvatureReport rep;
  rep.n = n;
  rep.constants = curvature_constants(n);
  rep.newton_volume = s.newton_volume;
  rep.complex_value = complex_closed_form(n, rep.constants, s.newton_volume);
  rep.complex_abs = std::abs(rep.complex_value);
  Classification cls = classify(s);
  if (cls.non_singular)
    rep.expected_non_singular =
        static_cast<double>(s.cells.size()) * rep.constants.sigma_n / 2.0;
  return rep;
}

double real_total_curvature_nonsingular(const TropicalPolynomial& f) {
  const int d = f.ambient_dim();
  if (d < 2) throw NonPositiveDimension("curvature requires ambient dimension at least 2");
  DualSubdivision s = dual_subdivision(f);
  if (!classify(s).non_singular)
    throw NotNonSingular("total real curvature in closed form requires a non-singular dual");
  return static_cast<double>(s.cells.size()) * sphere_volume(d - 1) / 2.0;
}

InequalityReport verify_inequality(const TropicalPolynomial& f, const SignDistribution& theta,
                                   const AngleConfig& cfg) {
  InequalityReport out;
  out.report = polyhedral_total_curvature(f, theta, cfg);
  const auto& rep = out.report;

  const double factor = rep.constants.sigma_2n / rep.constants.sigma_n;
  out.lhs = factor * rep.polyhedral.value;
  out.rhs = rep.complex_abs;
  out.margin = rep.polyhedral.exact ? 0.0 : 6.0 * factor * rep.polyhedral.stderr_;
  out.tolerance = 1e-9 * std::max(1.0, out.rhs);
  out.non_singular = rep.expected_non_singular.has_value();
  out.holds = out.lhs <= out.rhs + out.tolerance + out.margin;
  out.equality = std::abs(out.lhs - out.rhs) <= out.tolerance + out.margin;
  return out;
}

PartitionReport partition_check(const LatticeSimplex& s, std::uint64_t samples,
                                std::uint64_t seed) {
  if (!is_elementary(s))
    throw NotElementary("half-space partition requires an elementary simplex");
  if (samples == 0) throw InvalidSampleCount("sample count must be positive");

  const int d = static_cast<int>(s.ambient_dim());
  const int m = static_cast<int>(s.vertices.size());  // d + 1
  std::size_t v0 = 0;
  for (std::size_t i = 1; i < s.vertices.size(); ++i)
    if (s.vertices[i] < s.vertices[v0]) v0 = i;
  std::vector<LatticeVector> normals = inward_facet_normals(s);

  PartitionReport rep;
  rep.samples = samples;
  rep.seed = seed;

  // all non-constant sign choices with phi(v0) = -1
  struct ConeData {
    std::vector<int> signs;
    std::vector<HalfSpace> facets;
  };
  std::vector<ConeData> cones;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> phi(m);
    for (int i = 0; i < m; ++i) phi[i] = (mask >> i) & 1u ? 1 : -1;
    if (phi[v0] != -1) continue;
    bool constant = std::all_of(phi.begin(), phi.end(), [&](int x) { return x == phi[0]; });
    if (constant) continue;
    Cone c = curvature_cone(s, phi);
    cones.push_back({std::move(phi), cone_facets(c)});
  }
  for (const auto& c : cones) rep.cones.push_back({c.signs, 0});

  internal::GaussianStream gs(seed);
  std::vector<double> x(d);
  const double eps = 1e-9;
  for (std::uint64_t it = 0; it < samples; ++it) {
    // unit direction in the half-space below the facet opposite v0,
    // resampled away from every hyperplane involved in the test
    bool ok = false;
    while (!ok) {
      double norm2 = 0;
      for (int i = 0; i < d; ++i) {
        x[i] = gs.next();
        norm2 += x[i] * x[i];
      }
      if (norm2 == 0) continue;
      double inv = 1.0 / std::sqrt(norm2);
      for (int i = 0; i < d; ++i) x[i] *= inv;
      if (dot(normals[v0], x.data()) > 0)
        for (int i = 0; i < d; ++i) x[i] = -x[i];
      ok = true;
      for (const auto& n : normals)
        if (std::abs(dot(n, x.data())) < eps) ok = false;
      for (const auto& c : cones)
        for (const auto& f : c.facets)
          if (std::abs(dot(f.normal, x.data())) < eps) ok = false;
    }

    int members = 0;
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
      bool in_facets = true;
      for (const auto& f : cones[ci].facets)
        if (dot(f.normal, x.data()) < 0) in_facets = false;
      bool in_description = true;
      for (int i = 0; i < m; ++i)
        if (cones[ci].signs[i] * dot(normals[i], x.data()) < 0) in_description = false;
      if (in_facets != in_description) ++rep.description_mismatches;
      if (in_facets) {
        ++rep.cones[ci].hits;
        ++members;
      }
    }
    if (members == 0) ++rep.zero_hits;
    if (members > 1) ++rep.multi_hits;
  }

  rep.passed =
      rep.zero_hits == 0 && rep.multi_hits == 0 && rep.description_mismatches == 0;
  return rep;
}

GaussBonnetReport gauss_bonnet(const TropicalPolynomial& f) {
  const int d = f.ambient_dim();
  if (d < 2) throw NonPositiveDimension("curvature requires ambient dimension at least 2");
  DualSubdivision s = dual_subdivision(f);
  if (!classify(s).non_singular)
    throw NotNonSingular("Euler characteristic route requires a non-singular dual");
  const int n = d - 1;
  CurvatureConstants k = curvature_constants(n);

  GaussBonnetReport rep;
  rep.vertex_count = static_cast<std::int64_t>(s.cells.size());
  rep.chi = BigInt(rep.vertex_count);
  if (n % 2 != 0) rep.chi = -rep.chi;
  rep.complex_value = complex_closed_form(n, k, s.newton_volume);
  rep.expected_from_chi =
      k.a_n * (k.sigma_2n_plus_1 / sphere_volume(1)) * rep.chi.convert_to<double>();
  rep.residual = std::abs(rep.complex_value - rep.expected_from_chi) /
                 std::max(1.0, std::abs(rep.expected_from_chi));
  rep.holds = rep.residual <= 1e-12;
  return rep;
}

}  // namespace tropcurv
