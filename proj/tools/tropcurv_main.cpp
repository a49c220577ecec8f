// Command-line front end: subcommands map 1:1 onto the library operations,
// reports go to --out or stdout. Exit codes: 0 success, 1 failed
// verification, 2 input/usage errors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropcurv/amoeba.hpp"
#include "tropcurv/curvature.hpp"
#include "tropcurv/errors.hpp"
#include "tropcurv/io.hpp"
#include "tropcurv/render.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tropcurv;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

struct VerifyOptions {
  std::string check = "all";
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t partition_samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  ConstantsTable table;
};

// pi as the table sees it, so a tampered table shifts every expectation
double table_pi(const ConstantsTable& t) { return t.sigma_of(1) / 2.0; }

double table_a(const ConstantsTable& t, int n) {
  return table_pi(t) * t.sigma_of(2 * n) / t.sigma_of(2 * n + 1);
}

double exact_tolerance(int n) { return n >= 2 ? 1e-8 : 1e-9; }

ordered_json check_vertex_totals(const CurvatureReport& rep, const VerifyOptions& opt,
                                 bool& passed) {
  const double expected = opt.table.sigma_of(rep.n) / 2.0;
  ordered_json j;
  j["name"] = "vertex-totals";
  j["expected_per_vertex"] = expected;
  ordered_json rows = ordered_json::array();
  bool ok = true;
  int asserted = 0;
  for (const auto& pv : rep.per_vertex) {
    double tol = pv.total.method == AngleMethod::exact ? exact_tolerance(rep.n)
                                                       : 6.0 * pv.total.stderr_ + 1e-9;
    double err = std::abs(pv.total.value - expected);
    bool assert_this = pv.dual_elementary;
    if (assert_this) {
      ++asserted;
      if (err > tol) ok = false;
    }
    ordered_json r;
    r["vertex"] = pv.vertex;
    r["total"] = pv.total.value;
    r["error"] = err;
    r["tolerance"] = tol;
    r["dual_elementary"] = pv.dual_elementary;
    r["asserted"] = assert_this;
    rows.push_back(std::move(r));
  }
  j["vertices"] = std::move(rows);
  j["asserted_vertices"] = asserted;
  j["status"] = asserted == 0 ? "skipped" : (ok ? "passed" : "failed");
  if (asserted > 0) passed = passed && ok;
  return j;
}

ordered_json check_partition(const TropicalPolynomial& f, const VerifyOptions& opt,
                             bool& passed) {
  DualSubdivision s = dual_subdivision(f);
  Classification cls = classify(s);
  ordered_json j;
  j["name"] = "partition";
  if (!cls.all_duals_elementary) {
    j["status"] = "skipped";
    j["reason"] = "requires every maximal dual cell to be elementary";
    return j;
  }
  bool ok = true;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    LatticeSimplex simplex{s.cells[i].exponents};
    PartitionReport rep =
        partition_check(simplex, opt.partition_samples, mix_seed(opt.seed, i, 0));
    ordered_json r;
    r["cell"] = i;
    r["samples"] = rep.samples;
    r["zero_hits"] = rep.zero_hits;
    r["multi_hits"] = rep.multi_hits;
    r["description_mismatches"] = rep.description_mismatches;
    r["passed"] = rep.passed;
    rows.push_back(std::move(r));
    ok = ok && rep.passed;
  }
  j["cells"] = std::move(rows);
  j["status"] = ok ? "passed" : "failed";
  passed = passed && ok;
  return j;
}

// table-side right-hand side |(-1)^n a_n (n+1)! vol sigma_{2n+1} / sigma_1|
double table_rhs(const CurvatureReport& rep, const VerifyOptions& opt) {
  Rational normalized = rep.newton_volume;
  for (int i = 2; i <= rep.n + 1; ++i) normalized *= i;
  return table_a(opt.table, rep.n) * to_double(normalized) *
         opt.table.sigma_of(2 * rep.n + 1) / opt.table.sigma_of(1);
}

ordered_json check_inequality(const CurvatureReport& rep, const VerifyOptions& opt,
                              bool equality_mode, bool non_singular, bool& passed) {
  const double factor = opt.table.sigma_of(2 * rep.n) / opt.table.sigma_of(rep.n);
  const double lhs = factor * rep.polyhedral.value;
  const double rhs = table_rhs(rep, opt);
  const double margin =
      rep.polyhedral.exact ? 0.0 : 6.0 * factor * rep.polyhedral.stderr_;
  const double tol = exact_tolerance(rep.n) * std::max(1.0, rhs);

  ordered_json j;
  j["name"] = equality_mode ? "equality" : "inequality";
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["tolerance"] = tol;
  j["margin"] = margin;
  j["non_singular"] = non_singular;
  bool ok;
  if (equality_mode) {
    ok = std::abs(lhs - rhs) <= tol + margin;
    j["difference"] = std::abs(lhs - rhs);
  } else {
    ok = lhs <= rhs + tol + margin;
    j["strict"] = lhs < rhs - tol - margin;
  }
  j["status"] = ok ? "passed" : "failed";
  passed = passed && ok;
  return j;
}

ordered_json check_gauss_bonnet(const TropicalPolynomial& f, const VerifyOptions& opt,
                                bool& passed) {
  GaussBonnetReport rep = gauss_bonnet(f);  // throws NotNonSingular
  const int n = f.ambient_dim() - 1;
  const double expected = table_a(opt.table, n) *
                          (opt.table.sigma_of(2 * n + 1) / opt.table.sigma_of(1)) *
                          rep.chi.convert_to<double>();
  const double residual =
      std::abs(rep.complex_value - expected) / std::max(1.0, std::abs(expected));
  ordered_json j;
  j["name"] = "gauss-bonnet";
  j["chi"] = rep.chi.str();
  j["vertex_count"] = rep.vertex_count;
  j["expected_from_chi"] = expected;
  j["complex_total"] = rep.complex_value;
  j["residual"] = residual;
  j["tolerance"] = 1e-12;
  bool ok = residual <= 1e-12 && rep.holds;
  j["status"] = ok ? "passed" : "failed";
  passed = passed && ok;
  return j;
}

int run_verify(const InputDocument& doc, const VerifyOptions& opt,
               const std::string& out_path) {
  const TropicalPolynomial& f = doc.poly;
  DualSubdivision s = dual_subdivision(f);
  Classification cls = classify(s);

  AngleConfig cfg;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;

  ordered_json report;
  report["kind"] = "verification";
  report["check"] = opt.check;
  report["seed"] = opt.seed;
  bool passed = true;
  ordered_json checks = ordered_json::array();

  const bool all = opt.check == "all";
  std::optional<CurvatureReport> curv;
  auto curvature = [&]() -> const CurvatureReport& {
    if (!curv) curv = polyhedral_total_curvature(f, doc.signs, cfg);
    return *curv;
  };

  if (all || opt.check == "vertex-totals")
    checks.push_back(check_vertex_totals(curvature(), opt, passed));
  if (all || opt.check == "partition") {
    if (all && !cls.all_duals_elementary) {
      ordered_json j;
      j["name"] = "partition";
      j["status"] = "skipped";
      j["reason"] = "requires every maximal dual cell to be elementary";
      checks.push_back(std::move(j));
    } else {
      checks.push_back(check_partition(f, opt, passed));
    }
  }
  if (all || opt.check == "inequality")
    checks.push_back(check_inequality(curvature(), opt, false, cls.non_singular, passed));
  if (opt.check == "equality" || (all && cls.non_singular))
    checks.push_back(check_inequality(curvature(), opt, true, cls.non_singular, passed));
  if (opt.check == "gauss-bonnet" || (all && cls.non_singular)) {
    if (all && !cls.non_singular) {
      ordered_json j;
      j["name"] = "gauss-bonnet";
      j["status"] = "skipped";
      j["reason"] = "requires a non-singular dual subdivision";
      checks.push_back(std::move(j));
    } else {
      checks.push_back(check_gauss_bonnet(f, opt, passed));
    }
  }

  report["checks"] = std::move(checks);
  report["passed"] = passed;
  emit(report.dump(2) + "\n", out_path);
  return passed ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact tropical curvature toolkit"};
  app.require_subcommand(1);

  std::string input_path, out_path, csv_path, svg_path;
  std::string check = "all", quadrant_text, what = "curve", constants_path;
  std::uint64_t mc_samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::vector<double> t_list;
  int grid = 512;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "input JSON document")->required();
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* subdivide = app.add_subcommand("subdivide", "dual subdivision report");
  add_input(subdivide);

  CLI::App* hyper = app.add_subcommand("hypersurface", "tropical hypersurface report");
  add_input(hyper);

  CLI::App* patch = app.add_subcommand("patchwork", "per-orthant real part report");
  add_input(patch);

  CLI::App* curv = app.add_subcommand("curvature", "polyhedral and complex curvature");
  add_input(curv);
  curv->add_option("--mc-samples", mc_samples, "Monte Carlo sample count (>= 1000)");
  curv->add_option("--seed", seed, "random seed recorded in the report");

  CLI::App* verify = app.add_subcommand("verify", "verification assertions");
  add_input(verify);
  verify->add_option("--check", check,
                     "vertex-totals | partition | inequality | equality | gauss-bonnet | all");
  verify->add_option("--mc-samples", mc_samples, "Monte Carlo sample count (>= 1000)");
  verify->add_option("--seed", seed, "random seed recorded in the report");
  verify->add_option("--constants-table", constants_path,
                     "JSON sphere-volume table overriding the built-in constants");

  CLI::App* amoeba = app.add_subcommand("amoeba", "trace the real family and measure");
  add_input(amoeba);
  amoeba->add_option("--t", t_list, "family parameter (repeatable)")->required();
  amoeba->add_option("--grid", grid, "marching-squares cells per axis");
  amoeba->add_option("--quadrant", quadrant_text, "restrict the SVG trace, e.g. ++ or 01");
  amoeba->add_option("--csv", csv_path, "write the convergence table as CSV");
  amoeba->add_option("--svg", svg_path, "write the traced curve (smallest t) as SVG");

  CLI::App* render = app.add_subcommand("render", "SVG figures");
  add_input(render);
  render->add_option("--what", what, "newton | curve | real-part | amoeba");
  render->add_option("--t", t_list, "family parameter for --what amoeba");
  render->add_option("--grid", grid, "marching-squares cells per axis");
  render->add_option("--quadrant", quadrant_text, "restrict amoeba tracing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    InputDocument doc = load_input(input_path);

    if (subdivide->parsed()) {
      emit(to_json(dual_subdivision(doc.poly), doc), out_path);
      return 0;
    }
    if (hyper->parsed()) {
      emit(to_json(hypersurface(doc.poly)), out_path);
      return 0;
    }
    if (patch->parsed()) {
      HypersurfaceComplex h = hypersurface(doc.poly);
      std::vector<std::string> warnings;
      RealPart rp = real_part(h, doc.signs, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      emit(to_json(rp, h), out_path);
      return 0;
    }

    if (mc_samples < 1000) throw InputError("--mc-samples must be at least 1000");

    if (curv->parsed()) {
      AngleConfig cfg;
      cfg.samples = mc_samples;
      cfg.seed = seed;
      emit(to_json(polyhedral_total_curvature(doc.poly, doc.signs, cfg)), out_path);
      return 0;
    }
    if (verify->parsed()) {
      const std::vector<std::string> known = {"vertex-totals", "partition",    "inequality",
                                              "equality",      "gauss-bonnet", "all"};
      if (std::find(known.begin(), known.end(), check) == known.end())
        throw InputError("unknown --check '" + check + "'");
      VerifyOptions opt;
      opt.check = check;
      opt.samples = mc_samples;
      opt.partition_samples = mc_samples == kDefaultSamples ? 100000 : mc_samples;
      opt.seed = seed;
      opt.table = constants_path.empty() ? default_constants_table()
                                         : load_constants_table(constants_path);
      return run_verify(doc, opt, out_path);
    }
    if (amoeba->parsed()) {
      ConvergenceTable table = convergence_experiment(doc.poly, doc.signs, t_list, grid);
      if (!csv_path.empty()) write_file(csv_path, to_csv(table));
      if (!svg_path.empty()) {
        std::optional<Orthant> quad;
        if (!quadrant_text.empty()) quad = parse_orthant(quadrant_text, 2);
        double t_min = *std::min_element(t_list.begin(), t_list.end());
        RealFamily fam = make_family(doc.poly, doc.signs);
        write_file(svg_path, render_amoeba_svg(trace_real_curve(fam, t_min, grid, quad)));
      }
      emit(to_json(table), out_path);
      return 0;
    }
    if (render->parsed()) {
      std::string svg;
      if (what == "newton") {
        svg = render_newton_svg(dual_subdivision(doc.poly), doc.signs);
      } else if (what == "curve") {
        svg = render_curve_svg(hypersurface_with_edges(doc.poly));
      } else if (what == "real-part") {
        HypersurfaceComplex h = hypersurface(doc.poly);
        svg = render_real_part_svg(h, real_part(h, doc.signs));
      } else if (what == "amoeba") {
        if (t_list.empty()) throw InputError("--what amoeba requires --t");
        std::optional<Orthant> quad;
        if (!quadrant_text.empty()) quad = parse_orthant(quadrant_text, 2);
        RealFamily fam = make_family(doc.poly, doc.signs);
        svg = render_amoeba_svg(trace_real_curve(fam, t_list.front(), grid, quad));
      } else {
        throw InputError("unknown --what '" + what + "'");
      }
      emit(svg, out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
