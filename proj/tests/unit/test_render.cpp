#include <string>

#include "doctest.h"
#include "tropcurv/errors.hpp"
#include "tropcurv/io.hpp"
#include "tropcurv/render.hpp"

using namespace tropcurv;

namespace {

std::string fixture(const std::string& name) {
  return std::string(TROPCURV_FIXTURE_DIR) + "/" + name;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("newton polytope rendering shows cells and sign badges") {
  auto doc = load_input(fixture("conic.json"));
  auto sub = dual_subdivision(doc.poly);
  const std::string svg = render_newton_svg(sub, doc.signs);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<line") >= 12);   // 4 triangle outlines
  CHECK(count_occurrences(svg, "<circle") == 6);  // one badge per exponent
  CHECK(count_occurrences(svg, "<text") >= 7);    // 6 signs + title
  CHECK(count_occurrences(svg, ">-</text>") == 2);
  CHECK(count_occurrences(svg, ">+</text>") == 4);
  // Deterministic output.
  CHECK(render_newton_svg(sub, doc.signs) == svg);
}

TEST_CASE("curve rendering draws segments and clipped rays") {
  auto doc = load_input(fixture("conic.json"));
  const std::string svg = render_curve_svg(hypersurface(doc.poly));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "<line") >= 9);  // 3 segments + 6 rays
}

TEST_CASE("real part rendering lays out one panel per orthant") {
  auto doc = load_input(fixture("conic.json"));
  auto hyp = hypersurface(doc.poly);
  const std::string svg = render_real_part_svg(hyp, real_part(hyp, doc.signs));
  CHECK(count_occurrences(svg, "quadrant") == 4);

  auto doc3 = load_input(fixture("simplex3.json"));
  auto hyp3 = hypersurface(doc3.poly);
  const std::string svg3 = render_real_part_svg(hyp3, real_part(hyp3, doc3.signs));
  CHECK(svg3.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg3, "orthant") == 8);
}

TEST_CASE("amoeba rendering traces per-quadrant polylines") {
  auto doc = load_input(fixture("line.json"));
  auto fam = make_family(doc.poly, doc.signs);
  const std::string svg = render_amoeba_svg(trace_real_curve(fam, 0.1, 64));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "quadrant ") == 4);
  // three quadrants carry a branch of the line, drawn segment by segment
  CHECK(count_occurrences(svg, "stroke=\"#2e7d32\"") >= 3 * 16);
}

TEST_CASE("renderers reject out-of-scope inputs") {
  auto doc3 = load_input(fixture("simplex3.json"));
  auto sub3 = dual_subdivision(doc3.poly);
  CHECK_THROWS_AS(render_newton_svg(sub3, doc3.signs), NotPlaneCurve);
  CHECK_THROWS_AS(render_curve_svg(hypersurface(doc3.poly)), NotPlaneCurve);

  TropicalPolynomial f4(4);
  f4.add_term({0, 0, 0, 0}, 0);
  f4.add_term({1, 0, 0, 0}, 0);
  f4.add_term({0, 1, 0, 0}, 0);
  f4.add_term({0, 0, 1, 0}, 0);
  f4.add_term({0, 0, 0, 1}, 0);
  SignDistribution theta;
  for (const auto& [e, c] : f4.terms()) theta.signs[e] = +1;
  auto hyp4 = hypersurface(f4);
  CHECK_THROWS_AS(render_real_part_svg(hyp4, real_part(hyp4, theta)), InputError);
}
