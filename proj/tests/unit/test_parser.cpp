#include "doctest.h"
#include "tropcurv/errors.hpp"
#include "tropcurv/rational.hpp"
#include "tropcurv/tropical.hpp"

using namespace tropcurv;

TEST_CASE("rational parsing round trips") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(rational_string(Rational(-5, 2)) == "-5/2");
  CHECK(rational_string(Rational(8)) == "8");
  CHECK(parse_rational(rational_string(Rational(123456789012LL, 7))) ==
        Rational(123456789012LL, 7));
}

TEST_CASE("rational parsing rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
  // no magnitude cap: big literals parse exactly
  CHECK(rational_string(parse_rational("123456789012345678901234567891/7")) ==
        "123456789012345678901234567891/7");
}

TEST_CASE("tropical expression grammar") {
  auto f = parse_tropical("0 + 0*x1 + 0*x2");
  CHECK(f.ambient_dim() == 2);
  CHECK(f.term_count() == 3);
  CHECK(f.coeff({0, 0}) == 0);
  CHECK(f.coeff({1, 0}) == 0);
  CHECK(f.coeff({0, 1}) == 0);

  auto g = parse_tropical("1/2 + 3*x1^2", 2);
  CHECK(g.ambient_dim() == 2);
  CHECK(g.coeff({0, 0}) == Rational(1, 2));
  CHECK(g.coeff({2, 0}) == 3);

  auto h = parse_tropical("-2/3*x1*x2^3 + 4*x1*x1");
  CHECK(h.ambient_dim() == 2);
  CHECK(h.coeff({1, 3}) == Rational(-2, 3));
  CHECK(h.coeff({2, 0}) == 4);  // repeated variable powers accumulate

  // Dimension inferred from the largest index when not given.
  CHECK(parse_tropical("5*x3").ambient_dim() == 3);
}

TEST_CASE("tropical expression errors carry positions") {
  CHECK_THROWS_AS(parse_tropical(""), SyntaxError);
  CHECK_THROWS_AS(parse_tropical("1 +"), SyntaxError);
  CHECK_THROWS_AS(parse_tropical("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse_tropical("2*y1"), SyntaxError);
  CHECK_THROWS_AS(parse_tropical("2*x0"), SyntaxError);
  CHECK_THROWS_AS(parse_tropical("2*x3", 2), SyntaxError);  // index exceeds dimension
  CHECK_THROWS_AS(parse_tropical("0*x1 + 0*x1"), DuplicateExponent);

  try {
    parse_tropical("1 + @");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("parsed polynomials drive the subdivision") {
  auto f = parse_tropical("0 + 0*x1 + 0*x2");
  auto sub = dual_subdivision(f);
  CHECK(sub.cells.size() == 1);
  CHECK(sub.newton_volume == Rational(1, 2));
}
