#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropcurv/errors.hpp"
#include "tropcurv/rational.hpp"
#include "tropcurv/tropical.hpp"

namespace tropcurv {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool at_digit() const {
    return !eof() && std::isdigit(static_cast<unsigned char>(s[i]));
  }

  std::string digits(const char* what) {
    if (!at_digit()) throw SyntaxError(std::string("expected ") + what, i);
    std::size_t start = i;
    while (at_digit()) ++i;
    return s.substr(start, i - start);
  }

  std::int64_t small_number(const char* what) {
    std::size_t pos = i;
    std::string ds = digits(what);
    if (ds.size() > 12) throw SyntaxError(std::string(what) + " too large", pos);
    return std::stoll(ds);
  }
};

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto fail = [&]() { throw InputError("invalid rational literal: '" + text + "'"); };
  if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) fail();
  BigInt num(text.substr(0, i));
  BigInt den = 1;
  if (i < n) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != n) fail();
    den = BigInt(text.substr(den_start));
    if (den == 0) throw InputError("zero denominator in rational literal");
  }
  return Rational(num, den);
}

std::string rational_string(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

TropicalPolynomial parse_tropical(const std::string& text, int ambient_dim) {
  Scanner sc{text};
  struct RawTerm {
    std::map<int, std::int64_t> powers;
    Rational coeff;
  };
  std::vector<RawTerm> raw;
  int max_index = 0;

  sc.skip_ws();
  if (sc.eof()) throw SyntaxError("empty polynomial", 0);
  while (true) {
    RawTerm term;
    // coefficient: optional sign, digits, optional /digits
    sc.skip_ws();
    std::size_t cpos = sc.i;
    bool negative = false;
    if (!sc.eof() && sc.peek() == '-') {
      negative = true;
      ++sc.i;
      sc.skip_ws();
    }
    if (!sc.at_digit()) throw SyntaxError("expected coefficient", sc.eof() ? sc.i : cpos);
    BigInt num(sc.digits("coefficient"));
    BigInt den = 1;
    if (!sc.eof() && sc.peek() == '/') {
      ++sc.i;
      std::size_t dpos = sc.i;
      den = BigInt(sc.digits("denominator"));
      if (den == 0) throw SyntaxError("zero denominator", dpos);
    }
    term.coeff = Rational(negative ? -num : num, den);

    // monomial factors
    while (true) {
      sc.skip_ws();
      if (sc.eof() || sc.peek() != '*') break;
      ++sc.i;
      sc.skip_ws();
      if (sc.eof() || sc.peek() != 'x')
        throw SyntaxError("expected variable after '*'", sc.i);
      ++sc.i;
      std::size_t vpos = sc.i;
      std::int64_t index = sc.small_number("variable index");
      if (index < 1) throw SyntaxError("variable index must be at least 1", vpos);
      if (ambient_dim > 0 && index > ambient_dim)
        throw SyntaxError("variable index exceeds ambient dimension", vpos);
      std::int64_t power = 1;
      if (!sc.eof() && sc.peek() == '^') {
        ++sc.i;
        power = sc.small_number("exponent");
      }
      term.powers[static_cast<int>(index)] += power;
      max_index = std::max(max_index, static_cast<int>(index));
    }
    raw.push_back(std::move(term));

    sc.skip_ws();
    if (sc.eof()) break;
    if (sc.peek() != '+') throw SyntaxError("expected '+' between terms", sc.i);
    ++sc.i;
    sc.skip_ws();
    if (sc.eof()) throw SyntaxError("trailing '+'", sc.i);
  }

  const int dim = ambient_dim > 0 ? ambient_dim : max_index;
  TropicalPolynomial f(dim);
  for (const auto& term : raw) {
    LatticeVector e(std::vector<std::int64_t>(dim, 0));
    for (const auto& [index, power] : term.powers) e.c[index - 1] = power;
    f.add_term(e, term.coeff);
  }
  return f;
}

}  // namespace tropcurv
