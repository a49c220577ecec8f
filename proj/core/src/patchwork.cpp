#include "tropcurv/patchwork.hpp"

#include <set>
#include <string>

#include "tropcurv/errors.hpp"
#include "tropcurv/linalg.hpp"

namespace tropcurv {

namespace {

std::string exponent_string(const LatticeVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

int parity(const Orthant& z, const LatticeVector& e) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.dim(); ++i) s += z.z[i] * e[i];
  return static_cast<int>(((s % 2) + 2) % 2);
}

}  // namespace

Orthant Orthant::from_code(unsigned code, int dim) {
  if (dim < 1) throw NonPositiveDimension("orthant dimension must be positive");
  if (dim >= 32 || (code >> dim) != 0) throw InputError("orthant code out of range");
  Orthant z;
  z.z.resize(dim);
  for (int i = 0; i < dim; ++i) z.z[i] = static_cast<int>((code >> i) & 1u);
  return z;
}

unsigned Orthant::code() const {
  unsigned c = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i]) c |= 1u << i;
  return c;
}

std::string Orthant::digits() const {
  std::string out;
  for (int v : z) out += v ? '1' : '0';
  return out;
}

std::string Orthant::sign_string() const {
  std::string out;
  for (int v : z) out += v ? '-' : '+';
  return out;
}

Orthant parse_orthant(const std::string& text, int dim) {
  if (static_cast<int>(text.size()) != dim)
    throw InputError("orthant '" + text + "' must have exactly " + std::to_string(dim) +
                     " characters");
  Orthant z;
  z.z.resize(dim);
  for (int i = 0; i < dim; ++i) {
    switch (text[i]) {
      case '0':
      case '+':
        z.z[i] = 0;
        break;
      case '1':
      case '-':
        z.z[i] = 1;
        break;
      default:
        throw InputError("orthant characters must be 0/1 or +/-");
    }
  }
  return z;
}

int SignDistribution::at(const LatticeVector& e) const {
  auto it = signs.find(e);
  if (it == signs.end())
    throw UnknownExponent("no sign assigned to exponent " + exponent_string(e));
  return it->second;
}

SignDistribution constant_signs(const TropicalPolynomial& f, int sign) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  SignDistribution theta;
  for (const auto& [e, u] : f.terms()) theta.signs.emplace(e, sign);
  return theta;
}

SignDistribution twist(const SignDistribution& theta, const Orthant& z) {
  SignDistribution out;
  for (const auto& [e, s] : theta.signs) {
    if (static_cast<int>(e.dim()) != z.dim())
      throw DimensionMismatch("orthant dimension does not match exponents");
    out.signs.emplace(e, parity(z, e) ? -s : s);
  }
  return out;
}

bool cell_present(const std::vector<LatticeVector>& dual_vertices,
                  const SignDistribution& theta, const Orthant& z) {
  if (dual_vertices.empty()) return false;
  auto twisted = [&](const LatticeVector& e) {
    int s = theta.at(e);
    return parity(z, e) ? -s : s;
  };
  int first = twisted(dual_vertices.front());
  for (std::size_t i = 1; i < dual_vertices.size(); ++i)
    if (twisted(dual_vertices[i]) != first) return true;
  return false;
}

RealPart real_part(const HypersurfaceComplex& complex, const SignDistribution& theta,
                   std::vector<std::string>* warnings) {
  const int d = complex.ambient_dim;
  if (d < 1) throw NonPositiveDimension("ambient dimension must be positive");

  if (warnings) {
    std::set<LatticeVector> used;
    for (const auto& v : complex.vertices) {
      const auto& cell = complex.subdivision.cells.at(v.cell);
      used.insert(cell.vertex_set.begin(), cell.vertex_set.end());
    }
    for (const auto& e : complex.edges)
      used.insert(e.dual_vertices.begin(), e.dual_vertices.end());
    for (const auto& [e, s] : theta.signs)
      if (!used.count(e))
        warnings->push_back("sign on exponent " + exponent_string(e) +
                            " is never a dual-cell vertex; ignored");
  }

  RealPart rp;
  rp.ambient_dim = d;
  for (unsigned code = 0; code < (1u << d); ++code) {
    RealPart::OrthantPart part;
    part.orthant = Orthant::from_code(code, d);
    for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
      const auto& cell = complex.subdivision.cells.at(complex.vertices[i].cell);
      if (cell_present(cell.vertex_set, theta, part.orthant))
        part.vertices.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < complex.edges.size(); ++i)
      if (cell_present(complex.edges[i].dual_vertices, theta, part.orthant))
        part.edges.push_back(static_cast<int>(i));
    rp.parts.push_back(std::move(part));
  }
  return rp;
}

OrbitReport orbit_analysis(const LatticeSimplex& s) {
  OrbitReport rep;
  rep.elementary = is_elementary(s);  // also validates the simplex shape
  const int d = static_cast<int>(s.ambient_dim());
  std::vector<LatticeVector> edges;
  for (std::size_t i = 1; i < s.vertices.size(); ++i)
    edges.push_back(s.vertices[i] - s.vertices[0]);
  const int r = rank_mod2(edges);
  rep.num_classes = 1 << d;
  rep.orbit_size = 1 << r;
  rep.transitive = rep.orbit_size == rep.num_classes;
  return rep;
}

}  // namespace tropcurv
