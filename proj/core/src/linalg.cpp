#include "tropcurv/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "tropcurv/errors.hpp"

namespace tropcurv {

namespace {

// Row echelon form in place; returns pivot columns. Augmented columns (if
// any) simply ride along, callers slice them off.
std::vector<int> echelon(RationalMatrix& m, int cols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = m[r][c];
    for (auto& x : m[r]) x /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[c], m[p]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

int rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, static_cast<int>(m[0].size())).size());
}

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a, n);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::optional<RationalVector> solve_particular(RationalMatrix a, RationalVector b) {
  int rows = static_cast<int>(a.size());
  int cols = rows > 0 ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a, cols);
  int r = static_cast<int>(pivots.size());
  for (int i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  RationalVector x(cols, 0);
  for (int i = 0; i < r; ++i) x[pivots[i]] = a[i][cols];
  return x;
}

std::vector<RationalVector> nullspace(RationalMatrix a) {
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  auto pivots = echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  int r = static_cast<int>(pivots.size());
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_mod2(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].dim();
  std::vector<std::uint64_t> bits;
  bits.reserve(rows.size());
  for (const auto& row : rows) {
    std::uint64_t b = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (((row[j] % 2) + 2) % 2 == 1) b |= (std::uint64_t(1) << j);
    bits.push_back(b);
  }
  int r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::uint64_t mask = std::uint64_t(1) << c;
    std::size_t p = bits.size();
    for (std::size_t i = r; i < bits.size(); ++i) {
      if (bits[i] & mask) {
        p = i;
        break;
      }
    }
    if (p == bits.size()) continue;
    std::swap(bits[r], bits[p]);
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (i != std::size_t(r) && (bits[i] & mask)) bits[i] ^= bits[r];
    ++r;
  }
  return r;
}

LatticeVector make_primitive(const LatticeVector& v) {
  std::int64_t g = 0;
  for (auto x : v.c) g = std::gcd(g, x);
  if (g == 0) return v;
  LatticeVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
  return r;
}

LatticeVector primitive_direction(const RationalVector& v) {
  BigInt lcm = 1;
  for (const auto& x : v) {
    BigInt den = denominator(x);
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  BigInt content = 0;
  for (const auto& x : v) {
    BigInt y = numerator(x) * (lcm / denominator(x));
    content = gcd(content, y);
    ints.push_back(y);
  }
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigInt y = content == 0 ? BigInt(0) : ints[i] / content;
    r[i] = y.convert_to<std::int64_t>();
  }
  return r;
}

int affine_dim(const std::vector<LatticeVector>& points) {
  if (points.size() <= 1) return 0;
  RationalMatrix m;
  for (std::size_t i = 1; i < points.size(); ++i) {
    LatticeVector d = points[i] - points[0];
    RationalVector row;
    row.reserve(d.dim());
    for (auto x : d.c) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

}  // namespace tropcurv
