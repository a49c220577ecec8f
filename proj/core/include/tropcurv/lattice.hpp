#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "tropcurv/rational.hpp"

namespace tropcurv {

/// Integer lattice point / vector. Comparisons are lexicographic, which is
/// the canonical ordering used everywhere deterministic output is required.
struct LatticeVector {
  std::vector<std::int64_t> c;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : c(dim, 0) {}
  LatticeVector(std::initializer_list<std::int64_t> v) : c(v) {}
  explicit LatticeVector(std::vector<std::int64_t> v) : c(std::move(v)) {}

  std::size_t dim() const { return c.size(); }
  std::int64_t& operator[](std::size_t i) { return c[i]; }
  std::int64_t operator[](std::size_t i) const { return c[i]; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend LatticeVector operator-(const LatticeVector& a) {
    LatticeVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = -a.c[i];
    return r;
  }

  bool is_zero() const {
    for (auto v : c)
      if (v != 0) return false;
    return true;
  }
};

inline BigInt dot(const LatticeVector& a, const LatticeVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += BigInt(a.c[i]) * b.c[i];
  return s;
}

inline Rational dot(const LatticeVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += Rational(a.c[i]) * b[i];
  return s;
}

inline double dot(const LatticeVector& a, const double* b) {
  double s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += double(a.c[i]) * b[i];
  return s;
}

/// Divides out the gcd of the entries; the zero vector stays zero.
LatticeVector make_primitive(const LatticeVector& v);

}  // namespace tropcurv
