#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "vdw/errors.hpp"

namespace vdw {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using CMat3 = std::array<std::array<std::complex<double>, 3>, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Levi-Civita symbol eps_{ijk}, indices in 0..2.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

inline double kronecker(int i, int j) { return i == j ? 1.0 : 0.0; }

// Trace of the matrix product, Tr[A.B] = sum_ij A_ij B_ji.
inline double trace_product(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[j][i];
  return s;
}

inline std::complex<double> trace_product(const CMat3& a, const CMat3& b) {
  std::complex<double> s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[j][i];
  return s;
}

inline double max_abs(const Mat3& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs(const CMat3& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (const auto& v : row) m = std::max(m, std::abs(v));
  return m;
}

// Relative separation of two particles: distance R and the unit vector
// pointing from the first particle to the second.
struct Separation {
  double distance;
  Vec3 direction;

  Separation(double r, const Vec3& dir) : distance(r), direction(dir) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw DomainError("Separation: distance must be positive and finite");
    const double len = norm(dir);
    if (std::abs(len - 1.0) > 1e-12)
      throw DomainError("Separation: direction must be a unit vector");
  }

  static Separation along_z(double r) { return Separation(r, Vec3{0.0, 0.0, 1.0}); }

  static Separation from_vector(const Vec3& r_ab) {
    const double len = norm(r_ab);
    if (!(len > 0.0))
      throw DomainError("Separation: zero separation vector");
    return Separation(len, Vec3{r_ab[0] / len, r_ab[1] / len, r_ab[2] / len});
  }

  Vec3 vector() const {
    return {distance * direction[0], distance * direction[1],
            distance * direction[2]};
  }
};

// 3x3 tensor evaluated at a given separation. `abs_substituted` records that
// a negative response value was replaced by its absolute value before the
// tensor was formed (negative-index media).
struct Dyadic {
  Mat3 m{};
  Separation sep;
  bool abs_substituted = false;

  explicit Dyadic(const Separation& s) : sep(s) {}
};

struct ComplexDyadic {
  CMat3 m{};
  Separation sep;

  explicit ComplexDyadic(const Separation& s) : sep(s) {}
};

}  // namespace vdw
