#pragma once

#include <array>
#include <cmath>

namespace esfp {

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vector3 operator+(Vector3 a, Vector3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vector3 operator-(Vector3 a, Vector3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vector3 operator*(double s, Vector3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;

  constexpr double dot(Vector3 o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

/// Symmetric 3x3 tensor; only the upper triangle is stored.
struct SymTensor3 {
  double xx = 0.0, yy = 0.0, zz = 0.0;
  double xy = 0.0, xz = 0.0, yz = 0.0;

  static constexpr SymTensor3 identity() { return {1.0, 1.0, 1.0, 0.0, 0.0, 0.0}; }
  static constexpr SymTensor3 diagonal(double a, double b, double c) { return {a, b, c, 0.0, 0.0, 0.0}; }

  /// Row/column access, 0-based.
  constexpr double operator()(int i, int j) const {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    if (i == j) return i == 0 ? xx : (i == 1 ? yy : zz);
    if (i == 0) return j == 1 ? xy : xz;
    return yz;
  }

  friend constexpr SymTensor3 operator+(const SymTensor3& a, const SymTensor3& b) {
    return {a.xx + b.xx, a.yy + b.yy, a.zz + b.zz, a.xy + b.xy, a.xz + b.xz, a.yz + b.yz};
  }
  friend constexpr SymTensor3 operator-(const SymTensor3& a, const SymTensor3& b) {
    return {a.xx - b.xx, a.yy - b.yy, a.zz - b.zz, a.xy - b.xy, a.xz - b.xz, a.yz - b.yz};
  }
  friend constexpr SymTensor3 operator*(double s, const SymTensor3& a) {
    return {s * a.xx, s * a.yy, s * a.zz, s * a.xy, s * a.xz, s * a.yz};
  }
  friend constexpr bool operator==(const SymTensor3&, const SymTensor3&) = default;

  double max_abs() const;
};

/// Lower-triangular factor A with A * A^T equal to the factored tensor.
struct LowerTriangular3 {
  double a11 = 0.0;
  double a21 = 0.0, a22 = 0.0;
  double a31 = 0.0, a32 = 0.0, a33 = 0.0;

  Vector3 apply(Vector3 v) const {
    return {a11 * v.x, a21 * v.x + a22 * v.y, a31 * v.x + a32 * v.y + a33 * v.z};
  }
  /// A * A^T.
  SymTensor3 gram() const;
};

/// Eigenvalues in ascending order.
using Spectrum3 = std::array<double, 3>;

double trace(const SymTensor3& m);
double det(const SymTensor3& m);
Vector3 apply(const SymTensor3& m, Vector3 v);

/// Trigonometric (Cardan) closed form for the three real roots of det(m - lambda I) = 0,
/// with the two closest roots re-solved on the plane orthogonal to the third.
/// The input is shifted by trace/3 and scaled before the acos, whose argument is
/// clamped to [-1, 1] so repeated eigenvalues stay finite.
Spectrum3 eigenvalues_cardan(const SymTensor3& m);

/// Cholesky factorisation m = A * A^T. Throws NotPositiveDefinite when a pivot
/// falls to or below 1e-300.
LowerTriangular3 cholesky(const SymTensor3& m);

/// True iff every eigenvalue is strictly greater than `floor`.
bool is_spd(const SymTensor3& m, double floor = 0.0);

/// Matrix product a*b - b*a, which is antisymmetric; returned as its three
/// independent entries (01, 02, 12).
Vector3 commutator(const SymTensor3& a, const SymTensor3& b);

}  // namespace esfp
