#include "esfp/tensor3.hpp"

#include <algorithm>
#include <numbers>

#include "esfp/errors.hpp"

namespace esfp {

double SymTensor3::max_abs() const {
  return std::max({std::abs(xx), std::abs(yy), std::abs(zz), std::abs(xy), std::abs(xz), std::abs(yz)});
}

SymTensor3 LowerTriangular3::gram() const {
  return {
      a11 * a11,
      a21 * a21 + a22 * a22,
      a31 * a31 + a32 * a32 + a33 * a33,
      a11 * a21,
      a11 * a31,
      a21 * a31 + a22 * a32,
  };
}

double trace(const SymTensor3& m) { return m.xx + m.yy + m.zz; }

double det(const SymTensor3& m) {
  return m.xx * (m.yy * m.zz - m.yz * m.yz) - m.xy * (m.xy * m.zz - m.yz * m.xz) +
         m.xz * (m.xy * m.yz - m.yy * m.xz);
}

Vector3 apply(const SymTensor3& m, Vector3 v) {
  return {
      m.xx * v.x + m.xy * v.y + m.xz * v.z,
      m.xy * v.x + m.yy * v.y + m.yz * v.z,
      m.xz * v.x + m.yz * v.y + m.zz * v.z,
  };
}

namespace {

Vector3 cross(Vector3 a, Vector3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }

// Near a double root the acos argument sits at +-1 and the pair loses about
// sqrt(eps). The isolated root is still accurate: take its eigenvector from the
// rows of m - lambda I and solve the orthogonal 2x2 block directly.
Spectrum3 deflate(const SymTensor3& m, double isolated) {
  const SymTensor3 s = m - isolated * SymTensor3::identity();
  const Vector3 r0{s.xx, s.xy, s.xz}, r1{s.xy, s.yy, s.yz}, r2{s.xz, s.yz, s.zz};
  Vector3 e = cross(r0, r1);
  for (const Vector3& c : {cross(r0, r2), cross(r1, r2)}) {
    if (c.dot(c) > e.dot(e)) e = c;
  }
  const double len = e.norm();
  if (!(len > 0.0)) return {};
  e = (1.0 / len) * e;

  const Vector3 seed = std::abs(e.x) < 0.6 ? Vector3{1.0, 0.0, 0.0} : Vector3{0.0, 1.0, 0.0};
  Vector3 u = cross(e, seed);
  u = (1.0 / u.norm()) * u;
  const Vector3 w = cross(e, u);
  const Vector3 mu = apply(m, u), mw = apply(m, w);
  const double a = u.dot(mu), c = w.dot(mw), b = u.dot(mw);
  const double centre = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);
  Spectrum3 out{e.dot(apply(m, e)), centre - radius, centre + radius};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Spectrum3 eigenvalues_cardan(const SymTensor3& m) {
  const double mean = trace(m) / 3.0;
  const double off = m.xy * m.xy + m.xz * m.xz + m.yz * m.yz;
  const double dx = m.xx - mean;
  const double dy = m.yy - mean;
  const double dz = m.zz - mean;
  const double spread2 = (dx * dx + dy * dy + dz * dz + 2.0 * off) / 6.0;
  if (spread2 <= 0.0) return {mean, mean, mean};

  // B = (m - mean I) / p has eigenvalues 2 cos(phi + 2 k pi / 3) with cos(3 phi) = det(B) / 2.
  const double p = std::sqrt(spread2);
  const SymTensor3 b = (1.0 / p) * SymTensor3{dx, dy, dz, m.xy, m.xz, m.yz};
  const double r = std::clamp(det(b) / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;

  const double hi = mean + 2.0 * p * std::cos(phi);
  const double lo = mean + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double mid = 3.0 * mean - hi - lo;
  Spectrum3 out{lo, mid, hi};
  std::sort(out.begin(), out.end());

  const double isolated = out[2] - out[1] > out[1] - out[0] ? out[2] : out[0];
  const Spectrum3 refined = deflate(m, isolated);
  return refined == Spectrum3{} ? out : refined;
}

LowerTriangular3 cholesky(const SymTensor3& m) {
  constexpr double kPivotFloor = 1e-300;
  LowerTriangular3 a;
  const double d1 = m.xx;
  if (!(d1 > kPivotFloor)) throw NotPositiveDefinite("cholesky: first pivot is not positive");
  a.a11 = std::sqrt(d1);
  a.a21 = m.xy / a.a11;
  a.a31 = m.xz / a.a11;

  const double d2 = m.yy - a.a21 * a.a21;
  if (!(d2 > kPivotFloor)) throw NotPositiveDefinite("cholesky: second pivot is not positive");
  a.a22 = std::sqrt(d2);
  a.a32 = (m.yz - a.a31 * a.a21) / a.a22;

  const double d3 = m.zz - a.a31 * a.a31 - a.a32 * a.a32;
  if (!(d3 > kPivotFloor)) throw NotPositiveDefinite("cholesky: third pivot is not positive");
  a.a33 = std::sqrt(d3);
  return a;
}

bool is_spd(const SymTensor3& m, double floor) { return eigenvalues_cardan(m)[0] > floor; }

Vector3 commutator(const SymTensor3& a, const SymTensor3& b) {
  auto prod = [&](int i, int j) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
    return s;
  };
  return {prod(0, 1) - prod(1, 0), prod(0, 2) - prod(2, 0), prod(1, 2) - prod(2, 1)};
}

}  // namespace esfp
