#include "esfp/moments.hpp"

#include <algorithm>
#include <cmath>

#include "esfp/errors.hpp"
#include "esfp/parallel.hpp"

namespace esfp {
namespace {

struct CentralSums {
  SymTensor3 second;
  Vector3 third;
};

template <class T, class Combine>
T ordered_combine(const std::vector<T>& partials, Combine combine) {
  T total = partials.front();
  for (std::size_t i = 1; i < partials.size(); ++i) total = combine(total, partials[i]);
  return total;
}

}  // namespace

MomentSet compute_moments(const ParticleEnsemble& ens, unsigned threads) {
  const std::size_t n = ens.size();
  if (n < 2) throw DegenerateEnsemble("compute_moments: need at least two particles");
  const auto& v = ens.velocities;
  const std::size_t blocks = block_count(n);

  std::vector<Vector3> sums(blocks);
  for_each_block(blocks, threads, [&](std::size_t b) {
    Vector3 s;
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) s = s + v[i];
    sums[b] = s;
  });
  const double inv_n = 1.0 / static_cast<double>(n);
  const Vector3 u = inv_n * ordered_combine(sums, [](Vector3 a, Vector3 b) { return a + b; });

  std::vector<CentralSums> central(blocks);
  for_each_block(blocks, threads, [&](std::size_t b) {
    CentralSums s;
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) {
      const Vector3 c = v[i] - u;
      const double c2 = c.dot(c);
      s.second.xx += c.x * c.x;
      s.second.yy += c.y * c.y;
      s.second.zz += c.z * c.z;
      s.second.xy += c.x * c.y;
      s.second.xz += c.x * c.z;
      s.second.yz += c.y * c.z;
      s.third = s.third + c2 * c;
    }
    central[b] = s;
  });
  const CentralSums total = ordered_combine(central, [](const CentralSums& a, const CentralSums& b) {
    return CentralSums{a.second + b.second, a.third + b.third};
  });

  MomentSet m;
  m.rho = ens.rho;
  m.u = u;
  m.theta = inv_n * total.second;
  m.temperature = trace(m.theta) / 3.0;
  if (!(m.temperature > 0.0)) throw DegenerateEnsemble("compute_moments: all velocities coincide");
  m.pressure = m.rho * m.temperature;
  m.energy = 0.5 * m.rho * u.dot(u) + 1.5 * m.rho * m.temperature;
  m.q = (0.5 * m.rho * inv_n) * total.third;
  return m;
}

double gaussian_surrogate_anisotropy(const SymTensor3& theta, double temperature) {
  const Spectrum3 lambda = eigenvalues_cardan(theta);
  return std::max(std::abs(lambda[0] - temperature), std::abs(lambda[2] - temperature));
}

}  // namespace esfp
