#include "agmio/common.hpp"

#include <cstring>

namespace agmio {

double norm_of(NormKind kind, const Vector& v) {
  return kind == NormKind::l2 ? v.norm() : v.lpNorm<1>();
}

double dual_norm_of(NormKind kind, const Vector& v) {
  if (v.size() == 0) return 0.0;
  return kind == NormKind::l2 ? v.norm() : v.lpNorm<Eigen::Infinity>();
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

SeedMixer& SeedMixer::mix(double v) {
  uint64_t bits;
  static_assert(sizeof(bits) == sizeof(v));
  std::memcpy(&bits, &v, sizeof(bits));
  return mix(bits);
}

SeedMixer& SeedMixer::mix(const Vector& v) {
  mix(static_cast<uint64_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) mix(v[i]);
  return *this;
}

}  // namespace agmio
