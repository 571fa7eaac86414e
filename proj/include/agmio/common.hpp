#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace agmio {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Requested operation is not supported for this combination of inputs
/// (e.g. no closed-form prox for the given setup/set/h triple).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An oracle's inner computation failed to reach the requested accuracy.
class OracleError : public std::runtime_error {
 public:
  OracleError(const std::string& what, double requested, double achieved)
      : std::runtime_error(what), requested_accuracy(requested), achieved_accuracy(achieved) {}
  double requested_accuracy;
  double achieved_accuracy;
};

enum class NormKind { l2, l1 };

double norm_of(NormKind kind, const Vector& v);

/// Dual norm: l2 -> l2, l1 -> l-infinity.
double dual_norm_of(NormKind kind, const Vector& v);

inline void require_same_dim(const Vector& a, const Vector& b, const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

inline void require_finite(const Vector& v, const char* where) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(where) + ": non-finite coordinates");
  }
}

inline void require_positive(double x, const char* where) {
  if (!(x > 0.0)) {
    throw std::invalid_argument(std::string(where) + ": must be > 0, got " + std::to_string(x));
  }
}

// --- deterministic seeding -------------------------------------------------
// Per-query randomness is derived from (seed, payload bytes) so that results
// do not depend on call order or thread interleaving.

uint64_t splitmix64(uint64_t x);

class SeedMixer {
 public:
  explicit SeedMixer(uint64_t seed) : state_(splitmix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

  SeedMixer& mix(uint64_t v) {
    state_ = splitmix64(state_ ^ v);
    return *this;
  }
  SeedMixer& mix(double v);
  SeedMixer& mix(const Vector& v);

  uint64_t value() const { return state_; }
  std::mt19937_64 rng() const { return std::mt19937_64(state_); }

 private:
  uint64_t state_;
};

}  // namespace agmio
