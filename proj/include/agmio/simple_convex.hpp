#pragma once

#include "agmio/common.hpp"

namespace agmio {

/// The "simple" convex part h of the composite objective psi = f + h.
class SimpleConvexPart {
 public:
  enum class Kind { zero, l1 };

  static SimpleConvexPart zero() { return SimpleConvexPart(Kind::zero, 0.0); }
  static SimpleConvexPart l1(double lambda);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }

  double value(const Vector& x) const;

  /// Subgradient selection; for the l1 part the selection at a zero
  /// coordinate is 0.
  Vector subgradient(const Vector& x) const;

 private:
  SimpleConvexPart(Kind kind, double lambda) : kind_(kind), lambda_(lambda) {}
  Kind kind_;
  double lambda_;
};

}  // namespace agmio
