#pragma once

#include "agmio/common.hpp"

#include <optional>
#include <random>
#include <string>

namespace agmio {

/// Closed convex feasible sets with exact membership tests, projections and
/// closed-form linear minimization. Only kinds that keep those operations
/// exact are offered.
class FeasibleSet {
 public:
  enum class Kind { whole_space, box, ball, simplex };

  static FeasibleSet whole_space(int dim);
  static FeasibleSet box(Vector lower, Vector upper);
  static FeasibleSet ball(Vector center, double radius);
  static FeasibleSet simplex(int dim);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool is_bounded() const { return kind_ != Kind::whole_space; }

  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  const Vector& center() const { return center_; }
  double radius() const { return radius_; }

  /// Membership within `tol` (simplex: coords >= -tol, |sum-1| <= tol).
  bool contains(const Vector& x, double tol = 1e-12) const;

  /// Euclidean projection (simplex via the sorted-threshold algorithm).
  Vector project(const Vector& x) const;

  /// argmin_{u in set} <c, u>. Throws CapabilityError for whole_space.
  Vector linear_minimizer(const Vector& c) const;

  /// min_{u in set} <c, u>.
  double linear_minimum(const Vector& c) const;

  /// Diameter max_{x,y} ||x-y|| in the given norm. Throws CapabilityError for
  /// whole_space.
  double diameter(NormKind norm) const;

  /// Uniform-ish sample from a bounded set (exact for box/ball, Dirichlet for
  /// simplex). Throws CapabilityError for whole_space.
  Vector sample(std::mt19937_64& rng) const;

  std::string description() const;

 private:
  FeasibleSet(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  Vector lower_, upper_;  // box
  Vector center_;         // ball
  double radius_ = 0.0;   // ball
};

}  // namespace agmio
