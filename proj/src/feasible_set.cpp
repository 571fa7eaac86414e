#include "agmio/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace agmio {

FeasibleSet FeasibleSet::whole_space(int dim) {
  if (dim < 1) throw std::invalid_argument("whole_space: dim must be >= 1");
  return FeasibleSet(Kind::whole_space, dim);
}

FeasibleSet FeasibleSet::box(Vector lower, Vector upper) {
  require_same_dim(lower, upper, "box");
  require_finite(lower, "box lower");
  require_finite(upper, "box upper");
  if (lower.size() < 1) throw std::invalid_argument("box: dim must be >= 1");
  if (((upper - lower).array() < 0.0).any()) {
    throw std::invalid_argument("box: lower must be <= upper coordinatewise");
  }
  FeasibleSet s(Kind::box, static_cast<int>(lower.size()));
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

FeasibleSet FeasibleSet::ball(Vector center, double radius) {
  require_finite(center, "ball center");
  if (center.size() < 1) throw std::invalid_argument("ball: dim must be >= 1");
  require_positive(radius, "ball radius");
  FeasibleSet s(Kind::ball, static_cast<int>(center.size()));
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::simplex(int dim) {
  if (dim < 1) throw std::invalid_argument("simplex: dim must be >= 1");
  return FeasibleSet(Kind::simplex, dim);
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
  if (x.size() != dim_ || !x.allFinite()) return false;
  switch (kind_) {
    case Kind::whole_space:
      return true;
    case Kind::box:
      return ((x - lower_).array() >= -tol).all() && ((upper_ - x).array() >= -tol).all();
    case Kind::ball:
      return (x - center_).norm() <= radius_ + tol;
    case Kind::simplex:
      return (x.array() >= -tol).all() && std::abs(x.sum() - 1.0) <= tol;
  }
  return false;
}

Vector FeasibleSet::project(const Vector& x) const {
  require_same_dim(x, Vector::Zero(dim_), "project");
  switch (kind_) {
    case Kind::whole_space:
      return x;
    case Kind::box:
      return x.cwiseMax(lower_).cwiseMin(upper_);
    case Kind::ball: {
      Vector d = x - center_;
      double n = d.norm();
      if (n <= radius_) return x;
      return center_ + (radius_ / n) * d;
    }
    case Kind::simplex: {
      // Sorted-threshold projection onto {u >= 0, sum u = 1}.
      std::vector<double> v(x.data(), x.data() + x.size());
      std::sort(v.begin(), v.end(), std::greater<double>());
      double cumulative = 0.0;
      double theta = 0.0;
      int active = 0;
      for (int i = 0; i < dim_; ++i) {
        cumulative += v[static_cast<size_t>(i)];
        double t = (cumulative - 1.0) / (i + 1);
        if (v[static_cast<size_t>(i)] - t > 0.0) {
          theta = t;
          active = i + 1;
        }
      }
      (void)active;
      return (x.array() - theta).max(0.0).matrix();
    }
  }
  throw std::logic_error("project: unreachable");
}

Vector FeasibleSet::linear_minimizer(const Vector& c) const {
  require_same_dim(c, Vector::Zero(dim_), "linear_minimizer");
  switch (kind_) {
    case Kind::whole_space:
      throw CapabilityError("linear_minimizer: unbounded on the whole space");
    case Kind::box: {
      Vector u(dim_);
      for (int i = 0; i < dim_; ++i) u[i] = c[i] > 0.0 ? lower_[i] : upper_[i];
      return u;
    }
    case Kind::ball: {
      double n = c.norm();
      if (n == 0.0) return center_;
      return center_ - (radius_ / n) * c;
    }
    case Kind::simplex: {
      Eigen::Index j;
      c.minCoeff(&j);
      Vector u = Vector::Zero(dim_);
      u[j] = 1.0;
      return u;
    }
  }
  throw std::logic_error("linear_minimizer: unreachable");
}

double FeasibleSet::linear_minimum(const Vector& c) const {
  return c.dot(linear_minimizer(c));
}

double FeasibleSet::diameter(NormKind norm) const {
  switch (kind_) {
    case Kind::whole_space:
      throw CapabilityError("diameter: whole space is unbounded");
    case Kind::box:
      return norm_of(norm, upper_ - lower_);
    case Kind::ball:
      // l1 diameter of a euclidean ball: 2 R sqrt(n).
      return norm == NormKind::l2 ? 2.0 * radius_ : 2.0 * radius_ * std::sqrt(double(dim_));
    case Kind::simplex:
      return norm == NormKind::l2 ? std::sqrt(2.0) : 2.0;
  }
  throw std::logic_error("diameter: unreachable");
}

Vector FeasibleSet::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (kind_) {
    case Kind::whole_space:
      throw CapabilityError("sample: whole space is unbounded");
    case Kind::box: {
      Vector x(dim_);
      for (int i = 0; i < dim_; ++i) x[i] = lower_[i] + unit(rng) * (upper_[i] - lower_[i]);
      return x;
    }
    case Kind::ball: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      Vector d(dim_);
      for (int i = 0; i < dim_; ++i) d[i] = gauss(rng);
      double n = d.norm();
      if (n == 0.0) return center_;
      double r = radius_ * std::pow(unit(rng), 1.0 / dim_);
      return center_ + (r / n) * d;
    }
    case Kind::simplex: {
      std::exponential_distribution<double> expo(1.0);
      Vector x(dim_);
      for (int i = 0; i < dim_; ++i) x[i] = expo(rng);
      return x / x.sum();
    }
  }
  throw std::logic_error("sample: unreachable");
}

std::string FeasibleSet::description() const {
  switch (kind_) {
    case Kind::whole_space:
      return "whole-space(" + std::to_string(dim_) + ")";
    case Kind::box:
      return "box(" + std::to_string(dim_) + ")";
    case Kind::ball:
      return "ball(" + std::to_string(dim_) + ", r=" + std::to_string(radius_) + ")";
    case Kind::simplex:
      return "simplex(" + std::to_string(dim_) + ")";
  }
  return "?";
}

}  // namespace agmio
