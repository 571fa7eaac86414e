#include "agmio/simple_convex.hpp"

#include <cmath>

namespace agmio {

SimpleConvexPart SimpleConvexPart::l1(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("l1: lambda must be >= 0");
  return SimpleConvexPart(Kind::l1, lambda);
}

double SimpleConvexPart::value(const Vector& x) const {
  switch (kind_) {
    case Kind::zero:
      return 0.0;
    case Kind::l1:
      return lambda_ * x.lpNorm<1>();
  }
  return 0.0;
}

Vector SimpleConvexPart::subgradient(const Vector& x) const {
  switch (kind_) {
    case Kind::zero:
      return Vector::Zero(x.size());
    case Kind::l1: {
      Vector g(x.size());
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        g[i] = x[i] > 0.0 ? lambda_ : (x[i] < 0.0 ? -lambda_ : 0.0);
      }
      return g;
    }
  }
  return Vector::Zero(x.size());
}

}  // namespace agmio
