#pragma once

#include "agmio/feasible_set.hpp"
#include "agmio/prox.hpp"
#include "agmio/simple_convex.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace agmio::testing {

// Prox objective of Eq-style composite mapping: <g,x> + V[x_bar](x)/gamma + h(x).
inline double prox_objective(const ProxSetup& setup, const SimpleConvexPart& h,
                             const Vector& x_bar, const Vector& g, double gamma, const Vector& x) {
  return g.dot(x) + bregman_divergence(setup, x_bar, x) / gamma + h.value(x);
}

// Dense multi-pass grid minimization of the prox objective over the feasible
// set for n <= 2. The objective is strictly convex, so window refinement
// around the incumbent cannot lose the minimizer.
inline Vector grid_min_prox(const ProxSetup& setup, const FeasibleSet& set,
                            const SimpleConvexPart& h, const Vector& x_bar, const Vector& g,
                            double gamma, Vector window_lo, Vector window_hi, int passes = 5,
                            int points = 400) {
  const int n = set.dim();
  Vector best = x_bar;
  double best_val = std::numeric_limits<double>::infinity();

  if (set.kind() == FeasibleSet::Kind::simplex && n == 2) {
    double lo = 0.0, hi = 1.0;
    double best_t = 0.5;
    for (int pass = 0; pass < passes; ++pass) {
      double step = (hi - lo) / points;
      for (int i = 0; i <= points; ++i) {
        double t = lo + i * step;
        Vector x(2);
        x << t, 1.0 - t;
        if (t <= 0.0 || t >= 1.0) continue;  // keep d' domain
        double v = prox_objective(setup, h, x_bar, g, gamma, x);
        if (v < best_val) {
          best_val = v;
          best_t = t;
        }
      }
      lo = std::max(0.0, best_t - 3 * step);
      hi = std::min(1.0, best_t + 3 * step);
    }
    best.resize(2);
    best << best_t, 1.0 - best_t;
    return best;
  }

  // grid nodes are projected onto the set so curved boundaries stay densely
  // covered as the window shrinks
  for (int pass = 0; pass < passes; ++pass) {
    Vector step = (window_hi - window_lo) / points;
    if (n == 1) {
      for (int i = 0; i <= points; ++i) {
        Vector x(1);
        x[0] = window_lo[0] + i * step[0];
        Vector cand = set.project(x);
        double v = prox_objective(setup, h, x_bar, g, gamma, cand);
        if (v < best_val) {
          best_val = v;
          best = cand;
        }
      }
    } else {
      for (int i = 0; i <= points; ++i) {
        for (int j = 0; j <= points; ++j) {
          Vector x(2);
          x << window_lo[0] + i * step[0], window_lo[1] + j * step[1];
          Vector cand = set.project(x);
          double v = prox_objective(setup, h, x_bar, g, gamma, cand);
          if (v < best_val) {
            best_val = v;
            best = cand;
          }
        }
      }
    }
    window_lo = best - 3.0 * step;
    window_hi = best + 3.0 * step;
  }
  return best;
}

inline Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& x,
                          double step = 1e-6) {
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vector hi = x, lo = x;
    hi[i] += step;
    lo[i] -= step;
    g[i] = (f(hi) - f(lo)) / (2.0 * step);
  }
  return g;
}

// A strictly interior point of a bounded set (for d'-domain and FD checks).
inline Vector interior_sample(const FeasibleSet& set, std::mt19937_64& rng, double shrink = 0.8) {
  Vector x = set.sample(rng);
  switch (set.kind()) {
    case FeasibleSet::Kind::box: {
      Vector mid = 0.5 * (set.lower() + set.upper());
      return mid + shrink * (x - mid);
    }
    case FeasibleSet::Kind::ball:
      return set.center() + shrink * (x - set.center());
    case FeasibleSet::Kind::simplex: {
      Vector u = Vector::Constant(set.dim(), 1.0 / set.dim());
      Vector y = u + shrink * (x - u);
      return y / y.sum();
    }
    default:
      return x;
  }
}

}  // namespace agmio::testing
