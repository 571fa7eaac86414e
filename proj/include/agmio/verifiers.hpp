#pragma once

#include "agmio/common.hpp"
#include "agmio/feasible_set.hpp"
#include "agmio/oracles.hpp"
#include "agmio/simple_convex.hpp"
#include "agmio/solver.hpp"

#include <string>
#include <vector>

namespace agmio {

/// Guaranteed upper bound on the squared best gradient-mapping norm after the
/// first n accepted iterations:
///   (sum_{k<n} 1/(2 M_k))^{-1} (psi_x0 - psi_star + n (4 delta_u + delta_pu)) + eps/2.
double rate_bound(const std::vector<IterationRecord>& trace, double psi_x0, double psi_star,
                  double epsilon, double delta_u, double delta_pu, long n);

/// Upper bound on the total number of acceptance checks over n iterations:
/// 2n - 1 + log2(M_{n-1} / l0).
double inner_check_bound(long n, double m_last, double l0);

/// Ceiling on every accepted trial constant for a Hoelder-gradient oracle:
///   2^((1+nu)/(2 nu)) ((1-nu)/(1+nu) * 40/eps)^((1-nu)/(2 nu)) l_nu^(1/nu).
double holder_m_ceiling(const HolderParams& p, double epsilon);

struct BoundCheck {
  std::string name;
  double bound_value = 0.0;
  double observed = 0.0;
  bool pass = false;
};

/// Bound battery for an oracle declaring a constant smoothness bound L:
/// the rate bound 4L(psi_x0-psi_star)/n + 4L(4 delta_u + delta_pu) + eps/2,
/// total checks <= 2n + log2(L/l0), and M_k <= 2L per iteration.
std::vector<BoundCheck> smooth_bounds(const std::vector<IterationRecord>& trace, double l,
                                      double psi_x0, double psi_star, double epsilon,
                                      double delta_u, double delta_pu, double l0);

/// Bound battery for an oracle declaring Hoelder parameters (nu in (0,1]):
/// the universal rate bound, the M_k ceiling, M_k <= 2 L(delta_c_k), and the
/// check-count bound. nu = 1 reproduces the constant-L battery.
std::vector<BoundCheck> holder_bounds(const std::vector<IterationRecord>& trace,
                                      const HolderParams& p, double psi_x0, double psi_star,
                                      double epsilon, double delta_u, double delta_pu, double l0);

/// Dispatch on the oracle declaration; throws CapabilityError when the
/// declaration supports neither battery.
std::vector<BoundCheck> corollary_bounds(const std::vector<IterationRecord>& trace,
                                         const OracleDeclaration& decl, double psi_x0,
                                         double psi_star, double epsilon, double delta_pu,
                                         double l0);

/// Full verifier battery over a recorded trace: the rate bound, the check
/// count bound, the delta_c bookkeeping identity, plus the declaration's
/// battery.
std::vector<BoundCheck> verify_trace(const std::vector<IterationRecord>& trace,
                                     const OracleDeclaration& decl, double psi_x0,
                                     double psi_star, double epsilon, double delta_pu, double l0);

/// min_{u in set} <grad, u - x> + h(u) - h(x): the first-order stationarity
/// residual; 0 at a point satisfying the necessary local-minimum condition,
/// -infinity when the linear model is unbounded below on the set.
double stationarity_residual(const Vector& x, const Vector& grad, const FeasibleSet& set,
                             const SimpleConvexPart& h);

}  // namespace agmio
