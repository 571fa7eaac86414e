#pragma once

#include "agmio/common.hpp"
#include "agmio/feasible_set.hpp"
#include "agmio/oracles.hpp"
#include "agmio/prox.hpp"
#include "agmio/simple_convex.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace agmio {

/// minimize psi(x) = f(x) + h(x) over the set, with f reachable only through
/// the oracle. psi_star is an optional valid lower bound; psi_true an
/// optional ground-truth evaluator used for trace enrichment only.
struct CompositeProblem {
  std::shared_ptr<const FirstOrderOracle> oracle;
  SimpleConvexPart h = SimpleConvexPart::zero();
  FeasibleSet set = FeasibleSet::whole_space(1);
  std::optional<double> psi_star;
  std::function<double(const Vector&)> psi_true;  // may be empty
};

struct SolverConfig {
  double epsilon = 1e-4;   // target on the gradient-mapping norm
  double delta_u = 0.0;    // assumed uncontrolled oracle error
  double delta_pu = 0.0;   // uncontrolled prox error, injected when > 0
  Vector x0;
  double l0 = 1.0;
  int max_outer_iterations = 5000;
  int max_inner_doublings = 60;
  uint64_t seed = 0;
};

struct IterationRecord {
  long k = 0;
  long inner_checks = 0;      // i_k, number of acceptance checks this iteration
  double m = 0.0;             // accepted trial constant M_k
  double delta_c = 0.0;       // epsilon / (20 M_k)
  double f_tilde_x = 0.0;
  double f_tilde_w = 0.0;
  double gmap_norm = 0.0;     // ||M_k (x_k - x_{k+1})|| in the setup norm
  long oracle_calls_cum = 0;
  long prox_calls_cum = 0;
  Vector gmap;                        // M_k (x_k - x_{k+1}); empty when parsed from CSV
  std::optional<double> psi_at_x;     // ground-truth psi(x_k) when available
};

enum class StopReason { criterion_met, iteration_cap, inner_cap };

struct RunReport {
  std::vector<IterationRecord> trace;
  long output_index = 0;       // K, first index attaining the best gmap norm
  Vector x_out;                // x_{K+1}
  double best_gmap_norm = 0.0;
  StopReason stop_reason = StopReason::criterion_met;
  long oracle_calls = 0;
  long prox_calls = 0;
  long inner_checks_total = 0;
};

/// Acceptance test of a trial constant M:
///   f_w <= f_x + <g_x, w - x> + (M/2) ||w - x||^2 + eps/(10 M) + 2 delta_u,
/// with the norm taken from the proximal setup.
bool descent_check(double f_w, double f_x, const Vector& g_x, const Vector& w, const Vector& x,
                   double m, double epsilon, double delta_u, const ProxSetup& setup);

/// Adaptive gradient method with inexact oracle and inexact prox-mapping.
/// Each outer iteration doubles the trial constant (starting from the carried
/// estimate) until descent_check passes, re-querying the oracle and re-solving
/// the prox step at every trial since the controlled budgets
/// delta_c = delta_pc = eps/(20 M) shrink with M. Stops once the smallest
/// recorded gradient-mapping norm is <= epsilon, or a cap fires.
RunReport solve(const CompositeProblem& problem, const ProxSetup& setup,
                const SolverConfig& config);

}  // namespace agmio
