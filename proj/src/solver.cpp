#include "agmio/solver.hpp"

#include <cmath>
#include <limits>

namespace agmio {

bool descent_check(double f_w, double f_x, const Vector& g_x, const Vector& w, const Vector& x,
                   double m, double epsilon, double delta_u, const ProxSetup& setup) {
  require_positive(m, "descent_check m");
  require_positive(epsilon, "descent_check epsilon");
  double dist = setup.norm(w - x);
  double rhs = f_x + g_x.dot(w - x) + 0.5 * m * dist * dist + epsilon / (10.0 * m) + 2.0 * delta_u;
  return f_w <= rhs;
}

namespace {

void validate(const CompositeProblem& problem, const SolverConfig& config) {
  if (!problem.oracle) throw std::invalid_argument("solve: problem has no oracle");
  require_positive(config.epsilon, "solve epsilon");
  require_positive(config.l0, "solve l0");
  if (config.delta_u < 0.0) throw std::invalid_argument("solve: delta_u must be >= 0");
  if (config.delta_pu < 0.0) throw std::invalid_argument("solve: delta_pu must be >= 0");
  if (config.max_outer_iterations < 1 || config.max_inner_doublings < 1) {
    throw std::invalid_argument("solve: iteration caps must be >= 1");
  }
  require_finite(config.x0, "solve x0");
  if (config.x0.size() != problem.set.dim()) {
    throw std::invalid_argument("solve: x0 dimension does not match the feasible set");
  }
  if (!problem.set.contains(config.x0, 1e-9)) throw std::domain_error("solve: x0 not feasible");
  if (problem.oracle->dimension() != problem.set.dim()) {
    throw std::invalid_argument("solve: oracle dimension does not match the feasible set");
  }
}

}  // namespace

RunReport solve(const CompositeProblem& problem, const ProxSetup& setup,
                const SolverConfig& config) {
  validate(problem, config);

  RunReport report;
  Vector x = config.x0;
  double l_carried = config.l0;

  double best_norm = std::numeric_limits<double>::infinity();
  long best_index = 0;
  Vector best_next = x;

  for (long k = 0; k < config.max_outer_iterations; ++k) {
    double m = l_carried / 2.0;
    long checks = 0;
    bool accepted = false;

    double delta_c = 0.0;
    OracleAnswer at_x;
    OracleAnswer at_w;
    Vector w;

    while (checks < config.max_inner_doublings) {
      m *= 2.0;
      delta_c = config.epsilon / (20.0 * m);
      ++checks;

      at_x = problem.oracle->query(x, delta_c);
      ProxResult prox = prox_step(setup, problem.set, problem.h, x, at_x.g_approx, 1.0 / m,
                                  delta_c);
      ++report.prox_calls;
      if (config.delta_pu > 0.0) {
        uint64_t noise_seed = SeedMixer(config.seed).mix(uint64_t(k)).mix(uint64_t(checks)).value();
        prox = inject_prox_noise(setup, problem.set, problem.h, x, at_x.g_approx, 1.0 / m, prox,
                                 config.delta_pu, noise_seed);
      }
      w = prox.point;
      at_w = problem.oracle->query(w, delta_c);
      report.oracle_calls += 2;

      if (descent_check(at_w.f_approx, at_x.f_approx, at_x.g_approx, w, x, m, config.epsilon,
                        config.delta_u, setup)) {
        accepted = true;
        break;
      }
    }

    if (!accepted) {
      report.stop_reason = StopReason::inner_cap;
      break;
    }

    IterationRecord rec;
    rec.k = k;
    rec.inner_checks = checks;
    rec.m = m;
    rec.delta_c = delta_c;
    rec.f_tilde_x = at_x.f_approx;
    rec.f_tilde_w = at_w.f_approx;
    rec.gmap = m * (x - w);
    rec.gmap_norm = setup.norm(rec.gmap);
    rec.oracle_calls_cum = report.oracle_calls;
    rec.prox_calls_cum = report.prox_calls;
    if (problem.psi_true) rec.psi_at_x = problem.psi_true(x);
    report.inner_checks_total += checks;

    if (rec.gmap_norm < best_norm) {
      best_norm = rec.gmap_norm;
      best_index = k;
      best_next = w;
    }
    report.trace.push_back(std::move(rec));

    x = w;
    l_carried = m / 2.0;

    if (best_norm <= config.epsilon) {
      report.stop_reason = StopReason::criterion_met;
      break;
    }
    if (k + 1 == config.max_outer_iterations) {
      report.stop_reason = StopReason::iteration_cap;
    }
  }

  report.output_index = best_index;
  report.x_out = best_next;  // x0 when no iteration was accepted
  report.best_gmap_norm = best_norm;
  return report;
}

}  // namespace agmio
