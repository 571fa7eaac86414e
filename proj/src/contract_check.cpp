#include "agmio/contract_check.hpp"

#include <algorithm>
#include <cmath>

namespace agmio {

namespace {

Vector sample_point(const FeasibleSet& set, double radius, const Vector& around,
                    std::mt19937_64& rng) {
  if (set.is_bounded()) return set.sample(rng);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  Vector x(set.dim());
  for (int i = 0; i < set.dim(); ++i) x[i] = around[i] + radius * sym(rng);
  return x;
}

}  // namespace

ContractCheckReport oracle_contract_check(const FirstOrderOracle& oracle, const FeasibleSet& set,
                                          const std::function<double(double)>& l_of_delta,
                                          const std::function<double(const Vector&)>& f_true,
                                          NormKind norm, const ContractCheckOptions& opts) {
  ContractCheckReport report;
  report.trials = opts.trials;
  report.worst_value_slack = std::numeric_limits<double>::infinity();
  report.worst_model_slack = std::numeric_limits<double>::infinity();

  auto rng = SeedMixer(opts.seed).mix(uint64_t{0xc0ffee}).rng();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Vector origin = Vector::Zero(set.dim());
  const double log_min = std::log(opts.delta_c_min);
  const double log_max = std::log(opts.delta_c_max);

  for (int t = 0; t < opts.trials; ++t) {
    Vector x = sample_point(set, opts.whole_space_radius, origin, rng);
    Vector y = sample_point(set, opts.whole_space_radius, x, rng);
    double delta_c = std::exp(log_min + unit(rng) * (log_max - log_min));

    OracleAnswer a = oracle.query(x, delta_c);
    double budget = a.delta_c_used + a.delta_u_bound;

    // |f(x) - f_approx| <= delta_c + delta_u
    double value_slack = budget - std::abs(f_true(x) - a.f_approx);
    report.worst_value_slack = std::min(report.worst_value_slack, value_slack);
    if (value_slack < -opts.tol) ++report.value_violations;

    // f(y) <= f_approx + <g, y-x> + (L(delta_c)/2)||y-x||^2 + delta_c + delta_u
    double dist = norm_of(norm, y - x);
    double model = a.f_approx + a.g_approx.dot(y - x) +
                   0.5 * l_of_delta(a.delta_c_used) * dist * dist + budget;
    double model_slack = model - f_true(y);
    report.worst_model_slack = std::min(report.worst_model_slack, model_slack);
    if (model_slack < -opts.tol) ++report.model_violations;
  }

  report.pass = report.value_violations == 0 && report.model_violations == 0;
  return report;
}

}  // namespace agmio
