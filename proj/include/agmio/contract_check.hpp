#pragma once

#include "agmio/common.hpp"
#include "agmio/feasible_set.hpp"
#include "agmio/oracles.hpp"

#include <cstdint>
#include <functional>

namespace agmio {

struct ContractCheckOptions {
  int trials = 1000;
  uint64_t seed = 0;
  double tol = 1e-9;
  double whole_space_radius = 10.0;  // sampling radius when the set is unbounded
  double delta_c_min = 1e-4;
  double delta_c_max = 1e-1;
};

struct ContractCheckReport {
  int trials = 0;
  int value_violations = 0;  // |f - f_approx| bound
  int model_violations = 0;  // quadratic upper-model bound
  double worst_value_slack = 0.0;
  double worst_model_slack = 0.0;
  bool pass = false;
};

/// Statistical verifier of the two oracle inequalities: samples (x, y,
/// delta_c), queries the oracle at x, and checks against the ground-truth f
/// with the declared L(delta_c). Slack is bound-minus-observed; negative
/// slack beyond tol counts as a violation.
ContractCheckReport oracle_contract_check(const FirstOrderOracle& oracle, const FeasibleSet& set,
                                          const std::function<double(double)>& l_of_delta,
                                          const std::function<double(const Vector&)>& f_true,
                                          NormKind norm, const ContractCheckOptions& opts = {});

}  // namespace agmio
