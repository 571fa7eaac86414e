#include "agmio/oracles.hpp"

#include <cmath>

namespace agmio {

double holder_l_of_delta(const HolderParams& p, double delta) {
  if (!(p.nu >= 0.0 && p.nu <= 1.0)) throw std::invalid_argument("holder_l_of_delta: nu in [0,1]");
  if (!(p.l_nu >= 0.0)) throw std::invalid_argument("holder_l_of_delta: l_nu must be >= 0");
  require_positive(delta, "holder_l_of_delta delta");
  if (p.nu == 1.0) return p.l_nu;
  const double e = (1.0 - p.nu) / (1.0 + p.nu);
  return std::pow(e * 2.0 / delta, e) * std::pow(p.l_nu, 2.0 / (1.0 + p.nu));
}

HolderParams holder_params_from_inner_max(double rho, double sigma_rho, double a_norm) {
  if (!(rho >= 2.0)) throw std::invalid_argument("holder_params_from_inner_max: rho must be >= 2");
  require_positive(sigma_rho, "holder_params_from_inner_max sigma_rho");
  if (!(a_norm >= 0.0)) throw std::invalid_argument("holder_params_from_inner_max: a_norm >= 0");
  HolderParams p;
  p.nu = 1.0 / (rho - 1.0);
  p.l_nu = std::pow(a_norm, rho / (rho - 1.0)) / std::pow(sigma_rho, 1.0 / (rho - 1.0));
  return p;
}

double OracleDeclaration::l_of_delta(double delta_c) const {
  require_positive(delta_c, "OracleDeclaration::l_of_delta");
  switch (kind) {
    case Kind::constant_l:
      return constant_l;
    case Kind::holder:
      return holder_l_of_delta(holder, delta_c);
    case Kind::inner_max:
      return 2.0 * holder_l_of_delta(holder, delta_c / 4.0);
  }
  return constant_l;
}

OracleAnswer ExactOracle::query(const Vector& x, double delta_c) const {
  require_finite(x, "oracle query x");
  require_positive(delta_c, "oracle query delta_c");
  if (x.size() != dim_) throw std::invalid_argument("oracle query: dimension mismatch");
  if (domain_ && !domain_->contains(x, 1e-9)) {
    throw std::domain_error("oracle query: x not feasible");
  }
  OracleAnswer a;
  a.f_approx = f_(x);
  a.g_approx = grad_(x);
  a.delta_c_used = delta_c;
  a.delta_u_bound = 0.0;
  return a;
}

NoiseWrappedOracle::NoiseWrappedOracle(std::shared_ptr<const ExactOracle> base,
                                       Budgets value_noise, Budgets gradient_noise,
                                       const FeasibleSet& set, NormKind norm, uint64_t seed)
    : base_(std::move(base)),
      value_noise_(value_noise),
      gradient_noise_(gradient_noise),
      diameter_(set.diameter(norm)),
      norm_(norm),
      seed_(seed) {
  if (value_noise_.controlled < 0 || value_noise_.uncontrolled < 0 ||
      gradient_noise_.controlled < 0 || gradient_noise_.uncontrolled < 0) {
    throw std::invalid_argument("noise budgets must be >= 0");
  }
}

OracleAnswer NoiseWrappedOracle::query(const Vector& x, double delta_c) const {
  require_positive(delta_c, "oracle query delta_c");

  // Split the requested controlled budget between the value and the gradient
  // (the gradient bound enters the combined error through the diameter),
  // capped by the constructor budgets.
  const double b_value = std::min(0.5 * delta_c, value_noise_.controlled);
  const double b_grad = std::min(0.5 * delta_c / diameter_, gradient_noise_.controlled);

  OracleAnswer a = base_->query(x, delta_c);
  a.delta_c_used = b_value + b_grad * diameter_;
  a.delta_u_bound = delta_u();

  auto rng = SeedMixer(seed_).mix(x).mix(delta_c).rng();
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  a.f_approx += sym(rng) * (b_value + value_noise_.uncontrolled);

  const double g_bound = b_grad + gradient_noise_.uncontrolled;
  if (g_bound > 0.0) {
    Vector dir(a.g_approx.size());
    if (norm_ == NormKind::l2) {
      for (Eigen::Index i = 0; i < dir.size(); ++i) dir[i] = gauss(rng);
      double n = dir.norm();
      if (n > 0.0) a.g_approx += (unit(rng) * g_bound / n) * dir;
    } else {
      // dual of l1 is l-infinity: independent bounded coordinates
      for (Eigen::Index i = 0; i < dir.size(); ++i) dir[i] = sym(rng) * g_bound;
      a.g_approx += dir;
    }
  }
  return a;
}

std::shared_ptr<NoiseWrappedOracle> make_noise_wrapped_oracle(
    std::shared_ptr<const ExactOracle> base, NoiseWrappedOracle::Budgets value_noise,
    NoiseWrappedOracle::Budgets gradient_noise, const FeasibleSet& set, NormKind norm,
    uint64_t seed) {
  if (!set.is_bounded()) {
    throw CapabilityError("make_noise_wrapped_oracle: the set must be bounded "
                          "(the error combination rule needs a diameter)");
  }
  return std::make_shared<NoiseWrappedOracle>(std::move(base), value_noise, gradient_noise, set,
                                              norm, seed);
}

}  // namespace agmio
