#include "agmio/verifiers.hpp"

#include <cmath>
#include <limits>

namespace agmio {

namespace {

constexpr double kCountSlack = 1e-12;

double min_gmap_sq(const std::vector<IterationRecord>& trace, long n) {
  double best = std::numeric_limits<double>::infinity();
  for (long k = 0; k < n; ++k) {
    double v = trace[static_cast<size_t>(k)].gmap_norm;
    best = std::min(best, v * v);
  }
  return best;
}

double max_m(const std::vector<IterationRecord>& trace) {
  double m = 0.0;
  for (const auto& r : trace) m = std::max(m, r.m);
  return m;
}

long total_checks(const std::vector<IterationRecord>& trace) {
  long s = 0;
  for (const auto& r : trace) s += r.inner_checks;
  return s;
}

// (c * 40/eps)^e with the nu -> 1 limit (c -> 0, e -> 0) defined as 1.
double power_factor(double nu, double epsilon, double exponent_den) {
  if (nu == 1.0) return 1.0;
  double c = (1.0 - nu) / (1.0 + nu);
  return std::pow(c * 40.0 / epsilon, (1.0 - nu) / exponent_den);
}

}  // namespace

double rate_bound(const std::vector<IterationRecord>& trace, double psi_x0, double psi_star,
                  double epsilon, double delta_u, double delta_pu, long n) {
  if (n < 1 || static_cast<size_t>(n) > trace.size()) {
    throw std::invalid_argument("rate_bound: need 1 <= n <= trace length");
  }
  double harmonic = 0.0;
  for (long k = 0; k < n; ++k) harmonic += 0.5 / trace[static_cast<size_t>(k)].m;
  return (psi_x0 - psi_star + n * (4.0 * delta_u + delta_pu)) / harmonic + epsilon / 2.0;
}

double inner_check_bound(long n, double m_last, double l0) {
  if (n < 1) throw std::invalid_argument("inner_check_bound: n must be >= 1");
  require_positive(m_last, "inner_check_bound m_last");
  require_positive(l0, "inner_check_bound l0");
  return 2.0 * n - 1.0 + std::log2(m_last / l0);
}

double holder_m_ceiling(const HolderParams& p, double epsilon) {
  if (!(p.nu > 0.0 && p.nu <= 1.0)) {
    throw std::invalid_argument("holder_m_ceiling: nu must be in (0,1]");
  }
  require_positive(epsilon, "holder_m_ceiling epsilon");
  return std::pow(2.0, (1.0 + p.nu) / (2.0 * p.nu)) * power_factor(p.nu, epsilon, 2.0 * p.nu) *
         std::pow(p.l_nu, 1.0 / p.nu);
}

std::vector<BoundCheck> smooth_bounds(const std::vector<IterationRecord>& trace, double l,
                                      double psi_x0, double psi_star, double epsilon,
                                      double delta_u, double delta_pu, double l0) {
  if (trace.empty()) throw std::invalid_argument("smooth_bounds: empty trace");
  require_positive(l, "smooth_bounds l");
  const long n = static_cast<long>(trace.size());
  std::vector<BoundCheck> out;

  double rate = 4.0 * l * (psi_x0 - psi_star) / n + 4.0 * l * (4.0 * delta_u + delta_pu) +
                epsilon / 2.0;
  double observed = min_gmap_sq(trace, n);
  out.push_back({"smooth_rate_bound", rate, observed, observed <= rate + 1e-9});

  double checks_bound = 2.0 * n + std::log2(l / l0);
  double checks = static_cast<double>(total_checks(trace));
  out.push_back({"smooth_check_bound", checks_bound, checks, checks <= checks_bound + kCountSlack});

  double m_cap = 2.0 * l;
  double m_obs = max_m(trace);
  out.push_back({"m_vs_smoothness", m_cap, m_obs, m_obs <= m_cap + kCountSlack});
  return out;
}

std::vector<BoundCheck> holder_bounds(const std::vector<IterationRecord>& trace,
                                      const HolderParams& p, double psi_x0, double psi_star,
                                      double epsilon, double delta_u, double delta_pu, double l0) {
  if (trace.empty()) throw std::invalid_argument("holder_bounds: empty trace");
  if (!(p.nu > 0.0 && p.nu <= 1.0)) {
    throw std::invalid_argument("holder_bounds: nu must be in (0,1]");
  }
  const long n = static_cast<long>(trace.size());
  const double nu = p.nu;
  std::vector<BoundCheck> out;

  double l_pow = std::pow(p.l_nu, 1.0 / nu);
  double rate = std::pow(2.0, (1.0 + 3.0 * nu) / (2.0 * nu)) * power_factor(nu, epsilon, 2.0 * nu) *
                l_pow * ((psi_x0 - psi_star) / n + 4.0 * delta_u + delta_pu) +
                epsilon / 2.0;
  double observed = min_gmap_sq(trace, n);
  out.push_back({"holder_rate_bound", rate, observed, observed <= rate + 1e-9});

  double ceiling = holder_m_ceiling(p, epsilon);
  double m_obs = max_m(trace);
  out.push_back({"m_ceiling", ceiling, m_obs, m_obs <= ceiling + kCountSlack});

  double ratio = 0.0;
  for (const auto& r : trace) {
    ratio = std::max(ratio, r.m / (2.0 * holder_l_of_delta(p, r.delta_c)));
  }
  out.push_back({"m_vs_l_of_delta", 1.0, ratio, ratio <= 1.0 + kCountSlack});

  double checks_bound = 2.0 * n - 1.0 + (1.0 + nu) / (2.0 * nu) + std::log2(l_pow / l0);
  if (nu < 1.0) {
    checks_bound += (1.0 - nu) / (2.0 * nu) * std::log2(40.0 * (1.0 - nu) / (1.0 + nu)) +
                    (1.0 - nu) / (2.0 * nu) * std::log2(1.0 / epsilon);
  }
  double checks = static_cast<double>(total_checks(trace));
  out.push_back({"holder_check_bound", checks_bound, checks, checks <= checks_bound + kCountSlack});
  return out;
}

std::vector<BoundCheck> corollary_bounds(const std::vector<IterationRecord>& trace,
                                         const OracleDeclaration& decl, double psi_x0,
                                         double psi_star, double epsilon, double delta_pu,
                                         double l0) {
  switch (decl.kind) {
    case OracleDeclaration::Kind::constant_l:
      return smooth_bounds(trace, decl.constant_l, psi_x0, psi_star, epsilon, decl.delta_u,
                           delta_pu, l0);
    case OracleDeclaration::Kind::holder:
      return holder_bounds(trace, decl.holder, psi_x0, psi_star, epsilon, decl.delta_u, delta_pu,
                           l0);
    case OracleDeclaration::Kind::inner_max: {
      // Only the generic trial-constant bound applies: the declared L(delta)
      // carries the inner-solver factor, not the plain Hoelder form.
      if (trace.empty()) throw std::invalid_argument("corollary_bounds: empty trace");
      double ratio = 0.0;
      for (const auto& r : trace) {
        ratio = std::max(ratio, r.m / (2.0 * decl.l_of_delta(r.delta_c)));
      }
      return {{"m_vs_l_of_delta", 1.0, ratio, ratio <= 1.0 + kCountSlack}};
    }
  }
  throw CapabilityError("corollary_bounds: unsupported declaration");
}

std::vector<BoundCheck> verify_trace(const std::vector<IterationRecord>& trace,
                                     const OracleDeclaration& decl, double psi_x0,
                                     double psi_star, double epsilon, double delta_pu,
                                     double l0) {
  if (trace.empty()) throw std::invalid_argument("verify_trace: empty trace");
  const long n = static_cast<long>(trace.size());
  std::vector<BoundCheck> out;

  double bound = rate_bound(trace, psi_x0, psi_star, epsilon, decl.delta_u, delta_pu, n);
  double observed = min_gmap_sq(trace, n);
  out.push_back({"rate_bound", bound, observed, observed <= bound + 1e-9});

  double checks_bound = inner_check_bound(n, trace.back().m, l0);
  double checks = static_cast<double>(total_checks(trace));
  out.push_back({"inner_check_bound", checks_bound, checks, checks <= checks_bound + kCountSlack});

  double id_dev = 0.0;
  for (const auto& r : trace) {
    id_dev = std::max(id_dev, std::abs(r.delta_c * 20.0 * r.m / epsilon - 1.0));
  }
  out.push_back({"delta_c_identity", kCountSlack, id_dev, id_dev <= kCountSlack});

  auto extra = corollary_bounds(trace, decl, psi_x0, psi_star, epsilon, delta_pu, l0);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

double stationarity_residual(const Vector& x, const Vector& grad, const FeasibleSet& set,
                             const SimpleConvexPart& h) {
  require_same_dim(x, grad, "stationarity_residual");
  if (x.size() != set.dim()) {
    throw std::invalid_argument("stationarity_residual: set dimension mismatch");
  }
  const double lam = h.kind() == SimpleConvexPart::Kind::l1 ? h.lambda() : 0.0;
  const double at_x = grad.dot(x) + h.value(x);
  const double neg_inf = -std::numeric_limits<double>::infinity();

  switch (set.kind()) {
    case FeasibleSet::Kind::whole_space: {
      // min_u g_i u_i + lam |u_i| is 0 when |g_i| <= lam, unbounded otherwise
      for (Eigen::Index i = 0; i < grad.size(); ++i) {
        if (std::abs(grad[i]) > lam) return neg_inf;
      }
      return -at_x;
    }
    case FeasibleSet::Kind::box: {
      double best = 0.0;
      for (int i = 0; i < set.dim(); ++i) {
        double lo = set.lower()[i], hi = set.upper()[i];
        double v = std::min(grad[i] * lo + lam * std::abs(lo),
                            grad[i] * hi + lam * std::abs(hi));
        if (lo <= 0.0 && hi >= 0.0) v = std::min(v, 0.0);
        best += v;
      }
      return best - at_x;
    }
    case FeasibleSet::Kind::ball: {
      if (lam > 0.0) {
        throw CapabilityError("stationarity_residual: l1 over a ball has no closed form here");
      }
      return grad.dot(set.center()) - set.radius() * grad.norm() - at_x;
    }
    case FeasibleSet::Kind::simplex:
      // ||u||_1 = 1 on the simplex, so the l1 part is a constant
      return set.linear_minimum(grad) + lam - at_x;
  }
  throw std::logic_error("stationarity_residual: unreachable");
}

}  // namespace agmio
