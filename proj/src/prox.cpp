#include "agmio/prox.hpp"

#include <cmath>
#include <limits>

namespace agmio {

namespace {

constexpr double kEntropyFloor = 1e-300;
constexpr double kCertificateSnap = 1e-9;  // numeric slack absorbed as exact

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

void require_entropy_nonnegative(const Vector& x, const char* where) {
  if ((x.array() < 0.0).any()) {
    throw std::domain_error(std::string(where) + ": entropy setup needs nonnegative coordinates");
  }
}

}  // namespace

ProxSetup ProxSetup::from_name(const std::string& name) {
  if (name == "euclidean") return euclidean();
  if (name == "entropy") return entropy();
  throw std::invalid_argument("unknown prox setup '" + name + "' (valid: euclidean, entropy)");
}

double ProxSetup::d(const Vector& x) const {
  require_finite(x, "d");
  if (kind_ == Kind::euclidean) return 0.5 * x.squaredNorm();
  require_entropy_nonnegative(x, "d");
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += x[i] * std::log(std::max(x[i], kEntropyFloor));
  }
  return s;
}

Vector ProxSetup::d_prime(const Vector& x) const {
  require_finite(x, "d_prime");
  if (kind_ == Kind::euclidean) return x;
  require_entropy_nonnegative(x, "d_prime");
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    g[i] = 1.0 + std::log(std::max(x[i], kEntropyFloor));
  }
  return g;
}

bool ProxSetup::in_prime_domain(const Vector& x) const {
  if (!x.allFinite()) return false;
  if (kind_ == Kind::euclidean) return true;
  return (x.array() > 0.0).all();
}

double bregman_divergence(const ProxSetup& setup, const Vector& z, const Vector& x) {
  require_same_dim(z, x, "bregman_divergence");
  require_finite(z, "bregman_divergence z");
  require_finite(x, "bregman_divergence x");
  if (!setup.in_prime_domain(z)) {
    throw std::domain_error("bregman_divergence: z outside the domain of d'");
  }
  if (setup.kind() == ProxSetup::Kind::euclidean) {
    return 0.5 * (x - z).squaredNorm();
  }
  return setup.d(x) - setup.d(z) - setup.d_prime(z).dot(x - z);
}

ProxResult prox_step(const ProxSetup& setup, const FeasibleSet& set, const SimpleConvexPart& h,
                     const Vector& x_bar, const Vector& g, double gamma, double delta_pc) {
  require_same_dim(x_bar, g, "prox_step");
  require_finite(x_bar, "prox_step x_bar");
  require_finite(g, "prox_step g");
  require_positive(gamma, "prox_step gamma");
  require_positive(delta_pc, "prox_step delta_pc");
  if (x_bar.size() != set.dim()) throw std::invalid_argument("prox_step: set dimension mismatch");
  if (!set.contains(x_bar, 1e-9)) throw std::domain_error("prox_step: x_bar not feasible");

  ProxResult out;
  out.certificate = CertificateKind::closed_form_exact;
  out.certified_error = 0.0;

  const bool h_zero = h.kind() == SimpleConvexPart::Kind::zero || h.lambda() == 0.0;

  if (setup.kind() == ProxSetup::Kind::euclidean) {
    Vector v = x_bar - gamma * g;
    switch (set.kind()) {
      case FeasibleSet::Kind::whole_space:
        if (h_zero) {
          out.point = v;
          return out;
        }
        out.point = v.unaryExpr([&](double t) { return soft_threshold(t, gamma * h.lambda()); });
        return out;
      case FeasibleSet::Kind::box:
        if (!h_zero) {
          // separable: 1-d soft threshold then clamp is the exact minimizer
          v = v.unaryExpr([&](double t) { return soft_threshold(t, gamma * h.lambda()); });
        }
        out.point = v.cwiseMax(set.lower()).cwiseMin(set.upper());
        return out;
      case FeasibleSet::Kind::ball:
        if (!h_zero) break;  // not separable over the ball
        out.point = set.project(v);
        return out;
      case FeasibleSet::Kind::simplex:
        break;
    }
  } else {  // entropy
    if (set.kind() == FeasibleSet::Kind::simplex && h_zero) {
      if (!setup.in_prime_domain(x_bar)) {
        throw std::domain_error("prox_step: x_bar outside the relative interior");
      }
      // multiplicative-weights update, computed in log space
      Vector logw(x_bar.size());
      for (Eigen::Index i = 0; i < x_bar.size(); ++i) {
        logw[i] = std::log(std::max(x_bar[i], kEntropyFloor)) - gamma * g[i];
      }
      double m = logw.maxCoeff();
      Vector w = (logw.array() - m).exp();
      out.point = w / w.sum();
      return out;
    }
  }
  throw CapabilityError("prox_step: unsupported (setup, set, h) combination: " + setup.name() +
                        ", " + set.description() +
                        (h_zero ? ", h=zero" : ", h=l1"));
}

double prox_certificate(const ProxSetup& setup, const FeasibleSet& set, const SimpleConvexPart& h,
                        const Vector& x_bar, const Vector& g, double gamma,
                        const Vector& candidate) {
  require_same_dim(x_bar, g, "prox_certificate");
  require_same_dim(x_bar, candidate, "prox_certificate candidate");
  require_positive(gamma, "prox_certificate gamma");
  if (!set.contains(candidate, 1e-9)) {
    throw std::domain_error("prox_certificate: candidate not feasible");
  }

  Vector base = g + (setup.d_prime(candidate) - setup.d_prime(x_bar)) / gamma;

  // Admissible subgradient of h at the candidate, chosen to minimize the
  // residual: fixed sign off zero, clamped at zero coordinates.
  Vector residual = base;
  if (h.kind() == SimpleConvexPart::Kind::l1 && h.lambda() > 0.0) {
    const double lam = h.lambda();
    for (Eigen::Index i = 0; i < residual.size(); ++i) {
      if (candidate[i] > 0.0) {
        residual[i] = base[i] + lam;
      } else if (candidate[i] < 0.0) {
        residual[i] = base[i] - lam;
      } else {
        residual[i] = soft_threshold(base[i], lam);
      }
    }
  }

  if (set.kind() == FeasibleSet::Kind::whole_space) {
    double scale = std::max(1.0, setup.dual_norm(g));
    if (setup.dual_norm(residual) <= kCertificateSnap * scale) return 0.0;
    return std::numeric_limits<double>::infinity();
  }

  double eps = std::max(0.0, residual.dot(candidate) - set.linear_minimum(residual));
  return eps <= kCertificateSnap ? 0.0 : eps;
}

ProxResult inject_prox_noise(const ProxSetup& setup, const FeasibleSet& set,
                             const SimpleConvexPart& h, const Vector& x_bar, const Vector& g,
                             double gamma, const ProxResult& result, double delta_pu,
                             uint64_t seed) {
  if (delta_pu < 0.0) throw std::invalid_argument("inject_prox_noise: delta_pu must be >= 0");
  if (delta_pu == 0.0) return result;

  const double base_cert = prox_certificate(setup, set, h, x_bar, g, gamma, result.point);

  auto rng = SeedMixer(seed).mix(result.point).mix(delta_pu).rng();
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector direction(result.point.size());
  for (Eigen::Index i = 0; i < direction.size(); ++i) direction[i] = gauss(rng);
  double dn = direction.norm();
  if (dn == 0.0) return result;
  direction /= dn;

  double t = delta_pu * gamma * (1.0 + setup.norm(result.point));
  for (int attempt = 0; attempt < 60; ++attempt, t *= 0.5) {
    Vector candidate;
    if (setup.kind() == ProxSetup::Kind::entropy) {
      // multiplicative perturbation keeps the point in the relative interior
      Vector w = result.point.array() * (t * direction.array()).exp();
      candidate = w / w.sum();
    } else {
      candidate = set.project(result.point + t * direction);
    }
    if (!set.contains(candidate, 1e-9)) continue;  // projection safeguard
    double cert = prox_certificate(setup, set, h, x_bar, g, gamma, candidate);
    if (cert <= base_cert + delta_pu) {
      ProxResult out;
      out.point = std::move(candidate);
      out.certified_error = cert;
      out.certificate = CertificateKind::verified_numeric;
      return out;
    }
  }
  return result;  // no certifiable perturbation; zero degradation is admissible
}

Vector gradient_mapping(const Vector& x_bar, const Vector& x_tilde, double gamma) {
  require_same_dim(x_bar, x_tilde, "gradient_mapping");
  require_positive(gamma, "gradient_mapping gamma");
  return (x_bar - x_tilde) / gamma;
}

}  // namespace agmio
