#pragma once

#include "agmio/common.hpp"
#include "agmio/feasible_set.hpp"
#include "agmio/simple_convex.hpp"

#include <cstdint>
#include <string>

namespace agmio {

/// Proximal setup: a norm together with a prox-function d that is 1-strongly
/// convex w.r.t. that norm, and its subgradient selection d'.
///
///   euclidean:  ||.||_2,  d(x) = 1/2 ||x||_2^2
///   entropy:    ||.||_1,  d(x) = sum_i x_i ln x_i   (on the simplex)
class ProxSetup {
 public:
  enum class Kind { euclidean, entropy };

  static ProxSetup euclidean() { return ProxSetup(Kind::euclidean); }
  static ProxSetup entropy() { return ProxSetup(Kind::entropy); }
  static ProxSetup from_name(const std::string& name);

  Kind kind() const { return kind_; }
  NormKind norm_kind() const {
    return kind_ == Kind::euclidean ? NormKind::l2 : NormKind::l1;
  }
  std::string name() const { return kind_ == Kind::euclidean ? "euclidean" : "entropy"; }

  double norm(const Vector& v) const { return norm_of(norm_kind(), v); }
  double dual_norm(const Vector& v) const { return dual_norm_of(norm_kind(), v); }

  double d(const Vector& x) const;

  /// Subgradient selection of d. For entropy, coordinates are floored at
  /// 1e-300 before the logarithm; strictly negative coordinates are a domain
  /// error.
  Vector d_prime(const Vector& x) const;

  /// True iff d'(x) exists at x (entropy: all coordinates > 0).
  bool in_prime_domain(const Vector& x) const;

  /// Smoothness constant of d when finite (euclidean: 1); entropy has none.
  bool has_smooth_d() const { return kind_ == Kind::euclidean; }
  double d_smoothness() const { return 1.0; }

 private:
  explicit ProxSetup(Kind kind) : kind_(kind) {}
  Kind kind_;
};

/// V[z](x) = d(x) - d(z) - <d'(z), x - z>.
double bregman_divergence(const ProxSetup& setup, const Vector& z, const Vector& x);

enum class CertificateKind { closed_form_exact, verified_numeric };

struct ProxResult {
  Vector point;                  // the approximate prox point
  double certified_error = 0.0;  // total certified slack in the prox inequality
  CertificateKind certificate = CertificateKind::closed_form_exact;
};

/// Composite prox-mapping argmin_{x in set} { <g,x> + (1/gamma) V[x_bar](x) + h(x) }.
/// Only closed-form (setup, set, h) combinations are supported; those certify
/// zero controlled error, so `delta_pc` is accepted but never consumed.
ProxResult prox_step(const ProxSetup& setup, const FeasibleSet& set, const SimpleConvexPart& h,
                     const Vector& x_bar, const Vector& g, double gamma, double delta_pc);

/// Smallest eps such that
///   <g + (1/gamma)[d'(candidate) - d'(x_bar)] + p, u - candidate> >= -eps
/// for all u in the set, with p an admissible subgradient of h at the
/// candidate (chosen per coordinate to minimize the residual). Values below
/// 1e-9 are reported as 0; over the whole space a non-vanishing residual
/// yields +infinity ("unbounded certificate").
double prox_certificate(const ProxSetup& setup, const FeasibleSet& set, const SimpleConvexPart& h,
                        const Vector& x_bar, const Vector& g, double gamma,
                        const Vector& candidate);

/// Perturbs a prox result inside the feasible set so that its certificate
/// degrades by at most delta_pu (re-verified via prox_certificate; the
/// perturbation is shrunk until certified, possibly to zero). Deterministic
/// for a fixed seed.
ProxResult inject_prox_noise(const ProxSetup& setup, const FeasibleSet& set,
                             const SimpleConvexPart& h, const Vector& x_bar, const Vector& g,
                             double gamma, const ProxResult& result, double delta_pu,
                             uint64_t seed);

/// (x_bar - x_tilde) / gamma.
Vector gradient_mapping(const Vector& x_bar, const Vector& x_tilde, double gamma);

}  // namespace agmio
