#pragma once

#include "agmio/common.hpp"
#include "agmio/feasible_set.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

namespace agmio {

/// Answer of an inexact first-order oracle at a query point x with requested
/// controlled error delta_c:
///
///   |f(x) - f_approx| <= delta_c_used + delta_u_bound
///   f(y) <= f_approx + <g_approx, y-x> + (L(delta_c)/2) ||y-x||^2
///           + delta_c_used + delta_u_bound            for all feasible y.
struct OracleAnswer {
  double f_approx = 0.0;
  Vector g_approx;
  double delta_c_used = 0.0;
  double delta_u_bound = 0.0;
};

/// The oracle interface handed to the solver. Deliberately narrow: the solver
/// adapts to the local quadratic constant and must not see smoothness or
/// Hoelder metadata.
class FirstOrderOracle {
 public:
  virtual ~FirstOrderOracle() = default;
  virtual OracleAnswer query(const Vector& x, double delta_c) const = 0;
  virtual int dimension() const = 0;
};

/// Hoelder continuity of the gradient: ||grad f(x) - grad f(y)|| <= l_nu ||x-y||^nu.
struct HolderParams {
  double nu = 1.0;
  double l_nu = 0.0;
};

/// Effective smoothness constant L(delta) of a Hoelder-gradient function:
///   L(delta) = ((1-nu)/(1+nu) * 2/delta)^((1-nu)/(1+nu)) * l_nu^(2/(1+nu)),
/// nonincreasing in delta and identically l_nu when nu = 1.
double holder_l_of_delta(const HolderParams& p, double delta);

/// Hoelder parameters of a function defined by an inner maximization with a
/// degree-rho uniformly convex regularizer:
///   nu = 1/(rho-1),  l_nu = ||A||^(rho/(rho-1)) / sigma_rho^(1/(rho-1)).
HolderParams holder_params_from_inner_max(double rho, double sigma_rho, double a_norm);

/// Side-channel metadata for verifiers; never given to the solver.
struct OracleDeclaration {
  enum class Kind { constant_l, holder, inner_max };
  Kind kind = Kind::constant_l;
  double constant_l = 0.0;   // valid when kind == constant_l
  HolderParams holder{};     // valid when kind != constant_l
  double delta_u = 0.0;

  /// Declared L(delta_c). inner_max answers carry constant 2*L(delta_c/4)
  /// because the inner solver is run to gap delta_c/4.
  double l_of_delta(double delta_c) const;
};

/// Exact oracle around ground-truth value/gradient functions: answers are
/// exact, delta_u = 0, and the requested controlled budget is simply honored.
class ExactOracle final : public FirstOrderOracle {
 public:
  using ValueFn = std::function<double(const Vector&)>;
  using GradFn = std::function<Vector(const Vector&)>;

  ExactOracle(int dim, ValueFn f, GradFn grad, std::optional<FeasibleSet> domain = std::nullopt)
      : dim_(dim), f_(std::move(f)), grad_(std::move(grad)), domain_(std::move(domain)) {}

  OracleAnswer query(const Vector& x, double delta_c) const override;
  int dimension() const override { return dim_; }

  double value(const Vector& x) const { return f_(x); }
  Vector gradient(const Vector& x) const { return grad_(x); }

 private:
  int dim_;
  ValueFn f_;
  GradFn grad_;
  std::optional<FeasibleSet> domain_;
};

/// Additive-noise oracle for an L-smooth function with exactly computable
/// values: per query, bounded uniform noise is injected into the value and the
/// gradient. With value budgets (dc1, du1), gradient budgets (dc2, du2) and
/// set diameter D, the combined oracle satisfies the contract with
///   delta_c = dc1 + dc2 * D  (capped by the requested budget),
///   delta_u = du1 + du2 * D.
/// The controlled caps are split against the requested budget (half to the
/// value, half to the gradient). Noise is deterministic per
/// (seed, x, delta_c).
class NoiseWrappedOracle final : public FirstOrderOracle {
 public:
  struct Budgets {
    double controlled = 0.0;    // cap on the controlled part (may be +inf)
    double uncontrolled = 0.0;  // fixed uncontrolled part
  };

  NoiseWrappedOracle(std::shared_ptr<const ExactOracle> base, Budgets value_noise,
                     Budgets gradient_noise, const FeasibleSet& set, NormKind norm,
                     uint64_t seed);

  OracleAnswer query(const Vector& x, double delta_c) const override;
  int dimension() const override { return base_->dimension(); }

  double delta_u() const { return value_noise_.uncontrolled + gradient_noise_.uncontrolled * diameter_; }
  double diameter() const { return diameter_; }

 private:
  std::shared_ptr<const ExactOracle> base_;
  Budgets value_noise_;
  Budgets gradient_noise_;
  double diameter_;
  NormKind norm_;
  uint64_t seed_;
};

/// Throws CapabilityError when the set is unbounded (the error combination
/// rule needs a finite diameter).
std::shared_ptr<NoiseWrappedOracle> make_noise_wrapped_oracle(
    std::shared_ptr<const ExactOracle> base, NoiseWrappedOracle::Budgets value_noise,
    NoiseWrappedOracle::Budgets gradient_noise, const FeasibleSet& set, NormKind norm,
    uint64_t seed);

}  // namespace agmio
