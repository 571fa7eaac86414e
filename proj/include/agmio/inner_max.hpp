#pragma once

#include "agmio/common.hpp"
#include "agmio/feasible_set.hpp"
#include "agmio/oracles.hpp"

#include <memory>

namespace agmio {

/// Operator norm max{ ||A u||_2 : ||u||_2 = 1 } by power iteration on A^T A,
/// run to relative tolerance rel_tol.
double operator_norm_power_iteration(const Matrix& a, double rel_tol = 1e-10,
                                     int max_iterations = 100000);

/// f(x) = max_{u in U} { -G(u) + <A u, x> } with G uniformly convex of degree
/// rho. Supported regularizers:
///   quadratic: G(u) = 1/2 ||u||^2   (rho = 2, sigma = 1)
///   quartic:   G(u) = 1/4 ||u||^4   (rho = 4, sigma = 1/4)
struct InnerMaxProblem {
  enum class Regularizer { quadratic, quartic };

  InnerMaxProblem(Matrix a, Regularizer g_kind, FeasibleSet u_set,
                  int max_inner_iterations = 5'000'000);

  Matrix a;                  // maps u-space (R^m) into gradient space (R^n)
  Regularizer g_kind;
  FeasibleSet u_set;         // origin-centered ball
  int max_inner_iterations;
  double a_norm = 0.0;       // cached operator norm (power iteration)

  double rho() const { return g_kind == Regularizer::quadratic ? 2.0 : 4.0; }
  double sigma_rho() const { return g_kind == Regularizer::quadratic ? 1.0 : 0.25; }

  double g_value(const Vector& u) const;
  Vector g_gradient(const Vector& u) const;

  /// Lipschitz constant of grad G on the u-ball (step size source for the
  /// ascent).
  double g_grad_lipschitz() const;

  double psi(const Vector& x, const Vector& u) const;  // -G(u) + <Au, x>

  /// Exact maximizer of psi(x, .) over the u-ball; available in closed form
  /// for both regularizers. Used as ground truth.
  Vector exact_maximizer(const Vector& x) const;

  double f_value(const Vector& x) const;   // via exact maximizer
  Vector f_gradient(const Vector& x) const;

  /// Projected gradient ascent with the linearization-gap stopping rule:
  /// returns u with f(x) - psi(x,u) <= gap <= delta (certified). Throws
  /// OracleError with the achieved gap when the iteration cap fires.
  Vector inner_solve(const Vector& x, double delta) const;
};

/// Oracle that answers a query with budget delta_c by running the inner
/// solver to gap delta_c/4 and returning (psi(x,u), A u); delta_u = 0.
class InnerMaxOracle final : public FirstOrderOracle {
 public:
  explicit InnerMaxOracle(InnerMaxProblem problem) : problem_(std::move(problem)) {}

  OracleAnswer query(const Vector& x, double delta_c) const override;
  int dimension() const override { return static_cast<int>(problem_.a.rows()); }

  const InnerMaxProblem& problem() const { return problem_; }

 private:
  InnerMaxProblem problem_;
};

std::shared_ptr<InnerMaxOracle> make_inner_max_oracle(InnerMaxProblem problem);

/// Declaration for verifier use: Hoelder params from the uniform-convexity
/// reduction, with L(delta_c) = 2 * holder_l_of_delta(params, delta_c / 4).
OracleDeclaration inner_max_declaration(const InnerMaxProblem& problem);

}  // namespace agmio
