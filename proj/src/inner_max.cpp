#include "agmio/inner_max.hpp"

#include <cmath>

namespace agmio {

double operator_norm_power_iteration(const Matrix& a, double rel_tol, int max_iterations) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Vector v = Vector::LinSpaced(a.cols(), 1.0, 2.0).normalized();
  double sigma = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    Vector w = a.transpose() * (a * v);
    double n = w.norm();
    if (n == 0.0) return 0.0;
    v = w / n;
    double next = (a * v).norm();
    if (it > 0 && std::abs(next - sigma) <= rel_tol * std::max(next, 1e-30)) return next;
    sigma = next;
  }
  return sigma;
}

InnerMaxProblem::InnerMaxProblem(Matrix a_in, Regularizer g_kind_in, FeasibleSet u_set_in,
                                 int max_inner_iterations_in)
    : a(std::move(a_in)),
      g_kind(g_kind_in),
      u_set(std::move(u_set_in)),
      max_inner_iterations(max_inner_iterations_in) {
  if (u_set.kind() != FeasibleSet::Kind::ball || u_set.center().lpNorm<1>() != 0.0) {
    throw CapabilityError("InnerMaxProblem: u-set must be an origin-centered ball");
  }
  if (u_set.dim() != a.cols()) {
    throw std::invalid_argument("InnerMaxProblem: A columns must match the u-space dimension");
  }
  a_norm = operator_norm_power_iteration(a);
}

double InnerMaxProblem::g_value(const Vector& u) const {
  double s = u.squaredNorm();
  return g_kind == Regularizer::quadratic ? 0.5 * s : 0.25 * s * s;
}

Vector InnerMaxProblem::g_gradient(const Vector& u) const {
  return g_kind == Regularizer::quadratic ? u : Vector(u.squaredNorm() * u);
}

double InnerMaxProblem::g_grad_lipschitz() const {
  double r = u_set.radius();
  return g_kind == Regularizer::quadratic ? 1.0 : 3.0 * r * r;
}

double InnerMaxProblem::psi(const Vector& x, const Vector& u) const {
  return -g_value(u) + (a * u).dot(x);
}

Vector InnerMaxProblem::exact_maximizer(const Vector& x) const {
  Vector c = a.transpose() * x;
  double n = c.norm();
  if (n == 0.0) return Vector::Zero(a.cols());
  // maximize -G(t * c/|c|) + t |c| over t in [0, R]
  double t_free = g_kind == Regularizer::quadratic ? n : std::cbrt(n);
  double t = std::min(t_free, u_set.radius());
  return (t / n) * c;
}

double InnerMaxProblem::f_value(const Vector& x) const { return psi(x, exact_maximizer(x)); }

Vector InnerMaxProblem::f_gradient(const Vector& x) const { return a * exact_maximizer(x); }

Vector InnerMaxProblem::inner_solve(const Vector& x, double delta) const {
  require_positive(delta, "inner_solve delta");
  const Vector c = a.transpose() * x;
  const double step = 1.0 / g_grad_lipschitz();
  Vector u = Vector::Zero(a.cols());
  double gap = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_inner_iterations; ++it) {
    Vector grad = c - g_gradient(u);  // ascent direction of psi(x, .)
    // linearization gap: psi concave, so f(x) - psi(x,u) <= max_v <grad, v-u>
    double gn = grad.norm();
    gap = gn == 0.0 ? 0.0 : grad.dot((u_set.radius() / gn) * grad - u);
    if (gap <= delta) return u;
    u = u_set.project(u + step * grad);
  }
  throw OracleError("inner_solve: iteration cap before reaching the requested gap", delta, gap);
}

OracleAnswer InnerMaxOracle::query(const Vector& x, double delta_c) const {
  require_finite(x, "oracle query x");
  require_positive(delta_c, "oracle query delta_c");
  if (x.size() != dimension()) throw std::invalid_argument("oracle query: dimension mismatch");
  Vector u = problem_.inner_solve(x, delta_c / 4.0);
  OracleAnswer a;
  a.f_approx = problem_.psi(x, u);
  a.g_approx = problem_.a * u;
  a.delta_c_used = delta_c;  // 4 * (delta_c / 4)
  a.delta_u_bound = 0.0;
  return a;
}

std::shared_ptr<InnerMaxOracle> make_inner_max_oracle(InnerMaxProblem problem) {
  return std::make_shared<InnerMaxOracle>(std::move(problem));
}

OracleDeclaration inner_max_declaration(const InnerMaxProblem& problem) {
  OracleDeclaration d;
  d.kind = OracleDeclaration::Kind::inner_max;
  d.holder = holder_params_from_inner_max(problem.rho(), problem.sigma_rho(), problem.a_norm);
  d.delta_u = 0.0;
  return d;
}

}  // namespace agmio
