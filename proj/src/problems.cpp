#include "agmio/problems.hpp"

#include "agmio/inner_max.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace agmio {

namespace {

Vector from_list(std::initializer_list<double> v) {
  Vector x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double t : v) x[i++] = t;
  return x;
}

// 1/2 ||x||^2 + sum cos(x_i) on [-3,3]^n. Separable; each coordinate term is
// minimized at 0 with value 1, so psi* = n exactly.
CatalogEntry make_quad_cos() {
  const int n = 8;
  CatalogEntry e;
  e.name = "quad-cos";
  auto f = [](const Vector& x) { return 0.5 * x.squaredNorm() + x.array().cos().sum(); };
  auto grad = [](const Vector& x) { return Vector(x - x.array().sin().matrix()); };
  e.problem.set = FeasibleSet::box(Vector::Constant(n, -3.0), Vector::Constant(n, 3.0));
  e.problem.h = SimpleConvexPart::zero();
  e.problem.oracle = std::make_shared<ExactOracle>(n, f, grad, e.problem.set);
  e.problem.psi_star = double(n);
  e.problem.psi_true = f;
  e.f_true = f;
  e.grad_true = grad;
  e.psi_true = f;
  e.setup = ProxSetup::euclidean();
  e.declaration.kind = OracleDeclaration::Kind::constant_l;
  e.declaration.constant_l = 2.0;  // sup ||I - diag(cos)|| on the box
  e.x0_default = from_list({2.0, -2.5, 1.5, -1.0, 0.5, 2.8, -0.7, 1.2});
  e.smoothness_l_f = 2.0;
  e.smoothness_l_d = 1.0;
  e.set_diameter = 6.0 * std::sqrt(double(n));
  return e;
}

// (1/(1+nu)) sum |x_i|^(1+nu) - c ||x||^2 on [-1,1]^n with c = 1.2/(1+nu):
// each coordinate term rises from 0 and falls below it near the boundary, so
// the exact minimum sits at the corners: psi* = n (1/(1+nu) - c).
CatalogEntry make_holder(double nu, const std::string& name) {
  const int n = 4;
  const double c = 1.2 / (1.0 + nu);
  CatalogEntry e;
  e.name = name;
  auto f = [nu, c](const Vector& x) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      s += std::pow(std::abs(x[i]), 1.0 + nu) / (1.0 + nu) - c * x[i] * x[i];
    }
    return s;
  };
  auto grad = [nu, c](const Vector& x) {
    Vector g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      double s = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
      g[i] = s * std::pow(std::abs(x[i]), nu) - 2.0 * c * x[i];
    }
    return g;
  };
  e.problem.set = FeasibleSet::box(Vector::Constant(n, -1.0), Vector::Constant(n, 1.0));
  e.problem.h = SimpleConvexPart::zero();
  e.problem.oracle = std::make_shared<ExactOracle>(n, f, grad, e.problem.set);
  e.problem.psi_star = n * (1.0 / (1.0 + nu) - c);
  e.problem.psi_true = f;
  e.f_true = f;
  e.grad_true = grad;
  e.psi_true = f;
  e.setup = ProxSetup::euclidean();
  const double diameter = 2.0 * std::sqrt(double(n));
  e.declaration.kind = OracleDeclaration::Kind::holder;
  e.declaration.holder.nu = nu;
  if (nu == 1.0) {
    e.declaration.holder.l_nu = std::abs(1.0 - 2.0 * c);
    e.smoothness_l_f = e.declaration.holder.l_nu;
    e.nonconvexity_witness = {Vector::Constant(n, 1.0), Vector::Constant(n, -1.0)};
  } else {
    // sign flip costs 2^(1-nu), the l2 coupling n^((1-nu)/2), the concave
    // perturbation 2c D^(1-nu) on the bounded box
    e.declaration.holder.l_nu = std::pow(2.0, 1.0 - nu) * std::pow(double(n), (1.0 - nu) / 2.0) +
                                2.0 * c * std::pow(diameter, 1.0 - nu);
    e.nonconvexity_witness = {Vector::Constant(n, 0.9), Vector::Constant(n, 0.5)};
  }
  e.x0_default = from_list({0.9, -0.7, 0.5, 0.3});
  e.smoothness_l_d = 1.0;
  e.set_diameter = diameter;
  return e;
}

CatalogEntry make_inner_max_entry(InnerMaxProblem::Regularizer reg, const std::string& name,
                                  double u_radius, unsigned phase) {
  const int n = 4, m = 6;
  Matrix a(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      a(i, j) = 0.55 * std::sin(0.4 + 0.3 * phase + 1.3 * i + 0.9 * j);
    }
  }
  InnerMaxProblem p(a, reg, FeasibleSet::ball(Vector::Zero(m), u_radius));

  CatalogEntry e;
  e.name = name;
  e.problem.set = FeasibleSet::box(Vector::Constant(n, -1.0), Vector::Constant(n, 1.0));
  e.problem.h = SimpleConvexPart::zero();
  e.problem.oracle = make_inner_max_oracle(p);
  e.problem.psi_star = 0.0;  // psi(x,0) = 0 and G >= 0: f >= 0 with f(0) = 0
  auto f = [p](const Vector& x) { return p.f_value(x); };
  auto grad = [p](const Vector& x) { return p.f_gradient(x); };
  e.problem.psi_true = f;
  e.f_true = f;
  e.grad_true = grad;
  e.psi_true = f;
  e.setup = ProxSetup::euclidean();
  e.declaration = inner_max_declaration(p);
  e.x0_default = from_list({0.8, -0.6, 0.9, -0.4});
  e.smoothness_l_d = 1.0;
  e.set_diameter = 2.0 * std::sqrt(double(n));
  if (reg == InnerMaxProblem::Regularizer::quadratic) {
    e.smoothness_l_f = p.a_norm * p.a_norm;  // gradient is ||A||^2-Lipschitz
  }
  return e;
}

// -sum cos(x_i) + lambda ||x||_1 on the whole space; each coordinate term has
// its global minimum -1 at 0 (lambda < 1), so psi* = -n exactly.
CatalogEntry make_l1_cos() {
  const int n = 6;
  const double lambda = 0.3;
  CatalogEntry e;
  e.name = "l1-cos";
  auto f = [](const Vector& x) { return -x.array().cos().sum(); };
  auto grad = [](const Vector& x) { return Vector(x.array().sin().matrix()); };
  e.problem.set = FeasibleSet::whole_space(n);
  e.problem.h = SimpleConvexPart::l1(lambda);
  e.problem.oracle = std::make_shared<ExactOracle>(n, f, grad);
  e.problem.psi_star = -double(n);
  auto h = e.problem.h;
  e.problem.psi_true = [f, h](const Vector& x) { return f(x) + h.value(x); };
  e.f_true = f;
  e.grad_true = grad;
  e.psi_true = e.problem.psi_true;
  e.setup = ProxSetup::euclidean();
  e.declaration.kind = OracleDeclaration::Kind::constant_l;
  e.declaration.constant_l = 1.0;
  e.x0_default = from_list({2.0, -1.5, 1.0, -2.5, 0.7, -0.4});
  // cos is concave between pi/2 and 3pi/2; both points keep the l1 part affine
  const double pi = std::numbers::pi;
  e.nonconvexity_witness = {Vector::Constant(n, pi - 0.8), Vector::Constant(n, pi + 0.8)};
  return e;
}

// -1/2 ||x||^2 on the simplex under the entropy setup; the minimum sits at a
// vertex, psi* = -1/2.
CatalogEntry make_simplex_concave() {
  const int n = 6;
  CatalogEntry e;
  e.name = "simplex-concave";
  auto f = [](const Vector& x) { return -0.5 * x.squaredNorm(); };
  auto grad = [](const Vector& x) { return Vector(-x); };
  e.problem.set = FeasibleSet::simplex(n);
  e.problem.h = SimpleConvexPart::zero();
  e.problem.oracle = std::make_shared<ExactOracle>(n, f, grad, e.problem.set);
  e.problem.psi_star = -0.5;
  e.problem.psi_true = f;
  e.f_true = f;
  e.grad_true = grad;
  e.psi_true = f;
  e.setup = ProxSetup::entropy();
  e.declaration.kind = OracleDeclaration::Kind::constant_l;
  e.declaration.constant_l = 1.0;  // w.r.t. the l1 norm; f is concave anyway
  Vector x0 = from_list({0.3, 0.25, 0.15, 0.1, 0.1, 0.1});
  e.x0_default = x0 / x0.sum();
  Vector a = Vector::Zero(n), b = Vector::Zero(n);
  a[0] = 1.0;
  b[1] = 1.0;
  e.nonconvexity_witness = {a, b};
  return e;
}

CatalogEntry wrap_with_noise(CatalogEntry e, const std::string& name, double delta_u,
                             uint64_t seed) {
  if (e.declaration.kind != OracleDeclaration::Kind::constant_l) {
    throw CapabilityError("noise wrapping needs an exactly computable smooth oracle");
  }
  auto base = std::dynamic_pointer_cast<const ExactOracle>(e.problem.oracle);
  if (!base) throw CapabilityError("noise wrapping needs an exact base oracle");
  NormKind norm = e.setup.norm_kind();
  double diameter = e.problem.set.diameter(norm);  // throws for unbounded sets
  NoiseWrappedOracle::Budgets value{std::numeric_limits<double>::infinity(), delta_u / 2.0};
  NoiseWrappedOracle::Budgets gradient{std::numeric_limits<double>::infinity(),
                                       delta_u / (2.0 * diameter)};
  auto noisy = make_noise_wrapped_oracle(base, value, gradient, e.problem.set, norm, seed);
  e.name = name;
  e.declaration.delta_u = noisy->delta_u();
  e.problem.oracle = std::move(noisy);
  return e;
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back(make_quad_cos());
  entries.push_back(wrap_with_noise(make_quad_cos(), "quad-cos-noisy", 1e-3, 0));
  entries.push_back(make_holder(1.0 / 3.0, "holder-nu-13"));
  entries.push_back(make_holder(0.5, "holder-nu-12"));
  entries.push_back(make_holder(1.0, "holder-nu-1"));
  entries.push_back(
      make_inner_max_entry(InnerMaxProblem::Regularizer::quadratic, "innermax-rho2", 1.0, 0));
  entries.push_back(
      make_inner_max_entry(InnerMaxProblem::Regularizer::quartic, "innermax-rho4", 2.0, 1));
  entries.push_back(make_l1_cos());
  entries.push_back(make_simplex_concave());
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

CatalogEntry make_problem(const std::string& name, double delta_u, uint64_t seed) {
  for (auto& e : catalog()) {
    if (e.name != name) continue;
    if (name == "quad-cos-noisy") {
      return delta_u > 0.0 ? wrap_with_noise(make_quad_cos(), name, delta_u, seed) : e;
    }
    if (delta_u > 0.0) return wrap_with_noise(std::move(e), name, delta_u, seed);
    return e;
  }
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown problem '" + name + "' (valid: " + valid + ")");
}

}  // namespace agmio
