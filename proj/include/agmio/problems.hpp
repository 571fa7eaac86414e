#pragma once

#include "agmio/common.hpp"
#include "agmio/oracles.hpp"
#include "agmio/prox.hpp"
#include "agmio/solver.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agmio {

/// A catalog problem: the composite problem plus everything the verifiers and
/// tests need (ground truth, declared constants, default start).
struct CatalogEntry {
  std::string name;
  CompositeProblem problem;
  ProxSetup setup = ProxSetup::euclidean();
  OracleDeclaration declaration;
  Vector x0_default;

  std::function<double(const Vector&)> f_true;
  std::function<Vector(const Vector&)> grad_true;
  std::function<double(const Vector&)> psi_true;

  /// Pair (a, b) with psi((a+b)/2) > (psi(a)+psi(b))/2, certifying
  /// non-convexity; absent for the convex entries.
  std::optional<std::pair<Vector, Vector>> nonconvexity_witness;

  /// Constants for the stationarity chain, when finite: gradient smoothness
  /// of f, smoothness of the prox-function d, and set diameter in the setup
  /// norm.
  std::optional<double> smoothness_l_f;
  std::optional<double> smoothness_l_d;
  std::optional<double> set_diameter;
};

/// All shipped problems with exact analytic psi_star:
///   quad-cos        1/2||x||^2 + sum cos(x_i) on a box (plus a noisy variant)
///   holder-nu-13/-12/-1   (1/(1+nu)) sum |x_i|^(1+nu) - c ||x||^2 on a box
///   innermax-rho2 / innermax-rho4   inner-maximization oracles on a ball
///   l1-cos          -sum cos(x_i) + lambda ||x||_1 on the whole space
///   simplex-neg-sq  -1/2 ||x||^2 on the simplex under the entropy setup
std::vector<CatalogEntry> catalog();

std::vector<std::string> catalog_names();

/// Catalog entry by name; delta_u > 0 swaps in the additive-noise oracle
/// (bounded sets with an exactly computable f only) and seeds it. Throws
/// std::invalid_argument for unknown names, CapabilityError when noise is
/// requested but unsupported.
CatalogEntry make_problem(const std::string& name, double delta_u = 0.0, uint64_t seed = 0);

}  // namespace agmio
