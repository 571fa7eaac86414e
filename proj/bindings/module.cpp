#include "agmio/contract_check.hpp"
#include "agmio/problems.hpp"
#include "agmio/solver.hpp"
#include "agmio/trace_io.hpp"
#include "agmio/verifiers.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace agmio;

namespace {

py::dict bound_to_dict(const BoundCheck& b) {
  py::dict d;
  d["name"] = b.name;
  d["bound_value"] = b.bound_value;
  d["observed"] = b.observed;
  d["pass"] = b.pass;
  return d;
}

py::dict run_catalog_problem(const std::string& name, double eps, double delta_u, double delta_pu,
                             double l0, std::optional<Vector> x0, int max_iters,
                             int max_doublings, uint64_t seed) {
  CatalogEntry entry = make_problem(name, delta_u, seed);
  SolverConfig config;
  config.epsilon = eps;
  config.delta_u = entry.declaration.delta_u;
  config.delta_pu = delta_pu;
  config.l0 = l0;
  config.x0 = x0 ? *x0 : entry.x0_default;
  config.max_outer_iterations = max_iters;
  config.max_inner_doublings = max_doublings;
  config.seed = seed;

  RunReport run = solve(entry.problem, entry.setup, config);

  py::dict out;
  out["problem"] = entry.name;
  out["stop_reason"] = stop_reason_name(run.stop_reason);
  out["iterations"] = run.trace.size();
  out["output_index"] = run.output_index;
  out["x_out"] = run.x_out;
  out["best_gmap_norm"] = run.best_gmap_norm;
  out["oracle_calls"] = run.oracle_calls;
  out["prox_calls"] = run.prox_calls;
  out["inner_checks_total"] = run.inner_checks_total;
  out["trace_csv"] = format_trace_csv(run.trace);

  py::list m_k, gmap_norm, inner_checks, delta_c;
  for (const auto& r : run.trace) {
    m_k.append(r.m);
    gmap_norm.append(r.gmap_norm);
    inner_checks.append(r.inner_checks);
    delta_c.append(r.delta_c);
  }
  out["m_k"] = m_k;
  out["gmap_norm"] = gmap_norm;
  out["inner_checks"] = inner_checks;
  out["delta_c"] = delta_c;

  if (!run.trace.empty()) {
    double psi_x0 = entry.psi_true(config.x0);
    auto bounds = verify_trace(run.trace, entry.declaration, psi_x0,
                               entry.problem.psi_star.value(), eps, delta_pu, l0);
    py::list bl;
    bool all = true;
    for (const auto& b : bounds) {
      bl.append(bound_to_dict(b));
      all = all && b.pass;
    }
    out["bounds"] = bl;
    out["all_bounds_pass"] = all;
  }
  return out;
}

py::dict check_catalog_oracle(const std::string& name, double delta_u, int trials,
                              uint64_t seed) {
  CatalogEntry entry = make_problem(name, delta_u, seed);
  ContractCheckOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  OracleDeclaration decl = entry.declaration;
  auto rep = oracle_contract_check(
      *entry.problem.oracle, entry.problem.set, [decl](double d) { return decl.l_of_delta(d); },
      entry.f_true, entry.setup.norm_kind(), opts);
  py::dict out;
  out["pass"] = rep.pass;
  out["trials"] = rep.trials;
  out["value_violations"] = rep.value_violations;
  out["model_violations"] = rep.model_violations;
  out["worst_value_slack"] = rep.worst_value_slack;
  out["worst_model_slack"] = rep.worst_model_slack;
  return out;
}

FeasibleSet set_from_spec(const std::string& kind, int dim, double radius) {
  if (kind == "whole-space") return FeasibleSet::whole_space(dim);
  if (kind == "box") {
    return FeasibleSet::box(Vector::Constant(dim, -radius), Vector::Constant(dim, radius));
  }
  if (kind == "ball") return FeasibleSet::ball(Vector::Zero(dim), radius);
  if (kind == "simplex") return FeasibleSet::simplex(dim);
  throw std::invalid_argument("unknown set kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "adaptive composite minimization with inexact first-order oracles";

  py::register_exception<CapabilityError>(m, "CapabilityError");

  py::class_<HolderParams>(m, "HolderParams")
      .def(py::init<double, double>(), py::arg("nu"), py::arg("l_nu"))
      .def_readwrite("nu", &HolderParams::nu)
      .def_readwrite("l_nu", &HolderParams::l_nu);

  m.def("holder_l_of_delta",
        [](double nu, double l_nu, double delta) { return holder_l_of_delta({nu, l_nu}, delta); },
        py::arg("nu"), py::arg("l_nu"), py::arg("delta"),
        "effective smoothness constant L(delta) of a Hoelder-gradient function");

  m.def("holder_params_from_inner_max",
        [](double rho, double sigma_rho, double a_norm) {
          auto p = holder_params_from_inner_max(rho, sigma_rho, a_norm);
          return py::make_tuple(p.nu, p.l_nu);
        },
        py::arg("rho"), py::arg("sigma_rho"), py::arg("a_norm"));

  m.def("holder_m_ceiling",
        [](double nu, double l_nu, double eps) { return holder_m_ceiling({nu, l_nu}, eps); },
        py::arg("nu"), py::arg("l_nu"), py::arg("eps"));

  m.def("bregman_divergence",
        [](const std::string& setup, const Vector& z, const Vector& x) {
          return bregman_divergence(ProxSetup::from_name(setup), z, x);
        },
        py::arg("setup"), py::arg("z"), py::arg("x"));

  m.def("prox_step",
        [](const std::string& setup, const std::string& set_kind, int dim, double radius,
           double lambda, const Vector& x_bar, const Vector& g, double gamma) {
          auto s = ProxSetup::from_name(setup);
          auto set = set_from_spec(set_kind, dim, radius);
          auto h = lambda > 0 ? SimpleConvexPart::l1(lambda) : SimpleConvexPart::zero();
          auto r = prox_step(s, set, h, x_bar, g, gamma, 1e-9);
          return py::make_tuple(r.point, r.certified_error,
                                r.certificate == CertificateKind::closed_form_exact
                                    ? "closed-form-exact"
                                    : "verified-numeric");
        },
        py::arg("setup"), py::arg("set_kind"), py::arg("dim"), py::arg("radius"),
        py::arg("l1_lambda"), py::arg("x_bar"), py::arg("g"), py::arg("gamma"));

  m.def("prox_certificate",
        [](const std::string& setup, const std::string& set_kind, int dim, double radius,
           double lambda, const Vector& x_bar, const Vector& g, double gamma,
           const Vector& candidate) {
          auto s = ProxSetup::from_name(setup);
          auto set = set_from_spec(set_kind, dim, radius);
          auto h = lambda > 0 ? SimpleConvexPart::l1(lambda) : SimpleConvexPart::zero();
          return prox_certificate(s, set, h, x_bar, g, gamma, candidate);
        },
        py::arg("setup"), py::arg("set_kind"), py::arg("dim"), py::arg("radius"),
        py::arg("l1_lambda"), py::arg("x_bar"), py::arg("g"), py::arg("gamma"),
        py::arg("candidate"));

  m.def("gradient_mapping", &gradient_mapping, py::arg("x_bar"), py::arg("x_tilde"),
        py::arg("gamma"));

  m.def("stationarity_residual",
        [](const Vector& x, const Vector& grad, const std::string& set_kind, int dim,
           double radius, double lambda) {
          auto set = set_from_spec(set_kind, dim, radius);
          auto h = lambda > 0 ? SimpleConvexPart::l1(lambda) : SimpleConvexPart::zero();
          return stationarity_residual(x, grad, set, h);
        },
        py::arg("x"), py::arg("grad"), py::arg("set_kind"), py::arg("dim"), py::arg("radius"),
        py::arg("l1_lambda"));

  m.def("catalog_names", &catalog_names);

  m.def("solve", &run_catalog_problem, py::arg("problem"), py::arg("eps") = 1e-4,
        py::arg("delta_u") = 0.0, py::arg("delta_pu") = 0.0, py::arg("l0") = 1.0,
        py::arg("x0") = std::nullopt, py::arg("max_iters") = 5000, py::arg("max_doublings") = 60,
        py::arg("seed") = 0,
        "run the adaptive method on a catalog problem; returns the run summary, per-iteration "
        "arrays and the re-verified bound table");

  m.def("oracle_check", &check_catalog_oracle, py::arg("problem"), py::arg("delta_u") = 0.0,
        py::arg("trials") = 1000, py::arg("seed") = 0);
}
