// Command-line harness: run the adaptive method on a catalog problem, verify
// the recorded bounds of a finished run, and sweep parameter grids.

#include "agmio/contract_check.hpp"
#include "agmio/problems.hpp"
#include "agmio/solver.hpp"
#include "agmio/trace_io.hpp"
#include "agmio/verifiers.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace agmio;

struct RunOptions {
  std::string problem;
  std::string setup;  // empty: problem default
  double eps = 1e-4;
  double delta_u = 0.0;
  double delta_pu = 0.0;
  double l0 = 1.0;
  std::string x0 = "default";
  long max_iters = 5000;
  long max_doublings = 60;
  uint64_t seed = 0;
};

// Flat key=value run configuration ('#' comments); command-line flags take
// precedence, unknown keys are an error.
struct ConfigKey {
  const char* key;
  const char* flag;  // CLI option that overrides this key
  std::function<void(const std::string&)> apply;
};

void load_config_file(const std::string& path, CLI::App* cmd,
                      const std::vector<ConfigKey>& keys) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    const ConfigKey* match = nullptr;
    for (const auto& k : keys) {
      if (key == k.key) match = &k;
    }
    if (match == nullptr) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": unknown key '" + key +
                               "'");
    }
    if (cmd->count(match->flag) == 0) match->apply(value);
  }
}

std::vector<ConfigKey> run_config_keys(RunOptions& opt) {
  return {
      {"problem", "--problem", [&opt](const std::string& v) { opt.problem = v; }},
      {"setup", "--setup", [&opt](const std::string& v) { opt.setup = v; }},
      {"eps", "--eps", [&opt](const std::string& v) { opt.eps = std::stod(v); }},
      {"delta-u", "--delta-u", [&opt](const std::string& v) { opt.delta_u = std::stod(v); }},
      {"delta-pu", "--delta-pu", [&opt](const std::string& v) { opt.delta_pu = std::stod(v); }},
      {"l0", "--l0", [&opt](const std::string& v) { opt.l0 = std::stod(v); }},
      {"x0", "--x0", [&opt](const std::string& v) { opt.x0 = v; }},
      {"max-iters", "--max-iters", [&opt](const std::string& v) { opt.max_iters = std::stol(v); }},
      {"max-doublings", "--max-doublings",
       [&opt](const std::string& v) { opt.max_doublings = std::stol(v); }},
      {"seed", "--seed", [&opt](const std::string& v) { opt.seed = std::stoull(v); }},
  };
}

Vector parse_x0(const std::string& text, const CatalogEntry& entry) {
  if (text == "default") return entry.x0_default;
  std::vector<double> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    coords.push_back(std::stod(item, &used));
    if (used != item.size()) throw CLI::ValidationError("--x0", "bad coordinate '" + item + "'");
  }
  Vector x(static_cast<Eigen::Index>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) x[static_cast<Eigen::Index>(i)] = coords[i];
  return x;
}

struct RunOutput {
  RunReport report;
  RunMeta meta;
  std::vector<BoundCheck> bounds;
};

RunOutput execute_run(const RunOptions& opt) {
  CatalogEntry entry = make_problem(opt.problem, opt.delta_u, opt.seed);
  ProxSetup setup = opt.setup.empty() ? entry.setup : ProxSetup::from_name(opt.setup);

  SolverConfig config;
  config.epsilon = opt.eps;
  config.delta_u = entry.declaration.delta_u;  // the oracle's actual bound
  config.delta_pu = opt.delta_pu;
  config.l0 = opt.l0;
  config.x0 = parse_x0(opt.x0, entry);
  config.max_outer_iterations = static_cast<int>(opt.max_iters);
  config.max_inner_doublings = static_cast<int>(opt.max_doublings);
  config.seed = opt.seed;

  RunOutput out;
  out.report = solve(entry.problem, setup, config);

  out.meta.problem = entry.name;
  out.meta.setup = setup.name();
  out.meta.epsilon = opt.eps;
  out.meta.delta_u = config.delta_u;
  out.meta.delta_pu = opt.delta_pu;
  out.meta.l0 = opt.l0;
  out.meta.seed = opt.seed;
  out.meta.psi_x0 = entry.psi_true(config.x0);
  out.meta.psi_star = entry.problem.psi_star.value();
  out.meta.declaration = entry.declaration;
  out.meta.stop_reason = stop_reason_name(out.report.stop_reason);
  out.meta.output_index = out.report.output_index;

  if (!out.report.trace.empty()) {
    out.bounds = verify_trace(out.report.trace, entry.declaration, out.meta.psi_x0,
                              out.meta.psi_star, opt.eps, opt.delta_pu, opt.l0);
  }
  return out;
}

void print_bounds(const std::vector<BoundCheck>& bounds) {
  for (const auto& b : bounds) {
    std::printf("  %-20s %s (observed %.6g, bound %.6g)\n", b.name.c_str(),
                b.pass ? "PASS" : "FAIL", b.observed, b.bound_value);
  }
}

int cmd_solve(const RunOptions& opt, const std::string& out_path, const std::string& report_path) {
  RunOutput run = execute_run(opt);
  if (!out_path.empty()) write_trace_csv(out_path, run.report.trace);
  if (!report_path.empty()) write_report_json(report_path, run.meta, run.bounds);

  std::printf("problem %s: %s after %zu iterations, best |gmap| = %.6g (K = %ld)\n",
              opt.problem.c_str(), run.meta.stop_reason.c_str(), run.report.trace.size(),
              run.report.best_gmap_norm, run.report.output_index);
  print_bounds(run.bounds);
  return run.report.stop_reason == StopReason::criterion_met ? 0 : 2;
}

int cmd_verify(const std::string& trace_path, const std::string& report_path) {
  std::vector<IterationRecord> trace = read_trace_csv(trace_path);
  if (trace.empty()) {
    std::fprintf(stderr, "error: trace '%s' has no iterations\n", trace_path.c_str());
    return 1;
  }
  RunMeta meta = read_report_meta(report_path);
  auto bounds = verify_trace(trace, meta.declaration, meta.psi_x0, meta.psi_star, meta.epsilon,
                             meta.delta_pu, meta.l0);
  print_bounds(bounds);
  bool all = true;
  for (const auto& b : bounds) all = all && b.pass;
  std::printf("verify: %s\n", all ? "all bounds hold" : "BOUND VIOLATION");
  return all ? 0 : 2;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(std::stod(item));
  if (values.empty()) throw CLI::ValidationError("sweep", "empty value list");
  return values;
}

int cmd_sweep(const RunOptions& base, const std::string& problems_csv, const std::string& eps_csv,
              const std::string& delta_u_csv, const std::string& delta_pu_csv,
              const std::string& out_dir) {
  std::vector<std::string> problems;
  {
    std::stringstream in(problems_csv);
    std::string item;
    while (std::getline(in, item, ',')) problems.push_back(item);
  }
  std::vector<double> eps_list = parse_list(eps_csv);
  std::vector<double> du_list = parse_list(delta_u_csv);
  std::vector<double> dpu_list = parse_list(delta_pu_csv);

  std::filesystem::create_directories(out_dir);

  struct Cell {
    RunOptions opt;
    std::string trace_path;
    std::string status;
    size_t iterations = 0;
    double best = 0.0;
  };
  std::vector<Cell> cells;
  int index = 0;
  for (const auto& p : problems)
    for (double e : eps_list)
      for (double du : du_list)
        for (double dpu : dpu_list) {
          Cell c;
          c.opt = base;
          c.opt.problem = p;
          c.opt.eps = e;
          c.opt.delta_u = du;
          c.opt.delta_pu = dpu;
          c.trace_path = out_dir + "/cell_" + std::to_string(index++) + ".csv";
          cells.push_back(std::move(c));
        }

  // independent cells; run them concurrently and assemble afterwards
  std::vector<std::future<void>> jobs;
  jobs.reserve(cells.size());
  for (auto& c : cells) {
    jobs.push_back(std::async(std::launch::async, [&c]() {
      try {
        RunOutput run = execute_run(c.opt);
        write_trace_csv(c.trace_path, run.report.trace);
        c.status = run.meta.stop_reason;
        c.iterations = run.report.trace.size();
        c.best = run.report.best_gmap_norm;
      } catch (const std::exception& ex) {
        c.status = std::string("error: ") + ex.what();
        for (auto& ch : c.status) {
          if (ch == ',' || ch == '\n') ch = ';';  // keep the summary CSV parseable
        }
      }
    }));
  }
  for (auto& j : jobs) j.get();

  std::string summary_path = out_dir + "/summary.csv";
  std::ofstream summary(summary_path, std::ios::binary);
  summary << "problem,eps,delta_u,delta_pu,seed,status,iterations,best_gmap_norm,"
             "best_gmap_norm_sq,trace_file\n";
  for (const auto& c : cells) {
    summary << c.opt.problem << ',' << c.opt.eps << ',' << c.opt.delta_u << ',' << c.opt.delta_pu
            << ',' << c.opt.seed << ',' << c.status << ',' << c.iterations << ',' << c.best << ','
            << c.best * c.best << ',' << c.trace_path << '\n';
    std::printf("%-16s eps=%-8g delta_u=%-8g delta_pu=%-8g -> %s, best |gmap| = %.6g\n",
                c.opt.problem.c_str(), c.opt.eps, c.opt.delta_u, c.opt.delta_pu, c.status.c_str(),
                c.best);
  }
  std::printf("summary written to %s\n", summary_path.c_str());
  return 0;
}

int cmd_list_problems() {
  for (const auto& e : catalog()) {
    std::printf("%-16s n=%d  set=%-16s h=%-8s setup=%-10s psi*=%g delta_u=%g\n", e.name.c_str(),
                e.problem.set.dim(), e.problem.set.description().c_str(),
                e.problem.h.kind() == SimpleConvexPart::Kind::zero ? "zero" : "l1",
                e.setup.name().c_str(), e.problem.psi_star.value_or(0.0), e.declaration.delta_u);
  }
  return 0;
}

int cmd_oracle_check(const std::string& problem, double delta_u, int trials, uint64_t seed) {
  CatalogEntry entry = make_problem(problem, delta_u, seed);
  ContractCheckOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  OracleDeclaration decl = entry.declaration;
  auto report = oracle_contract_check(
      *entry.problem.oracle, entry.problem.set,
      [decl](double d) { return decl.l_of_delta(d); }, entry.f_true, entry.setup.norm_kind(),
      opts);
  std::printf("oracle-check %s: %s (%d trials, value violations %d, model violations %d,\n"
              "  worst value slack %.3g, worst model slack %.3g)\n",
              problem.c_str(), report.pass ? "PASS" : "FAIL", report.trials,
              report.value_violations, report.model_violations, report.worst_value_slack,
              report.worst_model_slack);
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive composite minimization with inexact oracles"};
  app.require_subcommand(1);

  RunOptions opt;
  std::string out_path, report_path, config_path;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--problem", opt.problem, "catalog problem name");
    cmd->add_option("--setup", opt.setup, "prox setup: euclidean | entropy");
    cmd->add_option("--eps", opt.eps, "target gradient-mapping norm");
    cmd->add_option("--delta-u", opt.delta_u, "uncontrolled oracle error");
    cmd->add_option("--delta-pu", opt.delta_pu, "uncontrolled prox error");
    cmd->add_option("--l0", opt.l0, "initial trial constant");
    cmd->add_option("--x0", opt.x0, "start point: 'default' or comma list");
    cmd->add_option("--max-iters", opt.max_iters, "outer iteration cap");
    cmd->add_option("--max-doublings", opt.max_doublings, "inner doubling cap");
    cmd->add_option("--seed", opt.seed, "rng seed");
    cmd->add_option("--config", config_path, "flat key=value run configuration file");
  };

  auto* solve_cmd = app.add_subcommand("solve", "run one problem and record trace + report");
  add_run_options(solve_cmd);
  solve_cmd->add_option("--out", out_path, "trace CSV path");
  solve_cmd->add_option("--report", report_path, "report JSON path");

  auto* verify_cmd = app.add_subcommand("verify", "re-check all bounds of a recorded run");
  std::string trace_path, verify_report_path;
  verify_cmd->add_option("--trace", trace_path, "trace CSV from solve")->required();
  verify_cmd->add_option("--report", verify_report_path, "report JSON from solve")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "grid of runs over (problem, eps, delta_u, delta_pu)");
  std::string problems_csv, eps_csv = "1e-4", du_csv = "0", dpu_csv = "0", out_dir = "sweep-out";
  add_run_options(sweep_cmd);
  sweep_cmd->add_option("--problems", problems_csv, "comma list of problems");
  sweep_cmd->add_option("--eps-list", eps_csv, "comma list of eps values");
  sweep_cmd->add_option("--delta-u-list", du_csv, "comma list of delta_u values");
  sweep_cmd->add_option("--delta-pu-list", dpu_csv, "comma list of delta_pu values");
  sweep_cmd->add_option("--out-dir", out_dir, "directory for cell traces and summary");

  auto* list_cmd = app.add_subcommand("list-problems", "print the problem catalog");

  auto* check_cmd = app.add_subcommand("oracle-check", "statistical oracle contract check");
  int trials = 1000;
  add_run_options(check_cmd);
  check_cmd->add_option("--trials", trials, "number of sampled triples");

  try {
    app.parse(argc, argv);

    CLI::App* active = solve_cmd->parsed()   ? solve_cmd
                       : sweep_cmd->parsed() ? sweep_cmd
                       : check_cmd->parsed() ? check_cmd
                                             : nullptr;
    if (active != nullptr && !config_path.empty()) {
      auto keys = run_config_keys(opt);
      if (active == solve_cmd) {
        keys.push_back({"out", "--out", [&](const std::string& v) { out_path = v; }});
        keys.push_back({"report", "--report", [&](const std::string& v) { report_path = v; }});
      } else if (active == sweep_cmd) {
        keys.push_back({"problems", "--problems", [&](const std::string& v) { problems_csv = v; }});
        keys.push_back({"eps-list", "--eps-list", [&](const std::string& v) { eps_csv = v; }});
        keys.push_back(
            {"delta-u-list", "--delta-u-list", [&](const std::string& v) { du_csv = v; }});
        keys.push_back(
            {"delta-pu-list", "--delta-pu-list", [&](const std::string& v) { dpu_csv = v; }});
        keys.push_back({"out-dir", "--out-dir", [&](const std::string& v) { out_dir = v; }});
      } else {
        keys.push_back(
            {"trials", "--trials", [&](const std::string& v) { trials = std::stoi(v); }});
      }
      load_config_file(config_path, active, keys);
    }

    if ((solve_cmd->parsed() || check_cmd->parsed()) && opt.problem.empty()) {
      std::fprintf(stderr, "error: --problem is required (via flag or config file)\n");
      return 1;
    }
    if (sweep_cmd->parsed() && problems_csv.empty()) {
      std::fprintf(stderr, "error: --problems is required (via flag or config file)\n");
      return 1;
    }

    if (solve_cmd->parsed()) return cmd_solve(opt, out_path, report_path);
    if (verify_cmd->parsed()) return cmd_verify(trace_path, verify_report_path);
    if (sweep_cmd->parsed()) return cmd_sweep(opt, problems_csv, eps_csv, du_csv, dpu_csv, out_dir);
    if (list_cmd->parsed()) return cmd_list_problems();
    if (check_cmd->parsed()) return cmd_oracle_check(opt.problem, opt.delta_u, trials, opt.seed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
