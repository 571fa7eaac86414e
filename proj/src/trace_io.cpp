#include "agmio/trace_io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace agmio {

namespace {

using nlohmann::json;

// shortest decimal that round-trips the double
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("malformed real value '" + s + "'");
  }
  return v;
}

long parse_long(const std::string& s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("malformed integer value '" + s + "'");
  }
  return v;
}

constexpr const char* kHeader =
    "k,i_k,M_k,delta_c_k,f_tilde_x,f_tilde_w,gmap_norm,oracle_calls_cum,prox_calls_cum";

json declaration_to_json(const OracleDeclaration& d) {
  json j;
  switch (d.kind) {
    case OracleDeclaration::Kind::constant_l:
      j["kind"] = "constant_l";
      j["constant_l"] = d.constant_l;
      break;
    case OracleDeclaration::Kind::holder:
      j["kind"] = "holder";
      j["nu"] = d.holder.nu;
      j["l_nu"] = d.holder.l_nu;
      break;
    case OracleDeclaration::Kind::inner_max:
      j["kind"] = "inner_max";
      j["nu"] = d.holder.nu;
      j["l_nu"] = d.holder.l_nu;
      break;
  }
  j["delta_u"] = d.delta_u;
  return j;
}

OracleDeclaration declaration_from_json(const json& j) {
  OracleDeclaration d;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant_l") {
    d.kind = OracleDeclaration::Kind::constant_l;
    d.constant_l = j.at("constant_l").get<double>();
  } else if (kind == "holder" || kind == "inner_max") {
    d.kind = kind == "holder" ? OracleDeclaration::Kind::holder
                              : OracleDeclaration::Kind::inner_max;
    d.holder.nu = j.at("nu").get<double>();
    d.holder.l_nu = j.at("l_nu").get<double>();
  } else {
    throw std::runtime_error("unknown oracle declaration kind '" + kind + "'");
  }
  d.delta_u = j.at("delta_u").get<double>();
  return d;
}

}  // namespace

std::string format_trace_csv(const std::vector<IterationRecord>& trace) {
  std::string out(kHeader);
  out.push_back('\n');
  for (const auto& r : trace) {
    out += std::to_string(r.k);
    out += ',' + std::to_string(r.inner_checks);
    out += ',' + format_double(r.m);
    out += ',' + format_double(r.delta_c);
    out += ',' + format_double(r.f_tilde_x);
    out += ',' + format_double(r.f_tilde_w);
    out += ',' + format_double(r.gmap_norm);
    out += ',' + std::to_string(r.oracle_calls_cum);
    out += ',' + std::to_string(r.prox_calls_cum);
    out.push_back('\n');
  }
  return out;
}

void write_trace_csv(const std::string& path, const std::vector<IterationRecord>& trace) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << format_trace_csv(trace);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<IterationRecord> parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("malformed trace: bad or missing header");
  }
  std::vector<IterationRecord> trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t pos = line.find(',', start);
      fields.push_back(line.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (fields.size() != 9) throw std::runtime_error("malformed trace row: '" + line + "'");
    IterationRecord r;
    r.k = parse_long(fields[0]);
    r.inner_checks = parse_long(fields[1]);
    r.m = parse_double(fields[2]);
    r.delta_c = parse_double(fields[3]);
    r.f_tilde_x = parse_double(fields[4]);
    r.f_tilde_w = parse_double(fields[5]);
    r.gmap_norm = parse_double(fields[6]);
    r.oracle_calls_cum = parse_long(fields[7]);
    r.prox_calls_cum = parse_long(fields[8]);
    trace.push_back(std::move(r));
  }
  return trace;
}

std::vector<IterationRecord> read_trace_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open trace file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_trace_csv(buf.str());
}

std::string format_report_json(const RunMeta& meta, const std::vector<BoundCheck>& bounds) {
  json run;
  run["problem"] = meta.problem;
  run["setup"] = meta.setup;
  run["epsilon"] = meta.epsilon;
  run["delta_u"] = meta.delta_u;
  run["delta_pu"] = meta.delta_pu;
  run["l0"] = meta.l0;
  run["seed"] = meta.seed;
  run["psi_x0"] = meta.psi_x0;
  run["psi_star"] = meta.psi_star;
  run["declaration"] = declaration_to_json(meta.declaration);
  run["stop_reason"] = meta.stop_reason;
  run["output_index"] = meta.output_index;

  json bounds_json = json::object();
  for (const auto& b : bounds) {
    bounds_json[b.name] = {{"bound_value", b.bound_value}, {"observed", b.observed},
                           {"pass", b.pass}};
  }
  json root;
  root["run"] = run;
  root["bounds"] = bounds_json;
  return root.dump(2) + "\n";
}

void write_report_json(const std::string& path, const RunMeta& meta,
                       const std::vector<BoundCheck>& bounds) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << format_report_json(meta, bounds);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

RunMeta read_report_meta(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open report file '" + path + "'");
  json root = json::parse(f);
  const json& run = root.at("run");
  RunMeta meta;
  meta.problem = run.at("problem").get<std::string>();
  meta.setup = run.at("setup").get<std::string>();
  meta.epsilon = run.at("epsilon").get<double>();
  meta.delta_u = run.at("delta_u").get<double>();
  meta.delta_pu = run.at("delta_pu").get<double>();
  meta.l0 = run.at("l0").get<double>();
  meta.seed = run.at("seed").get<uint64_t>();
  meta.psi_x0 = run.at("psi_x0").get<double>();
  meta.psi_star = run.at("psi_star").get<double>();
  meta.declaration = declaration_from_json(run.at("declaration"));
  meta.stop_reason = run.at("stop_reason").get<std::string>();
  meta.output_index = run.at("output_index").get<long>();
  return meta;
}

std::string stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::criterion_met:
      return "criterion-met";
    case StopReason::iteration_cap:
      return "iteration-cap";
    case StopReason::inner_cap:
      return "inner-cap";
  }
  return "?";
}

}  // namespace agmio
