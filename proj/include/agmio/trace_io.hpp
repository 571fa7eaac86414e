#pragma once

#include "agmio/oracles.hpp"
#include "agmio/solver.hpp"
#include "agmio/verifiers.hpp"

#include <string>
#include <vector>

namespace agmio {

/// Metadata a report needs to re-verify a run without touching any oracle.
struct RunMeta {
  std::string problem;
  std::string setup;
  double epsilon = 0.0;
  double delta_u = 0.0;
  double delta_pu = 0.0;
  double l0 = 1.0;
  uint64_t seed = 0;
  double psi_x0 = 0.0;
  double psi_star = 0.0;
  OracleDeclaration declaration;
  std::string stop_reason;
  long output_index = 0;
};

/// CSV columns: k,i_k,M_k,delta_c_k,f_tilde_x,f_tilde_w,gmap_norm,
/// oracle_calls_cum,prox_calls_cum. Reals are written as shortest
/// round-trip decimals, so parse(write(trace)) reproduces every field
/// bit-exactly.
std::string format_trace_csv(const std::vector<IterationRecord>& trace);
void write_trace_csv(const std::string& path, const std::vector<IterationRecord>& trace);

/// Parses a trace CSV; records carry only the CSV-backed fields (gmap stays
/// empty, psi_at_x unset). Throws std::runtime_error on malformed input.
std::vector<IterationRecord> read_trace_csv(const std::string& path);
std::vector<IterationRecord> parse_trace_csv(const std::string& text);

/// Report JSON: {"run": {...meta...}, "bounds": {name: {bound_value,
/// observed, pass}}}.
std::string format_report_json(const RunMeta& meta, const std::vector<BoundCheck>& bounds);
void write_report_json(const std::string& path, const RunMeta& meta,
                       const std::vector<BoundCheck>& bounds);
RunMeta read_report_meta(const std::string& path);

std::string stop_reason_name(StopReason reason);

}  // namespace agmio
