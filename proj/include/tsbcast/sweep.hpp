#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsbcast/config.hpp"

namespace tsbcast {

// One CSV row per run. Field order is part of the output contract; do not
// reorder without versioning downstream consumers.
struct ResultRow {
  long run_id = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  int n_nodes = 0;
  double radius_r = 0.0;
  int u = 0;
  std::string mobility_model;
  double mean_speed = 0.0;
  double rp_radius = 0.0;
  double loss_prob = 0.0;
  long tx_count = 0;
  long delay_slots = 0;
  double coverage_fraction = 0.0;
  long creq_count = 0;
  long crep_count = 0;
  long slot_at_80 = -1;
  long tx_at_80 = -1;
  long slot_at_90 = -1;
  long tx_at_90 = -1;
  int truncated_flag = 0;
};

extern const char* const kCsvHeader;

std::string format_row(const ResultRow& row);

// Header plus one line per row; %.6g numeric formatting, LF newlines.
void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out);
std::string csv_text(const std::vector<ResultRow>& rows);

// One session end to end: deployment (or group placement), mobility set-up,
// warm-up, source pick, run. `vary_value` overrides the spec's varied
// dimension for this point. A session that fails (e.g. no connected
// placement) yields a row with all metric fields set to -1. When `trace_out`
// is given the per-slot event log is captured into it; tracing never changes
// the metrics.
ResultRow run_single(const SweepSpec& spec, std::optional<double> vary_value, long run_id,
                     std::uint64_t seed, std::vector<std::string>* trace_out = nullptr);

// Full sweep, sequential, rows in run-id order (values ascending).
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

}  // namespace tsbcast
