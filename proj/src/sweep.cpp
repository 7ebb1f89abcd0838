#include "tsbcast/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "tsbcast/model.hpp"

namespace tsbcast {

const char* const kCsvHeader =
    "run_id,seed,algorithm,n_nodes,radius_r,u,mobility_model,mean_speed,rp_radius,loss_prob,"
    "tx_count,delay_slots,coverage_fraction,creq_count,crep_count,slot_at_80,tx_at_80,"
    "slot_at_90,tx_at_90,truncated_flag";

std::string format_row(const ResultRow& row) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%ld,%llu,%s,%d,%.6g,%d,%s,%.6g,%.6g,%.6g,%ld,%ld,%.6g,%ld,%ld,%ld,%ld,%ld,%ld,%d",
                row.run_id, static_cast<unsigned long long>(row.seed), row.algorithm.c_str(),
                row.n_nodes, row.radius_r, row.u, row.mobility_model.c_str(), row.mean_speed,
                row.rp_radius, row.loss_prob, row.tx_count, row.delay_slots,
                row.coverage_fraction, row.creq_count, row.crep_count, row.slot_at_80,
                row.tx_at_80, row.slot_at_90, row.tx_at_90, row.truncated_flag);
  return buf;
}

void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << format_row(row) << '\n';
}

std::string csv_text(const std::vector<ResultRow>& rows) {
  std::ostringstream ss;
  emit_csv(rows, ss);
  return ss.str();
}

namespace {

const char* mobility_name(MobilityKind kind) {
  switch (kind) {
    case MobilityKind::Static:
      return "static";
    case MobilityKind::Gmmm:
      return "gmmm";
    case MobilityKind::Rpgm:
      return "rpgm";
  }
  return "?";
}

void mark_failed(ResultRow& row) {
  row.u = 0;
  row.tx_count = -1;
  row.delay_slots = -1;
  row.coverage_fraction = -1;
  row.creq_count = -1;
  row.crep_count = -1;
  row.slot_at_80 = row.tx_at_80 = row.slot_at_90 = row.tx_at_90 = -1;
  row.truncated_flag = 0;
}

}  // namespace

ResultRow run_single(const SweepSpec& spec, std::optional<double> vary_value, long run_id,
                     std::uint64_t seed, std::vector<std::string>* trace_out) {
  // Effective per-point parameters.
  int n = spec.n;
  std::optional<int> u = spec.u;
  double mean_speed = spec.mean_speed;
  double rp_radius = spec.rpgm.rp_radius;
  double loss_prob = spec.loss_prob;
  if (vary_value) {
    switch (spec.vary) {
      case VaryKey::NNodes:
        n = static_cast<int>(*vary_value);
        break;
      case VaryKey::U:
        u = static_cast<int>(*vary_value);
        break;
      case VaryKey::MeanSpeed:
        mean_speed = *vary_value;
        break;
      case VaryKey::RpRadius:
        rp_radius = *vary_value;
        break;
      case VaryKey::LossProb:
        loss_prob = *vary_value;
        break;
      case VaryKey::None:
        break;
    }
  }

  ResultRow row;
  row.run_id = run_id;
  row.seed = seed;
  row.algorithm = to_string(spec.algorithm);
  row.n_nodes = n;
  row.radius_r = spec.radius_r;
  row.mobility_model = mobility_name(spec.mobility);
  row.mean_speed = spec.mobility == MobilityKind::Static ? 0.0 : mean_speed;
  row.rp_radius = spec.mobility == MobilityKind::Rpgm ? rp_radius : 0.0;
  row.loss_prob = loss_prob;

  try {
    Rng rng(seed);
    const DeploymentArea area{spec.area_d, spec.radius_r};
    World world;
    world.area = area;
    if (spec.mobility == MobilityKind::Static) {
      world.snapshot = deploy_uniform(n, area, rng, spec.require_connected);
    } else if (spec.mobility == MobilityKind::Gmmm) {
      world.snapshot = deploy_uniform(n, area, rng, spec.require_connected);
      GmmmParams params = spec.gmmm;
      params.mean_speed = mean_speed;
      world.mobility = Mobility::make_gmmm(params, n, rng);
      warmup(world.mobility, world.snapshot.positions, area, spec.warmup_seconds, rng);
      world.snapshot = build_udg(std::move(world.snapshot.positions), spec.radius_r);
    } else {
      // Group placement replaces uniform deployment entirely.
      RpgmParams params = spec.rpgm;
      params.mean_speed = mean_speed;
      params.rp_radius = rp_radius;
      std::vector<Position> positions(n);
      world.mobility = Mobility::make_rpgm(params, n, area, positions, rng);
      warmup(world.mobility, positions, area, spec.warmup_seconds, rng);
      world.snapshot = build_udg(std::move(positions), spec.radius_r);
    }
    world.time_origin = spec.mobility == MobilityKind::Static ? 0.0 : spec.warmup_seconds;

    const SourcePick src = pick_source(world.snapshot, area, rng);

    SessionConfig cfg;
    cfg.algorithm = spec.algorithm;
    cfg.u = u;
    cfg.slot_duration = spec.slot_duration;
    cfg.preamble_fraction = spec.preamble_fraction;
    cfg.max_slots = spec.max_slots;
    cfg.mac.loss_prob = loss_prob;
    cfg.control_loss = spec.control_loss;
    cfg.record_trace = trace_out != nullptr;

    const SessionResult res = run_session(world, src.id, cfg, rng);
    if (trace_out) *trace_out = res.trace;
    const SessionMetrics& m = res.metrics;
    row.u = m.u_used;
    row.tx_count = m.tx_count;
    row.delay_slots = m.delay_slots;
    row.coverage_fraction = m.coverage_fraction;
    row.creq_count = m.creq_count;
    row.crep_count = m.crep_count;
    if (m.thresholds.size() >= 2) {
      row.slot_at_80 = m.thresholds[0].slot;
      row.tx_at_80 = m.thresholds[0].tx;
      row.slot_at_90 = m.thresholds[1].slot;
      row.tx_at_90 = m.thresholds[1].tx;
    }
    row.truncated_flag = m.truncated ? 1 : 0;
  } catch (const std::exception&) {
    mark_failed(row);
  }
  return row;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> values = spec.values;
  std::sort(values.begin(), values.end());  // run ids are value-ordered

  std::vector<ResultRow> rows;
  rows.reserve(spec.total_runs());
  const long points = spec.points();
  for (long pi = 0; pi < points; ++pi) {
    const std::optional<double> value =
        spec.vary == VaryKey::None ? std::nullopt : std::optional<double>(values[pi]);
    for (int rep = 0; rep < spec.runs; ++rep) {
      const long run_id = pi * spec.runs + rep;
      rows.push_back(run_single(spec, value, run_id, spec.base_seed + run_id));
    }
  }
  return rows;
}

}  // namespace tsbcast
