#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsbcast/dynamics.hpp"
#include "tsbcast/engine.hpp"

namespace tsbcast {

// Thrown for malformed or out-of-range configuration; the message names the
// offending key. The CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class VaryKey { None, NNodes, U, MeanSpeed, RpRadius, LossProb };

std::string to_string(VaryKey key);

// One experiment: a base session setup plus at most one varied dimension.
// Runs are replicated `runs` times per point; per-run seed = base_seed +
// run_id, with run ids assigned in ascending value order so that permuting
// the `values` list cannot change any row.
struct SweepSpec {
  Algorithm algorithm = Algorithm::Tss;
  int n = 100;
  double radius_r = 25.0;
  double area_d = 200.0;
  std::optional<int> u;  // auto-derived from mean degree when absent
  MobilityKind mobility = MobilityKind::Static;
  GmmmParams gmmm;
  RpgmParams rpgm;
  double mean_speed = 10.0;  // mobile models only
  double loss_prob = 0.0;
  bool control_loss = true;
  double slot_duration = 0.1;
  double preamble_fraction = 0.1;
  std::optional<long> max_slots;
  double warmup_seconds = 1000.0;
  bool require_connected = true;

  VaryKey vary = VaryKey::None;
  std::vector<double> values;
  int runs = 1;
  std::uint64_t base_seed = 1;

  long points() const { return vary == VaryKey::None ? 1 : static_cast<long>(values.size()); }
  long total_runs() const { return points() * runs; }
};

// Flat key=value lines; '#' comments and blank lines ignored. Unknown keys
// and out-of-range values raise ConfigError naming the key.
SweepSpec parse_config(std::istream& in);
SweepSpec parse_config_text(const std::string& text);
SweepSpec parse_config_file(const std::string& path);

// Apply one "key=value" assignment on top of an existing spec (CLI --set).
void apply_override(SweepSpec& spec, const std::string& assignment);

// Re-validate cross-field constraints; called by the parsers after the last
// assignment and by the CLI after overrides.
void validate(const SweepSpec& spec);

}  // namespace tsbcast
