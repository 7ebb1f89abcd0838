#include "tsbcast/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace tsbcast {

std::string to_string(VaryKey key) {
  switch (key) {
    case VaryKey::None:
      return "none";
    case VaryKey::NNodes:
      return "n_nodes";
    case VaryKey::U:
      return "u";
    case VaryKey::MeanSpeed:
      return "mean_speed";
    case VaryKey::RpRadius:
      return "rp_radius";
    case VaryKey::LossProb:
      return "loss_prob";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(x))
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  return x;
}

long parse_integer(const std::string& key, const std::string& value) {
  const double x = parse_number(key, value);
  if (x != std::floor(x)) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return static_cast<long>(x);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "off" || value == "no" || value == "0") return false;
  throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(key + ": empty element in list '" + value + "'");
    out.push_back(parse_number(key, item));
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

void assign(SweepSpec& spec, const std::string& key, const std::string& value) {
  if (key == "algorithm") {
    if (value == "ntss")
      spec.algorithm = Algorithm::Ntss;
    else if (value == "tss")
      spec.algorithm = Algorithm::Tss;
    else if (value == "flooding")
      spec.algorithm = Algorithm::Flooding;
    else if (value == "greedy")
      spec.algorithm = Algorithm::Greedy;
    else
      throw ConfigError("algorithm: expected ntss|tss|flooding|greedy, got '" + value + "'");
  } else if (key == "n") {
    const long n = parse_integer(key, value);
    if (n < 1) throw ConfigError("n: must be >= 1");
    spec.n = static_cast<int>(n);
  } else if (key == "radius_r") {
    spec.radius_r = parse_number(key, value);
    if (!(spec.radius_r > 0)) throw ConfigError("radius_r: must be positive");
  } else if (key == "area_d") {
    spec.area_d = parse_number(key, value);
    if (!(spec.area_d > 0)) throw ConfigError("area_d: must be positive");
  } else if (key == "u") {
    if (value == "auto") {
      spec.u.reset();
    } else {
      const long u = parse_integer(key, value);
      if (u < 1) throw ConfigError("u: must be >= 1 or auto");
      spec.u = static_cast<int>(u);
    }
  } else if (key == "mobility") {
    if (value == "static")
      spec.mobility = MobilityKind::Static;
    else if (value == "gmmm")
      spec.mobility = MobilityKind::Gmmm;
    else if (value == "rpgm")
      spec.mobility = MobilityKind::Rpgm;
    else
      throw ConfigError("mobility: expected static|gmmm|rpgm, got '" + value + "'");
  } else if (key == "mean_speed") {
    spec.mean_speed = parse_number(key, value);
    if (spec.mean_speed < 0) throw ConfigError("mean_speed: must be >= 0");
  } else if (key == "rp_radius") {
    spec.rpgm.rp_radius = parse_number(key, value);
    if (spec.rpgm.rp_radius < 0) throw ConfigError("rp_radius: must be >= 0");
  } else if (key == "group_fraction") {
    spec.rpgm.group_fraction = parse_number(key, value);
    if (!(spec.rpgm.group_fraction > 0) || spec.rpgm.group_fraction > 1)
      throw ConfigError("group_fraction: must be in (0,1]");
  } else if (key == "loss_prob") {
    spec.loss_prob = parse_number(key, value);
    if (spec.loss_prob < 0 || spec.loss_prob > 1) throw ConfigError("loss_prob: must be in [0,1]");
  } else if (key == "control_loss") {
    spec.control_loss = parse_bool(key, value);
  } else if (key == "slot_duration") {
    spec.slot_duration = parse_number(key, value);
    if (!(spec.slot_duration > 0)) throw ConfigError("slot_duration: must be positive");
  } else if (key == "preamble_fraction") {
    spec.preamble_fraction = parse_number(key, value);
    if (!(spec.preamble_fraction > 0 && spec.preamble_fraction < 1))
      throw ConfigError("preamble_fraction: must be in (0,1)");
  } else if (key == "max_slots") {
    if (value == "auto") {
      spec.max_slots.reset();
    } else {
      const long s = parse_integer(key, value);
      if (s < 1) throw ConfigError("max_slots: must be >= 1 or auto");
      spec.max_slots = s;
    }
  } else if (key == "warmup") {
    spec.warmup_seconds = parse_number(key, value);
    if (spec.warmup_seconds < 0) throw ConfigError("warmup: must be >= 0");
  } else if (key == "require_connected") {
    spec.require_connected = parse_bool(key, value);
  } else if (key == "vary") {
    if (value == "none")
      spec.vary = VaryKey::None;
    else if (value == "n_nodes")
      spec.vary = VaryKey::NNodes;
    else if (value == "u")
      spec.vary = VaryKey::U;
    else if (value == "mean_speed")
      spec.vary = VaryKey::MeanSpeed;
    else if (value == "rp_radius")
      spec.vary = VaryKey::RpRadius;
    else if (value == "loss_prob")
      spec.vary = VaryKey::LossProb;
    else
      throw ConfigError("vary: expected none|n_nodes|u|mean_speed|rp_radius|loss_prob, got '" +
                        value + "'");
  } else if (key == "values") {
    spec.values = parse_list(key, value);
  } else if (key == "runs") {
    const long r = parse_integer(key, value);
    if (r < 1) throw ConfigError("runs: must be >= 1");
    spec.runs = static_cast<int>(r);
  } else if (key == "base_seed") {
    const double x = parse_number(key, value);
    if (x < 0) throw ConfigError("base_seed: must be >= 0");
    spec.base_seed = static_cast<std::uint64_t>(x);
  } else if (key == "alpha") {
    spec.gmmm.alpha = parse_number(key, value);
    if (spec.gmmm.alpha < 0 || spec.gmmm.alpha > 1) throw ConfigError("alpha: must be in [0,1]");
  } else if (key == "speed_std") {
    spec.gmmm.speed_std = parse_number(key, value);
    if (spec.gmmm.speed_std < 0) throw ConfigError("speed_std: must be >= 0");
  } else if (key == "direction_std") {
    spec.gmmm.direction_std = parse_number(key, value);
    if (spec.gmmm.direction_std < 0) throw ConfigError("direction_std: must be >= 0");
  } else if (key == "update_interval") {
    spec.gmmm.update_interval = parse_number(key, value);
    if (!(spec.gmmm.update_interval > 0)) throw ConfigError("update_interval: must be positive");
  } else if (key == "node_pause") {
    spec.rpgm.node_pause = parse_number(key, value);
    if (spec.rpgm.node_pause < 0) throw ConfigError("node_pause: must be >= 0");
  } else if (key == "node_update_interval") {
    spec.rpgm.node_update_interval = parse_number(key, value);
    if (!(spec.rpgm.node_update_interval > 0))
      throw ConfigError("node_update_interval: must be positive");
  } else if (key == "max_rp_pause") {
    spec.rpgm.max_rp_pause = parse_number(key, value);
    if (spec.rpgm.max_rp_pause < 0) throw ConfigError("max_rp_pause: must be >= 0");
  } else {
    throw ConfigError("unknown key: " + key);
  }
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.vary != VaryKey::None && spec.values.empty())
    throw ConfigError("values: required when vary=" + to_string(spec.vary));
  for (double v : spec.values) {
    switch (spec.vary) {
      case VaryKey::NNodes:
        if (v != std::floor(v) || v < 1) throw ConfigError("values: n_nodes entries must be integers >= 1");
        break;
      case VaryKey::U:
        if (v != std::floor(v) || v < 1) throw ConfigError("values: u entries must be integers >= 1");
        break;
      case VaryKey::MeanSpeed:
        if (v < 0) throw ConfigError("values: mean_speed entries must be >= 0");
        break;
      case VaryKey::RpRadius:
        if (v < 0) throw ConfigError("values: rp_radius entries must be >= 0");
        break;
      case VaryKey::LossProb:
        if (v < 0 || v > 1) throw ConfigError("values: loss_prob entries must be in [0,1]");
        break;
      case VaryKey::None:
        break;
    }
  }
  if (spec.vary == VaryKey::MeanSpeed && spec.mobility == MobilityKind::Static)
    throw ConfigError("vary: mean_speed requires mobility=gmmm or rpgm");
  if (spec.vary == VaryKey::RpRadius && spec.mobility != MobilityKind::Rpgm)
    throw ConfigError("vary: rp_radius requires mobility=rpgm");
}

SweepSpec parse_config(std::istream& in) {
  SweepSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value, got '" +
                        stripped + "'");
    assign(spec, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  validate(spec);
  return spec;
}

SweepSpec parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

SweepSpec parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

void apply_override(SweepSpec& spec, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override: expected key=value, got '" + assignment + "'");
  assign(spec, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

}  // namespace tsbcast
