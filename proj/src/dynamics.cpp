#include "tsbcast/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsbcast {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bounce position off the [0, side] walls, mirroring the heading.
void reflect(double& x, double& y, double& direction, double side) {
  for (int guard = 0; guard < 64; ++guard) {
    if (x < 0.0) {
      x = -x;
      direction = kPi - direction;
    } else if (x > side) {
      x = 2.0 * side - x;
      direction = kPi - direction;
    } else if (y < 0.0) {
      y = -y;
      direction = -direction;
    } else if (y > side) {
      y = 2.0 * side - y;
      direction = -direction;
    } else {
      return;
    }
  }
  // Pathological speed/step combination; pin to the area instead of looping.
  x = std::clamp(x, 0.0, side);
  y = std::clamp(y, 0.0, side);
}

Position disk_point(double radius, Rng& rng) {
  const double ang = rng.uniform(0.0, 2.0 * kPi);
  const double rad = radius * std::sqrt(rng.uniform(0.0, 1.0));
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

// One waypoint leg: advance `at` toward `target` by speed*dt, landing exactly
// on the target when the remaining distance is shorter. Returns true on
// arrival.
bool advance(Position& at, const Position& target, double speed, double dt) {
  const double dx = target.x - at.x;
  const double dy = target.y - at.y;
  const double dist = std::hypot(dx, dy);
  const double step = speed * dt;
  if (dist <= step || dist == 0.0) {
    at = target;
    return true;
  }
  at.x += dx / dist * step;
  at.y += dy / dist * step;
  return false;
}

}  // namespace

bool mac_deliver(const MacModel& mac, Rng& rng) { return rng.bernoulli(1.0 - mac.loss_prob); }

void gmmm_step(std::vector<GmmmNodeState>& states, std::vector<Position>& positions,
               const GmmmParams& params, const DeploymentArea& area, Rng& rng) {
  const double a = params.alpha;
  const double noise_gain = std::sqrt(std::max(0.0, 1.0 - a * a));
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto& st = states[i];
    st.speed = a * st.speed + (1.0 - a) * params.mean_speed +
               noise_gain * rng.normal(0.0, params.speed_std);
    // The direction recursion is anchored on the previous direction, so the
    // alpha terms collapse and only the noise remains.
    st.direction = a * st.direction + (1.0 - a) * st.direction +
                   noise_gain * rng.normal(0.0, params.direction_std);
    const double v = std::max(0.0, st.speed);  // negative draws sit out the interval
    auto& p = positions[i];
    p.x += std::cos(st.direction) * v * params.update_interval;
    p.y += std::sin(st.direction) * v * params.update_interval;
    reflect(p.x, p.y, st.direction, area.side_d);
    st.direction = std::remainder(st.direction, 2.0 * kPi);
  }
}

void rpgm_step(RpgmState& state, std::vector<Position>& positions, const RpgmParams& params,
               const DeploymentArea& area, Rng& rng) {
  const double dt = params.node_update_interval;
  for (auto& g : state.groups) {
    if (g.rp_pause_left > 0.0) {
      g.rp_pause_left = std::max(0.0, g.rp_pause_left - dt);
    } else if (g.rp.x == g.rp_target.x && g.rp.y == g.rp_target.y) {
      g.rp_target.x = rng.uniform(area.inner_lo(), area.inner_hi());
      g.rp_target.y = rng.uniform(area.inner_lo(), area.inner_hi());
    } else if (advance(g.rp, g.rp_target, params.mean_speed, dt)) {
      g.rp_pause_left = rng.uniform(0.0, params.max_rp_pause);
    }

    for (int m = g.first_member; m < g.first_member + g.member_count; ++m) {
      auto& mem = state.members[m];
      if (mem.pause_left > 0.0) {
        mem.pause_left = std::max(0.0, mem.pause_left - dt);
      } else if (mem.offset.x == mem.offset_target.x && mem.offset.y == mem.offset_target.y) {
        mem.offset_target = disk_point(params.rp_radius, rng);
        mem.speed = std::max(0.0, rng.normal(params.mean_speed, 0.1 * params.mean_speed));
      } else if (advance(mem.offset, mem.offset_target, mem.speed, dt)) {
        mem.pause_left = params.node_pause;
      }
      auto& p = positions[m];
      p.x = std::clamp(g.rp.x + mem.offset.x, 0.0, area.side_d);
      p.y = std::clamp(g.rp.y + mem.offset.y, 0.0, area.side_d);
    }
  }
}

Mobility Mobility::make_static() { return Mobility(); }

Mobility Mobility::make_gmmm(const GmmmParams& params, int n, Rng& rng) {
  Mobility m;
  m.kind_ = MobilityKind::Gmmm;
  m.gmmm_params_ = params;
  m.gmmm_states_.resize(n);
  for (auto& st : m.gmmm_states_) {
    st.speed = std::max(0.0, rng.normal(params.mean_speed, params.speed_std));
    st.direction = rng.uniform(0.0, 2.0 * kPi);
  }
  return m;
}

Mobility Mobility::make_rpgm(const RpgmParams& params, int n, const DeploymentArea& area,
                             std::vector<Position>& positions, Rng& rng) {
  if (static_cast<int>(positions.size()) != n)
    throw std::invalid_argument("make_rpgm: positions size mismatch");
  Mobility m;
  m.kind_ = MobilityKind::Rpgm;
  m.rpgm_params_ = params;

  int group_count = static_cast<int>(std::lround(1.0 / params.group_fraction));
  group_count = std::clamp(group_count, 1, std::max(1, n));
  const int base = n / group_count;
  int extra = n % group_count;

  int next = 0;
  for (int gi = 0; gi < group_count; ++gi) {
    RpgmGroupState g;
    g.first_member = next;
    g.member_count = base + (extra > 0 ? 1 : 0);
    if (extra > 0) --extra;
    next += g.member_count;
    g.rp.x = rng.uniform(area.inner_lo(), area.inner_hi());
    g.rp.y = rng.uniform(area.inner_lo(), area.inner_hi());
    g.rp_target = g.rp;
    g.rp_pause_left = rng.uniform(0.0, params.max_rp_pause);
    m.rpgm_state_.groups.push_back(g);
  }

  m.rpgm_state_.members.resize(n);
  for (const auto& g : m.rpgm_state_.groups) {
    for (int mi = g.first_member; mi < g.first_member + g.member_count; ++mi) {
      auto& mem = m.rpgm_state_.members[mi];
      mem.offset = disk_point(params.rp_radius, rng);
      mem.offset_target = mem.offset;
      mem.speed = std::max(0.0, rng.normal(params.mean_speed, 0.1 * params.mean_speed));
      mem.pause_left = params.node_pause;
      positions[mi].x = std::clamp(g.rp.x + mem.offset.x, 0.0, area.side_d);
      positions[mi].y = std::clamp(g.rp.y + mem.offset.y, 0.0, area.side_d);
    }
  }
  return m;
}

double Mobility::tick_interval() const {
  switch (kind_) {
    case MobilityKind::Gmmm:
      return gmmm_params_.update_interval;
    case MobilityKind::Rpgm:
      return rpgm_params_.node_update_interval;
    case MobilityKind::Static:
      break;
  }
  return 0.0;
}

void Mobility::step(std::vector<Position>& positions, const DeploymentArea& area, Rng& rng) {
  switch (kind_) {
    case MobilityKind::Gmmm:
      gmmm_step(gmmm_states_, positions, gmmm_params_, area, rng);
      break;
    case MobilityKind::Rpgm:
      rpgm_step(rpgm_state_, positions, rpgm_params_, area, rng);
      break;
    case MobilityKind::Static:
      break;
  }
}

void warmup(Mobility& mobility, std::vector<Position>& positions, const DeploymentArea& area,
            double duration, Rng& rng) {
  if (mobility.is_static() || duration <= 0.0) return;
  const double tick = mobility.tick_interval();
  const long steps = std::llround(duration / tick);
  for (long s = 0; s < steps; ++s) mobility.step(positions, area, rng);
}

}  // namespace tsbcast
