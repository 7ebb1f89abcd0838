#pragma once

#include <cstdint>
#include <vector>

#include "tsbcast/model.hpp"
#include "tsbcast/rng.hpp"

namespace tsbcast {

// Bernoulli packet-loss channel. Every reception (data or control) survives
// independently with probability 1 - loss_prob.
struct MacModel {
  double loss_prob = 0.0;
};

bool mac_deliver(const MacModel& mac, Rng& rng);

struct GmmmParams {
  double update_interval = 0.2;  // s
  double alpha = 0.75;
  double mean_speed = 10.0;      // m/s
  double speed_std = 0.75;       // m/s
  double direction_std = 0.35;   // rad, noise of the direction recursion
};

struct RpgmParams {
  double node_pause = 0.3;            // s
  double node_update_interval = 0.5;  // s
  double max_rp_pause = 4.0;          // s
  double rp_radius = 27.5;            // m
  double group_fraction = 0.2;
  double mean_speed = 10.0;           // m/s
};

enum class MobilityKind { Static, Gmmm, Rpgm };

struct MobilitySpec {
  MobilityKind kind = MobilityKind::Static;
  GmmmParams gmmm;
  RpgmParams rpgm;
};

// Per-node kinematic state of the Gauss-Markov model.
struct GmmmNodeState {
  double speed = 0.0;
  double direction = 0.0;
};

// Speed and direction each follow the AR(1) recursion
//   v_k = alpha*v_{k-1} + (1-alpha)*mean + sqrt(1-alpha^2)*noise,
// with the direction mean equal to the previous direction. Negative speeds
// clamp to 0 for the interval; positions reflect specularly off the area
// border, mirroring the direction.
void gmmm_step(std::vector<GmmmNodeState>& states, std::vector<Position>& positions,
               const GmmmParams& params, const DeploymentArea& area, Rng& rng);

// Reference-point group mobility. Groups are id-contiguous blocks; each
// group's reference point does waypoint motion over the inner area at the
// group mean speed with pauses up to max_rp_pause, and members do waypoint
// motion confined to the rp_radius disk around it.
struct RpgmGroupState {
  Position rp;
  Position rp_target;
  double rp_pause_left = 0.0;
  int first_member = 0;
  int member_count = 0;
};

struct RpgmMemberState {
  Position offset;         // relative to the group reference point
  Position offset_target;
  double speed = 0.0;
  double pause_left = 0.0;
};

struct RpgmState {
  std::vector<RpgmGroupState> groups;
  std::vector<RpgmMemberState> members;
};

void rpgm_step(RpgmState& state, std::vector<Position>& positions, const RpgmParams& params,
               const DeploymentArea& area, Rng& rng);

// Owns whichever per-node state the configured model needs and advances the
// shared position vector one tick at a time.
class Mobility {
 public:
  static Mobility make_static();
  static Mobility make_gmmm(const GmmmParams& params, int n, Rng& rng);
  static Mobility make_rpgm(const RpgmParams& params, int n, const DeploymentArea& area,
                            std::vector<Position>& positions, Rng& rng);

  MobilityKind kind() const { return kind_; }
  bool is_static() const { return kind_ == MobilityKind::Static; }
  double tick_interval() const;

  void step(std::vector<Position>& positions, const DeploymentArea& area, Rng& rng);

 private:
  Mobility() = default;
  MobilityKind kind_ = MobilityKind::Static;
  GmmmParams gmmm_params_;
  RpgmParams rpgm_params_;
  std::vector<GmmmNodeState> gmmm_states_;
  RpgmState rpgm_state_;
};

// Advances mobility only, for `duration` seconds of simulated time.
void warmup(Mobility& mobility, std::vector<Position>& positions, const DeploymentArea& area,
            double duration, Rng& rng);

}  // namespace tsbcast
