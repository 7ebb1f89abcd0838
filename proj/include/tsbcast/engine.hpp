#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsbcast/dynamics.hpp"
#include "tsbcast/model.hpp"
#include "tsbcast/protocol.hpp"
#include "tsbcast/timeseq.hpp"

namespace tsbcast {

enum class Algorithm { Ntss, Tss, Flooding, Greedy };

std::string to_string(Algorithm a);

struct SessionConfig {
  Algorithm algorithm = Algorithm::Tss;
  std::optional<int> u;               // derived via auto_u when absent
  double slot_duration = 0.1;         // s
  double preamble_fraction = 0.1;
  std::optional<long> max_slots;      // defaults: 10 TS cycles static, 60 s worth mobile
  std::vector<double> coverage_thresholds = {0.8, 0.9};
  MacModel mac;
  bool control_loss = true;           // CReq/CRep subject to the same channel
  MobilitySpec mobility;
  bool record_trace = false;
};

struct ThresholdRecord {
  double threshold = 0.0;
  long slot = -1;  // first slot at which coverage reached the threshold
  long tx = -1;    // transmission count at that point; -1 when never reached
};

struct SessionMetrics {
  long tx_count = 0;
  long delay_slots = 0;        // index of the last slot containing a data transmission
  long termination_slot = 0;
  double coverage_fraction = 0.0;
  long creq_count = 0;
  long crep_count = 0;
  std::vector<ThresholdRecord> thresholds;
  bool truncated = false;      // max_slots reached with nodes still scheduled
  bool source_fallback = false;
  int u_used = 0;              // 0 for flooding and greedy replay
  int source = -1;
  int n_nodes = 0;
};

struct SessionResult {
  SessionMetrics metrics;
  std::vector<std::string> trace;  // populated only with record_trace
  std::vector<std::uint8_t> covered;
  std::vector<std::uint8_t> transmitted;
  std::vector<std::uint8_t> ever_scheduled;
  std::vector<long> tx_slot;       // -1 for nodes that never transmitted
};

// Mutable simulation world: the engine advances mobility through `positions`
// and rebuilds the snapshot adjacency whenever a tick fires.
struct World {
  NetworkSnapshot snapshot;
  DeploymentArea area;
  Mobility mobility = Mobility::make_static();
  double time_origin = 0.0;  // simulated seconds already consumed by warm-up
};

World make_static_world(NetworkSnapshot snapshot);

// The slotted loop: per slot, apply due mobility ticks, run the Preamble
// (coverage queries, re-check, TSS conflict resolution), then the Broadcast
// Field (simultaneous transmissions, per-reception loss draws, first-reception
// scheduling). The source transmits unconditionally in slot 1. Terminates when
// no node is scheduled for any future slot or at max_slots (flagged
// truncated).
SessionResult run_session(World& world, int source, const SessionConfig& config, Rng& rng);

// Greedy oracle replayed on the engine clock, one transmission per slot.
SessionResult replay_greedy(World& world, int source, const SessionConfig& config, Rng& rng);

}  // namespace tsbcast
