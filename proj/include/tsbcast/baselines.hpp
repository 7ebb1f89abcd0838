#pragma once

#include <optional>
#include <vector>

#include "tsbcast/engine.hpp"
#include "tsbcast/model.hpp"

namespace tsbcast {

// Centralized greedy broadcast: at each step the covered node with the
// largest residual coverage transmits (ties broken toward the lowest id);
// runs on perfect global knowledge with a lossless channel.
struct GreedyTrace {
  std::vector<int> order;     // transmitters in sequence, starting at the source
  std::vector<int> gains;     // residual coverage captured by each transmission
  bool complete = false;      // full coverage reached (always true on connected graphs)
};

GreedyTrace greedy_broadcast(const NetworkSnapshot& snapshot, int source);

// Minimum connected dominating set by exhaustive subset search, optionally
// forcing a member. Practical to roughly n = 16.
struct McdsResult {
  std::vector<int> members;
  bool source_forced = false;
};

std::optional<McdsResult> mcds_bruteforce(const NetworkSnapshot& snapshot,
                                          std::optional<int> forced_member = {});

// Blind flooding on the slotted engine: every node transmits exactly once,
// in the slot following its first reception.
SessionResult run_flooding(World& world, int source, const SessionConfig& config, Rng& rng);

}  // namespace tsbcast
