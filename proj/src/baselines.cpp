#include "tsbcast/baselines.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "tsbcast/model.hpp"

namespace tsbcast {

GreedyTrace greedy_broadcast(const NetworkSnapshot& snapshot, int source) {
  const int n = snapshot.size();
  if (source < 0 || source >= n) throw std::invalid_argument("greedy_broadcast: bad source");
  if (!is_connected(snapshot)) throw std::invalid_argument("greedy_broadcast: disconnected snapshot");

  std::vector<std::uint8_t> covered(n, 0), transmitted(n, 0);
  covered[source] = 1;
  int covered_count = 1;

  GreedyTrace trace;
  auto transmit = [&](int v) {
    transmitted[v] = 1;
    int gain = 0;
    for (int w : snapshot.adjacency[v]) {
      if (!covered[w]) {
        covered[w] = 1;
        ++gain;
        ++covered_count;
      }
    }
    trace.order.push_back(v);
    trace.gains.push_back(gain);
  };

  transmit(source);  // the source always opens the session
  while (covered_count < n) {
    int best = -1, best_rc = 0;
    for (int v = 0; v < n; ++v) {
      if (!covered[v] || transmitted[v]) continue;
      const int rc = residual_coverage(snapshot, covered, v);
      if (rc > best_rc) {
        best_rc = rc;
        best = v;
      }
    }
    if (best < 0) break;  // all residuals zero; only possible at full coverage here
    transmit(best);
  }
  trace.complete = covered_count == n;
  return trace;
}

std::optional<McdsResult> mcds_bruteforce(const NetworkSnapshot& snapshot,
                                          std::optional<int> forced_member) {
  const int n = snapshot.size();
  if (n > 16) throw std::invalid_argument("mcds_bruteforce: limited to 16 nodes");
  if (n == 0) return McdsResult{{}, false};
  if (forced_member && (*forced_member < 0 || *forced_member >= n))
    throw std::invalid_argument("mcds_bruteforce: forced member out of range");

  // Closed neighborhoods as bitmasks.
  std::vector<std::uint32_t> closed(n, 0);
  for (int v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (int w : snapshot.adjacency[v]) closed[v] |= 1u << w;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  const std::uint32_t forced_bit = forced_member ? (1u << *forced_member) : 0;

  auto dominates = [&](std::uint32_t set) {
    std::uint32_t hit = 0;
    for (int v = 0; v < n; ++v)
      if (set & (1u << v)) hit |= closed[v];
    return hit == all;
  };
  auto induced_connected = [&](std::uint32_t set) {
    const int start = std::countr_zero(set);
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier & (1u << v)) next |= closed[v] & set;
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  };

  for (int size = 1; size <= n; ++size) {
    for (std::uint32_t set = 1; set <= all; ++set) {
      if (std::popcount(set) != size) continue;
      if ((set & forced_bit) != forced_bit) continue;
      if (!dominates(set) || !induced_connected(set)) continue;
      McdsResult res;
      res.source_forced = forced_member.has_value();
      for (int v = 0; v < n; ++v)
        if (set & (1u << v)) res.members.push_back(v);
      return res;
    }
  }
  return std::nullopt;  // disconnected input: no connected dominating set exists
}

SessionResult run_flooding(World& world, int source, const SessionConfig& config, Rng& rng) {
  SessionConfig cfg = config;
  cfg.algorithm = Algorithm::Flooding;
  return run_session(world, source, cfg, rng);
}

}  // namespace tsbcast
