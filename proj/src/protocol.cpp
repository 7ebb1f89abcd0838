#include "tsbcast/protocol.hpp"

#include <algorithm>

namespace tsbcast {

ScheduleDecision schedule(int rc, const TsVector& current) {
  if (rc <= 0) return {DecisionKind::Unschedule, {}};
  if (rc > current.middle) return {DecisionKind::TransmitNow, {}};
  if (rc >= current.lower) {
    // Mid-band: keep the level, except on an edge slot where this level has
    // no further slots this cycle and the node drops one level down.
    int lower = current.lower;
    if (is_edge_slot(current)) lower = current.lower > 1 ? current.lower - 1 : 1;
    return {DecisionKind::TargetVector, {current.upper, rc, lower}};
  }
  return {DecisionKind::TargetVector, {current.upper, rc, rc}};
}

long resolve_target_to_slot(const TimeSequence& ts, const ScheduleDecision& decision,
                            long current_slot) {
  switch (decision.kind) {
    case DecisionKind::TransmitNow:
      return current_slot + 1;
    case DecisionKind::TargetVector:
      return ts.next_slot_of(decision.target, current_slot);
    case DecisionKind::Unschedule:
      return 0;
  }
  return 0;
}

ScheduleDecision preamble_check(int fresh_rc, const TsVector& current_vector) {
  if (fresh_rc <= 0) return {DecisionKind::Unschedule, {}};
  if (fresh_rc >= current_vector.middle) return {DecisionKind::TransmitNow, {}};
  return schedule(fresh_rc, current_vector);
}

int coverage_query(const NetworkSnapshot& snapshot, const std::vector<std::uint8_t>& covered,
                   int node, const MacModel& mac, bool apply_loss, Rng& rng, ControlTally& tally,
                   std::vector<int>* repliers) {
  ++tally.creq;
  int rc = 0;
  for (int w : snapshot.adjacency[node]) {
    if (covered[w]) continue;
    if (apply_loss && !mac_deliver(mac, rng)) continue;  // CReq lost, no reply attempted
    if (apply_loss && !mac_deliver(mac, rng)) continue;  // CRep lost on the way back
    ++tally.crep;
    ++rc;
    if (repliers) repliers->push_back(w);
  }
  return rc;
}

ConflictOutcome resolve_conflicts(const std::vector<ConflictCandidate>& candidates) {
  ConflictOutcome out;
  if (candidates.empty()) return out;
  const ConflictCandidate* best = &candidates[0];
  for (const auto& c : candidates)
    if (c.rc > best->rc || (c.rc == best->rc && c.id < best->id)) best = &c;
  out.winner = best->id;
  for (const auto& c : candidates)
    if (c.id != best->id) out.losers.push_back(c.id);
  std::sort(out.losers.begin(), out.losers.end());
  return out;
}

ReceptionOutcome on_first_reception(const NetworkSnapshot& snapshot,
                                    const std::vector<std::uint8_t>& covered, int node,
                                    const TimeSequence& ts, long reception_slot,
                                    const MacModel& mac, bool apply_loss, Rng& rng,
                                    ControlTally& tally, std::vector<int>* repliers) {
  ReceptionOutcome out;
  out.rc = coverage_query(snapshot, covered, node, mac, apply_loss, rng, tally, repliers);
  out.decision = schedule(out.rc, ts.at_slot(reception_slot));
  out.slot = resolve_target_to_slot(ts, out.decision, reception_slot);
  return out;
}

}  // namespace tsbcast
