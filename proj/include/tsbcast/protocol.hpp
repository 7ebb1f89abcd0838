#pragma once

#include <cstdint>
#include <vector>

#include "tsbcast/dynamics.hpp"
#include "tsbcast/model.hpp"
#include "tsbcast/timeseq.hpp"

namespace tsbcast {

enum class DecisionKind { TransmitNow, TargetVector, Unschedule };

// Output of the self-scheduling step. TransmitNow means "the next immediate
// slot" when produced while scheduling, and "this slot" when produced by the
// preamble re-check of the scheduled slot itself.
struct ScheduleDecision {
  DecisionKind kind = DecisionKind::Unschedule;
  TsVector target;  // meaningful only for TargetVector
};

// Running control-message counters of one session.
struct ControlTally {
  long creq = 0;
  long crep = 0;
};

// Self-scheduling against the current slot vector:
//   rc > middle            -> next immediate slot
//   lower <= rc <= middle  -> (upper, rc, lower), or on an edge slot
//                             (upper, rc, lower-1) when lower > 1 else
//                             (upper, rc, 1)
//   1 <= rc < lower        -> (upper, rc, rc)
//   rc == 0                -> unschedule
ScheduleDecision schedule(int rc, const TsVector& current);

// Concrete slot index for a decision issued while slot `current_slot` is the
// reference: TransmitNow resolves to current_slot + 1, a target vector to its
// next occurrence strictly after current_slot.
long resolve_target_to_slot(const TimeSequence& ts, const ScheduleDecision& decision,
                            long current_slot);

// Preamble-time re-check of a node scheduled for the current slot:
// rc == 0 unschedules for good, rc >= middle transmits in this slot,
// otherwise the node re-runs the scheduling step.
ScheduleDecision preamble_check(int fresh_rc, const TsVector& current_vector);

// CReq/CRep residual-coverage measurement. One CReq is charged; each
// uncovered neighbor whose CReq reception and CRep reply both survive the
// channel contributes one counted CRep, and rc is the number of replies
// received. With apply_loss false the exchange is lossless regardless of mac.
// Replier ids are appended to *repliers when given.
int coverage_query(const NetworkSnapshot& snapshot, const std::vector<std::uint8_t>& covered,
                   int node, const MacModel& mac, bool apply_loss, Rng& rng, ControlTally& tally,
                   std::vector<int>* repliers = nullptr);

struct ConflictCandidate {
  int id = 0;
  int rc = 0;
};

struct ConflictOutcome {
  int winner = -1;
  std::vector<int> losers;
};

// One conflict group (same-slot candidates connected through 1-hop
// adjacency): the largest rc wins, ties break toward the lowest id, and
// everyone else defers to the next time-slot.
ConflictOutcome resolve_conflicts(const std::vector<ConflictCandidate>& candidates);

struct ReceptionOutcome {
  int rc = 0;
  ScheduleDecision decision;
  long slot = 0;  // resolved transmission slot; 0 when unscheduled
};

// First-reception handling: measure rc against the already-updated covered
// set, run the scheduling step against the reception slot's vector, and
// resolve it to a concrete slot.
ReceptionOutcome on_first_reception(const NetworkSnapshot& snapshot,
                                    const std::vector<std::uint8_t>& covered, int node,
                                    const TimeSequence& ts, long reception_slot,
                                    const MacModel& mac, bool apply_loss, Rng& rng,
                                    ControlTally& tally, std::vector<int>* repliers = nullptr);

}  // namespace tsbcast
