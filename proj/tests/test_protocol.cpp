#include <vector>

#include "doctest.h"
#include "net_fixtures.hpp"
#include "tsbcast/protocol.hpp"

using namespace tsbcast;

TEST_CASE("schedule decision table") {
  // Unschedule on zero residual coverage.
  CHECK(schedule(0, {4, 4, 4}).kind == DecisionKind::Unschedule);
  CHECK(schedule(-2, {4, 2, 1}).kind == DecisionKind::Unschedule);

  // Above the middle value: next immediate slot.
  CHECK(schedule(5, {4, 4, 2}).kind == DecisionKind::TransmitNow);
  CHECK(schedule(3, {4, 2, 1}).kind == DecisionKind::TransmitNow);

  // Mid band keeps the level.
  ScheduleDecision d = schedule(3, {4, 4, 2});
  CHECK(d.kind == DecisionKind::TargetVector);
  CHECK(d.target == TsVector{4, 3, 2});

  // Mid band on an edge slot drops one level.
  d = schedule(2, {4, 2, 2});
  CHECK(d.target == TsVector{4, 2, 1});
  d = schedule(2, {2, 2, 2});
  CHECK(d.target == TsVector{2, 2, 1});

  // Edge slot of the last level has nowhere lower to go.
  d = schedule(1, {4, 1, 1});
  CHECK(d.target == TsVector{4, 1, 1});

  // Below the level: land on the rc diagonal.
  d = schedule(1, {4, 3, 3});
  CHECK(d.target == TsVector{4, 1, 1});
  d = schedule(2, {4, 4, 4});
  CHECK(d.target == TsVector{4, 2, 2});
  d = schedule(3, {4, 4, 4});
  CHECK(d.target == TsVector{4, 3, 3});
}

TEST_CASE("resolve_target_to_slot") {
  const TimeSequence ts(4);
  CHECK(resolve_target_to_slot(ts, {DecisionKind::TransmitNow, {}}, 4) == 5);
  CHECK(resolve_target_to_slot(ts, {DecisionKind::Unschedule, {}}, 4) == 0);
  CHECK(resolve_target_to_slot(ts, {DecisionKind::TargetVector, {4, 2, 2}}, 1) == 6);
  CHECK(resolve_target_to_slot(ts, {DecisionKind::TargetVector, {4, 2, 2}}, 6) == 16);
  CHECK(resolve_target_to_slot(ts, {DecisionKind::TargetVector, {4, 2, 1}}, 6) == 9);
}

TEST_CASE("preamble_check: this-slot admission, otherwise reschedule") {
  CHECK(preamble_check(0, {4, 2, 2}).kind == DecisionKind::Unschedule);
  CHECK(preamble_check(3, {4, 3, 3}).kind == DecisionKind::TransmitNow);
  CHECK(preamble_check(2, {4, 2, 2}).kind == DecisionKind::TransmitNow);
  CHECK(preamble_check(7, {4, 1, 1}).kind == DecisionKind::TransmitNow);

  ScheduleDecision d = preamble_check(1, {4, 2, 2});
  CHECK(d.kind == DecisionKind::TargetVector);
  CHECK(d.target == TsVector{4, 1, 1});
  d = preamble_check(2, {4, 3, 2});
  CHECK(d.target == TsVector{4, 2, 2});
}

TEST_CASE("coverage_query, lossless") {
  const NetworkSnapshot net = reference_net();
  std::vector<std::uint8_t> covered(12, 0);
  for (int v : {0, 1, 2, 3, 4}) covered[v] = 1;

  Rng rng(1);
  ControlTally tally;
  std::vector<int> repliers;
  const MacModel mac{0.5};  // must be ignored with apply_loss=false
  const int rc = coverage_query(net, covered, 2, mac, false, rng, tally, &repliers);
  CHECK(rc == 3);
  CHECK(tally.creq == 1);
  CHECK(tally.crep == 3);
  CHECK(repliers == std::vector<int>{6, 7, 8});

  const int rc0 = coverage_query(net, covered, 0, mac, false, rng, tally);
  CHECK(rc0 == 0);
  CHECK(tally.creq == 2);  // the query is charged even when nobody replies
  CHECK(tally.crep == 3);
}

TEST_CASE("coverage_query under loss: both directions must survive") {
  // Star center with 10 uncovered leaves, loss 0.2 on each direction:
  // E[rc] = 10 * 0.8^2 = 6.4.
  const NetworkSnapshot net = star_net(11, 0);
  std::vector<std::uint8_t> covered(11, 0);
  covered[0] = 1;
  const MacModel mac{0.2};

  Rng rng(99);
  ControlTally tally;
  const int trials = 10000;
  long sum = 0;
  for (int t = 0; t < trials; ++t) sum += coverage_query(net, covered, 0, mac, true, rng, tally);
  const double mean = static_cast<double>(sum) / trials;
  CHECK(mean == doctest::Approx(6.4).epsilon(0.05));
  CHECK(tally.creq == trials);
  CHECK(tally.crep == sum);  // every counted reply is one crep

  // Total loss yields rc 0; apply_loss=false restores the full count.
  Rng rng2(5);
  ControlTally t2;
  CHECK(coverage_query(net, covered, 0, MacModel{1.0}, true, rng2, t2) == 0);
  CHECK(coverage_query(net, covered, 0, MacModel{1.0}, false, rng2, t2) == 10);
}

TEST_CASE("resolve_conflicts: highest rc wins, ties break to the lowest id") {
  ConflictOutcome out = resolve_conflicts({{3, 5}, {7, 2}});
  CHECK(out.winner == 3);
  CHECK(out.losers == std::vector<int>{7});

  out = resolve_conflicts({{9, 4}, {2, 4}, {5, 1}});
  CHECK(out.winner == 2);
  CHECK(out.losers == std::vector<int>{5, 9});

  out = resolve_conflicts({{6, 1}});
  CHECK(out.winner == 6);
  CHECK(out.losers.empty());

  out = resolve_conflicts({});
  CHECK(out.winner == -1);
  CHECK(out.losers.empty());
}

TEST_CASE("on_first_reception walks the reference network like the step tables") {
  const NetworkSnapshot net = reference_net();
  const TimeSequence ts(4);
  const MacModel mac{0.0};
  Rng rng(1);
  ControlTally tally;

  // After the opening transmission: s, a, b, c, d covered.
  std::vector<std::uint8_t> covered(12, 0);
  for (int v : {0, 1, 2, 3, 4}) covered[v] = 1;

  ReceptionOutcome out = on_first_reception(net, covered, 2, ts, 1, mac, true, rng, tally);
  CHECK(out.rc == 3);
  CHECK(out.decision.target == TsVector{4, 3, 3});
  CHECK(out.slot == 3);

  out = on_first_reception(net, covered, 1, ts, 1, mac, true, rng, tally);
  CHECK(out.rc == 2);
  CHECK(out.decision.target == TsVector{4, 2, 2});
  CHECK(out.slot == 6);

  out = on_first_reception(net, covered, 3, ts, 1, mac, true, rng, tally);
  CHECK(out.rc == 1);
  CHECK(out.decision.target == TsVector{4, 1, 1});
  CHECK(out.slot == 10);

  // After b transmits in slot 3: f, g, h covered as well.
  for (int v : {6, 7, 8}) covered[v] = 1;
  out = on_first_reception(net, covered, 6, ts, 3, mac, true, rng, tally);
  CHECK(out.rc == 1);
  CHECK(out.slot == 10);
  out = on_first_reception(net, covered, 7, ts, 3, mac, true, rng, tally);
  CHECK(out.rc == 0);
  CHECK(out.decision.kind == DecisionKind::Unschedule);
  CHECK(out.slot == 0);

  // After a transmits in slot 6: e, k covered.
  for (int v : {5, 11}) covered[v] = 1;
  out = on_first_reception(net, covered, 11, ts, 6, mac, true, rng, tally);
  CHECK(out.rc == 2);
  CHECK(out.decision.target == TsVector{4, 2, 1});
  CHECK(out.slot == 9);
}
