#include "tsbcast/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tsbcast/baselines.hpp"

namespace tsbcast {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Ntss:
      return "ntss";
    case Algorithm::Tss:
      return "tss";
    case Algorithm::Flooding:
      return "flooding";
    case Algorithm::Greedy:
      return "greedy";
  }
  return "?";
}

World make_static_world(NetworkSnapshot snapshot) {
  World w;
  w.snapshot = std::move(snapshot);
  return w;
}

namespace {

void validate_config(const SessionConfig& config, int n, int source) {
  if (n < 1) throw std::invalid_argument("run_session: empty snapshot");
  if (source < 0 || source >= n) throw std::invalid_argument("run_session: source out of range");
  if (!(config.slot_duration > 0.0))
    throw std::invalid_argument("run_session: slot_duration must be positive");
  if (!(config.preamble_fraction > 0.0 && config.preamble_fraction < 1.0))
    throw std::invalid_argument("run_session: preamble_fraction must be in (0,1)");
  if (config.mac.loss_prob < 0.0 || config.mac.loss_prob > 1.0)
    throw std::invalid_argument("run_session: loss_prob must be in [0,1]");
  if (config.max_slots && *config.max_slots < 1)
    throw std::invalid_argument("run_session: max_slots must be >= 1");
}

long resolve_max_slots(const SessionConfig& config, bool mobile, int n, long ts_length) {
  if (config.max_slots) return *config.max_slots;
  if (mobile) return static_cast<long>(std::ceil(60.0 / config.slot_duration));
  if (config.algorithm == Algorithm::Flooding || config.algorithm == Algorithm::Greedy)
    return static_cast<long>(n) + 1;
  return 10 * ts_length;
}

struct ThresholdTracker {
  std::vector<ThresholdRecord> records;

  explicit ThresholdTracker(std::vector<double> thresholds) {
    std::sort(thresholds.begin(), thresholds.end());
    for (double t : thresholds) records.push_back({t, -1, -1});
  }
  void check(double coverage, long slot, long tx) {
    for (auto& r : records)
      if (r.slot < 0 && coverage >= r.threshold - 1e-12) {
        r.slot = slot;
        r.tx = tx;
      }
  }
};

}  // namespace

SessionResult run_session(World& world, int source, const SessionConfig& config, Rng& rng) {
  if (config.algorithm == Algorithm::Greedy) return replay_greedy(world, source, config, rng);

  const int n = world.snapshot.size();
  validate_config(config, n, source);

  const bool is_ts = config.algorithm == Algorithm::Ntss || config.algorithm == Algorithm::Tss;
  std::optional<TimeSequence> ts;
  int u_used = 0;
  if (is_ts) {
    u_used = config.u.value_or(auto_u(world.snapshot));
    if (u_used < 1) throw std::invalid_argument("run_session: u must be >= 1");
    ts.emplace(u_used);
  }
  const bool mobile = !world.mobility.is_static();
  const long max_slots = resolve_max_slots(config, mobile, n, is_ts ? ts->length() : 0);

  SessionResult res;
  res.covered.assign(n, 0);
  res.transmitted.assign(n, 0);
  res.ever_scheduled.assign(n, 0);
  res.tx_slot.assign(n, -1);
  std::vector<long> scheduled(n, 0);       // 0 = not scheduled
  std::vector<std::uint8_t> disqualified(n, 0);

  SessionMetrics& m = res.metrics;
  m.u_used = u_used;
  m.source = source;
  m.n_nodes = n;

  ControlTally tally;
  ThresholdTracker thresholds(config.coverage_thresholds);

  char line[160];
  auto trace = [&](const char* fmt, auto... args) {
    if (!config.record_trace) return;
    std::snprintf(line, sizeof(line), fmt, args...);
    res.trace.emplace_back(line);
  };

  res.covered[source] = 1;
  int covered_count = 1;
  scheduled[source] = 1;  // unconditional opening transmission
  res.ever_scheduled[source] = 1;
  thresholds.check(1.0 / n, 0, 0);

  const double tick = world.mobility.tick_interval();
  long ticks_done = 0;
  long k = 0;

  std::vector<int> due, transmitters, newly, repliers;
  std::vector<std::uint8_t> newly_flag(n, 0);

  while (k < max_slots) {
    ++k;

    if (mobile) {
      bool moved = false;
      while ((ticks_done + 1) * tick < (k - 1) * config.slot_duration) {
        world.mobility.step(world.snapshot.positions, world.area, rng);
        ++ticks_done;
        moved = true;
      }
      if (moved) {
        const double r = world.snapshot.radius_r;
        world.snapshot = build_udg(std::move(world.snapshot.positions), r);
      }
    }
    const NetworkSnapshot& net = world.snapshot;

    due.clear();
    for (int v = 0; v < n; ++v)
      if (scheduled[v] == k && !res.transmitted[v] && !disqualified[v]) due.push_back(v);

    transmitters.clear();
    if (k == 1) {
      transmitters = due;  // the source, with no preamble exchange
    } else if (config.algorithm == Algorithm::Flooding) {
      transmitters = due;
    } else {
      // Preamble: fresh RC measurement and re-check for every due node.
      const TsVector& v = ts->at_slot(k);
      std::vector<ConflictCandidate> cands;
      for (int id : due) {
        repliers.clear();
        const int rc = coverage_query(net, res.covered, id, config.mac, config.control_loss, rng,
                                      tally, config.record_trace ? &repliers : nullptr);
        trace("slot=%ld node=%d event=creq rc=%d", k, id, rc);
        for (int w : repliers) trace("slot=%ld node=%d event=crep to=%d", k, w, id);
        const ScheduleDecision d = preamble_check(rc, v);
        if (d.kind == DecisionKind::Unschedule) {
          disqualified[id] = 1;
          scheduled[id] = 0;
          trace("slot=%ld node=%d event=unsched", k, id);
        } else if (d.kind == DecisionKind::TransmitNow) {
          cands.push_back({id, rc});
        } else {
          scheduled[id] = resolve_target_to_slot(*ts, d, k);
          trace("slot=%ld node=%d event=resched target=(%d,%d,%d) at=%ld", k, id, d.target.upper,
                d.target.middle, d.target.lower, scheduled[id]);
        }
      }

      if (config.algorithm == Algorithm::Ntss || cands.size() <= 1) {
        for (const auto& c : cands) transmitters.push_back(c.id);
      } else {
        // TSS: group mutually aware same-slot candidates and keep one winner
        // per group. Awareness of a neighboring candidate requires its
        // overheard CReq to survive in both directions when control packets
        // are lossy.
        const int nc = static_cast<int>(cands.size());
        std::vector<int> comp(nc);
        for (int i = 0; i < nc; ++i) comp[i] = i;
        auto root = [&](int i) {
          while (comp[i] != i) i = comp[i] = comp[comp[i]];
          return i;
        };
        for (int i = 0; i < nc; ++i)
          for (int j = i + 1; j < nc; ++j) {
            if (!net.adjacent(cands[i].id, cands[j].id)) continue;
            bool aware = true;
            if (config.control_loss) {
              const bool ij = mac_deliver(config.mac, rng);
              const bool ji = mac_deliver(config.mac, rng);
              aware = ij && ji;
            }
            if (aware) comp[root(i)] = root(j);
          }
        std::vector<std::vector<ConflictCandidate>> groups(nc);
        for (int i = 0; i < nc; ++i) groups[root(i)].push_back(cands[i]);
        for (const auto& g : groups) {
          if (g.empty()) continue;
          const ConflictOutcome out = resolve_conflicts(g);
          transmitters.push_back(out.winner);
          for (int loser : out.losers) {
            scheduled[loser] = k + 1;
            trace("slot=%ld node=%d event=resched at=%ld why=conflict", k, loser, k + 1);
          }
        }
        std::sort(transmitters.begin(), transmitters.end());
      }
    }

    // Broadcast Field: simultaneous transmissions, one independent loss draw
    // per (transmitter, receiver) reception.
    newly.clear();
    for (int t : transmitters) {
      res.transmitted[t] = 1;
      res.tx_slot[t] = k;
      scheduled[t] = 0;
      ++m.tx_count;
      m.delay_slots = k;
      trace("slot=%ld node=%d event=tx", k, t);
    }
    for (int t : transmitters) {
      for (int w : net.adjacency[t]) {
        if (res.covered[w]) continue;
        if (!mac_deliver(config.mac, rng)) continue;
        if (!newly_flag[w]) {
          newly_flag[w] = 1;
          newly.push_back(w);
        }
      }
    }
    std::sort(newly.begin(), newly.end());
    for (int w : newly) {
      res.covered[w] = 1;
      newly_flag[w] = 0;
      trace("slot=%ld node=%d event=cover", k, w);
    }
    covered_count += static_cast<int>(newly.size());
    thresholds.check(static_cast<double>(covered_count) / n, k, m.tx_count);

    for (int w : newly) {
      if (config.algorithm == Algorithm::Flooding) {
        scheduled[w] = k + 1;
        res.ever_scheduled[w] = 1;
        continue;
      }
      repliers.clear();
      const ReceptionOutcome out =
          on_first_reception(net, res.covered, w, *ts, k, config.mac, config.control_loss, rng,
                             tally, config.record_trace ? &repliers : nullptr);
      trace("slot=%ld node=%d event=creq rc=%d", k, w, out.rc);
      for (int r : repliers) trace("slot=%ld node=%d event=crep to=%d", k, r, w);
      if (out.decision.kind == DecisionKind::Unschedule) {
        disqualified[w] = 1;
        trace("slot=%ld node=%d event=unsched", k, w);
      } else {
        scheduled[w] = out.slot;
        res.ever_scheduled[w] = 1;
        trace("slot=%ld node=%d event=resched at=%ld", k, w, out.slot);
      }
    }

    bool pending = false;
    for (int v = 0; v < n && !pending; ++v) pending = scheduled[v] > k;
    if (!pending) break;
    if (k == max_slots) m.truncated = true;
  }

  m.termination_slot = k;
  m.coverage_fraction = static_cast<double>(covered_count) / n;
  m.creq_count = tally.creq;
  m.crep_count = tally.crep;
  m.thresholds = thresholds.records;
  return res;
}

SessionResult replay_greedy(World& world, int source, const SessionConfig& config, Rng& rng) {
  (void)rng;  // the oracle is deterministic and lossless
  const int n = world.snapshot.size();
  validate_config(config, n, source);
  const GreedyTrace g = greedy_broadcast(world.snapshot, source);
  const long max_slots = resolve_max_slots(config, false, n, 0);
  const long steps = std::min<long>(static_cast<long>(g.order.size()), max_slots);

  SessionResult res;
  res.covered.assign(n, 0);
  res.transmitted.assign(n, 0);
  res.ever_scheduled.assign(n, 0);
  res.tx_slot.assign(n, -1);

  SessionMetrics& m = res.metrics;
  m.source = source;
  m.n_nodes = n;

  ThresholdTracker thresholds(config.coverage_thresholds);
  res.covered[source] = 1;
  int covered_count = 1;
  thresholds.check(1.0 / n, 0, 0);

  for (long j = 0; j < steps; ++j) {
    const int v = g.order[j];
    res.transmitted[v] = 1;
    res.ever_scheduled[v] = 1;
    res.tx_slot[v] = j + 1;
    ++m.tx_count;
    m.delay_slots = j + 1;
    for (int w : world.snapshot.adjacency[v]) {
      if (!res.covered[w]) {
        res.covered[w] = 1;
        ++covered_count;
      }
    }
    thresholds.check(static_cast<double>(covered_count) / n, j + 1, m.tx_count);
    if (config.record_trace) {
      char line[64];
      std::snprintf(line, sizeof(line), "slot=%ld node=%d event=tx", j + 1, v);
      res.trace.emplace_back(line);
    }
  }

  m.termination_slot = steps;
  m.truncated = steps < static_cast<long>(g.order.size());
  m.coverage_fraction = static_cast<double>(covered_count) / n;
  m.thresholds = thresholds.records;
  return res;
}

}  // namespace tsbcast
