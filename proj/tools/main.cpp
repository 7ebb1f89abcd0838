#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsbcast/baselines.hpp"
#include "tsbcast/bounds.hpp"
#include "tsbcast/config.hpp"
#include "tsbcast/engine.hpp"
#include "tsbcast/model.hpp"
#include "tsbcast/sweep.hpp"
#include "tsbcast/timeseq.hpp"

namespace {

using namespace tsbcast;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

SweepSpec load_spec(const std::string& config_path, const std::vector<std::string>& overrides) {
  SweepSpec spec;
  if (!config_path.empty()) spec = parse_config_file(config_path);
  for (const auto& o : overrides) apply_override(spec, o);
  validate(spec);
  return spec;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to " + out_path);
  out << text;
}

NetworkSnapshot load_topology(const std::string& path, double radius) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open topology file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return build_udg(parse_node_list(ss.str()), radius);
}

int cmd_simulate(const std::string& config_path, const std::vector<std::string>& overrides,
                 bool trace, const std::string& out_path) {
  SweepSpec spec = load_spec(config_path, overrides);
  spec.vary = VaryKey::None;  // one session, base parameters only
  std::vector<std::string> events;
  const ResultRow row =
      run_single(spec, std::nullopt, 0, spec.base_seed, trace ? &events : nullptr);
  for (const auto& line : events) std::cerr << line << '\n';
  if (row.tx_count < 0) {
    std::cerr << "session failed (no valid placement or bad parameters)\n";
    return kExitRuntime;
  }
  write_output(csv_text({row}), out_path);
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& overrides,
              const std::string& out_path) {
  const SweepSpec spec = load_spec(config_path, overrides);
  const std::vector<ResultRow> rows = run_sweep(spec);
  write_output(csv_text(rows), out_path);
  return kExitOk;
}

int cmd_bounds(double d, double r) {
  if (!(d > 0) || !(r > 0)) throw ConfigError("bounds: d and r must be positive");
  const double q = d / r;
  std::printf("q = %.6g\n", q);
  const double lower = lower_bound_transmissions(q);
  std::printf("lower_bound = %.6g%s\n", lower,
              lower < 0 ? "  (degenerate: q too small for the formula)" : "");
  const double qr = std::round(q);
  if (qr >= 2 && std::abs(q - qr) < 1e-9) {
    std::printf("upper_bound = %ld\n", upper_bound_transmissions(static_cast<long>(qr)));
  } else {
    std::printf("upper_bound = n/a (requires integer q >= 2)\n");
  }
  return kExitOk;
}

int cmd_ts(int u) {
  const TimeSequence ts(u);
  std::printf("u = %d, length = %ld\n", u, ts.length());
  for (long i = 1; i <= ts.length(); ++i) {
    const TsVector& v = ts.at_slot(i);
    std::printf("%3ld  %s\n", i, to_string(v).c_str());
  }
  return kExitOk;
}

int cmd_topology_gen(int n, double d, double r, std::uint64_t seed, bool connected,
                     const std::string& out_path) {
  const DeploymentArea area{d, r};
  const NetworkSnapshot snap = deploy_uniform(n, area, seed, connected);
  write_output(format_node_list(snap), out_path);
  return kExitOk;
}

int cmd_topology_worst(long q, double r, double epsilon, const std::string& out_path) {
  const WorstCaseTopology w = worst_case_topology(q, r, epsilon);
  write_output(format_node_list(w.snapshot), out_path);
  std::fprintf(stderr, "q=%ld nodes=%d greedy_from_0=%d\n", w.q, w.snapshot.size(),
               w.snapshot.size() - 1);
  return kExitOk;
}

int cmd_topology_load(const std::string& path, double r) {
  const NetworkSnapshot snap = load_topology(path, r);
  long edges = 0;
  for (int v = 0; v < snap.size(); ++v) edges += snap.degree(v);
  std::printf("nodes = %d\nedges = %ld\nmean_degree = %.6g\nconnected = %s\n", snap.size(),
              edges / 2, snap.mean_degree(), is_connected(snap) ? "yes" : "no");
  return kExitOk;
}

int cmd_oracle(const std::string& path, double r, bool want_mcds, int greedy_source,
               int forced_source) {
  const NetworkSnapshot snap = load_topology(path, r);
  if (want_mcds) {
    std::optional<int> forced;
    if (forced_source >= 0) forced = forced_source;
    const auto res = mcds_bruteforce(snap, forced);
    if (!res) {
      std::printf("mcds = none (graph admits no connected dominating set)\n");
    } else {
      std::printf("mcds_size = %zu\nmcds_members =", res->members.size());
      for (int v : res->members) std::printf(" %d", v);
      std::printf("\nsource_forced = %s\n", res->source_forced ? "yes" : "no");
    }
  }
  if (greedy_source >= 0) {
    const GreedyTrace g = greedy_broadcast(snap, greedy_source);
    std::printf("greedy_tx = %zu\ngreedy_order =", g.order.size());
    for (int v : g.order) std::printf(" %d", v);
    std::printf("\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-sequence broadcast simulator for wireless ad hoc networks"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::vector<std::string> overrides;
  bool trace = false;

  auto* sim = app.add_subcommand("simulate", "Run one session and print its result row");
  sim->add_option("-c,--config", config_path, "key=value config file");
  sim->add_option("-s,--set", overrides, "override, e.g. -s algorithm=tss -s n=400");
  sim->add_flag("--trace", trace, "print the per-slot event log to stderr");
  sim->add_option("-o,--out", out_path, "output path (default stdout)");

  auto* swp = app.add_subcommand("sweep", "Run a sweep and emit CSV");
  swp->add_option("-c,--config", config_path, "key=value config file");
  swp->add_option("-s,--set", overrides, "override, e.g. -s vary=loss_prob -s values=0,0.1,0.2");
  swp->add_option("-o,--out", out_path, "output CSV path (default stdout)");

  double bd = 200.0, br = 25.0;
  auto* bnd = app.add_subcommand("bounds", "Print the analytic transmission-count bounds");
  bnd->add_option("--d", bd, "deployment side length [m]")->capture_default_str();
  bnd->add_option("--r", br, "transmission radius [m]")->capture_default_str();

  int ts_u = 4;
  auto* tsc = app.add_subcommand("ts", "Print the time sequence for a given u");
  tsc->add_option("--u", ts_u, "sequence parameter")->required()->check(CLI::PositiveNumber);

  auto* topo = app.add_subcommand("topology", "Generate or inspect node placements");
  topo->require_subcommand(1);

  int gen_n = 100;
  double gen_d = 200.0, gen_r = 25.0;
  std::uint64_t gen_seed = 1;
  bool gen_connected = true;
  auto* gen = topo->add_subcommand("gen", "Uniform placement over the square");
  gen->add_option("--n", gen_n, "node count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--d", gen_d, "side length [m]")->capture_default_str();
  gen->add_option("--r", gen_r, "transmission radius [m]")->capture_default_str();
  gen->add_option("--seed", gen_seed, "placement seed")->capture_default_str();
  gen->add_flag("--connected,!--no-connected", gen_connected, "resample until connected");
  gen->add_option("-o,--out", out_path, "output path (default stdout)");

  long wc_q = 3;
  double wc_r = 25.0, wc_eps = 0.01;
  auto* wc = topo->add_subcommand("worst-case", "Adversarial chain topology");
  wc->add_option("--q", wc_q, "side-to-radius ratio (integer >= 2)")->required();
  wc->add_option("--r", wc_r, "transmission radius [m]")->capture_default_str();
  wc->add_option("--epsilon", wc_eps, "pair separation [m]")->capture_default_str();
  wc->add_option("-o,--out", out_path, "output path (default stdout)");

  std::string load_path;
  double load_r = 25.0;
  auto* load = topo->add_subcommand("load", "Summarize a node-list file");
  load->add_option("--file", load_path, "node list (id x y per line)")->required();
  load->add_option("--r", load_r, "transmission radius [m]")->capture_default_str();

  std::string oracle_mcds;
  double oracle_r = 25.0;
  int oracle_greedy = -1, oracle_forced = -1;
  auto* orc = app.add_subcommand("oracle", "Exact baselines on small topologies");
  orc->add_option("--mcds", oracle_mcds, "topology file for the exhaustive MCDS search")
      ->required();
  orc->add_option("--r", oracle_r, "transmission radius [m]")->capture_default_str();
  orc->add_option("--greedy", oracle_greedy, "also run the greedy oracle from this source id");
  orc->add_option("--force-source", oracle_forced, "force this id into candidate sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(config_path, overrides, trace, out_path);
    if (swp->parsed()) return cmd_sweep(config_path, overrides, out_path);
    if (bnd->parsed()) return cmd_bounds(bd, br);
    if (tsc->parsed()) return cmd_ts(ts_u);
    if (topo->parsed()) {
      if (gen->parsed()) return cmd_topology_gen(gen_n, gen_d, gen_r, gen_seed, gen_connected, out_path);
      if (wc->parsed()) return cmd_topology_worst(wc_q, wc_r, wc_eps, out_path);
      if (load->parsed()) return cmd_topology_load(load_path, load_r);
    }
    if (orc->parsed()) return cmd_oracle(oracle_mcds, oracle_r, true, oracle_greedy, oracle_forced);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
