#include <string>
#include <vector>

#include "doctest.h"
#include "tsbcast/config.hpp"
#include "tsbcast/sweep.hpp"

using namespace tsbcast;

namespace {

// The parser's errors must name the offending key.
template <typename Fn>
std::string config_error_of(Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("empty config yields the defaults") {
  const SweepSpec spec = parse_config_text("");
  CHECK(spec.algorithm == Algorithm::Tss);
  CHECK(spec.n == 100);
  CHECK(spec.radius_r == 25.0);
  CHECK(spec.area_d == 200.0);
  CHECK_FALSE(spec.u.has_value());
  CHECK(spec.mobility == MobilityKind::Static);
  CHECK(spec.loss_prob == 0.0);
  CHECK(spec.control_loss);
  CHECK(spec.slot_duration == 0.1);
  CHECK(spec.warmup_seconds == 1000.0);
  CHECK(spec.require_connected);
  CHECK(spec.vary == VaryKey::None);
  CHECK(spec.runs == 1);
  CHECK(spec.base_seed == 1);
  CHECK(spec.points() == 1);
  CHECK(spec.total_runs() == 1);
}

TEST_CASE("a full sweep config parses") {
  const SweepSpec spec = parse_config_text(
      "# packet-loss sweep\n"
      "algorithm = tss\n"
      "n = 700\n"
      "radius_r = 25\n"
      "area_d = 200\n"
      "u = auto\n"
      "\n"
      "vary = loss_prob\n"
      "values = 0, 0.05, 0.1, 0.15, 0.2, 0.25\n"
      "runs = 4\n"
      "base_seed = 100\n");
  CHECK(spec.algorithm == Algorithm::Tss);
  CHECK(spec.n == 700);
  CHECK_FALSE(spec.u.has_value());
  CHECK(spec.vary == VaryKey::LossProb);
  CHECK(spec.values == std::vector<double>{0, 0.05, 0.1, 0.15, 0.2, 0.25});
  CHECK(spec.points() == 6);
  CHECK(spec.total_runs() == 24);
  CHECK(spec.base_seed == 100);
}

TEST_CASE("numeric, boolean and enum forms") {
  SweepSpec spec = parse_config_text(
      "algorithm = flooding\n"
      "mobility = gmmm\n"
      "mean_speed = 12.5\n"
      "control_loss = off\n"
      "require_connected = yes\n"
      "u = 7\n"
      "max_slots = 400\n"
      "alpha = 0.5\n"
      "direction_std = 0.2\n");
  CHECK(spec.algorithm == Algorithm::Flooding);
  CHECK(spec.mobility == MobilityKind::Gmmm);
  CHECK(spec.mean_speed == 12.5);
  CHECK_FALSE(spec.control_loss);
  CHECK(spec.require_connected);
  CHECK(spec.u == 7);
  CHECK(spec.max_slots == 400);
  CHECK(spec.gmmm.alpha == 0.5);
  CHECK(spec.gmmm.direction_std == 0.2);

  spec = parse_config_text("max_slots = auto\nmobility = rpgm\nrp_radius = 30\ngroup_fraction = 0.25\n");
  CHECK_FALSE(spec.max_slots.has_value());
  CHECK(spec.rpgm.rp_radius == 30.0);
  CHECK(spec.rpgm.group_fraction == 0.25);
}

TEST_CASE("errors name the offending key") {
  CHECK(config_error_of([] { parse_config_text("loss_prob = 1.3\n"); }).find("loss_prob") !=
        std::string::npos);
  CHECK(config_error_of([] { parse_config_text("frobnicate = 1\n"); }).find("frobnicate") !=
        std::string::npos);
  CHECK(config_error_of([] { parse_config_text("n = 0\n"); }).find("n") != std::string::npos);
  CHECK(config_error_of([] { parse_config_text("u = 2.5\n"); }).find("u") != std::string::npos);
  CHECK(config_error_of([] { parse_config_text("runs = 0\n"); }).find("runs") !=
        std::string::npos);
  CHECK(config_error_of([] { parse_config_text("algorithm = dijkstra\n"); }).find("algorithm") !=
        std::string::npos);
  CHECK(config_error_of([] { parse_config_text("control_loss = maybe\n"); })
            .find("control_loss") != std::string::npos);
  CHECK(config_error_of([] { parse_config_text("values = 1,,2\nvary=u\n"); }).find("values") !=
        std::string::npos);
  // Malformed lines are reported with their line number.
  CHECK(config_error_of([] { parse_config_text("n = 10\nnot a pair\n"); }).find("line 2") !=
        std::string::npos);
}

TEST_CASE("cross-field validation") {
  CHECK_THROWS_AS(parse_config_text("vary = loss_prob\n"), ConfigError);  // values missing
  CHECK_THROWS_AS(parse_config_text("vary = mean_speed\nvalues = 5,10\n"), ConfigError);
  CHECK_NOTHROW(parse_config_text("mobility = gmmm\nvary = mean_speed\nvalues = 5,10\n"));
  CHECK_THROWS_AS(parse_config_text("mobility = gmmm\nvary = rp_radius\nvalues = 10\n"),
                  ConfigError);
  CHECK_NOTHROW(parse_config_text("mobility = rpgm\nvary = rp_radius\nvalues = 10\n"));
  CHECK_THROWS_AS(parse_config_text("vary = n_nodes\nvalues = 100.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("vary = loss_prob\nvalues = 0.5, 1.5\n"), ConfigError);
}

TEST_CASE("apply_override mirrors the file syntax") {
  SweepSpec spec = parse_config_text("n = 50\n");
  apply_override(spec, "loss_prob=0.5");
  apply_override(spec, "algorithm=ntss");
  CHECK(spec.loss_prob == 0.5);
  CHECK(spec.algorithm == Algorithm::Ntss);
  CHECK_THROWS_AS(apply_override(spec, "nonsense"), ConfigError);
  CHECK_THROWS_AS(apply_override(spec, "bogus_key=3"), ConfigError);
}

TEST_CASE("csv header and row formatting are frozen") {
  CHECK(std::string(kCsvHeader) ==
        "run_id,seed,algorithm,n_nodes,radius_r,u,mobility_model,mean_speed,rp_radius,"
        "loss_prob,tx_count,delay_slots,coverage_fraction,creq_count,crep_count,slot_at_80,"
        "tx_at_80,slot_at_90,tx_at_90,truncated_flag");

  ResultRow row;
  row.run_id = 3;
  row.seed = 12345;
  row.algorithm = "tss";
  row.n_nodes = 700;
  row.radius_r = 25.0;
  row.u = 20;
  row.mobility_model = "static";
  row.mean_speed = 0.0;
  row.rp_radius = 0.0;
  row.loss_prob = 0.05;
  row.tx_count = 44;
  row.delay_slots = 120;
  row.coverage_fraction = 0.985714;
  row.creq_count = 300;
  row.crep_count = 250;
  row.slot_at_80 = 60;
  row.tx_at_80 = 30;
  row.slot_at_90 = 80;
  row.tx_at_90 = 35;
  row.truncated_flag = 0;
  CHECK(format_row(row) == "3,12345,tss,700,25,20,static,0,0,0.05,44,120,0.985714,300,250,60,30,80,35,0");

  CHECK(csv_text({}) == std::string(kCsvHeader) + "\n");
  const std::string two = csv_text({row});
  CHECK(two == std::string(kCsvHeader) + "\n" + format_row(row) + "\n");
  CHECK(csv_text({row}) == two);  // re-emission is byte-identical
}

TEST_CASE("run_single fills a row and honors the varied value") {
  SweepSpec spec = parse_config_text("algorithm = flooding\nn = 30\narea_d = 100\n");
  const ResultRow row = run_single(spec, {}, 0, 42);
  CHECK(row.run_id == 0);
  CHECK(row.seed == 42);
  CHECK(row.algorithm == "flooding");
  CHECK(row.n_nodes == 30);
  CHECK(row.mobility_model == "static");
  CHECK(row.mean_speed == 0.0);  // static rows report zero speed
  CHECK(row.rp_radius == 0.0);
  CHECK(row.u == 0);             // flooding does not use a time sequence
  CHECK(row.tx_count == 30);
  CHECK(row.coverage_fraction == 1.0);
  CHECK(row.truncated_flag == 0);
  CHECK(row.slot_at_80 >= 1);
  CHECK(row.tx_at_80 <= row.tx_at_90);

  spec.vary = VaryKey::NNodes;
  spec.values = {20, 30};
  const ResultRow small = run_single(spec, 20.0, 0, 42);
  CHECK(small.n_nodes == 20);
  CHECK(small.tx_count == 20);
}

TEST_CASE("run_single reports a failed session as a sentinel row") {
  SweepSpec spec = parse_config_text("n = 2\narea_d = 2000\nradius_r = 1\n");
  const ResultRow row = run_single(spec, {}, 5, 99);  // no connected placement exists
  CHECK(row.run_id == 5);
  CHECK(row.seed == 99);
  CHECK(row.n_nodes == 2);
  CHECK(row.tx_count == -1);
  CHECK(row.delay_slots == -1);
  CHECK(row.coverage_fraction == -1.0);
  CHECK(row.creq_count == -1);
  CHECK(row.slot_at_80 == -1);
  CHECK(row.u == 0);
  CHECK(row.truncated_flag == 0);
}

TEST_CASE("run_single trace capture does not disturb the metrics") {
  SweepSpec spec = parse_config_text("algorithm = ntss\nn = 40\narea_d = 120\n");
  std::vector<std::string> trace;
  const ResultRow with = run_single(spec, {}, 0, 7, &trace);
  const ResultRow without = run_single(spec, {}, 0, 7);
  CHECK(format_row(with) == format_row(without));
  CHECK_FALSE(trace.empty());
  bool saw_tx = false;
  for (const auto& line : trace)
    if (line.find("event=tx") != std::string::npos) saw_tx = true;
  CHECK(saw_tx);
}

TEST_CASE("run_sweep is reproducible and value-order independent") {
  const char* base =
      "algorithm = flooding\n"
      "n = 30\n"
      "area_d = 100\n"
      "runs = 2\n"
      "base_seed = 7\n"
      "vary = loss_prob\n";
  const SweepSpec a = parse_config_text(std::string(base) + "values = 0, 0.2\n");
  const SweepSpec b = parse_config_text(std::string(base) + "values = 0.2, 0\n");

  const std::vector<ResultRow> rows_a = run_sweep(a);
  REQUIRE(rows_a.size() == 4);
  CHECK(rows_a[0].run_id == 0);
  CHECK(rows_a[0].seed == 7);
  CHECK(rows_a[0].loss_prob == 0.0);
  CHECK(rows_a[3].run_id == 3);
  CHECK(rows_a[3].seed == 10);
  CHECK(rows_a[3].loss_prob == 0.2);

  CHECK(csv_text(run_sweep(a)) == csv_text(rows_a));   // same spec, same bytes
  CHECK(csv_text(run_sweep(b)) == csv_text(rows_a));   // permuted values, same bytes
}

TEST_CASE("run_sweep covers mobile specs") {
  const SweepSpec spec = parse_config_text(
      "algorithm = tss\n"
      "n = 40\n"
      "area_d = 100\n"
      "mobility = gmmm\n"
      "warmup = 5\n"
      "max_slots = 200\n"
      "vary = mean_speed\n"
      "values = 5, 30\n"
      "base_seed = 3\n");
  const std::vector<ResultRow> rows = run_sweep(spec);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].mean_speed == 5.0);
  CHECK(rows[1].mean_speed == 30.0);
  CHECK(rows[0].mobility_model == "gmmm");
  for (const auto& row : rows) {
    CHECK(row.tx_count >= 1);
    CHECK(row.coverage_fraction > 0.0);
  }
}
