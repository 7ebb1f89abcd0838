#include <cmath>
#include <limits>
#include <stdexcept>
#include <set>
#include <vector>

#include "doctest.h"
#include "net_fixtures.hpp"
#include "tsbcast/model.hpp"

using namespace tsbcast;

TEST_CASE("udg adjacency uses a strict distance threshold") {
  // 0-1 exactly r apart, 1-2 slightly closer than r.
  std::vector<Position> pos{{0.0, 0.0}, {10.0, 0.0}, {10.0, 9.999}};
  const NetworkSnapshot net = build_udg(pos, 10.0);
  CHECK(net.size() == 3);
  CHECK_FALSE(net.adjacent(0, 1));  // boundary pair stays disconnected
  CHECK(net.adjacent(1, 2));
  CHECK(net.adjacent(2, 1));
  CHECK_FALSE(net.adjacent(0, 2));
  CHECK(net.radius_r == 10.0);
}

TEST_CASE("udg matches the brute-force distance rule on random points") {
  Rng rng(42);
  std::vector<Position> pos(60);
  for (auto& p : pos) {
    p.x = rng.uniform(0.0, 100.0);
    p.y = rng.uniform(0.0, 100.0);
  }
  const double r = 30.0;
  const NetworkSnapshot net = build_udg(pos, r);
  for (int i = 0; i < net.size(); ++i) {
    // Sorted, no self-loops.
    const auto& row = net.adjacency[i];
    for (std::size_t k = 1; k < row.size(); ++k) CHECK(row[k - 1] < row[k]);
    for (int w : row) CHECK(w != i);
    for (int j = 0; j < net.size(); ++j) {
      if (i == j) continue;
      const double dx = pos[i].x - pos[j].x;
      const double dy = pos[i].y - pos[j].y;
      const bool expect = std::sqrt(dx * dx + dy * dy) < r;
      CHECK(net.adjacent(i, j) == expect);
      CHECK(net.adjacent(j, i) == expect);
    }
  }
}

TEST_CASE("udg rejects bad radii and positions") {
  CHECK_THROWS_AS(build_udg({{0, 0}}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_udg({{0, 0}}, -5.0), std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(build_udg({{nan, 0.0}}, 10.0), std::invalid_argument);
}

TEST_CASE("snapshot_from_edges validates and dedupes") {
  const NetworkSnapshot net =
      snapshot_from_edges(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(net.degree(0) == 1);
  CHECK(net.degree(1) == 2);
  CHECK(net.degree(2) == 1);
  CHECK(net.positions.empty());
  CHECK(net.mean_degree() == doctest::Approx(4.0 / 3.0));

  CHECK_THROWS_AS(snapshot_from_edges(3, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(snapshot_from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_net(6)));
  CHECK(is_connected(snapshot_from_edges(1, {})));
  CHECK_FALSE(is_connected(snapshot_from_edges(2, {})));
  CHECK_FALSE(is_connected(snapshot_from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(reference_net()));
}

TEST_CASE("residual_coverage counts uncovered neighbors only") {
  const NetworkSnapshot net = reference_net();
  std::vector<std::uint8_t> covered(12, 0);
  covered[0] = 1;
  CHECK(residual_coverage(net, covered, 0) == 4);  // a, b, c, d
  for (int v : {1, 2, 3, 4}) covered[v] = 1;
  CHECK(residual_coverage(net, covered, 0) == 0);
  CHECK(residual_coverage(net, covered, 1) == 2);  // e, k
  CHECK(residual_coverage(net, covered, 2) == 3);  // f, g, h
  CHECK(residual_coverage(net, covered, 3) == 1);  // g
  CHECK(residual_coverage(net, covered, 4) == 1);  // i
}

TEST_CASE("deploy_uniform is deterministic per seed and honors the area") {
  const DeploymentArea area{200.0, 25.0};
  const NetworkSnapshot a = deploy_uniform(80, area, 7u, false);
  const NetworkSnapshot b = deploy_uniform(80, area, 7u, false);
  REQUIRE(a.positions.size() == 80);
  for (int i = 0; i < 80; ++i) {
    CHECK(a.positions[i].x == b.positions[i].x);
    CHECK(a.positions[i].y == b.positions[i].y);
    CHECK(a.positions[i].x >= 0.0);
    CHECK(a.positions[i].x <= 200.0);
    CHECK(a.positions[i].y >= 0.0);
    CHECK(a.positions[i].y <= 200.0);
  }
  const NetworkSnapshot c = deploy_uniform(80, area, 8u, false);
  bool any_diff = false;
  for (int i = 0; i < 80; ++i)
    if (a.positions[i].x != c.positions[i].x) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("deploy_uniform with require_connected resamples to a connected graph") {
  const DeploymentArea area{200.0, 25.0};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const NetworkSnapshot net = deploy_uniform(100, area, seed, true);
    CHECK(is_connected(net));
    CHECK(net.size() == 100);
  }
}

TEST_CASE("deploy_uniform coordinates look uniform (pooled chi-square)") {
  // 30 seeds x 100 nodes, 10 bins per axis; chi-square on each axis with 9
  // degrees of freedom. 27.88 is the p=0.001 cutoff; the seeds are fixed so
  // the statistic is deterministic.
  const DeploymentArea area{200.0, 25.0};
  const int bins = 10;
  std::vector<long> cx(bins, 0), cy(bins, 0);
  long total = 0;
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const NetworkSnapshot net = deploy_uniform(100, area, seed, false);
    for (const auto& p : net.positions) {
      int bx = static_cast<int>(p.x / 200.0 * bins);
      int by = static_cast<int>(p.y / 200.0 * bins);
      if (bx == bins) bx = bins - 1;
      if (by == bins) by = bins - 1;
      ++cx[bx];
      ++cy[by];
      ++total;
    }
  }
  const double expect = static_cast<double>(total) / bins;
  double chi_x = 0.0, chi_y = 0.0;
  for (int b = 0; b < bins; ++b) {
    chi_x += (cx[b] - expect) * (cx[b] - expect) / expect;
    chi_y += (cy[b] - expect) * (cy[b] - expect) / expect;
  }
  CHECK(chi_x < 27.88);
  CHECK(chi_y < 27.88);
}

TEST_CASE("pick_source prefers the inner square") {
  const DeploymentArea area{200.0, 25.0};
  const NetworkSnapshot net = deploy_uniform(100, area, 5u, true);
  const double lo = area.inner_lo();
  const double hi = area.inner_hi();
  REQUIRE(lo == 12.5);
  REQUIRE(hi == 187.5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SourcePick pick = pick_source(net, area, seed);
    REQUIRE(pick.id >= 0);
    REQUIRE(pick.id < 100);
    CHECK_FALSE(pick.fallback);
    const Position& p = net.positions[pick.id];
    CHECK(p.x > lo);
    CHECK(p.x < hi);
    CHECK(p.y > lo);
    CHECK(p.y < hi);
  }
}

TEST_CASE("pick_source falls back when nothing is inside the inner square") {
  const DeploymentArea area{200.0, 25.0};
  const NetworkSnapshot net = build_udg({{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}}, 5.0);
  std::set<int> picked;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SourcePick pick = pick_source(net, area, seed);
    CHECK(pick.fallback);
    REQUIRE(pick.id >= 0);
    REQUIRE(pick.id < 3);
    picked.insert(pick.id);
  }
  CHECK(picked.size() > 1);  // still a random choice, not a constant
}

TEST_CASE("node list round trip") {
  const DeploymentArea area{200.0, 25.0};
  const NetworkSnapshot net = deploy_uniform(40, area, 11u, false);
  const std::string text = format_node_list(net);
  const std::vector<Position> parsed = parse_node_list(text);
  REQUIRE(parsed.size() == net.positions.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].x == doctest::Approx(net.positions[i].x).epsilon(1e-9));
    CHECK(parsed[i].y == doctest::Approx(net.positions[i].y).epsilon(1e-9));
  }

  CHECK(parse_node_list("# comment\n\n0 1.5 2.5\n1 3 4\n").size() == 2);
  CHECK_THROWS_AS(parse_node_list("1 0 0\n"), std::invalid_argument);   // ids must start at 0
  CHECK_THROWS_AS(parse_node_list("0 1.5\n"), std::invalid_argument);   // missing coordinate
}
