#include "tsbcast/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tsbcast {

bool NetworkSnapshot::adjacent(int a, int b) const {
  const auto& row = adjacency[a];
  return std::binary_search(row.begin(), row.end(), b);
}

double NetworkSnapshot::mean_degree() const {
  if (adjacency.empty()) return 0.0;
  long total = 0;
  for (const auto& row : adjacency) total += static_cast<long>(row.size());
  return static_cast<double>(total) / static_cast<double>(adjacency.size());
}

NetworkSnapshot build_udg(std::vector<Position> positions, double radius_r) {
  if (!(radius_r > 0.0) || !std::isfinite(radius_r))
    throw std::invalid_argument("build_udg: radius_r must be positive and finite");
  for (const auto& p : positions)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("build_udg: non-finite node position");

  const int n = static_cast<int>(positions.size());
  NetworkSnapshot snap;
  snap.radius_r = radius_r;
  snap.adjacency.assign(n, {});
  const double r2 = radius_r * radius_r;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = positions[i].x - positions[j].x;
      const double dy = positions[i].y - positions[j].y;
      if (dx * dx + dy * dy < r2) {
        snap.adjacency[i].push_back(j);
        snap.adjacency[j].push_back(i);
      }
    }
  }
  snap.positions = std::move(positions);
  return snap;  // inner loops push ids in increasing order, lists stay sorted
}

NetworkSnapshot snapshot_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    double radius_r) {
  if (n < 0) throw std::invalid_argument("snapshot_from_edges: negative node count");
  NetworkSnapshot snap;
  snap.radius_r = radius_r;
  snap.adjacency.assign(n, {});
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("snapshot_from_edges: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("snapshot_from_edges: self-loop");
    snap.adjacency[a].push_back(b);
    snap.adjacency[b].push_back(a);
  }
  for (auto& row : snap.adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return snap;
}

bool is_connected(const NetworkSnapshot& snapshot) {
  const int n = snapshot.size();
  if (n == 0) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : snapshot.adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

int residual_coverage(const NetworkSnapshot& snapshot, const std::vector<std::uint8_t>& covered,
                      int node) {
  int rc = 0;
  for (int w : snapshot.adjacency[node])
    if (!covered[w]) ++rc;
  return rc;
}

NetworkSnapshot deploy_uniform(int n, const DeploymentArea& area, Rng& rng,
                               bool require_connected) {
  if (n <= 0) throw std::invalid_argument("deploy_uniform: n must be positive");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Position> pos(n);
    for (auto& p : pos) {
      p.x = rng.uniform(0.0, area.side_d);
      p.y = rng.uniform(0.0, area.side_d);
    }
    NetworkSnapshot snap = build_udg(std::move(pos), area.inner_margin);
    if (!require_connected || is_connected(snap)) return snap;
  }
  throw std::runtime_error("deploy_uniform: no connected placement in 1000 attempts");
}

NetworkSnapshot deploy_uniform(int n, const DeploymentArea& area, std::uint64_t rng_seed,
                               bool require_connected) {
  Rng rng(rng_seed);
  return deploy_uniform(n, area, rng, require_connected);
}

SourcePick pick_source(const NetworkSnapshot& snapshot, const DeploymentArea& area, Rng& rng) {
  std::vector<int> inner;
  const double lo = area.inner_lo();
  const double hi = area.inner_hi();
  for (int i = 0; i < snapshot.size(); ++i) {
    if (i < static_cast<int>(snapshot.positions.size())) {
      const auto& p = snapshot.positions[i];
      if (p.x > lo && p.x < hi && p.y > lo && p.y < hi) inner.push_back(i);
    }
  }
  SourcePick pick;
  if (!inner.empty()) {
    pick.id = inner[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(inner.size()) - 1))];
  } else {
    pick.id = rng.uniform_int(0, snapshot.size() - 1);
    pick.fallback = true;
  }
  return pick;
}

SourcePick pick_source(const NetworkSnapshot& snapshot, const DeploymentArea& area,
                       std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return pick_source(snapshot, area, rng);
}

std::string format_node_list(const NetworkSnapshot& snapshot) {
  std::string out;
  char buf[96];
  for (int i = 0; i < static_cast<int>(snapshot.positions.size()); ++i) {
    std::snprintf(buf, sizeof(buf), "%d %.10g %.10g\n", i, snapshot.positions[i].x,
                  snapshot.positions[i].y);
    out += buf;
  }
  return out;
}

std::vector<Position> parse_node_list(const std::string& text) {
  std::vector<Position> pos;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int id;
    Position p;
    if (!(ls >> id >> p.x >> p.y)) throw std::invalid_argument("parse_node_list: bad line: " + line);
    if (id != static_cast<int>(pos.size()))
      throw std::invalid_argument("parse_node_list: ids must be 0..n-1 in order");
    pos.push_back(p);
  }
  return pos;
}

}  // namespace tsbcast
