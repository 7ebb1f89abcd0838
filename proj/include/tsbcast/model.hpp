#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tsbcast/rng.hpp"

namespace tsbcast {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Square deployment area of side `side_d`. The "inner square" used for
// source selection is inset by inner_margin in total per axis, i.e. it spans
// [inner_margin/2, side_d - inner_margin/2] on each axis. inner_margin equals
// the transmission radius of the nodes deployed in it.
struct DeploymentArea {
  double side_d = 200.0;
  double inner_margin = 25.0;

  double inner_lo() const { return inner_margin / 2.0; }
  double inner_hi() const { return side_d - inner_margin / 2.0; }
};

// A frozen view of the network: node positions plus the unit-disk adjacency
// derived from them. Adjacency is symmetric, has no self-loops, and neighbor
// lists are sorted by id. Snapshots built from an explicit edge list (test
// topologies, loaded files without geometry) carry an empty positions vector.
struct NetworkSnapshot {
  std::vector<Position> positions;
  double radius_r = 0.0;
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(adjacency.size()); }
  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  bool adjacent(int a, int b) const;
  double mean_degree() const;
};

// Unit-disk rule: i and j are neighbors iff their Euclidean distance is
// strictly less than radius_r. Throws std::invalid_argument on non-finite
// positions or radius_r <= 0.
NetworkSnapshot build_udg(std::vector<Position> positions, double radius_r);

// Explicit-topology constructor for reference graphs; positions stay empty.
NetworkSnapshot snapshot_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    double radius_r = 0.0);

bool is_connected(const NetworkSnapshot& snapshot);

// |NE(node) \ covered|: the number of 1-hop neighbors not yet covered.
int residual_coverage(const NetworkSnapshot& snapshot, const std::vector<std::uint8_t>& covered,
                      int node);

// n positions i.i.d. uniform over the full side_d x side_d square, adjacency
// with radius area.inner_margin. With require_connected the whole placement
// is resampled until the graph is connected (at most 1000 attempts, then
// std::runtime_error).
NetworkSnapshot deploy_uniform(int n, const DeploymentArea& area, std::uint64_t rng_seed,
                               bool require_connected);
NetworkSnapshot deploy_uniform(int n, const DeploymentArea& area, Rng& rng,
                               bool require_connected);

struct SourcePick {
  int id = -1;
  bool fallback = false;  // no node inside the inner square; picked among all
};

// Uniform choice among nodes strictly inside the inner square; falls back to
// a uniform choice over all nodes when the inner square is empty.
SourcePick pick_source(const NetworkSnapshot& snapshot, const DeploymentArea& area, Rng& rng);
SourcePick pick_source(const NetworkSnapshot& snapshot, const DeploymentArea& area,
                       std::uint64_t rng_seed);

// Plain-text node list, one `id x y` line per node.
std::string format_node_list(const NetworkSnapshot& snapshot);
std::vector<Position> parse_node_list(const std::string& text);

}  // namespace tsbcast
