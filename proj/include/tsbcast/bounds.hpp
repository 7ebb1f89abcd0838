#pragma once

#include "tsbcast/model.hpp"

namespace tsbcast {

// Both bounds are parameterized on q = d / r, the ratio of deployment side
// to transmission radius.

// Minimum transmissions needed to cover a d x d area in the worst case:
// (q^2 + q - sqrt(3)) / sqrt(3). Valid for q > 0.
double lower_bound_transmissions(double q);

// Tiling count behind the lower bound: hexagon tiles of circumradius r
// needed to cover the square, before the boundary correction.
double lhp_tile_count(double q);

// Worst-case transmissions of an optimal broadcast algorithm: 2(q^2 - 1) - 1
// on the adversarial chain topology. Requires integer q >= 2.
long upper_bound_transmissions(long q);

// The adversarial topology: N = 2(q^2 - 1) nodes arranged as a serpentine
// chain of epsilon-separated pairs, consecutive pairs barely in range,
// everything else out of range. Postconditions (verified internally, throws
// on failure): adjacency is exactly the node-order path, the graph is
// connected, greedy from node 0 needs exactly N - 1 transmissions, and
// removing any non-terminal node disconnects it.
struct WorstCaseTopology {
  NetworkSnapshot snapshot;
  DeploymentArea area;  // side d = q * r
  long q = 0;
  int source = 0;  // chain head
};

WorstCaseTopology worst_case_topology(long q, double radius_r, double epsilon = 0.01);

}  // namespace tsbcast
