#include "tsbcast/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tsbcast/baselines.hpp"

namespace tsbcast {

double lower_bound_transmissions(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("lower_bound_transmissions: q must be positive");
  const double s3 = std::sqrt(3.0);
  return (q * q + q - s3) / s3;
}

double lhp_tile_count(double q) { return lower_bound_transmissions(q); }

long upper_bound_transmissions(long q) {
  if (q < 2) throw std::invalid_argument("upper_bound_transmissions: q must be >= 2");
  return 2 * (q * q - 1) - 1;
}

namespace {

// Remove one node and test whether the remainder stays connected.
bool connected_without(const NetworkSnapshot& snap, int removed) {
  const int n = snap.size();
  if (n <= 2) return true;
  std::vector<std::uint8_t> seen(n, 0);
  seen[removed] = 1;
  const int start = removed == 0 ? 1 : 0;
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : snap.adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n - 1;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("worst_case_topology: generated layout failed verification: " + what);
}

}  // namespace

WorstCaseTopology worst_case_topology(long q, double radius_r, double epsilon) {
  if (q < 2) throw std::invalid_argument("worst_case_topology: q must be >= 2");
  if (!(radius_r > 0.0)) throw std::invalid_argument("worst_case_topology: radius must be positive");
  if (!(epsilon > 0.0) || epsilon > radius_r / 10.0)
    throw std::invalid_argument("worst_case_topology: epsilon must be in (0, r/10]");

  const long pairs = q * q - 1;
  const double link = radius_r + epsilon / 2.0;  // anchor spacing: pairs 2 apart stay out of range
  const double pi = 3.14159265358979323846;
  const double theta = 0.45;     // zig half-angle within a row
  const double max_turn = 0.60;  // heading change cap per leg, keeps pair offsets consistent

  // Serpentine heading sequence: rows of q zig-zag legs joined by multi-leg
  // descending turns.  The sweep direction flips with the marching direction
  // so every transition rotates through "down" -- a fixed-handedness turn
  // would climb back onto the previous row once the chain marches leftward.
  // The layout may overhang the nominal q*r square; the verified chain
  // properties, not the bounding box, are the contract here.
  std::vector<double> headings;
  headings.reserve(pairs - 1);
  long row = 0;
  while (static_cast<long>(headings.size()) < pairs - 1) {
    const double axis = -static_cast<double>(row) * pi;
    double last = 0.0;
    for (long j = 0; j < q && static_cast<long>(headings.size()) < pairs - 1; ++j) {
      last = axis + (j % 2 == 0 ? theta : -theta);
      headings.push_back(last);
    }
    if (static_cast<long>(headings.size()) >= pairs - 1) break;
    const double next_first = axis - pi + theta;  // first zig leg of the row below
    const double delta = std::remainder(next_first - last, 2.0 * pi);
    const bool rightward = row % 2 == 0;
    const double sweep = rightward ? (delta > 0.0 ? delta - 2.0 * pi : delta)
                                   : (delta < 0.0 ? delta + 2.0 * pi : delta);
    const int steps = static_cast<int>(std::ceil(std::abs(sweep) / max_turn));
    for (int i = 1; i < steps && static_cast<long>(headings.size()) < pairs - 1; ++i)
      headings.push_back(last + sweep * i / steps);
    ++row;
  }

  std::vector<Position> anchors(pairs);
  anchors[0] = {0.0, 0.0};
  for (long i = 1; i < pairs; ++i) {
    anchors[i].x = anchors[i - 1].x + link * std::cos(headings[i - 1]);
    anchors[i].y = anchors[i - 1].y + link * std::sin(headings[i - 1]);
  }

  // Each pair: an entry node on the anchor and an exit node epsilon further
  // along the chain, so consecutive pairs connect only exit-to-entry.
  std::vector<Position> nodes(2 * pairs);
  for (long i = 0; i < pairs; ++i) {
    const long ref = i < pairs - 1 ? i : i - 1;
    const double dx = anchors[ref + 1].x - anchors[ref].x;
    const double dy = anchors[ref + 1].y - anchors[ref].y;
    const double len = std::hypot(dx, dy);
    nodes[2 * i] = anchors[i];
    nodes[2 * i + 1] = {anchors[i].x + epsilon * dx / len, anchors[i].y + epsilon * dy / len};
  }

  double min_x = nodes[0].x, min_y = nodes[0].y;
  for (const auto& p : nodes) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (auto& p : nodes) {
    p.x += epsilon - min_x;
    p.y += epsilon - min_y;
  }

  WorstCaseTopology out;
  out.q = q;
  out.area = DeploymentArea{static_cast<double>(q) * radius_r, radius_r};
  out.snapshot = build_udg(std::move(nodes), radius_r);

  const int n = out.snapshot.size();
  for (int t = 0; t < n; ++t) {
    std::vector<int> expect;
    if (t > 0) expect.push_back(t - 1);
    if (t + 1 < n) expect.push_back(t + 1);
    if (out.snapshot.adjacency[t] != expect)
      fail("node " + std::to_string(t) + " adjacency is not the chain");
  }
  if (!is_connected(out.snapshot)) fail("graph disconnected");
  const GreedyTrace g = greedy_broadcast(out.snapshot, 0);
  if (static_cast<int>(g.order.size()) != n - 1)
    fail("greedy used " + std::to_string(g.order.size()) + " transmissions, expected " +
         std::to_string(n - 1));
  for (int v = 1; v + 1 < n; ++v)
    if (connected_without(out.snapshot, v)) fail("node " + std::to_string(v) + " is not a cut vertex");
  return out;
}

}  // namespace tsbcast
