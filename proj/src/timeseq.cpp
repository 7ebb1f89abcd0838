#include "tsbcast/timeseq.hpp"

#include <cmath>
#include <stdexcept>

namespace tsbcast {

std::string to_string(const TsVector& v) {
  return "(" + std::to_string(v.upper) + "," + std::to_string(v.middle) + "," +
         std::to_string(v.lower) + ")";
}

TimeSequence::TimeSequence(int u) : u_(u) {
  if (u < 1) throw std::invalid_argument("TimeSequence: u must be >= 1");
  vectors_.reserve(static_cast<std::size_t>(u) * (u + 1) / 2);
  // Levels run from u down to 1; within level l the middle value walks from
  // u down to l, so the sequence opens at (u,u,u) and closes at (u,1,1).
  for (int l = u; l >= 1; --l)
    for (int m = u; m >= l; --m) vectors_.push_back({u, m, l});
}

const TsVector& TimeSequence::at_slot(long slot_index) const {
  if (slot_index < 1) throw std::out_of_range("at_slot: slot indices start at 1");
  return vectors_[static_cast<std::size_t>((slot_index - 1) % length())];
}

long TimeSequence::cycle_index(const TsVector& v) const {
  if (v.upper != u_ || v.lower < 1 || v.middle < v.lower || v.middle > u_)
    throw std::invalid_argument("cycle_index: " + to_string(v) + " is not in the sequence");
  const long lvl = u_ - v.lower;  // levels above this one, each of size u-l+1
  return lvl * (lvl + 1) / 2 + (u_ - v.middle) + 1;
}

long TimeSequence::next_slot_of(const TsVector& target, long after) const {
  const long p = cycle_index(target);
  if (p > after) return p;
  const long x = length();
  return p + x * ((after - p) / x + 1);
}

TimeSequence build_time_sequence(int u) { return TimeSequence(u); }

bool is_admissible(int rc, const TsVector& v) { return rc >= v.middle; }

bool is_edge_slot(const TsVector& v) { return v.middle == v.lower; }

int level_of(const TsVector& v) { return v.lower; }

int auto_u(const NetworkSnapshot& snapshot) {
  const long rounded = std::lround(snapshot.mean_degree());
  if (rounded < 1) return 1;
  if (rounded > 20) return 20;
  return static_cast<int>(rounded);
}

}  // namespace tsbcast
