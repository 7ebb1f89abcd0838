#pragma once

#include <string>
#include <vector>

#include "tsbcast/model.hpp"

namespace tsbcast {

// One priority vector of the time sequence. Valid vectors satisfy
// upper >= middle >= lower >= 1.
struct TsVector {
  int upper = 0;
  int middle = 0;
  int lower = 0;

  bool operator==(const TsVector&) const = default;
};

std::string to_string(const TsVector& v);

// The ordered vector collection the slotted schedule cycles through. The
// sequence starts at (u,u,u), ends at (u,1,1), and has length u(u+1)/2.
// Vectors sharing a lower value form a level; level i holds 1+u-i vectors
// with middle decreasing from u down to i.
class TimeSequence {
 public:
  explicit TimeSequence(int u);

  int u() const { return u_; }
  long length() const { return static_cast<long>(vectors_.size()); }
  const std::vector<TsVector>& vectors() const { return vectors_; }

  // Vector associated with a 1-based slot index; the association repeats
  // cyclically with period length().
  const TsVector& at_slot(long slot_index) const;

  // 1-based position of a vector within one cycle.
  long cycle_index(const TsVector& v) const;

  // Smallest slot index strictly greater than `after` whose vector equals
  // `target`, searching across cycle boundaries.
  long next_slot_of(const TsVector& target, long after) const;

 private:
  int u_;
  std::vector<TsVector> vectors_;
};

TimeSequence build_time_sequence(int u);

// A node with residual coverage rc may transmit in a slot carrying v iff
// rc >= v.middle.
bool is_admissible(int rc, const TsVector& v);

// Last slot of its level: middle == lower.
bool is_edge_slot(const TsVector& v);

int level_of(const TsVector& v);

// round(mean degree) clamped to [1, 20].
int auto_u(const NetworkSnapshot& snapshot);

}  // namespace tsbcast
