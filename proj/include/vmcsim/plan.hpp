#pragma once

#include <vector>

namespace vmcsim {

// One VM relocation, in external ids.
struct Move {
  int vm_id = -1;
  int from_host = -1;
  int to_host = -1;

  bool operator==(const Move&) const = default;
};

// Applied atomically between intervals. Invariants: no VM twice, destination
// != source, destination RAM headroom holds when moves are applied in order.
struct MigrationPlan {
  std::vector<Move> moves;

  bool empty() const { return moves.empty(); }
};

}  // namespace vmcsim
