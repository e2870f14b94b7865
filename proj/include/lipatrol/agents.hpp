#pragma once

#include <vector>

#include "lipatrol/pathfind.hpp"
#include "lipatrol/rng.hpp"
#include "lipatrol/world.hpp"

namespace lipatrol {

// Last observation of one target: unknown until a scan of it has completed.
struct Belief {
  bool known = false;
  int value = 0;       // 0 or +1, valid when known
  int step = -1;       // step the observation was recorded, valid when known
  bool operator==(const Belief&) const = default;
};

// Per-robot memory when communication is disabled; a single store referenced
// by every robot when it is enabled.
struct BeliefStore {
  std::vector<Belief> beliefs;
  bool shared = false;

  explicit BeliefStore(int n_targets = 0, bool shared_scope = false)
      : beliefs(n_targets), shared(shared_scope) {}
};

// Scan decision for one target. Unknown and last-observed-rewarding targets
// are always scanned; a last-observed-unrewarding target is re-scanned with
// probability p_r = 1 - li, consuming exactly one rng draw in that branch and
// none otherwise.
bool decide_scan(const Belief& belief, double li, Rng& rng);

// Overwrites the target's belief with the just-observed value.
void record_observation(BeliefStore& store, int target_id, int value, int step);

enum class Phase { kTravelling, kScanning, kBlocked };

struct Robot {
  int id = 0;
  double li = 0.5;
  CellCoord pos;

  Phase phase = Phase::kTravelling;
  Path path;                  // valid while Travelling or Blocked
  std::size_t path_idx = 0;   // index of pos within path.cells
  int scan_target = -1;       // valid while Scanning
  int scan_remaining = 0;
  int block_remaining = 0;

  int route_index = 0;              // waypoint currently targeted or occupied
  std::vector<int> pending_slots;   // slots not yet considered at this waypoint

  CellCoord blocked_cell;     // cell of the most recent collision
  int consecutive_blocks = 0; // blocked cycles in a row on blocked_cell
};

// Advances the robot to the next waypoint in cyclic label order and returns
// its coordinate.
CellCoord advance_route(Robot& robot, const PatrolRoute& route);

}  // namespace lipatrol
