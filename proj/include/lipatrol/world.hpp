#pragma once

#include <cstdint>
#include <vector>

#include "lipatrol/gridmap.hpp"
#include "lipatrol/rng.hpp"

namespace lipatrol {

// Each waypoint hosts four scannable targets; target ids are dense:
// id = 4 * waypoint_index + slot.
inline constexpr int kTargetsPerWaypoint = 4;

inline int target_of(int waypoint_index, int slot) {
  return waypoint_index * kTargetsPerWaypoint + slot;
}
inline int waypoint_of_target(int target_id) { return target_id / kTargetsPerWaypoint; }
inline int slot_of_target(int target_id) { return target_id % kTargetsPerWaypoint; }

// Ground-truth reward per target, always exactly half +1 and half 0.
struct RewardTable {
  std::vector<std::uint8_t> rewards;  // 0 or 1 per target
  int n_targets() const { return static_cast<int>(rewards.size()); }
  int n_rewarding() const;
};

// Deterministic function of env_seed alone: exactly n_targets/2 targets are
// rewarding. n_targets must be even.
RewardTable init_rewards(int n_targets, std::uint64_t env_seed);

// Step indices at which the environment shifts, strictly increasing, all in
// (0, horizon).
struct ShiftSchedule {
  std::vector<int> shift_steps;
  int n_shifts() const { return static_cast<int>(shift_steps.size()); }
};

// One shift lands at floor(horizon/3); S >= 2 shifts are equally spaced at
// floor(k * horizon / (S + 1)). Entries that would fall at step 0 (tiny
// horizons) are dropped, as are duplicates.
ShiftSchedule shift_times(int horizon, int n_shifts);

// Flips exactly half of all targets, balanced: n/4 unrewarding become
// rewarding and n/4 rewarding become unrewarding, both chosen uniformly.
// Consumes exactly n/2 draws from rng (rewarding side first).
// n_targets must be divisible by 4 and the table must be half rewarding.
void apply_shift(RewardTable& table, Rng& rng);

// Current ground truth for one target: 0 or +1.
int truth_at(const RewardTable& table, int target_id);

// Cyclic patrol route: waypoints in label order plus the all-pairs path-cost
// matrix between them.
struct PatrolRoute {
  std::vector<CellCoord> waypoints;
  std::vector<std::vector<double>> adjacency;
  int n_waypoints() const { return static_cast<int>(waypoints.size()); }
  int n_targets() const { return n_waypoints() * kTargetsPerWaypoint; }
};

// Builds the route for a map. Throws UnreachableError if any waypoint pair is
// disconnected.
PatrolRoute build_route(const GridMap& grid);

}  // namespace lipatrol
