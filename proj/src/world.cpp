#include "lipatrol/world.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lipatrol/pathfind.hpp"

namespace lipatrol {

int RewardTable::n_rewarding() const {
  int n = 0;
  for (std::uint8_t r : rewards) n += r;
  return n;
}

namespace {

// First k entries of a Fisher-Yates shuffle of `ids`; consumes exactly k draws.
std::vector<int> sample_without_replacement(std::vector<int> ids, int k, Rng& rng) {
  for (int i = 0; i < k; ++i) {
    const std::size_t j = i + rng.next_below(ids.size() - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  return ids;
}

}  // namespace

RewardTable init_rewards(int n_targets, std::uint64_t env_seed) {
  if (n_targets < 2 || n_targets % 2 != 0)
    throw std::invalid_argument("init_rewards: n_targets must be a positive even number");
  Rng env_rng(env_seed);
  std::vector<int> ids(n_targets);
  std::iota(ids.begin(), ids.end(), 0);
  const std::vector<int> rewarding =
      sample_without_replacement(std::move(ids), n_targets / 2, env_rng);
  RewardTable table;
  table.rewards.assign(n_targets, 0);
  for (int id : rewarding) table.rewards[id] = 1;
  return table;
}

ShiftSchedule shift_times(int horizon, int n_shifts) {
  if (horizon < 1) throw std::invalid_argument("shift_times: horizon must be >= 1");
  if (n_shifts < 0) throw std::invalid_argument("shift_times: n_shifts must be >= 0");
  ShiftSchedule schedule;
  if (n_shifts == 0) return schedule;
  if (n_shifts == 1) {
    const int t = horizon / 3;
    if (t > 0) schedule.shift_steps.push_back(t);
    return schedule;
  }
  for (int k = 1; k <= n_shifts; ++k) {
    const int t = static_cast<int>(static_cast<long long>(k) * horizon / (n_shifts + 1));
    if (t > 0 && t < horizon &&
        (schedule.shift_steps.empty() || schedule.shift_steps.back() < t)) {
      schedule.shift_steps.push_back(t);
    }
  }
  return schedule;
}

void apply_shift(RewardTable& table, Rng& rng) {
  const int n = table.n_targets();
  if (n % 4 != 0)
    throw std::invalid_argument("apply_shift: target count must be divisible by 4");
  if (table.n_rewarding() != n / 2)
    throw std::invalid_argument("apply_shift: table is not half rewarding");

  std::vector<int> rewarding, unrewarding;
  rewarding.reserve(n / 2);
  unrewarding.reserve(n / 2);
  for (int id = 0; id < n; ++id) {
    (table.rewards[id] ? rewarding : unrewarding).push_back(id);
  }
  const std::vector<int> to_zero =
      sample_without_replacement(std::move(rewarding), n / 4, rng);
  const std::vector<int> to_one =
      sample_without_replacement(std::move(unrewarding), n / 4, rng);
  for (int id : to_zero) table.rewards[id] = 0;
  for (int id : to_one) table.rewards[id] = 1;
}

int truth_at(const RewardTable& table, int target_id) {
  if (target_id < 0 || target_id >= table.n_targets())
    throw std::invalid_argument("truth_at: invalid target id " + std::to_string(target_id));
  return table.rewards[target_id];
}

PatrolRoute build_route(const GridMap& grid) {
  PatrolRoute route;
  route.waypoints = grid.waypoint_cells;
  if (route.waypoints.size() >= 2) {
    route.adjacency = route_adjacency(grid, route.waypoints);
  } else {
    route.adjacency = {{0.0}};
  }
  return route;
}

}  // namespace lipatrol
