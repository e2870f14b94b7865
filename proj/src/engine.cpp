#include "lipatrol/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lipatrol/pathfind.hpp"

namespace lipatrol {

namespace {

// A declined full route cycle within one step (possible only on degenerate
// zero-cost routes) must not spin forever.
constexpr int kMaxArrivalsPerStep = 16;

void validate(const TrialConfig& c) {
  if (!c.map) throw std::invalid_argument("trial config: no map");
  if (c.n_robots < 1) throw std::invalid_argument("trial config: n_robots must be >= 1");
  if (static_cast<int>(c.li_values.size()) != c.n_robots)
    throw std::invalid_argument("trial config: li_values size must equal n_robots");
  for (double li : c.li_values)
    if (li < 0.0 || li > 1.0)
      throw std::invalid_argument("trial config: li values must be in [0,1]");
  if (c.horizon < 1) throw std::invalid_argument("trial config: horizon must be >= 1");
  if (!(c.move_budget > 0.0))
    throw std::invalid_argument("trial config: move_budget must be > 0");
  if (c.scan_steps < 1) throw std::invalid_argument("trial config: scan_steps must be >= 1");
  if (c.block_steps < 1) throw std::invalid_argument("trial config: block_steps must be >= 1");
  if (c.n_shifts < 0) throw std::invalid_argument("trial config: n_shifts must be >= 0");
  if (c.n_robots > static_cast<int>(c.map->start_cells.size()))
    throw std::invalid_argument("trial config: more robots than start cells");
}

}  // namespace

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kScanStart: return "scan_start";
    case EventKind::kScanDone: return "scan_done";
    case EventKind::kShift: return "shift";
    case EventKind::kBlocked: return "blocked";
    case EventKind::kArrive: return "arrive";
  }
  return "unknown";
}

std::string event_log_csv(const std::vector<SimEvent>& events) {
  std::ostringstream out;
  out << "step,robot_id,event_kind,target_id,value\n";
  for (const SimEvent& e : events) {
    out << e.step << ',' << e.robot_id << ',' << event_kind_name(e.kind) << ','
        << e.target_id << ',' << e.value << '\n';
  }
  return out.str();
}

Engine::Engine(TrialConfig config)
    : config_(std::move(config)),
      route_(),
      trial_rng_(config_.trial_seed) {
  validate(config_);
  plans_ = (config_.plan_cache && config_.plan_cache->map_ptr() == config_.map)
               ? config_.plan_cache
               : std::make_shared<PlanCache>(config_.map);

  // Same contract as build_route, going through the shared plan memo.
  route_.waypoints = config_.map->waypoint_cells;
  const int n_wp = route_.n_waypoints();
  route_.adjacency.assign(n_wp, std::vector<double>(n_wp, 0.0));
  for (int i = 0; i < n_wp; ++i) {
    for (int j = 0; j < n_wp; ++j) {
      if (i == j) continue;
      try {
        route_.adjacency[i][j] =
            plans_->plan(route_.waypoints[i], route_.waypoints[j]).total_cost;
      } catch (const UnreachableError&) {
        throw UnreachableError("engine: waypoints " + std::to_string(i) + " and " +
                               std::to_string(j) + " are not connected");
      }
    }
  }

  state_.reward_table = init_rewards(route_.n_targets(), config_.env_seed);
  state_.schedule = shift_times(config_.horizon, config_.n_shifts);
  state_.totals.reward_timeseries.reserve(config_.horizon);

  if (config_.comm_enabled) {
    state_.stores.emplace_back(route_.n_targets(), true);
  } else {
    for (int i = 0; i < config_.n_robots; ++i)
      state_.stores.emplace_back(route_.n_targets(), false);
  }

  state_.robots.resize(config_.n_robots);
  for (int i = 0; i < config_.n_robots; ++i) {
    Robot& r = state_.robots[i];
    r.id = i;
    r.li = config_.li_values[i];
    r.pos = config_.map->start_for_robot(i);

    // Route to the nearest waypoint by path cost; ties go to the lower index.
    int best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int w = 0; w < route_.n_waypoints(); ++w) {
      const double cost = cached_plan(r.pos, route_.waypoints[w]).total_cost;
      if (cost < best_cost) {
        best_cost = cost;
        best = w;
      }
    }
    r.route_index = best;
    r.phase = Phase::kTravelling;
    r.path = cached_plan(r.pos, route_.waypoints[best]);
    r.path_idx = 0;
  }
  verify_occupancy();
}

BeliefStore& Engine::store_of(const Robot& robot) {
  return config_.comm_enabled ? state_.stores[0] : state_.stores[robot.id];
}

bool Engine::cell_occupied(CellCoord cell, int self_id) const {
  for (const Robot& r : state_.robots)
    if (r.id != self_id && r.pos == cell) return true;
  return false;
}

void Engine::log_event(int robot_id, EventKind kind, int target_id, int value) {
  if (config_.record_events)
    state_.totals.events.push_back({state_.step, robot_id, kind, target_id, value});
}

const Path& Engine::cached_plan(CellCoord from, CellCoord to) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(config_.map->index_of(from)) << 32) |
      static_cast<std::uint64_t>(config_.map->index_of(to));
  auto it = plan_cache_.find(key);
  if (it == plan_cache_.end())
    it = plan_cache_.emplace(key, plan_path(*config_.map, from, to)).first;
  return it->second;
}

void Engine::set_course(Robot& robot, CellCoord destination) {
  robot.path = cached_plan(robot.pos, destination);
  robot.path_idx = 0;
  robot.phase = Phase::kTravelling;
}

void Engine::step() {
  if (done()) throw std::logic_error("engine: stepped past horizon");

  if (next_shift_ < state_.schedule.shift_steps.size() &&
      state_.schedule.shift_steps[next_shift_] == state_.step) {
    apply_shift(state_.reward_table, trial_rng_);
    ++next_shift_;
    log_event(-1, EventKind::kShift, -1, 0);
  }

  for (Robot& robot : state_.robots) act(robot);

  ++state_.step;
  state_.totals.reward_timeseries.push_back(state_.totals.total_reward);
  verify_occupancy();
}

void Engine::act(Robot& robot) {
  switch (robot.phase) {
    case Phase::kBlocked:
      if (--robot.block_remaining == 0) {
        robot.phase = Phase::kTravelling;
        travel(robot);  // retry the blocked transition with this step's budget
      }
      return;
    case Phase::kScanning:
      if (--robot.scan_remaining == 0) {
        const int value = truth_at(state_.reward_table, robot.scan_target);
        ++state_.totals.scan_count;
        state_.totals.total_reward += value;
        record_observation(store_of(robot), robot.scan_target, value, state_.step);
        log_event(robot.id, EventKind::kScanDone, robot.scan_target, value);
        // Next slot decision happens now; movement resumes next step.
        decide_pending_slots(robot);
      }
      return;
    case Phase::kTravelling:
      travel(robot);
      return;
  }
}

void Engine::travel(Robot& robot) {
  double budget = config_.move_budget;
  int arrivals = 0;
  while (true) {
    if (robot.path_idx + 1 >= robot.path.cells.size()) {
      // Standing on the targeted waypoint: consider its targets.
      if (++arrivals > kMaxArrivalsPerStep) return;
      log_event(robot.id, EventKind::kArrive, robot.route_index, 0);
      robot.pending_slots = {0, 1, 2, 3};
      if (!decide_pending_slots(robot)) return;  // a scan began
      continue;  // every slot declined: keep moving along the new course
    }
    const CellCoord next = robot.path.cells[robot.path_idx + 1];
    const double cost = transition_cost(robot.pos, next);
    if (budget < cost) return;  // unused budget does not carry over
    if (cell_occupied(next, robot.id)) {
      if (handle_collision(robot, next)) continue;
      return;
    }
    robot.pos = next;
    ++robot.path_idx;
    robot.consecutive_blocks = 0;
    budget -= cost;
  }
}

bool Engine::decide_pending_slots(Robot& robot) {
  while (!robot.pending_slots.empty()) {
    const int slot = robot.pending_slots.front();
    robot.pending_slots.erase(robot.pending_slots.begin());
    const int target = target_of(robot.route_index, slot);
    const Belief belief = store_of(robot).beliefs[target];
    const bool seen_unrewarding = belief.known && belief.value == 0;
    if (seen_unrewarding) ++state_.totals.unrewarding_considerations;
    if (decide_scan(belief, robot.li, trial_rng_)) {
      if (seen_unrewarding) ++state_.totals.rescans_of_unrewarding;
      robot.phase = Phase::kScanning;
      robot.scan_target = target;
      robot.scan_remaining = config_.scan_steps;
      log_event(robot.id, EventKind::kScanStart, target, 0);
      return false;
    }
  }
  set_course(robot, advance_route(robot, route_));
  return true;
}

bool Engine::handle_collision(Robot& robot, CellCoord contested) {
  if (robot.consecutive_blocks > 0 && contested == robot.blocked_cell) {
    ++robot.consecutive_blocks;
  } else {
    robot.blocked_cell = contested;
    robot.consecutive_blocks = 1;
  }
  // A robot parked on the path (e.g. scanning at a cell we must cross) would
  // block retries forever; after 5 blocked cycles on the same cell, try to
  // route around it. Falls back to waiting when no detour exists.
  if (robot.consecutive_blocks > 5) {
    const CellCoord destination = robot.path.cells.back();
    if (destination != contested) {
      try {
        robot.path = plan_path_avoiding(*config_.map, robot.pos, destination, contested);
        robot.path_idx = 0;
        robot.consecutive_blocks = 0;
        return true;
      } catch (const UnreachableError&) {
        // no detour; keep waiting
      }
    }
  }
  robot.phase = Phase::kBlocked;
  robot.block_remaining = config_.block_steps;
  ++state_.totals.collision_delays;
  log_event(robot.id, EventKind::kBlocked, -1, 0);
  return false;
}

void Engine::verify_occupancy() const {
  for (std::size_t i = 0; i < state_.robots.size(); ++i)
    for (std::size_t j = i + 1; j < state_.robots.size(); ++j)
      if (state_.robots[i].pos == state_.robots[j].pos)
        throw std::logic_error("engine: occupancy violation at step " +
                               std::to_string(state_.step));
}

TrialResult run_trial(const TrialConfig& config) {
  Engine engine(config);
  while (!engine.done()) engine.step();
  return engine.take_result();
}

}  // namespace lipatrol
