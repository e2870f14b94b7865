#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lipatrol/agents.hpp"
#include "lipatrol/gridmap.hpp"
#include "lipatrol/pathfind.hpp"
#include "lipatrol/rng.hpp"
#include "lipatrol/world.hpp"

namespace lipatrol {

// Full seeded specification of one trial.
struct TrialConfig {
  std::uint64_t env_seed = 0;
  std::uint64_t trial_seed = 0;
  int n_robots = 1;
  std::vector<double> li_values;  // one per robot
  bool comm_enabled = false;
  int n_shifts = 0;
  int horizon = 1300;
  double move_budget = 20.0;  // cost units per step
  int scan_steps = 6;
  int block_steps = 3;
  std::shared_ptr<const GridMap> map;
  bool record_events = false;
  // Optional shared path memo for trials on the same map; the engine makes a
  // private one when absent. Purely a speedup, never changes results.
  std::shared_ptr<PlanCache> plan_cache;
};

enum class EventKind { kScanStart, kScanDone, kShift, kBlocked, kArrive };

const char* event_kind_name(EventKind kind);

// Log record. target_id carries the waypoint index for kArrive and -1 for
// kShift/kBlocked; value is the observed reward for kScanDone and 0 otherwise.
struct SimEvent {
  int step = 0;
  int robot_id = -1;
  EventKind kind = EventKind::kShift;
  int target_id = -1;
  int value = 0;
  bool operator==(const SimEvent&) const = default;
};

// Line-delimited event log: header plus step,robot_id,event_kind,target_id,value.
std::string event_log_csv(const std::vector<SimEvent>& events);

struct TrialResult {
  long long total_reward = 0;
  std::vector<long long> reward_timeseries;  // cumulative, one entry per step
  long long scan_count = 0;                  // completed scans
  long long rescans_of_unrewarding = 0;      // scans begun on a last-observed-0 belief
  long long collision_delays = 0;            // blocked-phase entries
  // Decision points where the belief was last-observed-0, whether or not the
  // scan happened; denominator for the re-scan rate.
  long long unrewarding_considerations = 0;
  std::vector<SimEvent> events;  // populated when record_events is set

  bool operator==(const TrialResult&) const = default;
};

struct SimState {
  int step = 0;
  std::vector<Robot> robots;
  std::vector<BeliefStore> stores;  // one shared store, or one per robot
  RewardTable reward_table;
  ShiftSchedule schedule;
  TrialResult totals;
};

// Deterministic discrete-time simulation of one trial. step() applies, in
// order: scheduled environment shift, then robot actions in ascending id
// order, then the step counter and cumulative reward append. The one-robot-
// per-cell invariant is verified at every step boundary.
class Engine {
 public:
  explicit Engine(TrialConfig config);

  void step();
  bool done() const { return state_.step >= config_.horizon; }
  const SimState& state() const { return state_; }
  const TrialConfig& config() const { return config_; }
  const PatrolRoute& route() const { return route_; }

  TrialResult take_result() { return std::move(state_.totals); }

 private:
  BeliefStore& store_of(const Robot& robot);
  bool cell_occupied(CellCoord cell, int self_id) const;
  void act(Robot& robot);
  void travel(Robot& robot);
  // Runs scan decisions over the robot's pending slots. Returns true if the
  // robot is Travelling afterwards (all slots declined, route advanced).
  bool decide_pending_slots(Robot& robot);
  // Returns true if the robot replanned around the contested cell and can
  // keep moving this step.
  bool handle_collision(Robot& robot, CellCoord contested);
  void set_course(Robot& robot, CellCoord destination);
  void log_event(int robot_id, EventKind kind, int target_id, int value);
  void verify_occupancy() const;

  TrialConfig config_;
  std::shared_ptr<PlanCache> plans_;
  PatrolRoute route_;
  Rng trial_rng_;
  SimState state_;
  std::size_t next_shift_ = 0;
};

// Runs a full trial: rewards from env_seed, robots on their start cells
// routed to the nearest waypoint, exactly `horizon` steps. Bit-identical
// output for identical config and seeds.
TrialResult run_trial(const TrialConfig& config);

}  // namespace lipatrol
