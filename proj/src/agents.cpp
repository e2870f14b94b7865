#include "lipatrol/agents.hpp"

#include <stdexcept>

namespace lipatrol {

bool decide_scan(const Belief& belief, double li, Rng& rng) {
  if (li < 0.0 || li > 1.0)
    throw std::invalid_argument("decide_scan: li must be in [0,1]");
  if (!belief.known) return true;
  if (belief.value > 0) return true;
  return rng.next_double() < 1.0 - li;
}

void record_observation(BeliefStore& store, int target_id, int value, int step) {
  Belief& b = store.beliefs.at(target_id);
  b.known = true;
  b.value = value;
  b.step = step;
}

CellCoord advance_route(Robot& robot, const PatrolRoute& route) {
  robot.route_index = (robot.route_index + 1) % route.n_waypoints();
  return route.waypoints[robot.route_index];
}

}  // namespace lipatrol
