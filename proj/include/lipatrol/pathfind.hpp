#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lipatrol/gridmap.hpp"

namespace lipatrol {

class UnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Path {
  std::vector<CellCoord> cells;  // source to destination inclusive
  double total_cost = 0.0;
};

// Minimum-cost path under the octile cost model, A* with the octile-distance
// heuristic. Ties on f-score prefer higher g, then lexicographic (y, x), so
// the returned path is fully deterministic. Costs are computed canonically as
// orthogonal_count + diagonal_count * sqrt(2) so equal-cost searches (e.g. an
// independent Dijkstra) produce bit-identical totals.
//
// Throws std::invalid_argument if an endpoint is blocked or out of bounds,
// UnreachableError if no path exists.
Path plan_path(const GridMap& grid, CellCoord from, CellCoord to);

// Same, treating `masked` as blocked. Used to route around a cell that
// another robot is sitting on.
Path plan_path_avoiding(const GridMap& grid, CellCoord from, CellCoord to,
                        std::optional<CellCoord> masked);

// W x W matrix of plan_path costs between waypoints; diagonal entries are 0.
// Throws UnreachableError naming the first unreachable pair.
std::vector<std::vector<double>> route_adjacency(const GridMap& grid,
                                                 const std::vector<CellCoord>& waypoints);

// Exact transition cost between two 8-adjacent cells.
inline double transition_cost(CellCoord a, CellCoord b) {
  return (a.x != b.x && a.y != b.y) ? kDiagonalCost : kOrthogonalCost;
}

// Memoized plan_path over one map. Routes between waypoints and start cells
// repeat across every trial on the same map, so trials share one cache; safe
// for concurrent use (A* is deterministic, so racing planners of the same
// pair produce identical paths).
class PlanCache {
 public:
  explicit PlanCache(std::shared_ptr<const GridMap> map) : map_(std::move(map)) {}

  const GridMap& map() const { return *map_; }
  const std::shared_ptr<const GridMap>& map_ptr() const { return map_; }

  Path plan(CellCoord from, CellCoord to);

 private:
  std::shared_ptr<const GridMap> map_;
  std::unordered_map<std::uint64_t, Path> paths_;
  std::shared_mutex mutex_;
};

}  // namespace lipatrol
