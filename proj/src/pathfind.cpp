#include "lipatrol/pathfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

namespace lipatrol {

namespace {

// g-costs are tracked as (orthogonal, diagonal) step counts; the double value
// is always derived as orth + diag * sqrt(2) with exactly two roundings, so
// any search using the same convention yields bit-identical costs.
double canonical_cost(int orth, int diag) {
  return static_cast<double>(orth) + static_cast<double>(diag) * kDiagonalCost;
}

double octile_heuristic(CellCoord a, CellCoord b) {
  const int dx = std::abs(a.x - b.x);
  const int dy = std::abs(a.y - b.y);
  return canonical_cost(std::max(dx, dy) - std::min(dx, dy), std::min(dx, dy));
}

struct Frontier {
  double f = 0.0;
  double g = 0.0;
  int y = 0;
  int x = 0;
  std::uint32_t index = 0;
  int orth = 0;
  int diag = 0;
};

// Min-f; ties prefer higher g, then smaller (y, x).
struct FrontierWorse {
  bool operator()(const Frontier& a, const Frontier& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    if (a.y != b.y) return a.y > b.y;
    return a.x > b.x;
  }
};

}  // namespace

Path plan_path_avoiding(const GridMap& grid, CellCoord from, CellCoord to,
                        std::optional<CellCoord> masked) {
  auto endpoint_ok = [&](CellCoord c) {
    return grid.is_free(c) && !(masked && *masked == c);
  };
  if (!endpoint_ok(from))
    throw std::invalid_argument("plan_path: source cell is blocked or out of bounds");
  if (!endpoint_ok(to))
    throw std::invalid_argument("plan_path: destination cell is blocked or out of bounds");

  if (from == to) return Path{{from}, 0.0};

  const std::size_t n_cells = static_cast<std::size_t>(grid.width) * grid.height;
  std::vector<double> best_g(n_cells, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> parent(n_cells, UINT32_MAX);
  std::vector<std::uint8_t> closed(n_cells, 0);

  std::priority_queue<Frontier, std::vector<Frontier>, FrontierWorse> open;
  const std::uint32_t start_idx = static_cast<std::uint32_t>(grid.index_of(from));
  const std::uint32_t goal_idx = static_cast<std::uint32_t>(grid.index_of(to));
  best_g[start_idx] = 0.0;
  open.push(Frontier{octile_heuristic(from, to), 0.0, from.y, from.x, start_idx, 0, 0});

  while (!open.empty()) {
    const Frontier cur = open.top();
    open.pop();
    if (closed[cur.index]) continue;
    closed[cur.index] = 1;
    if (cur.index == goal_idx) break;

    const CellCoord c{cur.x, cur.y};
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const CellCoord nb{c.x + dx, c.y + dy};
        if (!grid.is_free(nb) || (masked && *masked == nb)) continue;
        const std::uint32_t nb_idx = static_cast<std::uint32_t>(grid.index_of(nb));
        if (closed[nb_idx]) continue;
        const bool diagonal = (dx != 0 && dy != 0);
        const int orth = cur.orth + (diagonal ? 0 : 1);
        const int diag = cur.diag + (diagonal ? 1 : 0);
        const double g = canonical_cost(orth, diag);
        if (g < best_g[nb_idx]) {
          best_g[nb_idx] = g;
          parent[nb_idx] = cur.index;
          open.push(Frontier{g + octile_heuristic(nb, to), g, nb.y, nb.x, nb_idx,
                             orth, diag});
        }
      }
    }
  }

  if (!closed[goal_idx]) {
    throw UnreachableError("plan_path: no path from (" + std::to_string(from.x) +
                           "," + std::to_string(from.y) + ") to (" +
                           std::to_string(to.x) + "," + std::to_string(to.y) + ")");
  }

  Path path;
  path.total_cost = best_g[goal_idx];
  for (std::uint32_t idx = goal_idx; idx != UINT32_MAX; idx = parent[idx]) {
    path.cells.push_back({static_cast<int>(idx % grid.width),
                          static_cast<int>(idx / grid.width)});
    if (idx == start_idx) break;
  }
  std::reverse(path.cells.begin(), path.cells.end());
  return path;
}

Path plan_path(const GridMap& grid, CellCoord from, CellCoord to) {
  return plan_path_avoiding(grid, from, to, std::nullopt);
}

Path PlanCache::plan(CellCoord from, CellCoord to) {
  const std::uint64_t key = (static_cast<std::uint64_t>(map_->index_of(from)) << 32) |
                            static_cast<std::uint64_t>(map_->index_of(to));
  {
    std::shared_lock lock(mutex_);
    const auto it = paths_.find(key);
    if (it != paths_.end()) return it->second;
  }
  Path path = plan_path(*map_, from, to);
  std::unique_lock lock(mutex_);
  return paths_.emplace(key, std::move(path)).first->second;
}

std::vector<std::vector<double>> route_adjacency(const GridMap& grid,
                                                 const std::vector<CellCoord>& waypoints) {
  if (waypoints.size() < 2)
    throw std::invalid_argument("route_adjacency: need at least 2 waypoints");
  const std::size_t w = waypoints.size();
  std::vector<std::vector<double>> cost(w, std::vector<double>(w, 0.0));
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      if (i == j) continue;
      try {
        cost[i][j] = plan_path(grid, waypoints[i], waypoints[j]).total_cost;
      } catch (const UnreachableError&) {
        throw UnreachableError("route_adjacency: waypoints " + std::to_string(i) +
                               " and " + std::to_string(j) + " are not connected");
      }
    }
  }
  return cost;
}

}  // namespace lipatrol
