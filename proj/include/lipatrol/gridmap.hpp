#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lipatrol {

inline constexpr double kOrthogonalCost = 1.0;
inline constexpr double kDiagonalCost = std::numbers::sqrt2;

struct CellCoord {
  int x = 0;  // column
  int y = 0;  // row
  bool operator==(const CellCoord&) const = default;
};

// Raised on malformed map text; line and column are 1-based.
class MapParseError : public std::runtime_error {
 public:
  MapParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// 2D occupancy grid. Waypoint order defines the cyclic visiting order;
// robot i starts at start_cells[i % start_cells.size()].
struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> blocked;  // row-major, 1 = blocked
  std::vector<CellCoord> waypoint_cells;
  std::vector<CellCoord> start_cells;

  bool in_bounds(CellCoord c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  bool is_blocked(CellCoord c) const {
    return blocked[static_cast<std::size_t>(c.y) * width + c.x] != 0;
  }
  bool is_free(CellCoord c) const { return in_bounds(c) && !is_blocked(c); }
  std::size_t index_of(CellCoord c) const {
    return static_cast<std::size_t>(c.y) * width + c.x;
  }
  CellCoord start_for_robot(int robot_id) const {
    return start_cells[robot_id % start_cells.size()];
  }

  bool operator==(const GridMap&) const = default;
};

// Map file format: one row per line, equal lengths. '.' free, '#' blocked,
// digits 0-9 waypoints in cyclic order, letters a-z robot start cells.
GridMap parse_map(const std::string& text);

// Inverse of parse_map up to waypoint/start relabeling (0..k, a..z in order).
std::string serialize_map(const GridMap& grid);

// In-bounds free cells of the 8-neighborhood with their transition costs
// (1 orthogonal, sqrt(2) diagonal). c must be a free cell.
std::vector<std::pair<CellCoord, double>> neighbors(const GridMap& grid, CellCoord c);

}  // namespace lipatrol
