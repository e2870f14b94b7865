#include "lipatrol/gridmap.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <sstream>

namespace lipatrol {

MapParseError::MapParseError(int line, int column, const std::string& what)
    : std::runtime_error("map parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(current);
  }
  // A trailing blank line (text ending in "\n") is not a map row.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

GridMap parse_map(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw MapParseError(1, 1, "empty map");

  GridMap grid;
  grid.height = static_cast<int>(lines.size());
  grid.width = static_cast<int>(lines[0].size());
  if (grid.width == 0) throw MapParseError(1, 1, "empty first row");
  grid.blocked.assign(static_cast<std::size_t>(grid.width) * grid.height, 0);

  std::array<std::optional<CellCoord>, 10> waypoints_by_label;
  std::array<std::optional<CellCoord>, 26> starts_by_label;

  for (int y = 0; y < grid.height; ++y) {
    const std::string& row = lines[y];
    if (static_cast<int>(row.size()) != grid.width) {
      throw MapParseError(y + 1, static_cast<int>(row.size()) + 1,
                          "row length " + std::to_string(row.size()) +
                              " differs from first row length " +
                              std::to_string(grid.width));
    }
    for (int x = 0; x < grid.width; ++x) {
      const char ch = row[x];
      const CellCoord cell{x, y};
      if (ch == '.') continue;
      if (ch == '#') {
        grid.blocked[grid.index_of(cell)] = 1;
      } else if (ch >= '0' && ch <= '9') {
        auto& slot = waypoints_by_label[ch - '0'];
        if (slot) {
          throw MapParseError(y + 1, x + 1,
                              std::string("duplicate waypoint label '") + ch + "'");
        }
        slot = cell;
      } else if (ch >= 'a' && ch <= 'z') {
        auto& slot = starts_by_label[ch - 'a'];
        if (slot) {
          throw MapParseError(y + 1, x + 1,
                              std::string("duplicate start label '") + ch + "'");
        }
        slot = cell;
      } else {
        throw MapParseError(y + 1, x + 1,
                            std::string("unexpected character '") + ch + "'");
      }
    }
  }

  for (const auto& wp : waypoints_by_label) {
    if (wp) grid.waypoint_cells.push_back(*wp);
  }
  for (const auto& st : starts_by_label) {
    if (st) grid.start_cells.push_back(*st);
  }
  if (grid.waypoint_cells.empty()) throw MapParseError(1, 1, "map has no waypoints");
  return grid;
}

std::string serialize_map(const GridMap& grid) {
  if (grid.width < 1 || grid.height < 1)
    throw std::invalid_argument("serialize_map: grid has no cells");
  if (grid.blocked.size() != static_cast<std::size_t>(grid.width) * grid.height)
    throw std::invalid_argument("serialize_map: cell array size mismatch");
  if (grid.waypoint_cells.empty())
    throw std::invalid_argument("serialize_map: grid has no waypoints");
  if (grid.waypoint_cells.size() > 10)
    throw std::invalid_argument("serialize_map: more than 10 waypoints");
  if (grid.start_cells.size() > 26)
    throw std::invalid_argument("serialize_map: more than 26 start cells");

  std::vector<std::string> rows(grid.height, std::string(grid.width, '.'));
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_blocked({x, y})) rows[y][x] = '#';

  auto place = [&](CellCoord c, char label, const char* what) {
    if (!grid.in_bounds(c))
      throw std::invalid_argument(std::string("serialize_map: ") + what +
                                  " out of bounds");
    if (rows[c.y][c.x] == '#')
      throw std::invalid_argument(std::string("serialize_map: ") + what +
                                  " on a blocked cell");
    if (rows[c.y][c.x] != '.')
      throw std::invalid_argument(std::string("serialize_map: ") + what +
                                  " collides with another labeled cell");
    rows[c.y][c.x] = label;
  };
  for (std::size_t i = 0; i < grid.waypoint_cells.size(); ++i)
    place(grid.waypoint_cells[i], static_cast<char>('0' + i), "waypoint");
  for (std::size_t i = 0; i < grid.start_cells.size(); ++i)
    place(grid.start_cells[i], static_cast<char>('a' + i), "start cell");

  std::string out;
  out.reserve((grid.width + 1) * grid.height);
  for (const auto& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::vector<std::pair<CellCoord, double>> neighbors(const GridMap& grid, CellCoord c) {
  if (!grid.in_bounds(c))
    throw std::invalid_argument("neighbors: cell out of bounds");
  if (grid.is_blocked(c))
    throw std::invalid_argument("neighbors: cell is blocked");

  std::vector<std::pair<CellCoord, double>> out;
  out.reserve(8);
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const CellCoord n{c.x + dx, c.y + dy};
      if (!grid.is_free(n)) continue;
      out.emplace_back(n, (dx != 0 && dy != 0) ? kDiagonalCost : kOrthogonalCost);
    }
  }
  return out;
}

}  // namespace lipatrol
