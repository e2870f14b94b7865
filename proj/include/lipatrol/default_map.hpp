#pragma once

#include <memory>
#include <string>

#include "lipatrol/gridmap.hpp"

namespace lipatrol {

// Bundled office floor plan used when no map file is given: 4 waypoints on a
// cyclic route, 6 start positions. Also shipped as maps/office_default.map.
const std::string& default_office_map_text();
std::shared_ptr<const GridMap> default_office_map();

}  // namespace lipatrol
