#include "lipatrol/default_map.hpp"

namespace lipatrol {

// Hand-authored office-like floor plan at ~2 cm per cell: four rooms off a
// central corridor, a cyclic 4-waypoint patrol route (~75 movement steps per
// lap), and six labeled start positions.
const std::string& default_office_map_text() {
  static const std::string text =
    "########################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.....................................................................0.................................................................................................................................................................................................................................########..................................................................................................................................................................................................................................1....................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########................................................................................................................................................................................#################################################################################......................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#########################################################################################################..............................##########################################################################################################################################################################################################################################################################################################################################..............................#########################################################################################################\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#...................................................................................................................................................................................b...............................................................................................................................................................................................................................................d..................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#...........................................................a...............................................................................................................................................................................................................................................................................................................................................................................................................................................................................................e..........................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#...........................................................................................................................................................................................................................................................................................................c..........................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#...............................................................................................................................................................................................................................................f......................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#......................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................................#\n"
    "#########################################################################################################..............................##########################################################################################################################################################################################################################################################################################################################################..............................#########################################################################################################\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########....................................#############################################################......................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.........................................................................................................................................................................#############################################################.................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.....................................................................3.................................................................................................................................................................................................................................########..................................................................................................................................................................................................................................2....................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................#######################################################################.........................................................................................................................................................................................########..............................................#######################################################################..................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "#.......................................................................................................................................................................................................................................................................................................########.......................................................................................................................................................................................................................................................................................................#\n"
    "########################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################################\n";
  return text;
}

std::shared_ptr<const GridMap> default_office_map() {
  static const std::shared_ptr<const GridMap> map =
      std::make_shared<const GridMap>(parse_map(default_office_map_text()));
  return map;
}

}  // namespace lipatrol
