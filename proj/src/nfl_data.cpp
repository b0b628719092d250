#include "bemwe/dataset.hpp"

namespace bemwe {

// Game times to the first field goal (X1) and first touchdown (X2) from the
// 1986 American Football League weekends, mmss-encoded (2:05 stored as 205).
// Rows where both times coincide are converted touchdowns; (1040, 1025) and
// (1965, 1070) are the only rows with X1 > X2.
const std::array<std::array<double, 2>, 42>& nfl_raw_rows() {
  static const std::array<std::array<double, 2>, 42> rows = {{
      {205, 398},   {853, 1457},  {290, 290},   {138, 138},
      {905, 905},   {3113, 4988}, {702, 702},   {1053, 1053},
      {85, 85},     {1458, 2057}, {642, 642},   {1213, 1213},
      {343, 343},   {578, 2598},  {898, 898},   {1458, 1458},
      {778, 778},   {1380, 4975}, {1015, 1015}, {1182, 1182},
      {1057, 1428}, {725, 725},   {887, 887},   {552, 1127},
      {705, 705},   {425, 425},   {1040, 1025}, {1965, 1070},
      {258, 258},   {165, 165},   {298, 298},   {1783, 1783},
      {723, 968},   {642, 1508},  {388, 643},   {1085, 3807},
      {685, 3458},  {422, 948},   {75, 75},
      {3245, 4235}, {1553, 1553}, {1163, 1737},
  }};
  return rows;
}

}  // namespace bemwe
