#pragma once

#include <vector>

#include "sudogen/pi_matrix.hpp"

// Three order-3 pair matrices with overlaps worked out by hand, used as
// frozen expectations in several places.  first_vs_second is empty,
// first_vs_third hits cells (1,1) and (2,3), second_vs_third hits (1,2),
// (3,2) and (3,3).
namespace fixtures {

inline sudogen::PiMatrix first_pi3() {
  return sudogen::PiMatrix::from_cells(3, {{3, 1}, {2, 1}, {1, 2},
                                           {2, 3}, {3, 2}, {1, 1},
                                           {3, 2}, {1, 3}, {2, 3}});
}

inline sudogen::PiMatrix second_pi3() {
  return sudogen::PiMatrix::from_cells(3, {{3, 2}, {1, 3}, {2, 1},
                                           {3, 3}, {1, 1}, {2, 2},
                                           {2, 1}, {1, 2}, {3, 3}});
}

inline sudogen::PiMatrix third_pi3() {
  return sudogen::PiMatrix::from_cells(3, {{3, 1}, {1, 3}, {2, 2},
                                           {2, 2}, {3, 1}, {1, 1},
                                           {2, 3}, {1, 2}, {3, 3}});
}

// 4x4 grid that follows all the rules; handy wherever a known-good filled
// grid is needed
inline std::vector<int> valid_grid4() {
  return {1, 2, 3, 4,
          3, 4, 1, 2,
          2, 1, 4, 3,
          4, 3, 2, 1};
}

}  // namespace fixtures
