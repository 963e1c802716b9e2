#pragma once

#include <vector>

#include "famsched/model.hpp"

namespace famsched::fixtures {

// Four unit jobs of types 1, 2, 3, 1 (0-based: 0, 1, 2, 0), unit setups, no deadlines.
inline Instance toy() {
  SetupMatrix setup(3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) setup.at(a, b) = a == b ? 0 : 1;
  }
  std::vector<Job> jobs{{1, Deadline::infinite(), 0},
                        {1, Deadline::infinite(), 1},
                        {1, Deadline::infinite(), 2},
                        {1, Deadline::infinite(), 0}};
  return Instance(std::move(jobs), std::move(setup));
}

// Jobs 1..8 of the distance illustration, as 0-based ids.
inline Schedule one_based(std::vector<int> ids) {
  for (int& id : ids) --id;
  return Schedule(std::move(ids));
}

inline Schedule sample_pi() { return one_based({1, 2, 3, 4, 5, 6, 7, 8}); }
inline Schedule sample_insert() { return one_based({1, 2, 6, 3, 4, 5, 7, 8}); }
inline Schedule sample_swap() { return one_based({1, 7, 3, 8, 6, 5, 2, 4}); }
inline Schedule sample_window() { return one_based({1, 2, 4, 6, 5, 3, 7, 8}); }
inline Schedule sample_multi_window() { return one_based({1, 4, 2, 3, 7, 6, 5, 8}); }

}  // namespace famsched::fixtures
