#pragma once

#include "famsched/model.hpp"

namespace famsched {

// Distances between two schedules over the same job set. All of them throw
// InputError when `a` and `b` do not permute the same jobs, and return 0 iff
// the schedules are equal.

/// Length of the smallest contiguous position range outside which a and b agree.
int window_distance(const Schedule& a, const Schedule& b);

/// Smallest k such that a and b split into aligned blocks of length <= k with
/// equal job sets in each block.
int multi_window_distance(const Schedule& a, const Schedule& b);

/// Minimum number of transpositions turning a into b.
int swap_distance(const Schedule& a, const Schedule& b);

/// Minimum number of remove-and-reinsert moves turning a into b.
int insert_distance(const Schedule& a, const Schedule& b);

}  // namespace famsched
