#pragma once

#include <vector>

#include "famsched/model.hpp"

namespace famsched {

/// The jobs of one type in earliest-due-date order.
struct EddChain {
  TypeId type = 0;
  std::vector<JobId> jobs;

  friend bool operator==(const EddChain&, const EddChain&) = default;
};

/// Total order used for every deadline sort: deadline (infinite last), then job id.
bool edd_before(const Instance& instance, JobId a, JobId b);

/// One chain per occurring type, in ascending type order.
std::vector<EddChain> edd_chains(const Instance& instance);

/// Same, restricted to the given jobs.
std::vector<EddChain> edd_chains(const Instance& instance, std::span<const JobId> jobs);

/// Number of same-type pairs scheduled with the strictly later deadline first.
std::size_t type_inversions(const Instance& instance, std::span<const JobId> order);

inline bool is_edds(const Instance& instance, std::span<const JobId> order) {
  return type_inversions(instance, order) == 0;
}

/// DD: all jobs sorted by deadline, ties by type id then job id.
Schedule start_dd(const Instance& instance);

/// Largest number of occurring types the block-order enumeration accepts.
inline constexpr int kMaxBlockTypes = 10;

/// SM: jobs grouped into EDD blocks per type, block order minimising the total
/// setup. Ties go to the lexicographically smallest type sequence. Throws
/// CapacityError beyond kMaxBlockTypes occurring types.
Schedule start_sm(const Instance& instance);

/// TM: like SM, but the block order minimises (tardiness, makespan).
Schedule start_tm(const Instance& instance);

/// Concatenation of the EDD blocks in the given type order.
Schedule block_schedule(const Instance& instance, std::span<const TypeId> type_order);

}  // namespace famsched
