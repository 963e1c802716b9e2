#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "famsched/edds.hpp"
#include "famsched/model.hpp"

namespace famsched {

/// Tardiness of a fixed job sequence as a function of the time its first job
/// starts processing. Evaluates in O(log n) after O(n log n) setup.
class SuffixProfile {
 public:
  SuffixProfile() = default;
  SuffixProfile(const Instance& instance, std::span<const JobId> jobs);

  bool empty() const { return empty_; }
  TypeId first_type() const { return first_type_; }
  /// Completion of the last job minus the start of the first.
  Time length() const { return length_; }
  Time tardiness_if_started_at(Time start) const;

 private:
  bool empty_ = true;
  TypeId first_type_ = -1;
  Time length_ = 0;
  std::vector<Time> slack_;   // deadline minus relative completion, ascending
  std::vector<Time> prefix_;  // prefix_[c] = sum of the c smallest slacks
};

/// Best EDDS arrangement of a window's jobs.
///
/// Each type's jobs form a fixed EDD chain; a table cell is a prefix-length
/// vector over those chains plus the type of the last placed job. Instead of a
/// single makespan, each cell stores the Pareto frontier of
/// (tardiness, completion time) so the search stays exact for the
/// lexicographic objective even when some deadline is already missed.
///
/// The empty cell is seeded with start labels (accumulated tardiness, time at
/// which the first window job may start processing), and the first window job
/// is forced to have the requested start type.
class WindowDp {
 public:
  struct Seed {
    Time tardiness = 0;
    Time time = 0;
  };
  struct Label {
    Time tardiness = 0;
    Time time = 0;
    std::int32_t pred_type = -1;   // local type index of the predecessor cell
    std::int32_t pred_label = -1;  // label index in the predecessor cell; seed index in the empty cell
  };

  WindowDp(const Instance& instance, std::span<const JobId> window_jobs);

  /// Occurring types, ascending.
  std::span<const TypeId> types() const { return types_; }
  bool has_type(TypeId type) const { return local_index(type) >= 0; }
  std::size_t window_size() const { return window_size_; }

  void solve(TypeId start_type, std::span<const Seed> seeds);

  /// Frontier of complete arrangements ending with `end_type`, sorted by
  /// ascending completion time (and so by descending tardiness).
  std::span<const Label> final_frontier(TypeId end_type) const;

  /// Window order for a final label, plus the seed it grew from.
  std::vector<JobId> traceback(TypeId end_type, std::size_t label, std::size_t* seed = nullptr) const;

  /// Number of (prefix vector, end type) cells computed by the last solve().
  std::size_t cells_filled() const { return cells_filled_; }
  /// types * prod(chain length + 1).
  std::size_t cell_bound() const { return prefix_count_ * types_.size(); }

 private:
  struct Range {
    std::uint32_t begin = 0;
    std::uint32_t count = 0;
  };

  int local_index(TypeId type) const;
  std::size_t cell(std::size_t prefix_index, std::size_t local_type) const {
    return prefix_index * types_.size() + local_type;
  }
  void commit(std::size_t cell_index);

  const Instance* instance_;
  std::size_t window_size_ = 0;
  std::vector<TypeId> types_;
  std::vector<std::vector<JobId>> chains_;
  std::vector<std::size_t> stride_;
  std::vector<std::size_t> radix_;
  std::size_t prefix_count_ = 1;

  std::vector<Range> cells_;
  std::vector<Label> pool_;
  std::vector<Label> scratch_;
  std::vector<std::uint32_t> scratch_order_;
  std::size_t cells_filled_ = 0;
};

struct InternalMmQuery {
  std::vector<JobId> window_jobs;  // jobs to arrange
  std::vector<JobId> suffix;       // fixed tail scheduled after the window
  TypeId start_type = 0;
  TypeId end_type = 0;
  Time theta = 0;  // time at which the first window job may start processing
};

struct InternalMmResult {
  /// Tardiness of window and suffix jobs; makespan of the whole offset timeline.
  Objective objective;
  Schedule window;
};

/// Best EDDS arrangement of the window starting with start_type and ending with
/// end_type, followed by the suffix. None when the window is empty or lacks
/// either boundary type. Throws InputError if window and suffix share a job.
std::optional<InternalMmResult> solve_internal_mm(const Instance& instance, const InternalMmQuery& query);

/// Best label of a final frontier once the suffix is appended; returns the
/// label index and the resulting objective.
std::optional<std::pair<std::size_t, Objective>> best_with_suffix(const Instance& instance,
                                                                  std::span<const WindowDp::Label> frontier,
                                                                  TypeId end_type, const SuffixProfile& suffix);

}  // namespace famsched
