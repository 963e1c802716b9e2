#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace famsched {

using Time = std::int64_t;
using JobId = int;
using TypeId = int;

/// Raised for malformed caller input (bad permutation, bad type id, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine is asked to go beyond its size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A job deadline; either a finite time or explicitly infinite.
class Deadline {
 public:
  constexpr Deadline() = default;  // infinite
  static constexpr Deadline infinite() { return Deadline{}; }
  static constexpr Deadline at(Time t) {
    Deadline d;
    d.value_ = t;
    return d;
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr Time value() const { return *value_; }

  /// Lateness contribution of a job completing at `completion`.
  constexpr Time tardiness(Time completion) const {
    if (!value_ || completion <= *value_) return 0;
    return completion - *value_;
  }

  // Finite deadlines order before infinite ones.
  friend constexpr std::strong_ordering operator<=>(const Deadline& a, const Deadline& b) {
    if (a.is_infinite() != b.is_infinite()) {
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a.is_infinite()) return std::strong_ordering::equal;
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Deadline&, const Deadline&) = default;

 private:
  std::optional<Time> value_;
};

struct Job {
  Time processing_time = 0;
  Deadline deadline;
  TypeId type = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

/// Square matrix of family setup times; cell (a, b) is the changeover from a to b.
class SetupMatrix {
 public:
  SetupMatrix() = default;
  explicit SetupMatrix(int types) : types_(types), cells_(static_cast<std::size_t>(types) * types, 0) {}
  SetupMatrix(int types, std::vector<Time> row_major);
  static SetupMatrix from_rows(const std::vector<std::vector<Time>>& rows);

  int types() const { return types_; }
  Time operator()(TypeId from, TypeId to) const { return cells_[static_cast<std::size_t>(from) * types_ + to]; }
  Time& at(TypeId from, TypeId to) { return cells_[static_cast<std::size_t>(from) * types_ + to]; }
  Time max_entry() const;
  bool is_symmetric() const;

  friend bool operator==(const SetupMatrix&, const SetupMatrix&) = default;

 private:
  int types_ = 0;
  std::vector<Time> cells_;
};

struct SetupViolation {
  enum class Kind { kNegative, kDiagonal, kTriangle };
  Kind kind;
  // kDiagonal/kNegative use (a, b); kTriangle reports cell(a,c) > cell(a,b) + cell(b,c).
  TypeId a = 0;
  TypeId b = 0;
  TypeId c = 0;

  std::string describe() const;
  friend bool operator==(const SetupViolation&, const SetupViolation&) = default;
};

/// Every violated diagonal / triangle constraint; empty iff the matrix is usable.
/// Asymmetry is not a violation.
std::vector<SetupViolation> validate_setup(const SetupMatrix& matrix);

class Instance {
 public:
  /// Throws InputError on an empty job list, a negative processing time or a bad type id.
  Instance(std::vector<Job> jobs, SetupMatrix setup);

  std::size_t size() const { return jobs_.size(); }
  const Job& job(JobId j) const { return jobs_[static_cast<std::size_t>(j)]; }
  std::span<const Job> jobs() const { return jobs_; }
  const SetupMatrix& setup() const { return setup_; }
  int type_count() const { return setup_.types(); }

  TypeId type_of(JobId j) const { return jobs_[static_cast<std::size_t>(j)].type; }
  Time setup(TypeId from, TypeId to) const { return setup_(from, to); }

  Time total_processing_time() const;
  Time max_processing_time() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Job> jobs_;
  SetupMatrix setup_;
};

/// A schedule: position -> job id.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<JobId> order) : order_(std::move(order)) {}
  static Schedule identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  JobId operator[](std::size_t pos) const { return order_[pos]; }
  std::span<const JobId> jobs() const { return order_; }
  const std::vector<JobId>& order() const { return order_; }
  std::vector<JobId>& mutable_order() { return order_; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  Schedule reversed() const;
  /// True iff the order is a bijection on [0, n).
  bool is_permutation_of(std::size_t n) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
  friend auto operator<=>(const Schedule&, const Schedule&) = default;

 private:
  std::vector<JobId> order_;
};

/// Tardiness is the primary criterion, makespan breaks ties.
struct Objective {
  Time tardiness = 0;
  Time makespan = 0;

  friend constexpr auto operator<=>(const Objective&, const Objective&) = default;
};

inline std::strong_ordering compare(const Objective& a, const Objective& b) { return a <=> b; }

struct Evaluation {
  std::vector<Time> completion_times;
  Time makespan = 0;
  Time total_tardiness = 0;

  Objective objective() const { return {total_tardiness, makespan}; }
};

/// Completion times, makespan and total tardiness of `schedule`. Throws InputError
/// unless `schedule` permutes the instance's jobs.
Evaluation evaluate(const Instance& instance, const Schedule& schedule);

/// Objective of a job sequence without permutation checks; the hot-path form of evaluate().
Objective objective_of(const Instance& instance, std::span<const JobId> order);

inline bool is_feasible(const Evaluation& evaluation) { return evaluation.total_tardiness == 0; }

/// Sum of the changeover times along the sequence.
Time total_setup(const Instance& instance, std::span<const JobId> order);

/// Throws InputError unless `schedule` is a permutation of the instance's jobs.
void check_schedule(const Instance& instance, const Schedule& schedule);

}  // namespace famsched
