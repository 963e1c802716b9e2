#include "famsched/model.hpp"

#include <algorithm>
#include <numeric>

namespace famsched {

SetupMatrix::SetupMatrix(int types, std::vector<Time> row_major) : types_(types), cells_(std::move(row_major)) {
  if (types < 0 || cells_.size() != static_cast<std::size_t>(types) * types) {
    throw InputError("setup matrix: expected " + std::to_string(types) + "x" + std::to_string(types) + " cells");
  }
}

SetupMatrix SetupMatrix::from_rows(const std::vector<std::vector<Time>>& rows) {
  const int t = static_cast<int>(rows.size());
  std::vector<Time> cells;
  cells.reserve(static_cast<std::size_t>(t) * t);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != t) throw InputError("setup matrix: ragged rows");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return SetupMatrix(t, std::move(cells));
}

Time SetupMatrix::max_entry() const {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

bool SetupMatrix::is_symmetric() const {
  for (int a = 0; a < types_; ++a) {
    for (int b = a + 1; b < types_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) return false;
    }
  }
  return true;
}

std::string SetupViolation::describe() const {
  switch (kind) {
    case Kind::kNegative:
      return "negative setup time at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::kDiagonal:
      return "non-zero diagonal at (" + std::to_string(a) + "," + std::to_string(a) + ")";
    case Kind::kTriangle:
      return "triangle inequality violated: l(" + std::to_string(a) + "," + std::to_string(c) + ") > l(" +
             std::to_string(a) + "," + std::to_string(b) + ") + l(" + std::to_string(b) + "," + std::to_string(c) +
             ")";
  }
  return {};
}

std::vector<SetupViolation> validate_setup(const SetupMatrix& m) {
  std::vector<SetupViolation> out;
  const int t = m.types();
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t; ++b) {
      if (m(a, b) < 0) out.push_back({SetupViolation::Kind::kNegative, a, b, 0});
    }
  }
  for (int a = 0; a < t; ++a) {
    if (m(a, a) != 0) out.push_back({SetupViolation::Kind::kDiagonal, a, a, 0});
  }
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t; ++b) {
      for (int c = 0; c < t; ++c) {
        if (m(a, c) > m(a, b) + m(b, c)) out.push_back({SetupViolation::Kind::kTriangle, a, b, c});
      }
    }
  }
  return out;
}

Instance::Instance(std::vector<Job> jobs, SetupMatrix setup) : jobs_(std::move(jobs)), setup_(std::move(setup)) {
  if (jobs_.empty()) throw InputError("instance has no jobs");
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    const Job& job = jobs_[j];
    if (job.processing_time < 0) throw InputError("job " + std::to_string(j) + ": negative processing time");
    if (!job.deadline.is_infinite() && job.deadline.value() < 0) {
      throw InputError("job " + std::to_string(j) + ": negative deadline");
    }
    if (job.type < 0 || job.type >= setup_.types()) {
      throw InputError("job " + std::to_string(j) + ": type " + std::to_string(job.type) + " out of range");
    }
  }
}

Time Instance::total_processing_time() const {
  return std::accumulate(jobs_.begin(), jobs_.end(), Time{0},
                         [](Time acc, const Job& j) { return acc + j.processing_time; });
}

Time Instance::max_processing_time() const {
  Time best = 0;
  for (const Job& j : jobs_) best = std::max(best, j.processing_time);
  return best;
}

Schedule Schedule::identity(std::size_t n) {
  std::vector<JobId> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Schedule(std::move(order));
}

Schedule Schedule::reversed() const { return Schedule(std::vector<JobId>(order_.rbegin(), order_.rend())); }

bool Schedule::is_permutation_of(std::size_t n) const {
  if (order_.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (JobId j : order_) {
    if (j < 0 || static_cast<std::size_t>(j) >= n || seen[static_cast<std::size_t>(j)]) return false;
    seen[static_cast<std::size_t>(j)] = 1;
  }
  return true;
}

void check_schedule(const Instance& instance, const Schedule& schedule) {
  if (!schedule.is_permutation_of(instance.size())) {
    throw InputError("schedule is not a permutation of the instance's " + std::to_string(instance.size()) + " jobs");
  }
}

Evaluation evaluate(const Instance& instance, const Schedule& schedule) {
  check_schedule(instance, schedule);
  Evaluation ev;
  ev.completion_times.reserve(schedule.size());
  Time now = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Job& job = instance.job(schedule[i]);
    if (i > 0) now += instance.setup(instance.type_of(schedule[i - 1]), job.type);
    now += job.processing_time;
    ev.completion_times.push_back(now);
    ev.total_tardiness += job.deadline.tardiness(now);
  }
  ev.makespan = now;
  return ev;
}

Objective objective_of(const Instance& instance, std::span<const JobId> order) {
  Objective obj;
  Time now = 0;
  TypeId prev = -1;
  for (JobId j : order) {
    const Job& job = instance.job(j);
    if (prev >= 0) now += instance.setup(prev, job.type);
    now += job.processing_time;
    obj.tardiness += job.deadline.tardiness(now);
    prev = job.type;
  }
  obj.makespan = now;
  return obj;
}

Time total_setup(const Instance& instance, std::span<const JobId> order) {
  Time sum = 0;
  for (std::size_t i = 1; i < order.size(); ++i) sum += instance.setup(instance.type_of(order[i - 1]), instance.type_of(order[i]));
  return sum;
}

}  // namespace famsched
