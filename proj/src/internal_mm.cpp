#include "famsched/internal_mm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace famsched {

SuffixProfile::SuffixProfile(const Instance& instance, std::span<const JobId> jobs) {
  if (jobs.empty()) return;
  empty_ = false;
  first_type_ = instance.type_of(jobs.front());
  Time rel = 0;
  TypeId prev = -1;
  for (JobId j : jobs) {
    const Job& job = instance.job(j);
    if (prev >= 0) rel += instance.setup(prev, job.type);
    rel += job.processing_time;
    prev = job.type;
    if (!job.deadline.is_infinite()) slack_.push_back(job.deadline.value() - rel);
  }
  length_ = rel;
  std::sort(slack_.begin(), slack_.end());
  prefix_.resize(slack_.size() + 1, 0);
  std::partial_sum(slack_.begin(), slack_.end(), prefix_.begin() + 1);
}

Time SuffixProfile::tardiness_if_started_at(Time start) const {
  // A job is late iff its slack is below the start time.
  const auto late = static_cast<std::size_t>(std::lower_bound(slack_.begin(), slack_.end(), start) - slack_.begin());
  return static_cast<Time>(late) * start - prefix_[late];
}

WindowDp::WindowDp(const Instance& instance, std::span<const JobId> window_jobs)
    : instance_(&instance), window_size_(window_jobs.size()) {
  std::vector<EddChain> chains = edd_chains(instance, window_jobs);
  types_.reserve(chains.size());
  for (EddChain& c : chains) {
    types_.push_back(c.type);
    chains_.push_back(std::move(c.jobs));
  }
  stride_.resize(types_.size());
  radix_.resize(types_.size());
  for (std::size_t t = 0; t < types_.size(); ++t) {
    stride_[t] = prefix_count_;
    radix_[t] = chains_[t].size() + 1;
    prefix_count_ *= radix_[t];
  }
}

int WindowDp::local_index(TypeId type) const {
  auto it = std::lower_bound(types_.begin(), types_.end(), type);
  if (it == types_.end() || *it != type) return -1;
  return static_cast<int>(it - types_.begin());
}

void WindowDp::commit(std::size_t cell_index) {
  Range& r = cells_[cell_index];
  r.begin = static_cast<std::uint32_t>(pool_.size());
  if (scratch_.size() <= 1) {
    pool_.insert(pool_.end(), scratch_.begin(), scratch_.end());
    r.count = static_cast<std::uint32_t>(scratch_.size());
    return;
  }
  scratch_order_.resize(scratch_.size());
  std::iota(scratch_order_.begin(), scratch_order_.end(), 0u);
  std::sort(scratch_order_.begin(), scratch_order_.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Label& la = scratch_[a];
    const Label& lb = scratch_[b];
    if (la.time != lb.time) return la.time < lb.time;
    if (la.tardiness != lb.tardiness) return la.tardiness < lb.tardiness;
    return a < b;
  });
  std::uint32_t kept = 0;
  for (std::uint32_t i : scratch_order_) {
    const Label& l = scratch_[i];
    if (kept > 0 && l.tardiness >= pool_.back().tardiness) continue;
    pool_.push_back(l);
    ++kept;
  }
  r.count = kept;
}

void WindowDp::solve(TypeId start_type, std::span<const Seed> seeds) {
  const std::size_t m = types_.size();
  cells_.assign(prefix_count_ * m, Range{});
  pool_.clear();
  cells_filled_ = 0;
  const int start = local_index(start_type);
  if (start < 0 || seeds.empty()) return;

  scratch_.clear();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    scratch_.push_back({seeds[i].tardiness, seeds[i].time, -1, static_cast<std::int32_t>(i)});
  }
  commit(cell(0, static_cast<std::size_t>(start)));

  std::vector<std::size_t> digits(m, 0);
  for (std::size_t idx = 1; idx < prefix_count_; ++idx) {
    for (std::size_t d = 0; d < m; ++d) {
      if (++digits[d] < radix_[d]) break;
      digits[d] = 0;
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (digits[t] == 0) continue;
      ++cells_filled_;
      const std::size_t pred = idx - stride_[t];
      // The first window job must have the start type.
      if (pred == 0 && t != static_cast<std::size_t>(start)) continue;
      const Job& job = instance_->job(chains_[t][digits[t] - 1]);
      scratch_.clear();
      for (std::size_t from = 0; from < m; ++from) {
        const Range r = cells_[cell(pred, from)];
        if (r.count == 0) continue;
        const Time setup = instance_->setup(types_[from], types_[t]);
        for (std::uint32_t li = 0; li < r.count; ++li) {
          const Label& prev = pool_[r.begin + li];
          const Time done = prev.time + setup + job.processing_time;
          scratch_.push_back({prev.tardiness + job.deadline.tardiness(done), done, static_cast<std::int32_t>(from),
                              static_cast<std::int32_t>(li)});
        }
      }
      if (!scratch_.empty()) commit(cell(idx, t));
    }
  }
}

std::span<const WindowDp::Label> WindowDp::final_frontier(TypeId end_type) const {
  const int t = local_index(end_type);
  if (t < 0 || cells_.empty()) return {};
  const Range r = cells_[cell(prefix_count_ - 1, static_cast<std::size_t>(t))];
  return std::span<const Label>(pool_).subspan(r.begin, r.count);
}

std::vector<JobId> WindowDp::traceback(TypeId end_type, std::size_t label, std::size_t* seed) const {
  std::vector<JobId> reversed;
  reversed.reserve(window_size_);
  std::size_t idx = prefix_count_ - 1;
  auto t = static_cast<std::size_t>(local_index(end_type));
  std::size_t li = label;
  while (idx != 0) {
    const std::size_t p = (idx / stride_[t]) % radix_[t];
    reversed.push_back(chains_[t][p - 1]);
    const Label& l = pool_[cells_[cell(idx, t)].begin + li];
    idx -= stride_[t];
    t = static_cast<std::size_t>(l.pred_type);
    li = static_cast<std::size_t>(l.pred_label);
  }
  if (seed != nullptr) *seed = static_cast<std::size_t>(pool_[cells_[cell(0, t)].begin + li].pred_label);
  return {reversed.rbegin(), reversed.rend()};
}

std::optional<std::pair<std::size_t, Objective>> best_with_suffix(const Instance& instance,
                                                                  std::span<const WindowDp::Label> frontier,
                                                                  TypeId end_type, const SuffixProfile& suffix) {
  std::optional<std::pair<std::size_t, Objective>> best;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const WindowDp::Label& l = frontier[i];
    Objective obj{l.tardiness, l.time};
    if (!suffix.empty()) {
      const Time start = l.time + instance.setup(end_type, suffix.first_type());
      obj.tardiness += suffix.tardiness_if_started_at(start);
      obj.makespan = start + suffix.length();
    }
    if (!best || obj < best->second) best.emplace(i, obj);
  }
  return best;
}

std::optional<InternalMmResult> solve_internal_mm(const Instance& instance, const InternalMmQuery& query) {
  if (query.window_jobs.empty()) return std::nullopt;
  std::unordered_set<JobId> seen;
  for (JobId j : query.window_jobs) {
    if (j < 0 || static_cast<std::size_t>(j) >= instance.size() || !seen.insert(j).second) {
      throw InputError("internal MM: invalid or repeated window job " + std::to_string(j));
    }
  }
  for (JobId j : query.suffix) {
    if (j < 0 || static_cast<std::size_t>(j) >= instance.size() || !seen.insert(j).second) {
      throw InputError("internal MM: suffix job " + std::to_string(j) + " invalid or shared with the window");
    }
  }

  WindowDp dp(instance, query.window_jobs);
  if (!dp.has_type(query.start_type) || !dp.has_type(query.end_type)) return std::nullopt;
  const WindowDp::Seed seed{0, query.theta};
  dp.solve(query.start_type, std::span(&seed, 1));
  const SuffixProfile suffix(instance, query.suffix);
  const auto best = best_with_suffix(instance, dp.final_frontier(query.end_type), query.end_type, suffix);
  if (!best) return std::nullopt;
  return InternalMmResult{best->second, Schedule(dp.traceback(query.end_type, best->first))};
}

}  // namespace famsched
