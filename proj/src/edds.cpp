#include "famsched/edds.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace famsched {

bool edd_before(const Instance& instance, JobId a, JobId b) {
  const Deadline& da = instance.job(a).deadline;
  const Deadline& db = instance.job(b).deadline;
  if (da != db) return da < db;
  return a < b;
}

std::vector<EddChain> edd_chains(const Instance& instance, std::span<const JobId> jobs) {
  std::map<TypeId, std::vector<JobId>> by_type;
  for (JobId j : jobs) by_type[instance.type_of(j)].push_back(j);
  std::vector<EddChain> chains;
  chains.reserve(by_type.size());
  for (auto& [type, members] : by_type) {
    std::sort(members.begin(), members.end(), [&](JobId a, JobId b) { return edd_before(instance, a, b); });
    chains.push_back({type, std::move(members)});
  }
  return chains;
}

std::vector<EddChain> edd_chains(const Instance& instance) {
  const Schedule all = Schedule::identity(instance.size());
  return edd_chains(instance, all.jobs());
}

std::size_t type_inversions(const Instance& instance, std::span<const JobId> order) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Job& a = instance.job(order[i]);
    for (std::size_t k = i + 1; k < order.size(); ++k) {
      const Job& b = instance.job(order[k]);
      if (a.type == b.type && b.deadline < a.deadline) ++count;
    }
  }
  return count;
}

Schedule start_dd(const Instance& instance) {
  Schedule s = Schedule::identity(instance.size());
  std::vector<JobId>& order = s.mutable_order();
  std::sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    const Job& ja = instance.job(a);
    const Job& jb = instance.job(b);
    if (ja.deadline != jb.deadline) return ja.deadline < jb.deadline;
    if (ja.type != jb.type) return ja.type < jb.type;
    return a < b;
  });
  return s;
}

Schedule block_schedule(const Instance& instance, std::span<const TypeId> type_order) {
  const std::vector<EddChain> chains = edd_chains(instance);
  std::vector<JobId> order;
  order.reserve(instance.size());
  for (TypeId t : type_order) {
    auto it = std::find_if(chains.begin(), chains.end(), [t](const EddChain& c) { return c.type == t; });
    if (it == chains.end()) throw InputError("block order names type " + std::to_string(t) + " with no jobs");
    order.insert(order.end(), it->jobs.begin(), it->jobs.end());
  }
  Schedule s(std::move(order));
  check_schedule(instance, s);
  return s;
}

namespace {

// Partial evaluation of a block prefix. For SM only `setup` is used.
struct BlockState {
  Time now = 0;
  Time tardiness = 0;
  Time setup = 0;
  TypeId last = -1;
};

using BlockKey = std::function<Objective(const BlockState&)>;

// Depth-first enumeration of block orders in lexicographic type order; keeps
// the first order whose key is strictly smaller. Keys never decrease along a
// prefix, so a prefix that already ties the incumbent is cut.
std::vector<TypeId> best_block_order(const Instance& instance, const BlockKey& key) {
  const std::vector<EddChain> chains = edd_chains(instance);
  if (static_cast<int>(chains.size()) > kMaxBlockTypes) {
    throw CapacityError("block-order enumeration supports at most " + std::to_string(kMaxBlockTypes) +
                        " occurring types, instance has " + std::to_string(chains.size()));
  }
  const std::size_t m = chains.size();
  std::vector<char> used(m, 0);
  std::vector<TypeId> current;
  std::vector<TypeId> best;
  std::optional<Objective> best_key;

  std::function<void(const BlockState&)> dfs = [&](const BlockState& state) {
    const Objective k = key(state);
    if (best_key && !(k < *best_key)) return;
    if (current.size() == m) {
      best_key = k;
      best = current;
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      BlockState next = state;
      const TypeId type = chains[c].type;
      if (next.last >= 0) {
        const Time s = instance.setup(next.last, type);
        next.setup += s;
        next.now += s;
      }
      for (JobId j : chains[c].jobs) {
        const Job& job = instance.job(j);
        next.now += job.processing_time;
        next.tardiness += job.deadline.tardiness(next.now);
      }
      next.last = type;
      used[c] = 1;
      current.push_back(type);
      dfs(next);
      current.pop_back();
      used[c] = 0;
    }
  };
  dfs(BlockState{});
  return best;
}

}  // namespace

Schedule start_sm(const Instance& instance) {
  const auto order = best_block_order(instance, [](const BlockState& s) { return Objective{0, s.setup}; });
  return block_schedule(instance, order);
}

Schedule start_tm(const Instance& instance) {
  const auto order = best_block_order(instance, [](const BlockState& s) { return Objective{s.tardiness, s.now}; });
  return block_schedule(instance, order);
}

}  // namespace famsched
