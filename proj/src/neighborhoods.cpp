#include "famsched/neighborhoods.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "famsched/internal_mm.hpp"

namespace famsched {
namespace {

bool past(const SearchOptions& options) { return options.stop_at && Clock::now() >= *options.stop_at; }

// Completion time and accumulated tardiness after each prefix of `order`.
struct PrefixState {
  std::vector<Time> time;       // time[i]: completion of the first i jobs
  std::vector<Time> tardiness;  // tardiness[i]: tardiness of the first i jobs

  PrefixState(const Instance& instance, std::span<const JobId> order)
      : time(order.size() + 1, 0), tardiness(order.size() + 1, 0) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Job& job = instance.job(order[i]);
      Time t = time[i] + job.processing_time;
      if (i > 0) t += instance.setup(instance.type_of(order[i - 1]), job.type);
      time[i + 1] = t;
      tardiness[i + 1] = tardiness[i] + job.deadline.tardiness(t);
    }
  }
};

// Objective of `order`, reusing the prefix [0, from) shared with the parent.
Objective objective_from(const Instance& instance, std::span<const JobId> order, const PrefixState& parent,
                         std::size_t from) {
  Time now = parent.time[from];
  Time tard = parent.tardiness[from];
  TypeId prev = from > 0 ? instance.type_of(order[from - 1]) : -1;
  for (std::size_t i = from; i < order.size(); ++i) {
    const Job& job = instance.job(order[i]);
    if (prev >= 0) now += instance.setup(prev, job.type);
    now += job.processing_time;
    tard += job.deadline.tardiness(now);
    prev = job.type;
  }
  return {tard, now};
}

struct VectorHash {
  std::size_t operator()(const std::vector<JobId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (JobId x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Calls visit(child, first_changed_position) for every move of one kind;
// visit returns true to stop the enumeration.
using MoveVisitor = std::function<bool(const std::vector<JobId>&, std::size_t)>;
using MoveGenerator = std::function<bool(const std::vector<JobId>&, const MoveVisitor&)>;

bool each_swap(const std::vector<JobId>& base, const MoveVisitor& visit) {
  std::vector<JobId> child = base;
  for (std::size_t a = 0; a + 1 < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      std::swap(child[a], child[b]);
      const bool stop = visit(child, a);
      std::swap(child[a], child[b]);
      if (stop) return true;
    }
  }
  return false;
}

bool each_insert(const std::vector<JobId>& base, const MoveVisitor& visit) {
  const std::size_t n = base.size();
  std::vector<JobId> child = base;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // Moving a to a-1 equals moving a-1 to a; keep one of the pair.
      if (b == a || b + 1 == a) continue;
      if (b > a) {
        std::rotate(child.begin() + static_cast<std::ptrdiff_t>(a), child.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                    child.begin() + static_cast<std::ptrdiff_t>(b) + 1);
      } else {
        std::rotate(child.begin() + static_cast<std::ptrdiff_t>(b), child.begin() + static_cast<std::ptrdiff_t>(a),
                    child.begin() + static_cast<std::ptrdiff_t>(a) + 1);
      }
      const bool stop = visit(child, std::min(a, b));
      std::copy(base.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)),
                base.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)) + 1,
                child.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)));
      if (stop) return true;
    }
  }
  return false;
}

std::optional<Improvement> breadth_first(const Instance& instance, const Schedule& current, int k,
                                         const SearchOptions& options, const MoveGenerator& moves) {
  if (k < 1 || current.size() < 2) return std::nullopt;
  check_schedule(instance, current);
  const Objective incumbent = objective_of(instance, current.jobs());

  std::unordered_set<std::vector<JobId>, VectorHash> seen;
  const bool dedupe = k > 1;
  if (dedupe) seen.insert(current.order());
  std::vector<std::vector<JobId>> level{current.order()};
  std::optional<Improvement> found;
  std::size_t visited = 0;
  bool interrupted = false;

  for (int depth = 1; depth <= k && !level.empty() && !found && !interrupted; ++depth) {
    std::vector<std::vector<JobId>> next;
    for (const auto& parent : level) {
      const PrefixState prefix(instance, parent);
      const bool stop = moves(parent, [&](const std::vector<JobId>& child, std::size_t from) {
        if ((++visited & 1023u) == 0 && past(options)) {
          interrupted = true;
          return true;
        }
        if (dedupe && !seen.insert(child).second) return false;
        const Objective obj = objective_from(instance, child, prefix, from);
        if (obj < incumbent) {
          found = Improvement{Schedule(child), obj};
          return true;
        }
        if (dedupe && depth < k) next.push_back(child);
        return false;
      });
      if (stop) break;
    }
    level = std::move(next);
  }
  return found;
}

}  // namespace

bool scan_single_moves(const Instance& instance, const Schedule& current, SingleMove kind,
                       const std::function<bool(std::span<const JobId>, const Objective&)>& visit) {
  check_schedule(instance, current);
  const PrefixState prefix(instance, current.jobs());
  const MoveVisitor visitor = [&](const std::vector<JobId>& child, std::size_t from) {
    return visit(child, objective_from(instance, child, prefix, from));
  };
  return kind == SingleMove::kSwap ? each_swap(current.order(), visitor) : each_insert(current.order(), visitor);
}

std::optional<Improvement> improve_swap(const Instance& instance, const Schedule& current, int k,
                                        const SearchOptions& options) {
  return breadth_first(instance, current, k, options, each_swap);
}

std::optional<Improvement> improve_insert(const Instance& instance, const Schedule& current, int k,
                                          const SearchOptions& options) {
  return breadth_first(instance, current, k, options, each_insert);
}

std::optional<Improvement> improve_window(const Instance& instance, const Schedule& current, int k,
                                          const SearchOptions& options) {
  check_schedule(instance, current);
  const std::size_t n = current.size();
  const std::size_t width = static_cast<std::size_t>(std::clamp<long>(k, 0, static_cast<long>(n)));
  if (width < 2) return std::nullopt;

  const std::span<const JobId> order = current.jobs();
  const PrefixState prefix(instance, order);
  const Objective incumbent{prefix.tardiness[n], prefix.time[n]};
  std::optional<Improvement> best;

  for (std::size_t i = 0; i + width <= n; ++i) {
    if (past(options)) return std::nullopt;
    // Prefix tardiness is fixed; the window cannot help once it alone is worse.
    if (prefix.tardiness[i] > incumbent.tardiness) break;
    WindowDp dp(instance, order.subspan(i, width));
    const SuffixProfile suffix(instance, order.subspan(i + width));
    for (TypeId first : dp.types()) {
      const Time theta = i == 0 ? 0 : prefix.time[i] + instance.setup(instance.type_of(order[i - 1]), first);
      const WindowDp::Seed seed{prefix.tardiness[i], theta};
      dp.solve(first, std::span(&seed, 1));
      for (TypeId last : dp.types()) {
        const auto hit = best_with_suffix(instance, dp.final_frontier(last), last, suffix);
        if (!hit || !(hit->second < (best ? best->objective : incumbent))) continue;
        std::vector<JobId> next(order.begin(), order.end());
        const std::vector<JobId> window = dp.traceback(last, hit->first);
        std::copy(window.begin(), window.end(), next.begin() + static_cast<std::ptrdiff_t>(i));
        best = Improvement{Schedule(std::move(next)), hit->second};
        if (options.first_improvement) return best;
      }
    }
  }
  return best;
}

std::optional<Improvement> improve_multi_window(const Instance& instance, const Schedule& current, int k,
                                                const SearchOptions& options) {
  check_schedule(instance, current);
  const std::size_t n = current.size();
  const std::size_t width = static_cast<std::size_t>(std::clamp<long>(k, 0, static_cast<long>(n)));
  if (width < 2) return std::nullopt;

  const std::span<const JobId> order = current.jobs();
  const Objective incumbent = objective_of(instance, order);
  const int types = instance.type_count();

  // best[i][type]: Pareto frontier over rearrangements of the first i jobs
  // (blocks of length <= width) whose last job has the given type.
  struct Entry {
    Time tardiness = 0;
    Time time = 0;
    std::size_t prev_end = 0;  // block start; the prefix before it is best[prev_end]
    TypeId prev_type = -1;
    std::size_t prev_entry = 0;
    std::vector<JobId> block;
  };
  std::vector<std::vector<std::vector<Entry>>> best(n + 1, std::vector<std::vector<Entry>>(static_cast<std::size_t>(types)));

  struct SeedOrigin {
    TypeId type;
    std::size_t entry;
  };
  std::vector<WindowDp::Seed> seeds;
  std::vector<SeedOrigin> origins;

  for (std::size_t end = 1; end <= n; ++end) {
    if (past(options)) return std::nullopt;
    std::vector<std::vector<Entry>> candidates(static_cast<std::size_t>(types));
    for (std::size_t begin = end > width ? end - width : 0; begin < end; ++begin) {
      WindowDp dp(instance, order.subspan(begin, end - begin));
      for (TypeId first : dp.types()) {
        seeds.clear();
        origins.clear();
        if (begin == 0) {
          seeds.push_back({0, 0});
          origins.push_back({-1, 0});
        } else {
          for (TypeId t = 0; t < types; ++t) {
            const auto& cell = best[begin][static_cast<std::size_t>(t)];
            for (std::size_t e = 0; e < cell.size(); ++e) {
              seeds.push_back({cell[e].tardiness, cell[e].time + instance.setup(t, first)});
              origins.push_back({t, e});
            }
          }
        }
        if (seeds.empty()) continue;
        dp.solve(first, seeds);
        for (TypeId last : dp.types()) {
          const auto frontier = dp.final_frontier(last);
          for (std::size_t f = 0; f < frontier.size(); ++f) {
            std::size_t seed = 0;
            std::vector<JobId> block = dp.traceback(last, f, &seed);
            candidates[static_cast<std::size_t>(last)].push_back(Entry{frontier[f].tardiness, frontier[f].time, begin,
                                                                       origins[seed].type, origins[seed].entry,
                                                                       std::move(block)});
          }
        }
      }
    }
    for (std::size_t t = 0; t < candidates.size(); ++t) {
      auto& cand = candidates[t];
      std::stable_sort(cand.begin(), cand.end(), [](const Entry& a, const Entry& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.tardiness < b.tardiness;
      });
      auto& cell = best[end][t];
      for (Entry& e : cand) {
        if (!cell.empty() && e.tardiness >= cell.back().tardiness) continue;
        cell.push_back(std::move(e));
      }
    }
  }

  std::optional<std::pair<TypeId, std::size_t>> pick;
  Objective pick_obj = incumbent;
  for (TypeId t = 0; t < types; ++t) {
    const auto& cell = best[n][static_cast<std::size_t>(t)];
    for (std::size_t e = 0; e < cell.size(); ++e) {
      const Objective obj{cell[e].tardiness, cell[e].time};
      if (obj < pick_obj) {
        pick_obj = obj;
        pick.emplace(t, e);
      }
    }
  }
  if (!pick) return std::nullopt;

  std::vector<JobId> next(n);
  std::size_t end = n;
  TypeId t = pick->first;
  std::size_t e = pick->second;
  while (end > 0) {
    const Entry& entry = best[end][static_cast<std::size_t>(t)][e];
    std::copy(entry.block.begin(), entry.block.end(), next.begin() + static_cast<std::ptrdiff_t>(entry.prev_end));
    end = entry.prev_end;
    t = entry.prev_type;
    e = entry.prev_entry;
  }
  return Improvement{Schedule(std::move(next)), pick_obj};
}

}  // namespace famsched
