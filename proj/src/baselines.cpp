#include "famsched/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "famsched/edds.hpp"
#include "famsched/neighborhoods.hpp"

namespace famsched {
namespace {

std::size_t uniform_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

double uniform_unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

void check_budget(const Budget& budget) {
  if (!budget.time_limit && !budget.max_iterations) throw InputError("budget needs a time or an iteration limit");
}

// Tracks elapsed time and the stopping rule of a run.
class Stopwatch {
 public:
  explicit Stopwatch(const Budget& budget) : budget_(budget), t0_(Clock::now()) { check_budget(budget); }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0_).count(); }

  std::optional<Termination> reached(std::uint64_t iterations) const {
    if (budget_.max_iterations && iterations >= *budget_.max_iterations) return Termination::kIterationLimit;
    if (budget_.time_limit && elapsed() >= budget_.time_limit->count()) return Termination::kTimeLimit;
    return std::nullopt;
  }

 private:
  Budget budget_;
  Clock::time_point t0_;
};

}  // namespace

bool NdArchive::accepts(const Objective& objective) const {
  return std::none_of(entries_.begin(), entries_.end(), [&](const ArchiveEntry& e) {
    return e.objective == objective || dominates(e.objective, objective);
  });
}

bool NdArchive::offer(Schedule schedule, const Objective& objective) {
  if (!accepts(objective)) return false;
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(objective, e.objective); });
  entries_.push_back({std::move(schedule), objective});
  return true;
}

const ArchiveEntry& NdArchive::best() const {
  return *std::min_element(entries_.begin(), entries_.end(),
                           [](const ArchiveEntry& a, const ArchiveEntry& b) { return a.objective < b.objective; });
}

bool NdArchive::is_consistent() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (i == j) continue;
      if (dominates(entries_[i].objective, entries_[j].objective)) return false;
      if (entries_[i].objective == entries_[j].objective) return false;
    }
  }
  return true;
}

RunReport run_pils1(const Instance& instance, const Schedule& start, const Pils1Options& options) {
  check_schedule(instance, start);
  const Stopwatch clock(options.budget);
  Rng rng(options.seed);
  const std::size_t n = instance.size();

  NdArchive archive;
  archive.offer(start, objective_of(instance, start.jobs()));

  RunReport report;
  report.best = start;
  report.objective = archive.best().objective;

  constexpr int kInitialLength = 4;
  int p = kInitialLength;
  std::optional<Schedule> candidate;

  while (true) {
    if (auto stop = clock.reached(report.iterations)) {
      report.termination = *stop;
      break;
    }
    ++report.iterations;
    if (options.on_iteration) options.on_iteration(report.iterations, p);

    const Schedule base = candidate ? std::move(*candidate) : archive.entries()[uniform_index(rng, archive.size())].schedule;
    candidate.reset();

    std::optional<std::pair<std::vector<JobId>, Objective>> found;
    auto probe = [&](std::span<const JobId> child, const Objective& obj) {
      if (!archive.accepts(obj)) return false;
      found.emplace(std::vector<JobId>(child.begin(), child.end()), obj);
      return true;
    };
    if (!scan_single_moves(instance, base, SingleMove::kSwap, probe)) {
      scan_single_moves(instance, base, SingleMove::kInsert, probe);
    }

    if (found) {
      archive.offer(Schedule(std::move(found->first)), found->second);
      if (options.on_insert) options.on_insert(archive);
      p = kInitialLength;
      const ArchiveEntry& best = archive.best();
      if (best.objective < report.objective) {
        report.best = best.schedule;
        report.objective = best.objective;
        report.trajectory.push_back({clock.elapsed(), report.iterations, 0, Move::kSwap, report.objective});
      }
      continue;
    }

    // Perturb: reverse p consecutive jobs of a random archive member.
    std::vector<JobId> order = archive.entries()[uniform_index(rng, archive.size())].schedule.order();
    const std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(p), n);
    const std::size_t from = uniform_index(rng, n - len + 1);
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(from),
                 order.begin() + static_cast<std::ptrdiff_t>(from + len));
    candidate = Schedule(std::move(order));
    ++p;
  }
  report.wall_seconds = clock.elapsed();
  return report;
}

Fitness::Fitness(const Instance& instance)
    : mu_(static_cast<Time>(instance.size()) * (instance.max_processing_time() + instance.setup().max_entry()) + 1) {}

Schedule random_edds(const Instance& instance, Rng& rng) {
  const std::vector<EddChain> chains = edd_chains(instance);
  std::vector<std::size_t> taken(chains.size(), 0);
  std::size_t remaining = instance.size();
  std::vector<JobId> order;
  order.reserve(remaining);
  // Picking a chain with probability proportional to its remaining length
  // yields every interleaving with equal probability.
  while (remaining > 0) {
    std::size_t ticket = uniform_index(rng, remaining);
    std::size_t c = 0;
    while (ticket >= chains[c].jobs.size() - taken[c]) {
      ticket -= chains[c].jobs.size() - taken[c];
      ++c;
    }
    order.push_back(chains[c].jobs[taken[c]++]);
    --remaining;
  }
  return Schedule(std::move(order));
}

std::vector<JobId> order_crossover(std::span<const JobId> a, std::span<const JobId> b, std::size_t cut_begin,
                                   std::size_t cut_end) {
  const std::size_t n = a.size();
  std::vector<JobId> child(n, -1);
  std::vector<char> used(n, 0);
  for (std::size_t i = cut_begin; i < cut_end; ++i) {
    child[i] = a[i];
    used[static_cast<std::size_t>(a[i])] = 1;
  }
  std::size_t pos = 0;
  for (JobId g : b) {
    if (used[static_cast<std::size_t>(g)]) continue;
    while (pos >= cut_begin && pos < cut_end) ++pos;
    child[pos++] = g;
  }
  return child;
}

std::vector<TypeId> type_crossover(std::span<const TypeId> a, std::span<const TypeId> b,
                                   std::span<const TypeId> subset) {
  auto in_subset = [&](TypeId t) { return std::find(subset.begin(), subset.end(), t) != subset.end(); };
  std::vector<TypeId> child(b.size(), -1);
  std::size_t from_a = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (in_subset(b[i])) {
      child[i] = b[i];
      continue;
    }
    while (from_a < a.size() && in_subset(a[from_a])) ++from_a;
    child[i] = a[from_a++];
  }
  return child;
}

Schedule decode_types(const Instance& instance, std::span<const TypeId> genes) {
  const std::vector<EddChain> chains = edd_chains(instance);
  std::vector<std::size_t> next(chains.size(), 0);
  std::vector<JobId> order;
  order.reserve(genes.size());
  for (TypeId t : genes) {
    auto it = std::find_if(chains.begin(), chains.end(), [t](const EddChain& c) { return c.type == t; });
    const auto c = static_cast<std::size_t>(it - chains.begin());
    if (it == chains.end() || next[c] >= it->jobs.size()) throw InputError("type sequence does not match the instance");
    order.push_back(it->jobs[next[c]++]);
  }
  Schedule s(std::move(order));
  check_schedule(instance, s);
  return s;
}

namespace {

using Genome = std::vector<int>;

struct GaOperators {
  std::function<Genome(Rng&)> random;
  std::function<Genome(const Genome&, const Genome&, Rng&)> crossover;
  std::function<void(Genome&, Rng&)> mutate;
  std::function<Schedule(const Genome&)> decode;
};

RunReport run_ga(const Instance& instance, const GaConfig& config, const GaOperators& ops) {
  if (config.population < 2) throw InputError("population must be at least 2");
  for (double prob : {config.crossover_probability, config.mutation_probability, config.selection_rate}) {
    if (!(prob >= 0.0 && prob <= 1.0)) throw InputError("GA probabilities must lie in [0, 1]");
  }
  const Stopwatch clock(config.budget);
  Rng rng(config.seed);
  const Fitness fitness(instance);
  const auto size = static_cast<std::size_t>(config.population);
  const std::size_t parents = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(config.selection_rate * static_cast<double>(size))), 2, size);

  struct Member {
    Genome genome;
    Schedule schedule;
    Objective objective;
    Time score = 0;
  };
  auto make = [&](Genome g) {
    Schedule s = ops.decode(g);
    const Objective obj = objective_of(instance, s.jobs());
    return Member{std::move(g), std::move(s), obj, fitness(obj)};
  };
  auto by_score = [](const Member& a, const Member& b) { return a.score < b.score; };

  std::vector<Member> population;
  population.reserve(size);
  for (std::size_t i = 0; i < size; ++i) population.push_back(make(ops.random(rng)));
  std::stable_sort(population.begin(), population.end(), by_score);

  auto notify = [&](std::uint64_t generation) {
    if (!config.on_generation) return;
    std::vector<Schedule> schedules;
    schedules.reserve(population.size());
    for (const Member& m : population) schedules.push_back(m.schedule);
    config.on_generation(generation, schedules);
  };

  RunReport report;
  report.best = population.front().schedule;
  report.objective = population.front().objective;
  notify(0);

  while (true) {
    if (auto stop = clock.reached(report.iterations)) {
      report.termination = *stop;
      break;
    }
    ++report.iterations;
    // population is sorted by score, so the parents are its head.
    std::vector<Member> offspring;
    offspring.reserve(size);
    for (std::size_t c = 0; c < size; ++c) {
      const Genome& a = population[uniform_index(rng, parents)].genome;
      const Genome& b = population[uniform_index(rng, parents)].genome;
      Genome child = uniform_unit(rng) < config.crossover_probability ? ops.crossover(a, b, rng) : a;
      if (uniform_unit(rng) < config.mutation_probability) ops.mutate(child, rng);
      offspring.push_back(make(std::move(child)));
    }
    std::stable_sort(offspring.begin(), offspring.end(), by_score);
    offspring.pop_back();
    offspring.insert(offspring.begin(), population.front());
    population = std::move(offspring);
    std::stable_sort(population.begin(), population.end(), by_score);

    if (population.front().objective < report.objective) {
      report.best = population.front().schedule;
      report.objective = population.front().objective;
      report.trajectory.push_back({clock.elapsed(), report.iterations, 0, Move::kGeneration, report.objective});
    }
    notify(report.iterations);
  }
  report.wall_seconds = clock.elapsed();
  return report;
}

}  // namespace

RunReport run_gad(const Instance& instance, const GaConfig& config) {
  const std::size_t n = instance.size();
  GaOperators ops;
  ops.random = [&](Rng& rng) { return random_edds(instance, rng).order(); };
  ops.crossover = [n](const Genome& a, const Genome& b, Rng& rng) {
    std::size_t x = uniform_index(rng, n + 1);
    std::size_t y = uniform_index(rng, n + 1);
    if (x > y) std::swap(x, y);
    return order_crossover(a, b, x, y);
  };
  ops.mutate = [n](Genome& g, Rng& rng) {
    if (n < 2) return;
    const std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n - 1);
    if (j >= i) ++j;
    std::swap(g[i], g[j]);
  };
  ops.decode = [](const Genome& g) { return Schedule(g); };
  return run_ga(instance, config, ops);
}

RunReport run_mga(const Instance& instance, const GaConfig& config) {
  const std::size_t n = instance.size();
  std::vector<TypeId> types;
  for (const EddChain& c : edd_chains(instance)) types.push_back(c.type);

  GaOperators ops;
  ops.random = [&](Rng& rng) {
    const Schedule s = random_edds(instance, rng);
    Genome g;
    g.reserve(n);
    for (JobId j : s) g.push_back(instance.type_of(j));
    return g;
  };
  ops.crossover = [&types](const Genome& a, const Genome& b, Rng& rng) {
    const std::size_t count = 1 + uniform_index(rng, types.size());
    std::vector<TypeId> pool = types;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    return type_crossover(a, b, pool);
  };
  ops.mutate = [n](Genome& g, Rng& rng) {
    std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n);
    if (i > j) std::swap(i, j);
    std::shuffle(g.begin() + static_cast<std::ptrdiff_t>(i), g.begin() + static_cast<std::ptrdiff_t>(j) + 1, rng);
  };
  ops.decode = [&instance](const Genome& g) { return decode_types(instance, g); };
  return run_ga(instance, config, ops);
}

}  // namespace famsched
