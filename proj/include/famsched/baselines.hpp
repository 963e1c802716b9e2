#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "famsched/hillclimb.hpp"
#include "famsched/model.hpp"

namespace famsched {

using Rng = std::mt19937_64;

/// Stopping rule for the randomised baselines. At least one bound must be set;
/// an iteration bound makes a run reproducible independent of machine speed.
struct Budget {
  std::optional<std::chrono::duration<double>> time_limit;
  std::optional<std::uint64_t> max_iterations;
};

/// a dominates b: no worse in both components and better in one.
constexpr bool dominates(const Objective& a, const Objective& b) {
  return a.tardiness <= b.tardiness && a.makespan <= b.makespan && a != b;
}

struct ArchiveEntry {
  Schedule schedule;
  Objective objective;
};

/// Schedules with pairwise non-dominated (tardiness, makespan) values; at most
/// one schedule per objective value.
class NdArchive {
 public:
  /// Whether offer() would insert a schedule with this objective.
  bool accepts(const Objective& objective) const;
  /// Inserts unless dominated or already represented; evicts what it dominates.
  bool offer(Schedule schedule, const Objective& objective);

  std::span<const ArchiveEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// Lowest tardiness, ties broken by makespan.
  const ArchiveEntry& best() const;
  /// No member dominates or duplicates another.
  bool is_consistent() const;

 private:
  std::vector<ArchiveEntry> entries_;
};

struct Pils1Options {
  Budget budget;
  std::uint64_t seed = 0;
  /// Called after every successful archive insertion.
  std::function<void(const NdArchive&)> on_insert;
  /// Called with the perturbation length p at the start of each iteration.
  std::function<void(std::uint64_t iteration, int p)> on_iteration;
};

RunReport run_pils1(const Instance& instance, const Schedule& start, const Pils1Options& options);

/// C_max + mu * T with mu = n * (max processing time + max setup) + 1, large
/// enough that the order equals the lexicographic (tardiness, makespan) order.
class Fitness {
 public:
  explicit Fitness(const Instance& instance);
  Time mu() const { return mu_; }
  Time operator()(const Objective& objective) const { return objective.makespan + mu_ * objective.tardiness; }

 private:
  Time mu_;
};

struct GaConfig {
  int population = 100;
  double crossover_probability = 0.9;
  double mutation_probability = 0.01;
  double selection_rate = 0.2;
  std::uint64_t seed = 0;
  Budget budget;
  /// Called with the population after initialisation (generation 0) and after every generation.
  std::function<void(std::uint64_t generation, std::span<const Schedule> population)> on_generation;
};

/// GA over job permutations: order-preserving two-point crossover, single-swap mutation.
RunReport run_gad(const Instance& instance, const GaConfig& config);

/// GA over type sequences decoded into EDD schedules: type-subset crossover,
/// segment-shuffle mutation.
RunReport run_mga(const Instance& instance, const GaConfig& config);

// Operators, exposed for testing.

/// Uniformly random interleaving of the per-type EDD chains.
Schedule random_edds(const Instance& instance, Rng& rng);

/// Keeps a[cut_begin, cut_end) in place and fills the other positions with the
/// remaining jobs in the order they appear in b.
std::vector<JobId> order_crossover(std::span<const JobId> a, std::span<const JobId> b, std::size_t cut_begin,
                                   std::size_t cut_end);

/// Positions where b holds a type from `subset` keep b's gene; the remaining
/// positions take a's genes outside `subset` in a's order.
std::vector<TypeId> type_crossover(std::span<const TypeId> a, std::span<const TypeId> b,
                                   std::span<const TypeId> subset);

/// The i-th occurrence of type t becomes the i-th job of t's EDD chain.
/// Throws InputError when the type multiset does not match the instance.
Schedule decode_types(const Instance& instance, std::span<const TypeId> genes);

}  // namespace famsched
