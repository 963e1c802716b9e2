#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famsched/model.hpp"
#include "famsched/neighborhoods.hpp"

namespace famsched {

enum class Strategy { kWin, kWinSwap, kMultiWin, kMultiWinSwap };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct StrategyConfig {
  Strategy variant = Strategy::kWin;
  int k_init = 4;
  /// Largest radius tried before giving up; defaults to max(n, k_init).
  std::optional<int> k_max;
  /// Unset means no time limit.
  std::optional<std::chrono::duration<double>> time_limit;
  bool first_improvement = true;
  /// Record every neighbourhood query in RunReport::queries.
  bool trace_queries = false;
};

enum class Termination { kTimeLimit, kKExhausted, kIterationLimit };

std::string_view to_string(Termination t);

enum class Move { kStart, kSwap, kInsert, kWindow, kMultiWindow, kPerturbation, kGeneration };

std::string_view to_string(Move m);

/// A new incumbent; k is the radius of the query that produced it.
struct TrajectoryEvent {
  double elapsed_seconds = 0;
  std::uint64_t iteration = 0;
  int k = 0;
  Move move = Move::kStart;
  Objective objective;
};

struct QueryEvent {
  Move neighborhood = Move::kWindow;
  int k = 0;
  bool improved = false;
};

struct RunReport {
  Schedule best;
  Objective objective;
  std::vector<TrajectoryEvent> trajectory;
  std::vector<QueryEvent> queries;
  Termination termination = Termination::kKExhausted;
  std::uint64_t iterations = 0;
  double wall_seconds = 0;

  /// Equality ignoring wall-clock fields.
  bool same_outcome(const RunReport& other) const;
};

/// Hill climbing with k escalation: an improvement resets k to k_init, a
/// certified k-local optimum increments k. The +Swap variants first exhaust
/// improving 1-swaps. Throws InputError for k_init < 2 or k_max < k_init.
RunReport run_strategy(const Instance& instance, const Schedule& start, const StrategyConfig& config);

}  // namespace famsched
