#include "famsched/hillclimb.hpp"

#include <algorithm>

namespace famsched {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kWin:
      return "win";
    case Strategy::kWinSwap:
      return "win-swap";
    case Strategy::kMultiWin:
      return "mw";
    case Strategy::kMultiWinSwap:
      return "mw-swap";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kWin, Strategy::kWinSwap, Strategy::kMultiWin, Strategy::kMultiWinSwap}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kTimeLimit:
      return "time-limit";
    case Termination::kKExhausted:
      return "k-exhausted";
    case Termination::kIterationLimit:
      return "iteration-limit";
  }
  return "?";
}

std::string_view to_string(Move m) {
  switch (m) {
    case Move::kStart:
      return "start";
    case Move::kSwap:
      return "swap";
    case Move::kInsert:
      return "insert";
    case Move::kWindow:
      return "window";
    case Move::kMultiWindow:
      return "multi-window";
    case Move::kPerturbation:
      return "perturbation";
    case Move::kGeneration:
      return "generation";
  }
  return "?";
}

bool RunReport::same_outcome(const RunReport& other) const {
  auto same_events = [](const std::vector<TrajectoryEvent>& a, const std::vector<TrajectoryEvent>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const TrajectoryEvent& x, const TrajectoryEvent& y) {
      return x.iteration == y.iteration && x.k == y.k && x.move == y.move && x.objective == y.objective;
    });
  };
  auto same_queries = [](const std::vector<QueryEvent>& a, const std::vector<QueryEvent>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const QueryEvent& x, const QueryEvent& y) {
      return x.neighborhood == y.neighborhood && x.k == y.k && x.improved == y.improved;
    });
  };
  return best == other.best && objective == other.objective && termination == other.termination &&
         iterations == other.iterations && same_events(trajectory, other.trajectory) &&
         same_queries(queries, other.queries);
}

RunReport run_strategy(const Instance& instance, const Schedule& start, const StrategyConfig& config) {
  check_schedule(instance, start);
  const int n = static_cast<int>(instance.size());
  const int k_max = config.k_max.value_or(std::max(n, config.k_init));
  if (config.k_init < 2) throw InputError("k_init must be at least 2");
  if (k_max < config.k_init) throw InputError("k_max must not be below k_init");

  const bool with_swap = config.variant == Strategy::kWinSwap || config.variant == Strategy::kMultiWinSwap;
  const bool multi = config.variant == Strategy::kMultiWin || config.variant == Strategy::kMultiWinSwap;
  const Move window_move = multi ? Move::kMultiWindow : Move::kWindow;

  const auto t0 = Clock::now();
  SearchOptions options;
  options.first_improvement = config.first_improvement;
  if (config.time_limit) options.stop_at = t0 + std::chrono::duration_cast<Clock::duration>(*config.time_limit);
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
  auto expired = [&] { return options.stop_at && Clock::now() >= *options.stop_at; };

  RunReport report;
  report.best = start;
  report.objective = objective_of(instance, start.jobs());

  auto accept = [&](Improvement&& imp, int k, Move move) {
    report.best = std::move(imp.schedule);
    report.objective = imp.objective;
    report.trajectory.push_back({elapsed(), report.iterations, k, move, report.objective});
  };
  auto log_query = [&](Move kind, int k, bool improved) {
    if (config.trace_queries) report.queries.push_back({kind, k, improved});
  };

  int k = config.k_init;
  while (true) {
    if (expired()) {
      report.termination = Termination::kTimeLimit;
      break;
    }
    ++report.iterations;
    if (with_swap) {
      auto swap = improve_swap(instance, report.best, 1, options);
      if (!swap && expired()) {
        report.termination = Termination::kTimeLimit;
        break;
      }
      log_query(Move::kSwap, 1, swap.has_value());
      if (swap) {
        accept(std::move(*swap), 1, Move::kSwap);
        k = config.k_init;
        continue;
      }
    }
    auto better = multi ? improve_multi_window(instance, report.best, k, options)
                        : improve_window(instance, report.best, k, options);
    if (!better && expired()) {
      report.termination = Termination::kTimeLimit;
      break;
    }
    log_query(window_move, k, better.has_value());
    if (better) {
      accept(std::move(*better), k, window_move);
      k = config.k_init;
    } else if (++k > k_max) {
      report.termination = Termination::kKExhausted;
      break;
    }
  }
  report.wall_seconds = elapsed();
  return report;
}

}  // namespace famsched
