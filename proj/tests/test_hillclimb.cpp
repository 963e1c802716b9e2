#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "famsched/edds.hpp"
#include "famsched/hillclimb.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace famsched {
namespace {

constexpr Strategy kAll[] = {Strategy::kWin, Strategy::kWinSwap, Strategy::kMultiWin, Strategy::kMultiWinSwap};

TEST(Strategy, NamesRoundTrip) {
  for (Strategy s : kAll) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("nope"));
}

TEST(RunStrategy, ToyMultiWindowSingleStep) {
  StrategyConfig config;
  config.variant = Strategy::kMultiWin;
  config.k_init = 2;
  config.time_limit = std::chrono::seconds(10);
  const RunReport r = run_strategy(fixtures::toy(), Schedule::identity(4), config);
  EXPECT_EQ(r.objective.makespan, 6);
  ASSERT_EQ(r.trajectory.size(), 1u);
  EXPECT_EQ(r.trajectory[0].k, 2);
  EXPECT_EQ(r.trajectory[0].move, Move::kMultiWindow);
  EXPECT_EQ(r.termination, Termination::kKExhausted);
}

TEST(RunStrategy, ToyWindowEscalates) {
  StrategyConfig config;
  config.variant = Strategy::kWin;
  config.k_init = 2;
  config.trace_queries = true;
  const RunReport r = run_strategy(fixtures::toy(), Schedule::identity(4), config);
  EXPECT_EQ(r.objective.makespan, 6);
  ASSERT_EQ(r.trajectory.size(), 1u);
  // k=2 is certified locally optimal first; the improvement comes one step later.
  EXPECT_EQ(r.trajectory[0].k, 3);
  ASSERT_GE(r.queries.size(), 2u);
  EXPECT_EQ(r.queries[0].k, 2);
  EXPECT_FALSE(r.queries[0].improved);
  EXPECT_EQ(r.queries[1].k, 3);
  EXPECT_TRUE(r.queries[1].improved);
}

TEST(RunStrategy, OptimalStartHasEmptyTrajectory) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = oracle::random_instance(seed, {.n = 7, .types = 3});
    std::vector<JobId> order(inst.size());
    std::iota(order.begin(), order.end(), 0);
    const Objective opt = oracle::brute_force_optimum(inst);
    while (oracle::reference_objective(inst, order) != opt) std::next_permutation(order.begin(), order.end());
    for (Strategy s : kAll) {
      StrategyConfig config;
      config.variant = s;
      config.k_init = 2;
      const RunReport r = run_strategy(inst, Schedule(order), config);
      EXPECT_TRUE(r.trajectory.empty());
      EXPECT_EQ(r.termination, Termination::kKExhausted);
      EXPECT_EQ(r.objective, opt);
    }
  }
}

TEST(RunStrategy, ResetDisciplineAndMonotonicity) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Instance inst = oracle::random_instance(seed, {.n = 25, .types = 5, .max_setup = 20});
    for (Strategy s : kAll) {
      StrategyConfig config;
      config.variant = s;
      config.k_init = 3;
      config.k_max = 5;
      config.trace_queries = true;
      const RunReport r = run_strategy(inst, start_dd(inst), config);
      for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
        EXPECT_LT(r.trajectory[i].objective, r.trajectory[i - 1].objective);
      }
      const bool swaps = s == Strategy::kWinSwap || s == Strategy::kMultiWinSwap;
      // Expected radius of the next window query.
      int expected_k = config.k_init;
      for (std::size_t i = 0; i < r.queries.size(); ++i) {
        const QueryEvent& q = r.queries[i];
        if (q.neighborhood == Move::kSwap) {
          EXPECT_TRUE(swaps);
          EXPECT_EQ(q.k, 1);
          if (q.improved) expected_k = config.k_init;
          continue;
        }
        EXPECT_EQ(q.k, expected_k) << "query " << i;
        expected_k = q.improved ? config.k_init : q.k + 1;
        // +Swap variants always try a swap before the window query.
        if (swaps) {
          ASSERT_GT(i, 0u);
          EXPECT_EQ(r.queries[i - 1].neighborhood, Move::kSwap);
          EXPECT_FALSE(r.queries[i - 1].improved);
        }
      }
      EXPECT_EQ(r.termination, Termination::kKExhausted);
    }
  }
}

TEST(RunStrategy, Deterministic) {
  const Instance inst = oracle::random_instance(4, {.n = 30, .types = 6, .max_setup = 15});
  for (Strategy s : kAll) {
    StrategyConfig config;
    config.variant = s;
    config.k_max = 6;
    const RunReport a = run_strategy(inst, start_dd(inst), config);
    const RunReport b = run_strategy(inst, start_dd(inst), config);
    EXPECT_TRUE(a.same_outcome(b));
  }
}

TEST(RunStrategy, RejectsBadRadii) {
  StrategyConfig config;
  config.k_init = 1;
  EXPECT_THROW(run_strategy(fixtures::toy(), Schedule::identity(4), config), InputError);
  config.k_init = 4;
  config.k_max = 3;
  EXPECT_THROW(run_strategy(fixtures::toy(), Schedule::identity(4), config), InputError);
}

TEST(RunStrategy, TimeLimitStops) {
  const Instance inst = oracle::random_instance(9, {.n = 200, .types = 8, .max_setup = 30});
  StrategyConfig config;
  config.variant = Strategy::kMultiWinSwap;
  config.time_limit = std::chrono::milliseconds(200);
  const auto t0 = Clock::now();
  const RunReport r = run_strategy(inst, start_dd(inst), config);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  EXPECT_LT(secs, 3.0);
  EXPECT_LE(r.objective, objective_of(inst, start_dd(inst).jobs()));
}

}  // namespace
}  // namespace famsched
