#include <gtest/gtest.h>

#include <numeric>

#include "famsched/edds.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace famsched {
namespace {

Instance with_setup(std::vector<Job> jobs, const std::vector<std::vector<Time>>& rows) {
  return Instance(std::move(jobs), SetupMatrix::from_rows(rows));
}

TEST(EddChains, SortsByDeadline) {
  const Instance inst = with_setup({{1, Deadline::at(10), 0}, {1, Deadline::at(5), 0}}, {{0}});
  const auto chains = edd_chains(inst);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].jobs, (std::vector<JobId>{1, 0}));
}

TEST(EddChains, DistinctTypesGiveSingletons) {
  const Instance inst = with_setup({{1, {}, 2}, {1, {}, 0}, {1, {}, 1}}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto chains = edd_chains(inst);
  ASSERT_EQ(chains.size(), 3u);
  for (const auto& c : chains) EXPECT_EQ(c.jobs.size(), 1u);
}

TEST(EddChains, Toy) {
  const auto chains = edd_chains(fixtures::toy());
  const std::vector<EddChain> expected{{0, {0, 3}}, {1, {1}}, {2, {2}}};
  EXPECT_EQ(chains, expected);
}

TEST(StartDd, Examples) {
  const Instance inst =
      with_setup({{1, Deadline::at(9), 0}, {1, Deadline::at(3), 0}, {1, Deadline::at(7), 0}}, {{0}});
  EXPECT_EQ(start_dd(inst), Schedule({1, 2, 0}));
  const Instance flat = with_setup({{1, Deadline::at(4), 0}, {1, Deadline::at(4), 0}, {1, Deadline::at(4), 0}}, {{0}});
  EXPECT_EQ(start_dd(flat), Schedule::identity(3));
  // Equal deadlines fall back to type, then id.
  EXPECT_EQ(start_dd(fixtures::toy()), Schedule({0, 3, 1, 2}));
}

TEST(StartSm, ChainOfCheapSetups) {
  const Instance inst =
      with_setup({{1, {}, 2}, {1, {}, 1}, {1, {}, 0}}, {{0, 1, 5}, {5, 0, 1}, {5, 5, 0}});
  const Schedule s = start_sm(inst);
  EXPECT_EQ(s, Schedule({2, 1, 0}));
  EXPECT_EQ(total_setup(inst, s.jobs()), 2);
}

TEST(StartSm, SymmetricTwoTypesTakesFirstOrder) {
  const Instance inst = with_setup({{1, {}, 1}, {1, {}, 0}}, {{0, 3}, {3, 0}});
  EXPECT_EQ(start_sm(inst), Schedule({1, 0}));
}

TEST(StartSm, SingleType) {
  const Instance inst = with_setup({{2, Deadline::at(9), 0}, {2, Deadline::at(3), 0}}, {{0}});
  EXPECT_EQ(start_sm(inst), Schedule({1, 0}));
  EXPECT_EQ(start_tm(inst), Schedule({1, 0}));
}

TEST(StartTm, TightBlockFirst) {
  const Instance inst = with_setup(
      {{5, Deadline::at(100), 0}, {5, Deadline::at(100), 0}, {5, Deadline::at(6), 1}, {5, Deadline::at(11), 1}},
      {{0, 1}, {1, 0}});
  EXPECT_EQ(start_tm(inst), Schedule({2, 3, 0, 1}));
  EXPECT_EQ(objective_of(inst, start_tm(inst).jobs()).tardiness, 0);
}

TEST(StartTm, NoDeadlinesMatchesSm) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = oracle::random_instance(seed, {.n = 10, .types = 5, .deadline_share = 0.0});
    EXPECT_EQ(start_tm(inst), start_sm(inst));
  }
}

TEST(StartSm, RefusesTooManyTypes) {
  std::vector<Job> jobs;
  for (int t = 0; t < 11; ++t) jobs.push_back({1, {}, t});
  const Instance inst(jobs, SetupMatrix(11));
  EXPECT_THROW(start_sm(inst), CapacityError);
  EXPECT_THROW(start_tm(inst), CapacityError);
}

// Every block order, by brute force.
struct BlockOptimum {
  Time setup;
  Objective objective;
};

BlockOptimum enumerate_block_orders(const Instance& inst) {
  std::vector<TypeId> types;
  for (const auto& c : edd_chains(inst)) types.push_back(c.type);
  BlockOptimum best{std::numeric_limits<Time>::max(), {std::numeric_limits<Time>::max(), 0}};
  do {
    std::vector<JobId> order;
    for (TypeId t : types) {
      std::vector<JobId> block;
      for (JobId j = 0; j < static_cast<JobId>(inst.size()); ++j) {
        if (inst.type_of(j) == t) block.push_back(j);
      }
      std::stable_sort(block.begin(), block.end(),
                       [&](JobId a, JobId b) { return inst.job(a).deadline < inst.job(b).deadline; });
      order.insert(order.end(), block.begin(), block.end());
    }
    best.setup = std::min(best.setup, total_setup(inst, order));
    best.objective = std::min(best.objective, oracle::reference_objective(inst, order));
  } while (std::next_permutation(types.begin(), types.end()));
  return best;
}

TEST(StartSmTm, OptimalOverBlockOrders) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Instance inst = oracle::random_instance(seed, {.n = 12, .types = 5, .max_setup = 9});
    const BlockOptimum best = enumerate_block_orders(inst);
    const Schedule sm = start_sm(inst);
    const Schedule tm = start_tm(inst);
    EXPECT_EQ(total_setup(inst, sm.jobs()), best.setup);
    EXPECT_EQ(objective_of(inst, tm.jobs()), best.objective);
    EXPECT_TRUE(is_edds(inst, sm.jobs()));
    EXPECT_TRUE(is_edds(inst, tm.jobs()));
    EXPECT_EQ(start_sm(inst), sm);
  }
}

TEST(TypeInversions, CountsLaterDeadlineFirst) {
  const Instance inst =
      with_setup({{1, Deadline::at(1), 0}, {1, Deadline::at(2), 0}, {1, Deadline::at(3), 0}, {1, {}, 1}}, {{0, 1}, {1, 0}});
  EXPECT_EQ(type_inversions(inst, std::vector<JobId>{0, 1, 2, 3}), 0u);
  EXPECT_EQ(type_inversions(inst, std::vector<JobId>{2, 3, 1, 0}), 3u);
  EXPECT_FALSE(is_edds(inst, std::vector<JobId>{1, 0, 2, 3}));
}

TEST(BlockSchedule, ConcatenatesChains) {
  EXPECT_EQ(block_schedule(fixtures::toy(), std::vector<TypeId>{2, 0, 1}), Schedule({2, 0, 3, 1}));
}

}  // namespace
}  // namespace famsched
