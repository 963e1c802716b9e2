#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>

#include "famsched/model.hpp"

namespace famsched {

using Clock = std::chrono::steady_clock;

struct SearchOptions {
  /// Return the first strictly better schedule found in enumeration order
  /// (window start, then start type, then end type). When false the whole
  /// window neighbourhood is scanned and its best member returned.
  bool first_improvement = true;
  /// Abandon the query once this instant has passed; the query then reports no
  /// improvement and callers are expected to look at the clock.
  std::optional<Clock::time_point> stop_at;
};

struct Improvement {
  Schedule schedule;
  Objective objective;
};

/// A strictly better schedule within window distance k, or none. Windows are
/// rearranged as EDDS; exhaustive over the neighbourhood when the current
/// schedule has zero tardiness. k is clamped to n.
std::optional<Improvement> improve_window(const Instance& instance, const Schedule& current, int k,
                                          const SearchOptions& options = {});

/// The best schedule within multi-window distance k if it is strictly better
/// than the current one, otherwise none. k is clamped to n.
std::optional<Improvement> improve_multi_window(const Instance& instance, const Schedule& current, int k,
                                                const SearchOptions& options = {});

/// First strictly better schedule reachable by at most k transpositions, in
/// breadth-first order; permutations already seen are not expanded again.
std::optional<Improvement> improve_swap(const Instance& instance, const Schedule& current, int k,
                                        const SearchOptions& options = {});

/// Same as improve_swap, with remove-and-reinsert moves.
std::optional<Improvement> improve_insert(const Instance& instance, const Schedule& current, int k,
                                          const SearchOptions& options = {});

enum class SingleMove { kSwap, kInsert };

/// Calls visit(neighbour, objective) for every distinct neighbour at swap
/// (insert) distance one, in enumeration order, until visit returns true.
/// Returns whether the scan was stopped early.
bool scan_single_moves(const Instance& instance, const Schedule& current, SingleMove kind,
                       const std::function<bool(std::span<const JobId>, const Objective&)>& visit);

}  // namespace famsched
