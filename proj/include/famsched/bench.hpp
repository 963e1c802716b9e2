#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "famsched/model.hpp"

namespace famsched {

/// Malformed instance or schedule text; `line` is 1-based (0 when not tied to a line).
class FormatError : public InputError {
 public:
  FormatError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format:
///   t n
///   t rows of t setup times
///   n lines "processing_time deadline type"  (deadline -1 = infinite)
/// '#' starts a comment; blank lines are ignored. The setup matrix must have a
/// zero diagonal and satisfy the triangle inequality.
Instance parse_instance(std::string_view text);

/// Canonical form of the format above; parse_instance(write_instance(x)) == x.
std::string write_instance(const Instance& instance);

/// A bare square matrix: t rows of t integers, validated like the instance header block.
SetupMatrix parse_setup(std::string_view text);

/// Whitespace separated job ids, '#' comments allowed. Not checked against an instance.
Schedule parse_schedule(std::string_view text);

struct ProcessingDeadline {
  Time processing_time = 0;
  Time deadline = 0;
};

/// Two columns per line: processing time and deadline.
std::vector<ProcessingDeadline> parse_pairs(std::string_view text);

/// Scales both columns by `scale` and draws every job type uniformly from
/// [0, type_count) with a seeded generator. setup.types() must equal type_count.
Instance adapt_tanaka(std::span<const ProcessingDeadline> pairs, const SetupMatrix& setup, int type_count = 8,
                      Time scale = 50, std::uint64_t seed = 0);

/// Synthetic pairs in the style of the classic weighted tardiness benchmarks:
/// p uniform in [1, 100], d uniform in [P(1 - tf - rdd/2), P(1 - tf + rdd/2)]
/// with P the total processing time (clamped at 0).
std::vector<ProcessingDeadline> tanaka_style_pairs(int n, double tardiness_factor, double due_date_range,
                                                   std::uint64_t seed);

/// Off-diagonal entries uniform in [1, max_entry], closed under shortest paths
/// so the triangle inequality holds.
SetupMatrix random_metric_setup(int types, Time max_entry, std::uint64_t seed);

struct OracleResult {
  Objective objective;
  /// The lexicographically smallest optimal permutation.
  Schedule schedule;
  std::uint64_t count = 0;
};

inline constexpr std::size_t kOracleMaxJobs = 10;

/// Exhaustive search over all n! schedules. Throws CapacityError for n > 10.
OracleResult oracle_optimal(const Instance& instance);

/// Command line entry point; args excludes the program name.
/// Exit codes: 0 success, 1 refused or failed run, 2 usage error.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace famsched
