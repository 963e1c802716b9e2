#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

#include "famsched/bench.hpp"

namespace famsched {
namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t from = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > from) out.push_back(line.substr(from, i - from));
  }
  return out;
}

struct Line {
  int number;
  std::vector<std::string_view> fields;
};

// Non-empty lines after comment removal, with their physical line numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto fields = tokens(strip_comment(raw));
    if (!fields.empty()) lines.push_back({number, std::move(fields)});
    if (text.empty()) break;
  }
  return lines;
}

Time to_integer(const Line& line, std::string_view token) {
  Time value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError(line.number, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

void expect_fields(const Line& line, std::size_t count, const char* what) {
  if (line.fields.size() != count) {
    throw FormatError(line.number, std::string(what) + ": expected " + std::to_string(count) + " values, found " +
                                       std::to_string(line.fields.size()));
  }
}

}  // namespace

FormatError::FormatError(int line, const std::string& message)
    : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw FormatError(0, "empty instance");

  const Line& header = lines[0];
  expect_fields(header, 2, "header");
  const Time t = to_integer(header, header.fields[0]);
  const Time n = to_integer(header, header.fields[1]);
  if (t < 1) throw FormatError(header.number, "type count must be positive");
  if (n < 1) throw FormatError(header.number, "job count must be positive");

  const auto expected = static_cast<std::size_t>(1 + t + n);
  if (lines.size() < expected) {
    const int last = lines.back().number;
    if (lines.size() < static_cast<std::size_t>(1 + t)) {
      throw FormatError(last, "expected " + std::to_string(t) + " setup rows, found " +
                                  std::to_string(lines.size() - 1));
    }
    throw FormatError(last, "expected " + std::to_string(n) + " jobs, found " +
                                std::to_string(lines.size() - 1 - static_cast<std::size_t>(t)));
  }
  if (lines.size() > expected) throw FormatError(lines[expected].number, "unexpected line after the last job");

  const int types = static_cast<int>(t);
  SetupMatrix setup(types);
  for (int a = 0; a < types; ++a) {
    const Line& row = lines[1 + static_cast<std::size_t>(a)];
    expect_fields(row, static_cast<std::size_t>(types), "setup row");
    for (int b = 0; b < types; ++b) {
      const Time v = to_integer(row, row.fields[static_cast<std::size_t>(b)]);
      if (v < 0) throw FormatError(row.number, "negative setup time");
      setup.at(a, b) = v;
    }
  }
  if (const auto violations = validate_setup(setup); !violations.empty()) {
    const auto& v = violations.front();
    throw FormatError(lines[1 + static_cast<std::size_t>(v.a)].number, "invalid setup matrix: " + v.describe());
  }

  std::vector<Job> jobs;
  jobs.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 1 + static_cast<std::size_t>(t); i < expected; ++i) {
    const Line& line = lines[i];
    expect_fields(line, 3, "job");
    const Time p = to_integer(line, line.fields[0]);
    const Time d = to_integer(line, line.fields[1]);
    const Time type = to_integer(line, line.fields[2]);
    if (p < 0) throw FormatError(line.number, "negative processing time");
    if (d < -1) throw FormatError(line.number, "negative deadline");
    if (type < 0 || type >= t) throw FormatError(line.number, "type out of range");
    jobs.push_back({p, d == -1 ? Deadline::infinite() : Deadline::at(d), static_cast<TypeId>(type)});
  }
  return Instance(std::move(jobs), std::move(setup));
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  const int t = instance.type_count();
  out << t << ' ' << instance.size() << '\n';
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t; ++b) out << (b ? " " : "") << instance.setup(a, b);
    out << '\n';
  }
  for (const Job& job : instance.jobs()) {
    out << job.processing_time << ' ' << (job.deadline.is_infinite() ? Time{-1} : job.deadline.value()) << ' '
        << job.type << '\n';
  }
  return out.str();
}

SetupMatrix parse_setup(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw FormatError(0, "empty setup matrix");
  const auto types = static_cast<int>(lines.size());
  SetupMatrix setup(types);
  for (int a = 0; a < types; ++a) {
    const Line& row = lines[static_cast<std::size_t>(a)];
    expect_fields(row, lines.size(), "setup row");
    for (int b = 0; b < types; ++b) {
      const Time v = to_integer(row, row.fields[static_cast<std::size_t>(b)]);
      if (v < 0) throw FormatError(row.number, "negative setup time");
      setup.at(a, b) = v;
    }
  }
  if (const auto violations = validate_setup(setup); !violations.empty()) {
    const auto& v = violations.front();
    throw FormatError(lines[static_cast<std::size_t>(v.a)].number, "invalid setup matrix: " + v.describe());
  }
  return setup;
}

Schedule parse_schedule(std::string_view text) {
  std::vector<JobId> order;
  for (const Line& line : content_lines(text)) {
    for (std::string_view token : line.fields) {
      const Time id = to_integer(line, token);
      if (id < 0) throw FormatError(line.number, "negative job id");
      order.push_back(static_cast<JobId>(id));
    }
  }
  if (order.empty()) throw FormatError(0, "empty schedule");
  return Schedule(std::move(order));
}

std::vector<ProcessingDeadline> parse_pairs(std::string_view text) {
  std::vector<ProcessingDeadline> pairs;
  for (const Line& line : content_lines(text)) {
    expect_fields(line, 2, "pair");
    const Time p = to_integer(line, line.fields[0]);
    const Time d = to_integer(line, line.fields[1]);
    if (p < 0 || d < 0) throw FormatError(line.number, "negative value");
    pairs.push_back({p, d});
  }
  return pairs;
}

Instance adapt_tanaka(std::span<const ProcessingDeadline> pairs, const SetupMatrix& setup, int type_count, Time scale,
                      std::uint64_t seed) {
  if (type_count < 1) throw InputError("type count must be positive");
  if (setup.types() != type_count) throw InputError("setup matrix size does not match the type count");
  if (scale < 1) throw InputError("scale must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<TypeId> type(0, type_count - 1);
  std::vector<Job> jobs;
  jobs.reserve(pairs.size());
  for (const ProcessingDeadline& pd : pairs) {
    if (pd.processing_time < 0 || pd.deadline < 0) throw InputError("negative processing time or deadline");
    jobs.push_back({pd.processing_time * scale, Deadline::at(pd.deadline * scale), type(rng)});
  }
  return Instance(std::move(jobs), setup);
}

std::vector<ProcessingDeadline> tanaka_style_pairs(int n, double tardiness_factor, double due_date_range,
                                                   std::uint64_t seed) {
  if (n < 1) throw InputError("n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Time> processing(1, 100);
  std::vector<ProcessingDeadline> pairs(static_cast<std::size_t>(n));
  Time total = 0;
  for (auto& pd : pairs) total += pd.processing_time = processing(rng);
  const double lo = std::max(0.0, static_cast<double>(total) * (1.0 - tardiness_factor - due_date_range / 2));
  const double hi = std::max(lo, static_cast<double>(total) * (1.0 - tardiness_factor + due_date_range / 2));
  std::uniform_int_distribution<Time> deadline(static_cast<Time>(lo), static_cast<Time>(hi));
  for (auto& pd : pairs) pd.deadline = deadline(rng);
  return pairs;
}

SetupMatrix random_metric_setup(int types, Time max_entry, std::uint64_t seed) {
  if (types < 1 || max_entry < 1) throw InputError("types and max_entry must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Time> entry(1, max_entry);
  SetupMatrix m(types);
  for (int a = 0; a < types; ++a) {
    for (int b = 0; b < types; ++b) m.at(a, b) = a == b ? 0 : entry(rng);
  }
  // Floyd-Warshall closure.
  for (int via = 0; via < types; ++via) {
    for (int a = 0; a < types; ++a) {
      for (int b = 0; b < types; ++b) m.at(a, b) = std::min(m(a, b), m(a, via) + m(via, b));
    }
  }
  return m;
}

OracleResult oracle_optimal(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kOracleMaxJobs) throw CapacityError("oracle refuses more than 10 jobs");
  std::vector<JobId> order(n);
  std::iota(order.begin(), order.end(), 0);
  OracleResult result;
  result.objective = objective_of(instance, order);
  result.schedule = Schedule(order);
  result.count = 0;
  do {
    const Objective obj = objective_of(instance, order);
    if (obj < result.objective) {
      result.objective = obj;
      result.schedule = Schedule(order);
      result.count = 1;
    } else if (obj == result.objective) {
      ++result.count;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

}  // namespace famsched
