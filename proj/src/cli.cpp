#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "famsched/baselines.hpp"
#include "famsched/bench.hpp"
#include "famsched/edds.hpp"
#include "famsched/hillclimb.hpp"
#include "json.hpp"

namespace famsched {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Schedule make_start(const Instance& instance, const std::string& name) {
  if (name == "dd") return start_dd(instance);
  if (name == "sm") return start_sm(instance);
  return start_tm(instance);
}

// No idle time, so every unit of makespan beyond the processing is setup.
Time checked_setup(const Instance& instance, const Schedule& schedule, const Objective& objective) {
  const Time setup = total_setup(instance, schedule.jobs());
  if (setup != objective.makespan - instance.total_processing_time()) {
    throw std::logic_error("total setup does not match makespan minus processing time");
  }
  return setup;
}

struct SolveArgs {
  std::string instance;
  std::string algo = "mw-swap";
  std::string start = "dd";
  double time_limit = 1200;
  std::uint64_t seed = 0;
  int k_init = 4;
  std::optional<int> k_max;
  std::optional<std::uint64_t> max_iterations;
  std::string out = "json";
  int repeats = 1;
};

struct SolveRun {
  std::uint64_t seed;
  RunReport report;
};

RunReport solve_once(const Instance& instance, const Schedule& start, const SolveArgs& args, std::uint64_t seed) {
  const std::chrono::duration<double> limit(args.time_limit);
  if (auto strategy = parse_strategy(args.algo)) {
    StrategyConfig config;
    config.variant = *strategy;
    config.k_init = args.k_init;
    config.k_max = args.k_max;
    config.time_limit = limit;
    return run_strategy(instance, start, config);
  }
  const Budget budget{limit, args.max_iterations};
  if (args.algo == "pils1") {
    Pils1Options options;
    options.budget = budget;
    options.seed = seed;
    return run_pils1(instance, start, options);
  }
  GaConfig config;
  config.seed = seed;
  config.budget = budget;
  return args.algo == "gad" ? run_gad(instance, config) : run_mga(instance, config);
}

json run_json(const Instance& instance, const SolveRun& run) {
  const RunReport& r = run.report;
  return {{"seed", run.seed},
          {"tardiness", r.objective.tardiness},
          {"makespan", r.objective.makespan},
          {"total_setup", checked_setup(instance, r.best, r.objective)},
          {"feasible", r.objective.tardiness == 0},
          {"termination", std::string(to_string(r.termination))},
          {"iterations", r.iterations},
          {"wall_ms", static_cast<std::int64_t>(r.wall_seconds * 1000.0)}};
}

int run_solve(const SolveArgs& args, std::ostream& out) {
  const Instance instance = parse_instance(read_file(args.instance));
  const Schedule start = make_start(instance, args.start);
  // The hill climbers ignore the seed, so repeating them would only burn time.
  const bool seeded = !parse_strategy(args.algo).has_value();
  const int repeats = seeded ? args.repeats : 1;

  std::vector<SolveRun> runs;
  for (int i = 0; i < repeats; ++i) {
    const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
    runs.push_back({seed, solve_once(instance, start, args, seed)});
  }
  const auto best = std::min_element(runs.begin(), runs.end(), [](const SolveRun& a, const SolveRun& b) {
    return a.report.objective < b.report.objective;
  });
  const RunReport& r = best->report;
  double wall = 0;
  for (const SolveRun& run : runs) wall += run.report.wall_seconds;

  if (args.out == "csv") {
    out << "instance,algo,start,seed,tardiness,makespan,total_setup,wall_ms\n";
    out << args.instance << ',' << args.algo << ',' << args.start << ',' << best->seed << ','
        << r.objective.tardiness << ',' << r.objective.makespan << ','
        << checked_setup(instance, r.best, r.objective) << ',' << static_cast<std::int64_t>(wall * 1000.0) << '\n';
    return 0;
  }

  json trajectory = json::array();
  for (const TrajectoryEvent& e : r.trajectory) {
    trajectory.push_back({{"elapsed_seconds", e.elapsed_seconds},
                          {"iteration", e.iteration},
                          {"k", e.k},
                          {"move", std::string(to_string(e.move))},
                          {"tardiness", e.objective.tardiness},
                          {"makespan", e.objective.makespan}});
  }
  json all = json::array();
  for (const SolveRun& run : runs) all.push_back(run_json(instance, run));
  json best_json = run_json(instance, *best);
  best_json["schedule"] = r.best.order();
  best_json["trajectory"] = std::move(trajectory);

  const Objective start_objective = objective_of(instance, start.jobs());
  json report = {
      {"instance", args.instance},
      {"algo", args.algo},
      {"start", {{"name", args.start},
                 {"tardiness", start_objective.tardiness},
                 {"makespan", start_objective.makespan},
                 {"total_setup", checked_setup(instance, start, start_objective)}}},
      {"config",
       {{"time_limit", args.time_limit},
        {"seed", args.seed},
        {"k_init", args.k_init},
        {"k_max", args.k_max ? json(*args.k_max) : json(nullptr)},
        {"max_iterations", args.max_iterations ? json(*args.max_iterations) : json(nullptr)},
        {"repeats", repeats}}},
      {"runs", std::move(all)},
      {"best", std::move(best_json)},
      {"wall_seconds", wall}};
  out << report.dump(2) << '\n';
  return 0;
}

int run_verify(const std::string& instance_path, const std::string& schedule_path, std::ostream& out) {
  const Instance instance = parse_instance(read_file(instance_path));
  const Schedule schedule = parse_schedule(read_file(schedule_path));
  const Evaluation e = evaluate(instance, schedule);
  out << "makespan " << e.makespan << '\n'
      << "tardiness " << e.total_tardiness << '\n'
      << "feasible " << (is_feasible(e) ? "yes" : "no") << '\n'
      << "total_setup " << checked_setup(instance, schedule, e.objective()) << '\n';
  return 0;
}

struct GenArgs {
  std::string pairs;
  int n = 100;
  double tardiness_factor = 0.2;
  double due_date_range = 0.6;
  int types = 8;
  Time scale = 50;
  std::string setup;
  Time setup_max = 100;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenArgs& args, std::ostream& out) {
  const auto pairs = args.pairs.empty() ? tanaka_style_pairs(args.n, args.tardiness_factor, args.due_date_range, args.seed)
                                        : parse_pairs(read_file(args.pairs));
  if (pairs.empty()) throw InputError("no processing time / deadline pairs");
  const SetupMatrix setup =
      args.setup.empty() ? random_metric_setup(args.types, args.setup_max, args.seed) : parse_setup(read_file(args.setup));
  const std::string text = write_instance(adapt_tanaka(pairs, setup, args.types, args.scale, args.seed));
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!(file << text)) throw InputError("cannot write " + args.output);
  }
  return 0;
}

int run_oracle(const std::string& instance_path, std::ostream& out) {
  const Instance instance = parse_instance(read_file(instance_path));
  const OracleResult r = oracle_optimal(instance);
  json report = {{"tardiness", r.objective.tardiness},
                 {"makespan", r.objective.makespan},
                 {"schedule", r.schedule.order()},
                 {"count", r.count}};
  out << report.dump(2) << '\n';
  return 0;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single machine scheduling with family setup times"};
  app.name("famsched");
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run a heuristic on an instance");
  solve->add_option("--instance", solve_args.instance, "Instance file")->required();
  solve->add_option("--algo", solve_args.algo)
      ->check(CLI::IsMember({"win", "win-swap", "mw", "mw-swap", "pils1", "gad", "mga"}));
  solve->add_option("--start", solve_args.start, "Start schedule (ignored by the GAs)")
      ->check(CLI::IsMember({"dd", "sm", "tm"}));
  solve->add_option("--time-limit", solve_args.time_limit, "Seconds per run")->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_args.seed);
  solve->add_option("--k-init", solve_args.k_init)->check(CLI::Range(2, 1 << 20));
  solve->add_option("--k-max", solve_args.k_max)->check(CLI::Range(2, 1 << 20));
  solve->add_option("--max-iterations", solve_args.max_iterations, "Iteration cap for pils1/gad/mga");
  solve->add_option("--out", solve_args.out)->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--repeats", solve_args.repeats, "Runs with seeds seed, seed+1, ...; best kept")
      ->check(CLI::Range(1, 1 << 20));

  std::string verify_instance, verify_schedule;
  auto* verify = app.add_subcommand("verify", "Evaluate a schedule");
  verify->add_option("--instance", verify_instance)->required();
  verify->add_option("--schedule", verify_schedule, "Job ids in processing order")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Build an instance from processing time / deadline pairs");
  gen->add_option("--pairs", gen_args.pairs, "Two-column file; synthesised when absent");
  gen->add_option("--n", gen_args.n)->check(CLI::PositiveNumber);
  gen->add_option("--tf", gen_args.tardiness_factor)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--rdd", gen_args.due_date_range)->check(CLI::Range(0.0, 2.0));
  gen->add_option("--types", gen_args.types)->check(CLI::PositiveNumber);
  gen->add_option("--scale", gen_args.scale)->check(CLI::PositiveNumber);
  gen->add_option("--setup", gen_args.setup, "Setup matrix file; random metric matrix when absent");
  gen->add_option("--setup-max", gen_args.setup_max)->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--output", gen_args.output);

  std::string oracle_instance;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum (n <= 10)");
  oracle->add_option("--instance", oracle_instance)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*solve) return run_solve(solve_args, out);
    if (*verify) return run_verify(verify_instance, verify_schedule, out);
    if (*gen) return run_gen(gen_args, out);
    if (*oracle) return run_oracle(oracle_instance, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace famsched
