// Command-line front end: run learning cells, evaluate stored weight sets
// on the held-out problems, export single-episode traces, and run the
// numerical validation suite.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzypg/csv.hpp"
#include "fuzzypg/experiment.hpp"
#include "fuzzypg/oracle.hpp"
#include "fuzzypg/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  fuzzypg::Method method = fuzzypg::Method::GravitySmooth;
  fuzzypg::RewardVariant reward = fuzzypg::RewardVariant::r1;
  int repetitions = 200;
  std::uint64_t base_seed = 1;
  bool seed_set = false;
  int jobs = 0;  // 0 = hardware concurrency
  fs::path out_dir = "out";

  std::optional<double> T, T_prime, lambda, epsilon, epsilon_prime, c;
  std::optional<int> max_learning_iterations;
  fuzzypg::ShapeConfig shape;
};

fuzzypg::Method parse_method(const std::string& name) {
  if (name == "i") return fuzzypg::Method::Base;
  if (name == "ii") return fuzzypg::Method::Gravity;
  if (name == "iii") return fuzzypg::Method::GravitySmooth;
  throw CLI::ValidationError("--method", "expected one of: i, ii, iii");
}

fuzzypg::RewardVariant parse_reward(const std::string& name) {
  if (name == "r1") return fuzzypg::RewardVariant::r1;
  if (name == "r2") return fuzzypg::RewardVariant::r2;
  throw CLI::ValidationError("--reward", "expected one of: r1, r2");
}

void load_config_file(const fs::path& path, RunConfig& cfg) {
  json j;
  try {
    j = json::parse(fuzzypg::read_text_file(path));
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  try {
    if (j.contains("method")) cfg.method = parse_method(j.at("method").get<std::string>());
    if (j.contains("reward")) cfg.reward = parse_reward(j.at("reward").get<std::string>());
    if (j.contains("repetitions")) cfg.repetitions = j.at("repetitions").get<int>();
    if (j.contains("base_seed")) {
      cfg.base_seed = j.at("base_seed").get<std::uint64_t>();
      cfg.seed_set = true;
    }
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
    if (j.contains("T")) cfg.T = j.at("T").get<double>();
    if (j.contains("T_prime")) cfg.T_prime = j.at("T_prime").get<double>();
    if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("epsilon_prime")) cfg.epsilon_prime = j.at("epsilon_prime").get<double>();
    if (j.contains("max_learning_iterations")) {
      cfg.max_learning_iterations = j.at("max_learning_iterations").get<int>();
    }
    if (j.contains("c")) cfg.c = j.at("c").get<double>();
    if (j.contains("shape")) cfg.shape = fuzzypg::shape_from_json(j.at("shape").dump());
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", std::string("bad config value: ") + e.what());
  }
}

fuzzypg::MethodConfig to_method_config(const RunConfig& cfg) {
  auto mc = fuzzypg::make_method_config(cfg.method, cfg.reward);
  if (cfg.T) mc.policy.T = *cfg.T;
  if (cfg.T_prime) mc.policy.T_prime = *cfg.T_prime;
  if (cfg.lambda && cfg.method != fuzzypg::Method::Base) mc.policy.lambda = *cfg.lambda;
  if (cfg.epsilon) mc.learn.epsilon = *cfg.epsilon;
  if (cfg.epsilon_prime) mc.learn.epsilon_prime = *cfg.epsilon_prime;
  if (cfg.max_learning_iterations) mc.learn.max_learning_iterations = *cfg.max_learning_iterations;
  if (cfg.c) mc.reward_cfg.c = *cfg.c;
  mc.shape = cfg.shape;
  validate(mc.policy);
  validate(mc.learn);
  return mc;
}

void apply_seed_fallback(RunConfig& cfg) {
  if (cfg.seed_set) return;
  if (const char* env = std::getenv("FUZZYPG_SEED")) {
    cfg.base_seed = std::strtoull(env, nullptr, 10);
  }
}

int cmd_learn(const RunConfig& cfg) {
  if (cfg.repetitions < 1) {
    std::cerr << "error: --reps must be at least 1\n";
    return kExitUsage;
  }
  const auto mc = to_method_config(cfg);

  try {
    fs::create_directories(cfg.out_dir / "weights");
    const auto results = fuzzypg::run_experiments(mc, cfg.repetitions, cfg.base_seed, cfg.jobs);
    const auto stats = fuzzypg::aggregate(results);

    fuzzypg::write_text_file(cfg.out_dir / "results.csv",
                             fuzzypg::results_csv(cfg.method, cfg.reward, results));
    fuzzypg::write_text_file(cfg.out_dir / "summary.csv",
                             fuzzypg::summary_csv(cfg.method, cfg.reward, stats));
    for (const auto& r : results) {
      fuzzypg::save_weights(cfg.out_dir / "weights" / (std::to_string(r.seed) + ".json"),
                            r.final_theta);
    }

    std::cout << "method " << fuzzypg::method_name(cfg.method) << " reward "
              << fuzzypg::reward_name(cfg.reward) << ": S=" << stats.S << "/" << stats.repetitions
              << " S_c=" << stats.S_c << " mean_mc=" << fuzzypg::format_double(stats.mean_mc)
              << " -> " << (cfg.out_dir / "results.csv").string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_evaluate(const RunConfig& cfg, const fs::path& weights_path) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(weights_path, ec)) {
    for (const auto& entry : fs::directory_iterator(weights_path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      std::cerr << "error: no .json weight files in " << weights_path.string() << "\n";
      return kExitUsage;
    }
  } else if (fs::is_regular_file(weights_path, ec)) {
    files.push_back(weights_path);
  } else {
    std::cerr << "error: no such weights path: " << weights_path.string() << "\n";
    return kExitUsage;
  }

  std::vector<fuzzypg::WeightVector> members;
  std::vector<std::string> names;
  for (const auto& file : files) {
    try {
      members.push_back(fuzzypg::load_weights(file));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitFailure;
    }
    names.push_back(file.stem().string());
  }

  try {
    const auto mc = to_method_config(cfg);
    const auto problems = fuzzypg::evaluation_problems();
    const auto report = fuzzypg::evaluate_solutions(mc, members, problems, cfg.jobs);

    fs::create_directories(cfg.out_dir);
    fuzzypg::write_text_file(cfg.out_dir / "evaluation.csv",
                             fuzzypg::evaluation_csv(cfg.method, cfg.reward, names, report, problems));
    fuzzypg::write_text_file(
        cfg.out_dir / "evaluation_summary.csv",
        fuzzypg::evaluation_summary_csv(cfg.method, cfg.reward, report, members.size()));

    std::cout << "evaluated " << members.size() << " weight set(s) on " << problems.size()
              << " problems: S'=" << report.S_prime << " S'_c=" << report.S_prime_c << " -> "
              << (cfg.out_dir / "evaluation.csv").string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_trace(const RunConfig& cfg, const fs::path& weights_file, int problem_index,
              const std::vector<double>& custom, const std::string& out_file) {
  fuzzypg::Problem problem;
  if (!custom.empty()) {
    if (custom.size() != 5) {
      std::cerr << "error: --custom expects leading,following,distance,l1,l2\n";
      return kExitUsage;
    }
    problem = {custom[0], custom[1], custom[2], custom[3], custom[4]};
    try {
      fuzzypg::validate(problem);
    } catch (const std::exception& e) {
      std::cerr << "error: invalid problem: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    const auto problems = fuzzypg::learning_problems();
    if (problem_index < 1 || problem_index > static_cast<int>(problems.size())) {
      std::cerr << "error: --problem must be in 1.." << problems.size() << "\n";
      return kExitUsage;
    }
    problem = problems[static_cast<std::size_t>(problem_index) - 1];
  }

  try {
    const auto mc = to_method_config(cfg);
    const auto theta = fuzzypg::load_weights(weights_file);
    const fuzzypg::PolicyEngine engine(
        fuzzypg::build_car_rulebase(problem.l1, problem.l2, problem.leading_speed, mc.shape),
        fuzzypg::OutputGrid::car_default());
    const auto trace = fuzzypg::run_evaluation_episode(mc, engine, problem, theta);
    const std::string csv = fuzzypg::trace_csv(trace);
    if (out_file.empty() || out_file == "-") {
      std::cout << csv;
    } else {
      fuzzypg::write_text_file(out_file, csv);
      std::cout << "wrote " << trace.states.size() << " rows -> " << out_file << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_validate(int cases, std::uint64_t seed) {
  using namespace fuzzypg::oracle;

  GradientCheckOptions options;
  options.cases = cases;
  options.seed = seed;
  const auto gradient = run_gradient_check(options);
  std::cout << (gradient.passed ? "[PASS]" : "[FAIL]") << " gradient check: base max_rel="
            << fuzzypg::format_double(gradient.base.max_rel_error)
            << " smoothed max_rel=" << fuzzypg::format_double(gradient.smoothed.max_rel_error)
            << " (" << gradient.base.cases_checked << " cases, "
            << fuzzypg::format_double(gradient.seconds) << "s)\n";

  const auto minimizer = run_minimizer_check(cases, seed + 1);
  std::cout << (minimizer.passed ? "[PASS]" : "[FAIL]") << " minimizer check: max_abs="
            << fuzzypg::format_double(minimizer.report.max_abs_error) << " lambda0_bit_identical="
            << (minimizer.lambda_zero_bit_identical ? "yes" : "no") << " ("
            << minimizer.report.cases_checked << " cases)\n";

  const auto distribution = run_distribution_check();
  std::cout << (distribution.passed ? "[PASS]" : "[FAIL]")
            << " distribution check: max_sum_dev="
            << fuzzypg::format_double(distribution.max_sum_deviation)
            << " max_zero_mean=" << fuzzypg::format_double(distribution.max_zero_mean_component)
            << "\n";

  return gradient.passed && minimizer.passed && distribution.passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-fuzzy-rule policy gradient: car speed-control learning"};
  app.require_subcommand(1);

  // Flags land in these locals; precedence is defaults < config file < flags.
  std::string method_str, reward_str, config_file, out_flag;
  int reps_flag = 0;
  std::uint64_t seed_flag = 0;
  int jobs_flag = 0;

  const auto add_common = [&](CLI::App* sub, bool with_reps) {
    sub->add_option("--config", config_file, "JSON config file");
    sub->add_option("--method", method_str, "learning method: i, ii or iii");
    sub->add_option("--reward", reward_str, "reward variant: r1 or r2");
    if (with_reps) sub->add_option("--reps", reps_flag, "number of repetitions");
    sub->add_option("--seed", seed_flag, "base random seed");
    sub->add_option("--jobs", jobs_flag, "worker threads (0 = all cores)");
    sub->add_option("--out", out_flag, "output directory");
  };

  auto* learn = app.add_subcommand("learn", "run learning experiments and store weights");
  add_common(learn, true);

  auto* evaluate = app.add_subcommand("evaluate", "run stored weights on the 697 test problems");
  std::string weights_path;
  evaluate->add_option("--weights", weights_path, "weight file or directory of weight files")
      ->required();
  add_common(evaluate, false);

  auto* trace = app.add_subcommand("trace", "export one deterministic episode as CSV");
  std::string trace_weights, trace_out;
  int problem_index = 1;
  std::vector<double> custom_problem;
  trace->add_option("--weights", trace_weights, "weight file")->required();
  trace->add_option("--problem", problem_index, "training problem number (1-16)");
  trace->add_option("--custom", custom_problem,
                    "custom problem: leading following distance l1 l2")
      ->expected(5);
  trace->add_option("--out", trace_out, "output CSV file ('-' for stdout)");
  trace->add_option("--config", config_file, "JSON config file");
  trace->add_option("--method", method_str, "learning method: i, ii or iii");
  trace->add_option("--reward", reward_str, "reward variant: r1 or r2");

  auto* validate_cmd = app.add_subcommand("validate", "run the numerical oracle suite");
  int validate_cases = 1000;
  std::uint64_t validate_seed = 7;
  validate_cmd->add_option("--cases", validate_cases, "random cases per check");
  validate_cmd->add_option("--seed", validate_seed, "seed for the random cases");

  RunConfig cfg;
  try {
    app.parse(argc, argv);

    if (!config_file.empty()) load_config_file(config_file, cfg);
    const auto given = [](CLI::App* sub, const std::string& name) {
      const CLI::Option* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    for (auto* sub : {learn, evaluate, trace}) {
      if (!sub->parsed()) continue;
      if (given(sub, "--method")) cfg.method = parse_method(method_str);
      if (given(sub, "--reward")) cfg.reward = parse_reward(reward_str);
      if (given(sub, "--seed")) {
        cfg.base_seed = seed_flag;
        cfg.seed_set = true;
      }
      if (given(sub, "--jobs")) cfg.jobs = jobs_flag;
      if (given(sub, "--out") && sub != trace) cfg.out_dir = out_flag;
    }
    if (learn->parsed() && learn->count("--reps")) cfg.repetitions = reps_flag;
    apply_seed_fallback(cfg);

    if (learn->parsed()) return cmd_learn(cfg);
    if (evaluate->parsed()) return cmd_evaluate(cfg, weights_path);
    if (trace->parsed()) {
      return cmd_trace(cfg, trace_weights, problem_index, custom_problem, trace_out);
    }
    if (validate_cmd->parsed()) return cmd_validate(validate_cases, validate_seed);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
