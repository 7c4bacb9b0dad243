// Acceptance gate: one pass/fail line per criterion, non-zero exit if any
// criterion fails. The learning-trend criteria run full experiment cells
// and take several minutes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fuzzypg/csv.hpp"
#include "fuzzypg/experiment.hpp"
#include "fuzzypg/oracle.hpp"
#include "fuzzypg/policy.hpp"
#include "fuzzypg/serialize.hpp"

namespace fs = std::filesystem;
using namespace fuzzypg;

namespace {

struct Gate {
  int failures = 0;

  void record(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

std::string fmt(double v) { return format_double(v); }

int hardware_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Cell {
  Method method;
  RewardVariant reward;
  std::uint64_t base_seed;
};

using CellKey = std::pair<Method, RewardVariant>;

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
#ifdef _WIN32
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  int jobs = hardware_jobs();
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--cli" && a + 1 < argc) cli_path = argv[++a];
    if (arg == "--jobs" && a + 1 < argc) jobs = std::atoi(argv[++a]);
  }

  Gate gate;

  // ---- 1: gradient correctness ------------------------------------------
  {
    oracle::GradientCheckOptions options;  // 1000 cases, delta 1e-6, 1e-4 rel, 1e-8 floor
    const auto check = oracle::run_gradient_check(options);
    const bool in_time = check.seconds < 60.0;
    gate.record(1, "gradient correctness vs finite differences",
                check.passed && in_time,
                "base max_rel=" + fmt(check.base.max_rel_error) +
                    ", smoothed max_rel=" + fmt(check.smoothed.max_rel_error) + ", " +
                    std::to_string(check.base.cases_checked) + " cases in " +
                    fmt(check.seconds) + "s");
  }

  // ---- 2: closed-form minimizer ------------------------------------------
  {
    const auto check = oracle::run_minimizer_check(1000, 11, 1e-4);
    gate.record(2, "closed-form minimizer vs exhaustive search",
                check.passed && check.lambda_zero_bit_identical,
                "max_abs=" + fmt(check.report.max_abs_error) + " over " +
                    std::to_string(check.report.cases_checked) +
                    " triples, lambda0 bit-identical=" +
                    (check.lambda_zero_bit_identical ? "yes" : "no"));
  }

  // ---- 3: distribution sanity --------------------------------------------
  {
    const auto check = oracle::run_distribution_check(200, 13, 1e-12, 1e-10);
    gate.record(3, "distribution normalization and eligibility zero-mean", check.passed,
                "max_sum_dev=" + fmt(check.max_sum_deviation) +
                    ", max_zero_mean=" + fmt(check.max_zero_mean_component));
  }

  // ---- 4: dynamics check ---------------------------------------------------
  {
    CarState s{0, 50.0, 0.0};
    for (int k = 0; k < 10; ++k) s = step(s, 5.0, 20.0);
    const bool full_pedal = s.following_speed == 100.0;

    const Problem p{30.0, 30.0, 40.0, 30.0, 45.0};
    const auto trace = run_episode(p, [](const CarState&) { return 0.0; });
    bool constant = trace.states.size() == kEpisodeLength + 1;
    for (const auto& state : trace.states) constant = constant && state.distance == 40.0;

    gate.record(4, "vehicle dynamics",
                full_pedal && constant,
                std::string("speed after 10 full-pedal steps=") + fmt(s.following_speed) +
                    ", zero-input distance constant=" + (constant ? "yes" : "no"));
  }

  // ---- learning cells shared by criteria 5-9 ------------------------------
  constexpr int kTrendReps = 500;
  constexpr int kFeasibleReps = 200;
  const std::vector<Cell> cells = {
      {Method::Base, RewardVariant::r1, 10001},
      {Method::Base, RewardVariant::r2, 20001},
      {Method::Gravity, RewardVariant::r1, 30001},
      {Method::Gravity, RewardVariant::r2, 40001},
      {Method::GravitySmooth, RewardVariant::r1, 50001},
      {Method::GravitySmooth, RewardVariant::r2, 60001},
  };

  std::map<CellKey, std::vector<ExperimentResult>> runs;
  for (const auto& cell : cells) {
    const auto cfg = make_method_config(cell.method, cell.reward);
    const auto start = std::chrono::steady_clock::now();
    runs[{cell.method, cell.reward}] = run_experiments(cfg, kTrendReps, cell.base_seed, jobs);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto stats = aggregate(runs[{cell.method, cell.reward}]);
    std::printf("[info] cell method=%s reward=%s: S=%d/%d S_c=%d mean_mc=%s (%.1fs)\n",
                method_name(cell.method), reward_name(cell.reward), stats.S, kTrendReps,
                stats.S_c, fmt(stats.mean_mc).c_str(), secs);
    std::fflush(stdout);
  }

  // ---- 5: desk-scale learning success (first 200 repetitions per cell) ----
  {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& cell : cells) {
      const auto& all = runs[{cell.method, cell.reward}];
      int solved = 0;
      for (int k = 0; k < kFeasibleReps; ++k) solved += all[k].solved_all ? 1 : 0;
      const double fraction = static_cast<double>(solved) / kFeasibleReps;
      pass = pass && fraction >= 0.90;
      detail << method_name(cell.method) << "/" << reward_name(cell.reward) << "="
             << fmt(fraction) << " ";
    }
    gate.record(5, "feasible fraction >= 0.90 per cell at 200 repetitions", pass, detail.str());
  }

  // ---- 6: smoothing-improvement trend --------------------------------------
  {
    const int sc_i_r1 = aggregate(runs[{Method::Base, RewardVariant::r1}]).S_c;
    const int sc_iii_r1 = aggregate(runs[{Method::GravitySmooth, RewardVariant::r1}]).S_c;
    const int sc_i_r2 = aggregate(runs[{Method::Base, RewardVariant::r2}]).S_c;
    const int sc_iii_r2 = aggregate(runs[{Method::GravitySmooth, RewardVariant::r2}]).S_c;
    const bool pass = sc_iii_r1 > sc_i_r1 && sc_iii_r2 > sc_i_r2;
    gate.record(6, "smoothing improves S_c from method i to iii", pass,
                "r1: " + std::to_string(sc_i_r1) + " -> " + std::to_string(sc_iii_r1) +
                    ", r2: " + std::to_string(sc_i_r2) + " -> " + std::to_string(sc_iii_r2));
  }

  // ---- 7: reward-design effect ---------------------------------------------
  {
    const double mc_i_r1 = aggregate(runs[{Method::Base, RewardVariant::r1}]).mean_mc;
    const double mc_i_r2 = aggregate(runs[{Method::Base, RewardVariant::r2}]).mean_mc;
    const double mc_ii_r1 = aggregate(runs[{Method::Gravity, RewardVariant::r1}]).mean_mc;
    const double mc_ii_r2 = aggregate(runs[{Method::Gravity, RewardVariant::r2}]).mean_mc;
    const bool pass = mc_i_r2 < mc_i_r1 && mc_ii_r2 < mc_ii_r1;
    gate.record(7, "r2 reduces the mean learning count for methods i and ii", pass,
                "i: " + fmt(mc_i_r1) + " -> " + fmt(mc_i_r2) + ", ii: " + fmt(mc_ii_r1) +
                    " -> " + fmt(mc_ii_r2));
  }

  // ---- 8: rule polarity ------------------------------------------------------
  {
    const auto& results = runs[{Method::GravitySmooth, RewardVariant::r1}];
    std::vector<double> mean(20, 0.0);
    int count = 0;
    for (const auto& r : results) {
      if (!r.smooth) continue;
      ++count;
      for (std::size_t i = 0; i < 20; ++i) mean[i] += r.final_theta[i];
    }
    for (double& v : mean) v /= std::max(count, 1);
    const bool pass = count > 0 && mean[5] > mean[7] && mean[12] > mean[10];
    gate.record(8, "correct rules outweigh their opposites over S_c", pass,
                "cell iii/r1, |S_c|=" + std::to_string(count) + ": theta6=" + fmt(mean[5]) +
                    " > theta8=" + fmt(mean[7]) + ", theta13=" + fmt(mean[12]) +
                    " > theta11=" + fmt(mean[10]));
  }

  // ---- 9: evaluation pipeline ------------------------------------------------
  {
    const auto problems = evaluation_problems();
    bool composition = problems.size() == 697;
    int excluded_hits = 0;
    for (std::size_t i = 625; i < problems.size(); ++i) {
      if (problems[i].leading_speed == 50.0 && problems[i].distance_init == 20.0) ++excluded_hits;
    }
    composition = composition && problems.size() - 625 == 72 && excluded_hits == 0;

    const auto& results = runs[{Method::GravitySmooth, RewardVariant::r1}];
    std::vector<WeightVector> members;
    for (const auto& r : results) {
      if (r.smooth) members.push_back(r.final_theta);
    }
    const auto start = std::chrono::steady_clock::now();
    const auto cfg = make_method_config(Method::GravitySmooth, RewardVariant::r1);
    const auto report = evaluate_solutions(cfg, members, problems, jobs);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool chain = report.S_prime_c <= report.S_prime &&
                       report.S_prime <= static_cast<int>(members.size());
    gate.record(9, "697-problem evaluation pipeline and subset chain", composition && chain,
                "problems=" + std::to_string(problems.size()) + ", |S_c|=" +
                    std::to_string(members.size()) + " >= |S'|=" + std::to_string(report.S_prime) +
                    " >= |S'_c|=" + std::to_string(report.S_prime_c) + ", mean_tin'=" +
                    fmt(report.mean_tin_prime_c) + ", " + fmt(secs) + "s");
  }

  // ---- 10: byte-identical reruns through the CLI -----------------------------
  {
    bool pass = false;
    std::string detail;
    if (cli_path.empty() || !fs::exists(cli_path)) {
      detail = "CLI binary not found: '" + cli_path + "'";
    } else {
      const fs::path work = fs::temp_directory_path() / "fuzzypg_acceptance_cli";
      fs::remove_all(work);
      fs::create_directories(work);
      const std::string flags = " learn --method iii --reward r1 --reps 3 --seed 7101 --jobs 2";
      const int rc_a =
          run_command(cli_path + flags + " --out " + (work / "a").string() + " > /dev/null 2>&1");
      const int rc_b =
          run_command(cli_path + flags + " --out " + (work / "b").string() + " > /dev/null 2>&1");
      if (rc_a == 0 && rc_b == 0) {
        bool same = read_text_file(work / "a" / "results.csv") ==
                    read_text_file(work / "b" / "results.csv");
        same = same && read_text_file(work / "a" / "summary.csv") ==
                           read_text_file(work / "b" / "summary.csv");
        for (int seed = 7101; seed <= 7103; ++seed) {
          same = same && read_text_file(work / "a" / "weights" / (std::to_string(seed) + ".json")) ==
                             read_text_file(work / "b" / "weights" /
                                            (std::to_string(seed) + ".json"));
        }
        pass = same;
        detail = same ? "results.csv, summary.csv and 3 weight files byte-identical"
                      : "rerun outputs differ";
      } else {
        detail = "learn runs exited " + std::to_string(rc_a) + "/" + std::to_string(rc_b);
      }
      fs::remove_all(work);
    }
    gate.record(10, "reproducible CLI runs", pass, detail);
  }

  if (gate.failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
  return 1;
}
