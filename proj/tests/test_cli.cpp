// Exercises the installed command-line surface end to end: argument
// validation, file outputs, determinism of reruns, exit codes.
// Usage: fuzzypg_cli_tests <path-to-fuzzypg-binary>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "fuzzypg/serialize.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "[ok] " << what << "\n";
  } else {
    std::cout << "[FAILED] " << what << "\n";
    ++failures;
  }
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
#ifdef _WIN32
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: fuzzypg_cli_tests <fuzzypg binary>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = fs::temp_directory_path() / "fuzzypg_cli_test";
  fs::remove_all(work);
  fs::create_directories(work);

  const std::string quiet = " > /dev/null 2>&1";

  // --- usage errors ---
  expect(run(cli + " learn --reps 0 --out " + (work / "z").string() + quiet) == 2,
         "learn --reps 0 is a usage error");
  expect(run(cli + " learn --method iv" + quiet) == 2, "unknown method is a usage error");
  expect(run(cli + " learn --config " + (work / "missing.json").string() + quiet) == 2,
         "unreadable config is a usage error");
  expect(run(cli + " evaluate --weights " + (work / "nowhere").string() + quiet) == 2,
         "missing weights path is a usage error");
  expect(run(cli + quiet) == 2, "missing subcommand is a usage error");

  // --- learn: outputs and determinism ---
  const fs::path out_a = work / "a";
  const fs::path out_b = work / "b";
  const std::string learn_flags = " learn --method iii --reward r2 --reps 2 --seed 42 --jobs 2";
  expect(run(cli + learn_flags + " --out " + out_a.string() + quiet) == 0, "learn runs");
  expect(run(cli + learn_flags + " --out " + out_b.string() + quiet) == 0, "learn reruns");

  expect(fs::exists(out_a / "results.csv"), "results.csv written");
  expect(fs::exists(out_a / "summary.csv"), "summary.csv written");
  expect(fs::exists(out_a / "weights" / "42.json") && fs::exists(out_a / "weights" / "43.json"),
         "one weight file per seed");

  const std::string results_a = fuzzypg::read_text_file(out_a / "results.csv");
  expect(count_lines(results_a) == 3, "results.csv has a header plus one row per repetition");
  expect(results_a == fuzzypg::read_text_file(out_b / "results.csv"),
         "rerun produces byte-identical results.csv");
  expect(fuzzypg::read_text_file(out_a / "weights" / "42.json") ==
             fuzzypg::read_text_file(out_b / "weights" / "42.json"),
         "rerun produces byte-identical weight files");

  // --- config file + flag precedence ---
  fuzzypg::write_text_file(work / "config.json",
                           "{\"method\": \"i\", \"reward\": \"r1\", \"repetitions\": 1,"
                           " \"base_seed\": 9, \"out\": \"" + (work / "cfg_out").string() + "\"}");
  expect(run(cli + " learn --config " + (work / "config.json").string() + " --reps 1" + quiet) == 0,
         "learn with config file runs");
  expect(fs::exists(work / "cfg_out" / "weights" / "9.json"), "config seed and out dir honored");

  // --- evaluate ---
  const fs::path eval_out = work / "eval";
  expect(run(cli + " evaluate --weights " + (out_a / "weights").string() +
             " --method iii --reward r2 --jobs 2 --out " + eval_out.string() + quiet) == 0,
         "evaluate runs on a weights directory");
  const std::string eval_csv = fuzzypg::read_text_file(eval_out / "evaluation.csv");
  expect(count_lines(eval_csv) == 1 + 2 * 697, "evaluation.csv has 697 rows per weight set");
  expect(fs::exists(eval_out / "evaluation_summary.csv"), "evaluation summary written");

  fuzzypg::write_text_file(work / "garbage.json", "[0.5, oops");
  const int bad_eval =
      run(cli + " evaluate --weights " + (work / "garbage.json").string() + quiet);
  expect(bad_eval == 1, "malformed weight file exits 1");

  // The untrained uniform controller must complete the evaluation and be
  // reported as failing at least one held-out problem.
  fs::create_directories(work / "uniform");
  fuzzypg::write_text_file(work / "uniform" / "u.json",
                           "[0.05,0.05,0.05,0.05,0.05,0.05,0.05,0.05,0.05,0.05,"
                           "0.05,0.05,0.05,0.05,0.05,0.05,0.05,0.05,0.05,0.05]");
  const fs::path uniform_out = work / "uniform_eval";
  expect(run(cli + " evaluate --weights " + (work / "uniform" / "u.json").string() +
             " --method i --reward r1 --jobs 2 --out " + uniform_out.string() + quiet) == 0,
         "uniform weights evaluate cleanly");
  const std::string uniform_csv = fuzzypg::read_text_file(uniform_out / "evaluation.csv");
  expect(uniform_csv.find(",0,0,-1\n") != std::string::npos,
         "uniform weights fail at least one test problem");

  // --- trace ---
  const fs::path trace_file = work / "trace.csv";
  expect(run(cli + " trace --weights " + (out_a / "weights" / "42.json").string() +
             " --method iii --problem 1 --out " + trace_file.string() + quiet) == 0,
         "trace runs");
  const std::string trace_csv = fuzzypg::read_text_file(trace_file);
  expect(count_lines(trace_csv) <= 112, "trace has at most 111 state rows");
  expect(trace_csv.find("\n0,50,30,") != std::string::npos,
         "trace first row echoes the initial conditions");
  expect(run(cli + " trace --weights " + (out_a / "weights" / "42.json").string() +
             " --problem 99" + quiet) == 2,
         "out-of-range problem number is a usage error");

  // --- validate ---
  expect(run(cli + " validate --cases 50" + quiet) == 0, "validate passes");

  // --- FUZZYPG_SEED fallback ---
  expect(run("FUZZYPG_SEED=77 " + cli + " learn --method i --reward r1 --reps 1 --out " +
             (work / "env_seed").string() + quiet) == 0,
         "learn with env seed runs");
  expect(fs::exists(work / "env_seed" / "weights" / "77.json"), "FUZZYPG_SEED fallback honored");

  fs::remove_all(work);
  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << failures << " cli check(s) failed\n";
  return 1;
}
