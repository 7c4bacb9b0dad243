#include "fuzzypg/experiment.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "fuzzypg/policy.hpp"

namespace fuzzypg {

const char* method_name(Method method) {
  switch (method) {
    case Method::Base: return "i";
    case Method::Gravity: return "ii";
    case Method::GravitySmooth: return "iii";
  }
  throw std::logic_error("unreachable method");
}

double MethodConfig::learning_rate() const {
  return method == Method::Base ? learn.epsilon : learn.epsilon_prime;
}

MethodConfig make_method_config(Method method, RewardVariant reward_variant) {
  MethodConfig cfg;
  cfg.method = method;
  cfg.reward_variant = reward_variant;
  cfg.policy.lambda = method == Method::GravitySmooth ? 0.06 : 0.0;
  return cfg;
}

namespace {

double episode_reward(const MethodConfig& cfg, const EpisodeTrace& trace) {
  if (cfg.reward_fn) return cfg.reward_fn(trace.outcome, trace.problem);
  return reward(trace.outcome, cfg.reward_variant, cfg.reward_cfg, trace.problem.l1,
                trace.problem.l2);
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Fn>
void parallel_for(int count, int jobs, Fn&& body) {
  jobs = std::min(resolve_jobs(jobs), count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& worker : workers) worker.join();
}

}  // namespace

std::pair<EpisodeTrace, EligibilityTrace> run_learning_episode(const MethodConfig& cfg,
                                                               const PolicyEngine& engine,
                                                               const Problem& problem,
                                                               const WeightVector& theta,
                                                               double y_prev0, Rng& rng) {
  EligibilityTrace elig(engine.rule_count());
  const auto& grid = engine.grid();

  EpisodeTrace trace;
  if (cfg.method == Method::Base) {
    trace = run_episode(problem, [&](const CarState& s) {
      const double x[2] = {s.distance, s.following_speed};
      const auto antecedents = engine.antecedent_truths(x);
      const auto pi = engine.policy(theta, antecedents, cfg.policy.T);
      const std::size_t h = sample_index(pi, rng);
      elig.add(eligibility_base_given(engine, antecedents, pi, h, cfg.policy.T));
      return grid.values[h];
    });
  } else {
    double y_prev = y_prev0;
    trace = run_episode(problem, [&](const CarState& s) {
      const double x[2] = {s.distance, s.following_speed};
      const auto antecedents = engine.antecedent_truths(x);
      const auto pi = engine.policy(theta, antecedents, cfg.policy.T);
      const double y_G = gravity_center(pi, grid);
      const auto pi_prime = smoothed_policy(y_G, y_prev, cfg.policy, grid);
      const std::size_t h = sample_index(pi_prime, rng);
      const double y_t = grid.values[h];
      elig.add(eligibility_smoothed_given(engine, antecedents, pi, y_G, pi_prime, y_t,
                                          cfg.policy.T, cfg.policy.T_prime));
      y_prev = y_t;
      return y_t;
    });
  }
  return {std::move(trace), std::move(elig)};
}

EpisodeTrace run_evaluation_episode(const MethodConfig& cfg, const PolicyEngine& engine,
                                    const Problem& problem, const WeightVector& theta,
                                    double y_prev0) {
  const auto& grid = engine.grid();
  double y_prev = y_prev0;
  return run_episode(problem, [&](const CarState& s) {
    const double x[2] = {s.distance, s.following_speed};
    const auto pi = engine.policy(theta, engine.antecedent_truths(x), cfg.policy.T);
    const double y_G = gravity_center(pi, grid);
    if (cfg.method == Method::Base) return y_G;
    const double y_O = deterministic_output(y_G, y_prev, cfg.policy.lambda);
    y_prev = y_O;
    return y_O;
  });
}

ExperimentResult learning_experiment(const MethodConfig& cfg, std::uint64_t seed) {
  validate(cfg.policy);
  validate(cfg.learn);

  const auto problems = learning_problems();
  const auto grid = OutputGrid::car_default();
  std::vector<PolicyEngine> engines;
  engines.reserve(problems.size());
  for (const auto& p : problems) {
    engines.emplace_back(build_car_rulebase(p.l1, p.l2, p.leading_speed, cfg.shape), grid);
  }

  Rng rng(seed);
  WeightVector theta = WeightVector::uniform(engines.front().rule_count());
  const double rate = cfg.learning_rate();

  ExperimentResult result;
  result.seed = seed;
  result.t_in.assign(problems.size(), -1);

  for (int iteration = 1; iteration <= cfg.learn.max_learning_iterations; ++iteration) {
    result.m_c = iteration;

    // Learning sweep: stochastic rollout, per-episode update, renormalize.
    for (std::size_t p = 0; p < problems.size(); ++p) {
      auto [trace, elig] = run_learning_episode(cfg, engines[p], problems[p], theta, 0.0, rng);
      theta = update_weights(theta, elig, episode_reward(cfg, trace), rate);
    }

    // Evaluation sweep: deterministic rollouts, goal check per problem.
    bool all_solved = true;
    bool all_smooth = true;
    for (std::size_t p = 0; p < problems.size(); ++p) {
      const auto trace = run_evaluation_episode(cfg, engines[p], problems[p], theta, 0.0);
      const bool pass = trace.outcome.kind == OutcomeKind::Success;
      result.t_in[p] = pass ? trace.outcome.t_in : -1;
      all_solved = all_solved && pass;
      all_smooth = all_smooth && pass && check_smoothness(trace);
    }
    if (all_solved) {
      result.solved_all = true;
      result.smooth = all_smooth;
      break;
    }
  }
  result.final_theta = std::move(theta);
  return result;
}

bool check_smoothness(const EpisodeTrace& trace) {
  if (trace.states.size() != static_cast<std::size_t>(kEpisodeLength) + 1) return false;
  const double v_end = trace.states[kEpisodeLength].following_speed;
  const double v_prev = trace.states[kEpisodeLength - 1].following_speed;
  return std::abs(v_end - v_prev) < 0.1 && std::abs(v_end - trace.problem.leading_speed) < 0.1;
}

std::vector<ExperimentResult> run_experiments(const MethodConfig& cfg, int repetitions,
                                              std::uint64_t base_seed, int jobs) {
  if (repetitions < 0) throw std::invalid_argument("repetitions must be non-negative");
  std::vector<ExperimentResult> results(static_cast<std::size_t>(repetitions));
  parallel_for(repetitions, jobs, [&](int i) {
    results[static_cast<std::size_t>(i)] =
        learning_experiment(cfg, base_seed + static_cast<std::uint64_t>(i));
  });
  return results;
}

EvaluationReport evaluate_solutions(const MethodConfig& cfg,
                                    const std::vector<WeightVector>& members,
                                    const std::vector<Problem>& problems, int jobs) {
  EvaluationReport report;
  report.members.resize(members.size());

  const auto grid = OutputGrid::car_default();
  std::vector<PolicyEngine> engines;
  engines.reserve(problems.size());
  for (const auto& p : problems) {
    engines.emplace_back(build_car_rulebase(p.l1, p.l2, p.leading_speed, cfg.shape), grid);
  }

  parallel_for(static_cast<int>(members.size()), jobs, [&](int m) {
    auto& eval = report.members[static_cast<std::size_t>(m)];
    const auto& theta = members[static_cast<std::size_t>(m)];
    eval.t_in.assign(problems.size(), -1);
    eval.passed.assign(problems.size(), 0);
    eval.smooth.assign(problems.size(), 0);
    eval.all_passed = true;
    eval.all_smooth = true;
    for (std::size_t p = 0; p < problems.size(); ++p) {
      const auto trace = run_evaluation_episode(cfg, engines[p], problems[p], theta, 0.0);
      const bool pass = trace.outcome.kind == OutcomeKind::Success;
      const bool smooth = pass && check_smoothness(trace);
      eval.passed[p] = pass ? 1 : 0;
      eval.smooth[p] = smooth ? 1 : 0;
      eval.t_in[p] = pass ? trace.outcome.t_in : -1;
      eval.all_passed = eval.all_passed && pass;
      eval.all_smooth = eval.all_smooth && smooth;
    }
  });

  double tin_sum = 0.0;
  long tin_count = 0;
  for (const auto& eval : report.members) {
    if (eval.all_passed) ++report.S_prime;
    if (eval.all_passed && eval.all_smooth) {
      ++report.S_prime_c;
      for (int t : eval.t_in) {
        tin_sum += t;
        ++tin_count;
      }
    }
  }
  report.mean_tin_prime_c = tin_count > 0 ? tin_sum / tin_count : 0.0;
  return report;
}

SolutionStats aggregate(const std::vector<ExperimentResult>& results) {
  SolutionStats stats;
  stats.repetitions = static_cast<int>(results.size());
  if (!results.empty()) stats.base_seed = results.front().seed;

  double mc_sum_c = 0.0;
  double mc_sum_s = 0.0;
  double tin_sum = 0.0;
  long tin_count = 0;
  for (const auto& r : results) {
    if (r.solved_all) {
      ++stats.S;
      mc_sum_s += r.m_c;
    }
    if (r.smooth) {
      ++stats.S_c;
      mc_sum_c += r.m_c;
      for (int t : r.t_in) {
        tin_sum += t;
        ++tin_count;
      }
    }
  }
  stats.mean_mc = stats.S_c > 0 ? mc_sum_c / stats.S_c : 0.0;
  stats.mean_mc_over_S = stats.S > 0 ? mc_sum_s / stats.S : 0.0;
  stats.mean_tin_c = tin_count > 0 ? tin_sum / tin_count : 0.0;
  return stats;
}

SolutionStats aggregate_with_evaluation(const std::vector<ExperimentResult>& results,
                                        const EvaluationReport& report) {
  SolutionStats stats = aggregate(results);
  stats.evaluation_run = true;
  stats.S_prime = report.S_prime;
  stats.S_prime_c = report.S_prime_c;
  stats.mean_tin_prime_c = report.mean_tin_prime_c;
  return stats;
}

}  // namespace fuzzypg
