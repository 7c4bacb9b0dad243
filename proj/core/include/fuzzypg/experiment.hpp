#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fuzzypg/car_env.hpp"
#include "fuzzypg/learning.hpp"
#include "fuzzypg/rules.hpp"
#include "fuzzypg/weights.hpp"

namespace fuzzypg {

/// The three learning set-ups. Base learns on the rule-support policy and
/// evaluates with the gravity center y_G. Gravity learns on the smoothed
/// policy around y_G with lambda = 0 and evaluates with y_O; GravitySmooth
/// is the same with the time-smoothing penalty active (lambda = 0.06).
/// External names ("method" flags, CSV fields) are "i", "ii", "iii".
enum class Method { Base, Gravity, GravitySmooth };

const char* method_name(Method method);

struct MethodConfig {
  Method method = Method::GravitySmooth;
  RewardVariant reward_variant = RewardVariant::r1;
  PolicyParams policy;
  LearnParams learn;
  RewardConfig reward_cfg;
  ShapeConfig shape;

  /// Test hook: replaces the configured reward computation when set.
  std::function<double(const Outcome&, const Problem&)> reward_fn;

  /// epsilon for Base, epsilon_prime for the smoothed methods.
  double learning_rate() const;
};

/// Defaults for a (method, reward) cell: T = T' = 0.04, epsilon = 0.0075,
/// epsilon' = 0.0003, lambda 0 or 0.06 by method, c = -0.01, 200-iteration cap.
MethodConfig make_method_config(Method method, RewardVariant reward_variant);

struct ExperimentResult {
  std::uint64_t seed = 0;
  WeightVector final_theta;
  int m_c = 0;            // learning iterations actually run, <= cap
  bool solved_all = false;  // membership in S
  bool smooth = false;      // membership in S_c (implies solved_all)
  std::vector<int> t_in;    // per training problem, -1 where unsolved
};

/// Aggregates over one (method, reward) cell.
struct SolutionStats {
  int repetitions = 0;
  std::uint64_t base_seed = 0;
  int S = 0;
  int S_c = 0;
  double mean_mc = 0.0;         // over S_c
  double mean_mc_over_S = 0.0;  // over S
  double mean_tin_c = 0.0;      // over all (solution in S_c, problem) pairs

  bool evaluation_run = false;  // the held-out suite was applied to S_c
  int S_prime = 0;
  int S_prime_c = 0;
  double mean_tin_prime_c = 0.0;
};

/// One stochastic rollout of a training problem: samples actions from the
/// method's policy and accumulates the matching characteristic
/// eligibility at every step. y_prev0 seeds the smoothing state at t = 0.
std::pair<EpisodeTrace, EligibilityTrace> run_learning_episode(const MethodConfig& cfg,
                                                               const PolicyEngine& engine,
                                                               const Problem& problem,
                                                               const WeightVector& theta,
                                                               double y_prev0, Rng& rng);

/// Deterministic rollout with y_G (Base) or y_O (smoothed methods).
EpisodeTrace run_evaluation_episode(const MethodConfig& cfg, const PolicyEngine& engine,
                                    const Problem& problem, const WeightVector& theta,
                                    double y_prev0 = 0.0);

/// Full learning run: alternate a learning sweep and an evaluation sweep
/// over the 16 training problems until every one is solved or the
/// iteration cap is hit.
ExperimentResult learning_experiment(const MethodConfig& cfg, std::uint64_t seed);

/// No rapid speed change at the end of the episode: the final acceleration
/// and the final speed mismatch against the leading car are both below
/// 0.1 km/h. False for traces that terminated early.
bool check_smoothness(const EpisodeTrace& trace);

/// Independent experiments with seeds base_seed + 0 .. base_seed + reps-1,
/// fanned out over `jobs` threads (<= 0 means hardware concurrency).
/// Results are ordered by repetition index regardless of scheduling.
std::vector<ExperimentResult> run_experiments(const MethodConfig& cfg, int repetitions,
                                              std::uint64_t base_seed, int jobs = 1);

struct MemberEvaluation {
  bool all_passed = false;   // membership in S'
  bool all_smooth = false;   // membership in S'_c (implies all_passed)
  std::vector<int> t_in;       // per evaluation problem, -1 on failure
  std::vector<std::uint8_t> passed;
  std::vector<std::uint8_t> smooth;
};

struct EvaluationReport {
  std::vector<MemberEvaluation> members;
  int S_prime = 0;
  int S_prime_c = 0;
  double mean_tin_prime_c = 0.0;  // over (member in S'_c, problem) pairs
};

/// Applies the deterministic controller of every weight set to every
/// held-out problem.
EvaluationReport evaluate_solutions(const MethodConfig& cfg,
                                    const std::vector<WeightVector>& members,
                                    const std::vector<Problem>& problems, int jobs = 1);

SolutionStats aggregate(const std::vector<ExperimentResult>& results);

/// aggregate() plus the held-out counts folded in.
SolutionStats aggregate_with_evaluation(const std::vector<ExperimentResult>& results,
                                        const EvaluationReport& report);

}  // namespace fuzzypg
