#include <benchmark/benchmark.h>

#include "fuzzypg/experiment.hpp"
#include "fuzzypg/policy.hpp"

using namespace fuzzypg;

namespace {

const Problem& bench_problem() {
  static const Problem p = learning_problems()[0];
  return p;
}

const PolicyEngine& bench_engine() {
  static const PolicyEngine engine(
      build_car_rulebase(bench_problem().l1, bench_problem().l2, bench_problem().leading_speed),
      OutputGrid::car_default());
  return engine;
}

}  // namespace

static void BM_AntecedentTruths(benchmark::State& state) {
  const auto& engine = bench_engine();
  const double x[2] = {42.0, 25.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.antecedent_truths(x));
  }
}
BENCHMARK(BM_AntecedentTruths);

static void BM_BoltzmannPolicy(benchmark::State& state) {
  const auto& engine = bench_engine();
  const auto theta = WeightVector::uniform(20);
  const double x[2] = {42.0, 25.0};
  const auto antecedents = engine.antecedent_truths(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.policy(theta, antecedents, 0.04));
  }
}
BENCHMARK(BM_BoltzmannPolicy);

static void BM_EligibilitySmoothed(benchmark::State& state) {
  const auto& engine = bench_engine();
  const auto theta = WeightVector::uniform(20);
  const double x[2] = {42.0, 25.0};
  PolicyParams params;
  params.lambda = 0.06;
  const auto antecedents = engine.antecedent_truths(x);
  const auto pi = engine.policy(theta, antecedents, params.T);
  const double y_G = gravity_center(pi, engine.grid());
  const auto pi_prime = smoothed_policy(y_G, 0.0, params, engine.grid());
  for (auto _ : state) {
    benchmark::DoNotOptimize(eligibility_smoothed_given(engine, antecedents, pi, y_G, pi_prime,
                                                        0.3, params.T, params.T_prime));
  }
}
BENCHMARK(BM_EligibilitySmoothed);

static void BM_EvaluationEpisode(benchmark::State& state) {
  const auto cfg = make_method_config(Method::GravitySmooth, RewardVariant::r1);
  const auto& engine = bench_engine();
  const auto theta = WeightVector::uniform(20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_evaluation_episode(cfg, engine, bench_problem(), theta));
  }
}
BENCHMARK(BM_EvaluationEpisode);

static void BM_LearningEpisode(benchmark::State& state) {
  const auto cfg = make_method_config(Method::GravitySmooth, RewardVariant::r1);
  const auto& engine = bench_engine();
  const auto theta = WeightVector::uniform(20);
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_learning_episode(cfg, engine, bench_problem(), theta, 0.0, rng));
  }
}
BENCHMARK(BM_LearningEpisode);

static void BM_LearningExperiment(benchmark::State& state) {
  const auto cfg = make_method_config(Method::GravitySmooth, RewardVariant::r2);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(learning_experiment(cfg, seed++));
  }
}
BENCHMARK(BM_LearningExperiment)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
