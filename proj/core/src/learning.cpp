#include "fuzzypg/learning.hpp"

#include <stdexcept>

namespace fuzzypg {

void validate(const PolicyParams& params) {
  if (!(params.T > 0.0) || !(params.T_prime > 0.0)) {
    throw std::invalid_argument("temperatures must be positive");
  }
  if (!(params.lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
}

void validate(const LearnParams& params) {
  if (!(params.epsilon > 0.0) || !(params.epsilon_prime > 0.0)) {
    throw std::invalid_argument("learning rates must be positive");
  }
  if (params.max_learning_iterations <= 0) {
    throw std::invalid_argument("max_learning_iterations must be positive");
  }
}

void EligibilityTrace::add(std::span<const double> step_eligibility) {
  if (step_eligibility.size() != sums.size()) {
    throw std::invalid_argument("eligibility length does not match trace");
  }
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += step_eligibility[i];
}

double smoothed_energy(double y, double y_G, double y_prev, double lambda) {
  const double d = y - y_G;
  const double s = y - y_prev;
  return 0.5 * d * d + lambda * s * s;
}

PolicyDistribution smoothed_policy(double y_G, double y_prev, const PolicyParams& params,
                                   const OutputGrid& grid) {
  std::vector<double> e(grid.size());
  for (std::size_t h = 0; h < grid.size(); ++h) {
    e[h] = smoothed_energy(grid.values[h], y_G, y_prev, params.lambda);
  }
  PolicyDistribution dist;
  dist.probs.resize(e.size());
  detail::boltzmann_probs(e, params.T_prime, dist.probs);
  return dist;
}

double deterministic_output(double y_G, double y_prev, double lambda) {
  return (y_G + 2.0 * lambda * y_prev) / (1.0 + 2.0 * lambda);
}

std::vector<double> eligibility_base(const PolicyEngine& engine, const WeightVector& theta,
                                     std::span<const double> x, double y_t, double T) {
  const auto antecedents = engine.antecedent_truths(x);
  const auto pi = engine.policy(theta, antecedents, T);
  return eligibility_base_given(engine, antecedents, pi, engine.grid().index_of(y_t), T);
}

std::vector<double> eligibility_smoothed(const PolicyEngine& engine, const WeightVector& theta,
                                         std::span<const double> x, double y_t, double y_prev,
                                         const PolicyParams& params) {
  const auto antecedents = engine.antecedent_truths(x);
  const auto pi = engine.policy(theta, antecedents, params.T);
  const double y_G = gravity_center(pi, engine.grid());
  const auto pi_prime = smoothed_policy(y_G, y_prev, params, engine.grid());
  engine.grid().index_of(y_t);  // enforce the on-grid precondition
  return eligibility_smoothed_given(engine, antecedents, pi, y_G, pi_prime, y_t, params.T,
                                    params.T_prime);
}

std::vector<double> eligibility_base_given(const PolicyEngine& engine,
                                           std::span<const double> antecedents,
                                           const PolicyDistribution& pi, std::size_t y_index,
                                           double T) {
  const std::size_t n = engine.rule_count();
  const std::size_t g = engine.grid().size();
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = engine.consequent_row(i);
    double expectation = 0.0;
    for (std::size_t h = 0; h < g; ++h) expectation += row[h] * pi.probs[h];
    e[i] = antecedents[i] / T * (row[y_index] - expectation);
  }
  return e;
}

std::vector<double> eligibility_smoothed_given(const PolicyEngine& engine,
                                               std::span<const double> antecedents,
                                               const PolicyDistribution& pi, double y_G,
                                               const PolicyDistribution& pi_prime, double y_t,
                                               double T, double T_prime) {
  const std::size_t n = engine.rule_count();
  const std::size_t g = engine.grid().size();
  const auto& grid = engine.grid().values;

  // q_h = (y_h - y_G) * pi_h, shared by every rule's expectation.
  std::vector<double> q(g);
  double y_mean_prime = 0.0;
  for (std::size_t h = 0; h < g; ++h) {
    q[h] = (grid[h] - y_G) * pi.probs[h];
    y_mean_prime += grid[h] * pi_prime.probs[h];
  }

  const double deviation = y_t - y_mean_prime;
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = engine.consequent_row(i);
    double moment = 0.0;
    for (std::size_t h = 0; h < g; ++h) moment += row[h] * q[h];
    e[i] = antecedents[i] / (T * T_prime) * moment * deviation;
  }
  return e;
}

WeightVector update_weights(const WeightVector& theta, const EligibilityTrace& trace, double r,
                            double rate) {
  if (trace.size() != theta.size()) {
    throw std::invalid_argument("trace length does not match weight vector");
  }
  std::vector<double> raw(theta.theta);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] += rate * r * trace.sums[i];
  }
  return normalize_weights(raw);
}

std::size_t sample_index(const PolicyDistribution& dist, Rng& rng) {
  if (dist.probs.empty()) throw std::invalid_argument("empty distribution");
  const double u = rng.uniform01();
  double cumulative = 0.0;
  for (std::size_t h = 0; h < dist.probs.size(); ++h) {
    cumulative += dist.probs[h];
    if (u < cumulative) return h;
  }
  return dist.probs.size() - 1;
}

double sample_action(const PolicyDistribution& dist, const OutputGrid& grid, Rng& rng) {
  if (dist.probs.size() != grid.values.size()) {
    throw std::invalid_argument("distribution does not match grid size");
  }
  return grid.values[sample_index(dist, rng)];
}

}  // namespace fuzzypg
