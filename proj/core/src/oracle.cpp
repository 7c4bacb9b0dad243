#include "fuzzypg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fuzzypg/policy.hpp"

namespace fuzzypg::oracle {

namespace {

// Rule support s(y) = sum_i theta_i * prod_j A_ij(x_j) * prod_k B_ik(y_k),
// i.e. the negated energy, computed straight from the rule definitions.
std::vector<double> support_over_grid(const RuleBase& rb, std::span<const double> theta,
                                      std::span<const double> x, const OutputGrid& grid) {
  std::vector<double> support(grid.size(), 0.0);
  for (std::size_t i = 0; i < rb.rules.size(); ++i) {
    const auto& rule = rb.rules[i];
    double a = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) a *= membership_eval(rule.antecedents[j], x[j]);
    const double w = theta[i] * a;
    if (w == 0.0) continue;
    for (std::size_t h = 0; h < grid.size(); ++h) {
      support[h] += w * membership_eval(rule.consequents[0], grid.values[h]);
    }
  }
  return support;
}

double log_sum_exp(std::span<const double> v) {
  const double m = *std::max_element(v.begin(), v.end());
  double acc = 0.0;
  for (double value : v) acc += std::exp(value - m);
  return m + std::log(acc);
}

// ln pi(y_t) under the Boltzmann policy with support s: s_t/T - lse(s/T).
double log_policy_base(const RuleBase& rb, std::span<const double> theta,
                       std::span<const double> x, double y_t, const OutputGrid& grid, double T) {
  const auto support = support_over_grid(rb, theta, x, grid);
  std::vector<double> scaled(support.size());
  for (std::size_t h = 0; h < support.size(); ++h) scaled[h] = support[h] / T;

  double support_t = 0.0;
  for (std::size_t i = 0; i < rb.rules.size(); ++i) {
    const auto& rule = rb.rules[i];
    double a = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) a *= membership_eval(rule.antecedents[j], x[j]);
    support_t += theta[i] * a * membership_eval(rule.consequents[0], y_t);
  }
  return support_t / T - log_sum_exp(scaled);
}

// ln pi'(y_t): rebuilds y_G from its own softmax over the support, then
// the smoothed objective and its log-normalizer.
double log_policy_smoothed(const RuleBase& rb, std::span<const double> theta,
                           std::span<const double> x, double y_t, double y_prev,
                           const PolicyParams& params, const OutputGrid& grid) {
  const auto support = support_over_grid(rb, theta, x, grid);
  const double s_max = *std::max_element(support.begin(), support.end());
  double z = 0.0;
  double first_moment = 0.0;
  for (std::size_t h = 0; h < support.size(); ++h) {
    const double w = std::exp((support[h] - s_max) / params.T);
    z += w;
    first_moment += grid.values[h] * w;
  }
  const double y_G = first_moment / z;

  std::vector<double> scaled(grid.size());
  for (std::size_t h = 0; h < grid.size(); ++h) {
    const double y = grid.values[h];
    const double objective =
        0.5 * (y - y_G) * (y - y_G) + params.lambda * (y - y_prev) * (y - y_prev);
    scaled[h] = -objective / params.T_prime;
  }
  const double objective_t =
      0.5 * (y_t - y_G) * (y_t - y_G) + params.lambda * (y_t - y_prev) * (y_t - y_prev);
  return -objective_t / params.T_prime - log_sum_exp(scaled);
}

double log_policy(const RuleBase& rb, std::span<const double> theta, std::span<const double> x,
                  double y_t, double y_prev, const PolicyParams& params, const OutputGrid& grid,
                  Which which) {
  const double lp = which == Which::pi
                        ? log_policy_base(rb, theta, x, y_t, grid, params.T)
                        : log_policy_smoothed(rb, theta, x, y_t, y_prev, params, grid);
  static const double kDegenerate = std::log(1e-300);
  if (!(lp >= kDegenerate)) {
    throw std::domain_error("policy probability of y_t is numerically degenerate");
  }
  return lp;
}

struct CompareAccumulator {
  OracleReport report;
  bool passed = true;

  void add(std::span<const double> analytic, std::span<const double> numeric, double rel_tol,
           double abs_floor) {
    for (std::size_t i = 0; i < analytic.size(); ++i) {
      const double err = std::abs(analytic[i] - numeric[i]);
      const double scale = std::max(std::abs(analytic[i]), std::abs(numeric[i]));
      report.max_abs_error = std::max(report.max_abs_error, err);
      // Denominator floored so that max_rel_error <= rel_tol iff every
      // component passes the rel-or-floor test below.
      report.max_rel_error =
          std::max(report.max_rel_error, err / std::max(scale, abs_floor / rel_tol));
      if (err > std::max(rel_tol * scale, abs_floor)) passed = false;
    }
    ++report.cases_checked;
  }
};

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

}  // namespace

std::vector<double> finite_difference_log_policy_gradient(
    const RuleBase& rb, const WeightVector& theta, std::span<const double> x, double y_t,
    double y_prev, const PolicyParams& params, const OutputGrid& grid, Which which, double delta) {
  if (!(delta > 0.0 && delta <= 1e-3)) {
    throw std::invalid_argument("delta must lie in (0, 1e-3]");
  }
  std::vector<double> gradient(theta.size());
  std::vector<double> perturbed(theta.theta);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double original = perturbed[i];
    perturbed[i] = original + delta;
    const double plus = log_policy(rb, perturbed, x, y_t, y_prev, params, grid, which);
    perturbed[i] = original - delta;
    const double minus = log_policy(rb, perturbed, x, y_t, y_prev, params, grid, which);
    perturbed[i] = original;
    gradient[i] = (plus - minus) / (2.0 * delta);
  }
  return gradient;
}

double brute_force_expectation(const std::function<double(double)>& f,
                               const PolicyDistribution& dist, const OutputGrid& grid) {
  if (dist.probs.size() != grid.values.size()) {
    throw std::invalid_argument("distribution does not match grid size");
  }
  double acc = 0.0;
  for (std::size_t h = 0; h < grid.values.size(); ++h) {
    acc += f(grid.values[h]) * dist.probs[h];
  }
  return acc;
}

double grid_argmin_smoothed_energy(double y_G, double y_prev, double lambda, double resolution) {
  if (!(resolution > 0.0 && resolution <= 1e-3)) {
    throw std::invalid_argument("resolution must lie in (0, 1e-3]");
  }
  const long steps = std::lround(10.0 / resolution);
  double best_y = -5.0;
  double best_value = std::numeric_limits<double>::infinity();
  for (long k = 0; k <= steps; ++k) {
    const double y = -5.0 + resolution * static_cast<double>(k);
    const double value = 0.5 * (y - y_G) * (y - y_G) + lambda * (y - y_prev) * (y - y_prev);
    if (value < best_value) {
      best_value = value;
      best_y = y;
    }
  }
  return best_y;
}

GradientCheck run_gradient_check(const GradientCheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(options.seed);
  const auto grid = OutputGrid::car_default();

  GradientCheck check;
  CompareAccumulator base_acc;
  CompareAccumulator smoothed_acc;
  for (int c = 0; c < options.cases; ++c) {
    const double l1 = uniform(rng, 5.0, 60.0);
    const double l2 = l1 + uniform(rng, 5.0, 50.0);
    const double v = uniform(rng, 10.0, 80.0);
    const RuleBase rb = build_car_rulebase(l1, l2, v, ShapeConfig());
    const PolicyEngine engine(rb, grid);

    std::vector<double> raw(rb.rules.size());
    for (double& t : raw) t = -std::log(1.0 - rng.uniform01());
    const WeightVector theta = normalize_weights(raw);

    const double x[2] = {uniform(rng, 0.0, 200.0), uniform(rng, 0.0, 100.0)};
    const double y_prev = grid.values[static_cast<std::size_t>(rng.next_u64() % grid.size())];

    PolicyParams params;
    params.lambda = rng.uniform01() < 0.5 ? 0.0 : uniform(rng, 0.0, 0.12);

    // Chosen outputs are drawn from the matching policy, exactly as the
    // learning loop draws them; far-tail grid points have no representable
    // probability under pi' at T' = 0.04 and never occur as actions.
    const auto antecedents = engine.antecedent_truths(x);
    const auto pi = engine.policy(theta, antecedents, params.T);
    const double y_base = grid.values[sample_index(pi, rng)];
    const double y_G = gravity_center(pi, grid);
    const auto pi_prime = smoothed_policy(y_G, y_prev, params, grid);
    const double y_smoothed = grid.values[sample_index(pi_prime, rng)];

    const auto analytic_base = eligibility_base(engine, theta, x, y_base, params.T);
    const auto fd_base = finite_difference_log_policy_gradient(
        rb, theta, x, y_base, y_prev, params, grid, Which::pi, options.delta);
    base_acc.add(analytic_base, fd_base, options.rel_tol, options.abs_floor);

    const auto analytic_smoothed = eligibility_smoothed(engine, theta, x, y_smoothed, y_prev, params);
    const auto fd_smoothed = finite_difference_log_policy_gradient(
        rb, theta, x, y_smoothed, y_prev, params, grid, Which::pi_prime, options.delta);
    smoothed_acc.add(analytic_smoothed, fd_smoothed, options.rel_tol, options.abs_floor);
  }

  check.base = base_acc.report;
  check.smoothed = smoothed_acc.report;
  check.passed = base_acc.passed && smoothed_acc.passed;
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

MinimizerCheck run_minimizer_check(int cases, std::uint64_t seed, double resolution) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  MinimizerCheck check;
  check.passed = true;
  check.lambda_zero_bit_identical = true;
  for (int c = 0; c < cases; ++c) {
    const double y_G = uniform(rng, -5.0, 5.0);
    const double y_prev = uniform(rng, -5.0, 5.0);
    const double lambda = uniform(rng, 0.0, 0.12);

    const double closed_form = deterministic_output(y_G, y_prev, lambda);
    const double exhaustive = grid_argmin_smoothed_energy(y_G, y_prev, lambda, resolution);
    const double err = std::abs(closed_form - exhaustive);
    check.report.max_abs_error = std::max(check.report.max_abs_error, err);
    check.report.max_rel_error =
        std::max(check.report.max_rel_error, err / std::max(std::abs(exhaustive), 1.0));
    if (err > resolution) check.passed = false;

    if (deterministic_output(y_G, y_prev, 0.0) != y_G) check.lambda_zero_bit_identical = false;
    ++check.report.cases_checked;
  }
  check.passed = check.passed && check.lambda_zero_bit_identical;
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

DistributionCheck run_distribution_check(int cases, std::uint64_t seed, double sum_tol,
                                         double mean_tol) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  const auto grid = OutputGrid::car_default();

  DistributionCheck check;
  for (int c = 0; c < cases; ++c) {
    const double l1 = uniform(rng, 5.0, 60.0);
    const double l2 = l1 + uniform(rng, 5.0, 50.0);
    const double v = uniform(rng, 10.0, 80.0);
    const PolicyEngine engine(build_car_rulebase(l1, l2, v, ShapeConfig()), grid);

    std::vector<double> raw(engine.rule_count());
    for (double& t : raw) t = -std::log(1.0 - rng.uniform01());
    const WeightVector theta = normalize_weights(raw);

    const double x[2] = {uniform(rng, 0.0, 200.0), uniform(rng, 0.0, 100.0)};
    const double y_prev = grid.values[static_cast<std::size_t>(rng.next_u64() % grid.size())];
    PolicyParams params;
    params.lambda = uniform(rng, 0.0, 0.12);

    const auto antecedents = engine.antecedent_truths(x);
    const auto pi = engine.policy(theta, antecedents, params.T);
    const double y_G = gravity_center(pi, grid);
    const auto pi_prime = smoothed_policy(y_G, y_prev, params, grid);

    double pi_sum = 0.0;
    double pi_prime_sum = 0.0;
    for (std::size_t h = 0; h < grid.size(); ++h) {
      pi_sum += pi.probs[h];
      pi_prime_sum += pi_prime.probs[h];
    }
    check.max_sum_deviation = std::max({check.max_sum_deviation, std::abs(pi_sum - 1.0),
                                        std::abs(pi_prime_sum - 1.0)});

    // <e_i>_pi and <e'_i>_pi' must vanish component-wise.
    std::vector<double> mean_base(engine.rule_count(), 0.0);
    std::vector<double> mean_smoothed(engine.rule_count(), 0.0);
    for (std::size_t h = 0; h < grid.size(); ++h) {
      const auto e_base = eligibility_base_given(engine, antecedents, pi, h, params.T);
      const auto e_smooth = eligibility_smoothed_given(engine, antecedents, pi, y_G, pi_prime,
                                                       grid.values[h], params.T, params.T_prime);
      for (std::size_t i = 0; i < mean_base.size(); ++i) {
        mean_base[i] += pi.probs[h] * e_base[i];
        mean_smoothed[i] += pi_prime.probs[h] * e_smooth[i];
      }
    }
    for (std::size_t i = 0; i < mean_base.size(); ++i) {
      check.max_zero_mean_component =
          std::max({check.max_zero_mean_component, std::abs(mean_base[i]),
                    std::abs(mean_smoothed[i])});
    }
  }
  check.passed = check.max_sum_deviation <= sum_tol && check.max_zero_mean_component <= mean_tol;
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

}  // namespace fuzzypg::oracle
