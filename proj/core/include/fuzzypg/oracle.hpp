#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fuzzypg/grid.hpp"
#include "fuzzypg/learning.hpp"
#include "fuzzypg/rules.hpp"
#include "fuzzypg/weights.hpp"

// Independent numerical checks for the analytic machinery. Everything in
// here recomputes its quantities from the rule definitions with its own
// arithmetic (log-sum-exp over rule support instead of the engine's
// shifted softmax over energies) so that a defect in the main path cannot
// cancel out of a comparison.
namespace fuzzypg::oracle {

struct OracleReport {
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  long cases_checked = 0;
};

enum class Which { pi, pi_prime };

/// Central finite difference of ln pi(y_t) or ln pi'(y_t) with respect to
/// each raw weight, re-deriving the entire pipeline (support, policy,
/// gravity center, smoothed policy) at theta +/- delta * e_i. The
/// perturbed weights are deliberately not renormalized. Throws
/// std::domain_error when the probability of y_t is degenerate
/// (below 1e-300).
std::vector<double> finite_difference_log_policy_gradient(
    const RuleBase& rb, const WeightVector& theta, std::span<const double> x, double y_t,
    double y_prev, const PolicyParams& params, const OutputGrid& grid, Which which,
    double delta = 1e-6);

/// Plain direct-loop expectation sum_h f(y_h) * probs[h].
double brute_force_expectation(const std::function<double(double)>& f,
                               const PolicyDistribution& dist, const OutputGrid& grid);

/// Exhaustive minimizer of the smoothed objective over [-5, 5] at the
/// given step size (resolution must be <= 1e-3).
double grid_argmin_smoothed_energy(double y_G, double y_prev, double lambda, double resolution);

struct GradientCheckOptions {
  int cases = 1000;
  std::uint64_t seed = 7;
  double delta = 1e-6;
  double rel_tol = 1e-4;
  double abs_floor = 1e-8;
};

struct GradientCheck {
  OracleReport base;      // analytic base eligibility vs FD of ln pi
  OracleReport smoothed;  // analytic smoothed eligibility vs FD of ln pi'
  bool passed = false;
  double seconds = 0.0;
};

/// Random car rule bases, weights on the simplex, states and grid points;
/// both analytic eligibilities against their finite-difference oracles.
GradientCheck run_gradient_check(const GradientCheckOptions& options = {});

struct MinimizerCheck {
  OracleReport report;  // |y_O - exhaustive argmin| per case
  bool lambda_zero_bit_identical = false;
  bool passed = false;
  double seconds = 0.0;
};

MinimizerCheck run_minimizer_check(int cases = 1000, std::uint64_t seed = 11,
                                   double resolution = 1e-4);

struct DistributionCheck {
  double max_sum_deviation = 0.0;        // |sum(probs) - 1| over all policies
  double max_zero_mean_component = 0.0;  // |<e_i>| under the matching policy
  bool passed = false;
  double seconds = 0.0;
};

/// Normalization of pi and pi' plus the zero-mean property of both
/// eligibilities, with exact summation over the grid.
DistributionCheck run_distribution_check(int cases = 200, std::uint64_t seed = 13,
                                         double sum_tol = 1e-12, double mean_tol = 1e-10);

}  // namespace fuzzypg::oracle
