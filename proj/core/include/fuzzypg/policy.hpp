#pragma once

#include <span>
#include <vector>

#include "fuzzypg/grid.hpp"
#include "fuzzypg/rules.hpp"
#include "fuzzypg/weights.hpp"

namespace fuzzypg {

/// Product of the rule's antecedent degrees at input x (one degree per
/// input variable). Throws std::invalid_argument on a dimension mismatch.
double antecedent_truth(const FuzzyRule& rule, std::span<const double> x);

/// Product of the rule's consequent degrees at output y.
double consequent_truth(const FuzzyRule& rule, std::span<const double> y);

/// E(y; x, theta) = -sum_i theta_i * A_i(x) * B_i(y). Lower energy means
/// stronger combined support for output y at input x.
double energy(const RuleBase& rb, const WeightVector& theta, std::span<const double> x,
              std::span<const double> y);

/// probs[h] proportional to exp(-E(y_h)/T), normalized over the grid.
/// Energies are shifted by their minimum before exponentiation, which
/// leaves the distribution unchanged. Throws std::invalid_argument if
/// T <= 0 or theta does not match the rule base.
PolicyDistribution boltzmann_policy(const RuleBase& rb, const WeightVector& theta,
                                    std::span<const double> x, double T, const OutputGrid& grid);

/// Expectation of the grid value under the distribution.
double gravity_center(const PolicyDistribution& dist, const OutputGrid& grid);

/// Binds a rule base to an output grid and caches the consequent truth
/// table B[i][h], which depends on neither the state nor the weights.
/// All evaluation paths (one-shot helpers above, learning loops, the
/// finite-difference oracle's targets) go through this class so there is
/// exactly one arithmetic path per quantity.
class PolicyEngine {
 public:
  PolicyEngine(const RuleBase& rb, OutputGrid grid);

  const RuleBase& rulebase() const { return rb_; }
  const OutputGrid& grid() const { return grid_; }
  std::size_t rule_count() const { return rb_.rules.size(); }

  /// A_i(x) for every rule.
  std::vector<double> antecedent_truths(std::span<const double> x) const;

  /// E(y_h) for every grid point, given per-rule antecedent truths.
  std::vector<double> energies(const WeightVector& theta, std::span<const double> antecedents) const;

  /// Boltzmann policy over the grid for the given weights and state truths.
  PolicyDistribution policy(const WeightVector& theta, std::span<const double> antecedents,
                            double T) const;

  std::span<const double> consequent_row(std::size_t rule) const;

 private:
  RuleBase rb_;
  OutputGrid grid_;
  std::vector<double> consequent_table_;  // rule-major, size n_R * grid size
};

namespace detail {
/// Softmax of -E/T with min-energy shift; the single normalization kernel.
void boltzmann_probs(std::span<const double> energies, double T, std::span<double> probs);
}  // namespace detail

}  // namespace fuzzypg
