#include "fuzzypg/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fuzzypg {

double antecedent_truth(const FuzzyRule& rule, std::span<const double> x) {
  if (x.size() != rule.antecedents.size()) {
    throw std::invalid_argument("input dimension does not match rule antecedents");
  }
  double truth = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    truth *= membership_eval(rule.antecedents[j], x[j]);
  }
  return truth;
}

double consequent_truth(const FuzzyRule& rule, std::span<const double> y) {
  if (y.size() != rule.consequents.size()) {
    throw std::invalid_argument("output dimension does not match rule consequents");
  }
  double truth = 1.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    truth *= membership_eval(rule.consequents[k], y[k]);
  }
  return truth;
}

double energy(const RuleBase& rb, const WeightVector& theta, std::span<const double> x,
              std::span<const double> y) {
  if (theta.size() != rb.rules.size()) {
    throw std::invalid_argument("weight vector does not match rule count");
  }
  double e = 0.0;
  for (std::size_t i = 0; i < rb.rules.size(); ++i) {
    e -= theta[i] * antecedent_truth(rb.rules[i], x) * consequent_truth(rb.rules[i], y);
  }
  return e;
}

PolicyDistribution boltzmann_policy(const RuleBase& rb, const WeightVector& theta,
                                    std::span<const double> x, double T, const OutputGrid& grid) {
  PolicyEngine engine(rb, grid);
  return engine.policy(theta, engine.antecedent_truths(x), T);
}

double gravity_center(const PolicyDistribution& dist, const OutputGrid& grid) {
  if (dist.probs.size() != grid.values.size()) {
    throw std::invalid_argument("distribution does not match grid size");
  }
  double center = 0.0;
  for (std::size_t h = 0; h < grid.values.size(); ++h) {
    center += grid.values[h] * dist.probs[h];
  }
  return center;
}

PolicyEngine::PolicyEngine(const RuleBase& rb, OutputGrid grid)
    : rb_(rb), grid_(std::move(grid)) {
  validate(rb_);
  validate(grid_);
  const std::size_t n = rb_.rules.size();
  const std::size_t g = grid_.size();
  if (rb_.output_dim != 1) {
    throw std::invalid_argument("PolicyEngine supports a single output variable");
  }
  consequent_table_.resize(n * g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < g; ++h) {
      const double y = grid_.values[h];
      consequent_table_[i * g + h] = consequent_truth(rb_.rules[i], std::span<const double>(&y, 1));
    }
  }
}

std::vector<double> PolicyEngine::antecedent_truths(std::span<const double> x) const {
  std::vector<double> truths(rb_.rules.size());
  for (std::size_t i = 0; i < rb_.rules.size(); ++i) {
    truths[i] = antecedent_truth(rb_.rules[i], x);
  }
  return truths;
}

std::vector<double> PolicyEngine::energies(const WeightVector& theta,
                                           std::span<const double> antecedents) const {
  const std::size_t n = rb_.rules.size();
  const std::size_t g = grid_.size();
  if (theta.size() != n || antecedents.size() != n) {
    throw std::invalid_argument("weights/antecedents do not match rule count");
  }
  std::vector<double> e(g, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = theta[i] * antecedents[i];
    if (w == 0.0) continue;
    const double* row = consequent_table_.data() + i * g;
    for (std::size_t h = 0; h < g; ++h) {
      e[h] -= w * row[h];
    }
  }
  return e;
}

PolicyDistribution PolicyEngine::policy(const WeightVector& theta,
                                        std::span<const double> antecedents, double T) const {
  const std::vector<double> e = energies(theta, antecedents);
  PolicyDistribution dist;
  dist.probs.resize(e.size());
  detail::boltzmann_probs(e, T, dist.probs);
  return dist;
}

std::span<const double> PolicyEngine::consequent_row(std::size_t rule) const {
  const std::size_t g = grid_.size();
  return {consequent_table_.data() + rule * g, g};
}

namespace detail {

void boltzmann_probs(std::span<const double> energies, double T, std::span<double> probs) {
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (energies.empty() || probs.size() != energies.size()) {
    throw std::invalid_argument("energy/probability size mismatch");
  }
  const double e_min = *std::min_element(energies.begin(), energies.end());
  double z = 0.0;
  for (std::size_t h = 0; h < energies.size(); ++h) {
    probs[h] = std::exp(-(energies[h] - e_min) / T);
    z += probs[h];
  }
  for (std::size_t h = 0; h < probs.size(); ++h) probs[h] /= z;
}

}  // namespace detail

}  // namespace fuzzypg
