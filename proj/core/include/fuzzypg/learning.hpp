#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fuzzypg/grid.hpp"
#include "fuzzypg/policy.hpp"
#include "fuzzypg/weights.hpp"

namespace fuzzypg {

struct PolicyParams {
  double T = 0.04;        // temperature of the rule-support policy
  double T_prime = 0.04;  // temperature of the smoothed policy
  double lambda = 0.0;    // strength of the time-smoothing penalty
};

void validate(const PolicyParams& params);

struct LearnParams {
  double epsilon = 0.0075;         // learning rate for the base policy
  double epsilon_prime = 0.0003;   // learning rate for the smoothed policy
  int max_learning_iterations = 200;
};

void validate(const LearnParams& params);

/// Per-rule eligibility sums accumulated over one episode.
struct EligibilityTrace {
  std::vector<double> sums;

  explicit EligibilityTrace(std::size_t n_rules = 0) : sums(n_rules, 0.0) {}
  void reset() { sums.assign(sums.size(), 0.0); }
  void add(std::span<const double> step_eligibility);
  std::size_t size() const { return sums.size(); }
};

/// Deterministic random source. Draws are reproducible for a given seed
/// independent of platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// E'(y) = (y - y_G)^2 / 2 + lambda * (y - y_prev)^2: squared distance to
/// the gravity center plus the time-smoothing penalty.
double smoothed_energy(double y, double y_G, double y_prev, double lambda);

/// probs[h] proportional to exp(-E'(y_h)/T'), normalized over the grid.
PolicyDistribution smoothed_policy(double y_G, double y_prev, const PolicyParams& params,
                                   const OutputGrid& grid);

/// Exact minimizer of E' over the reals: (y_G + 2*lambda*y_prev) / (1 + 2*lambda).
double deterministic_output(double y_G, double y_prev, double lambda);

/// d ln pi(y_t) / d theta_i = (1/T) * A_i(x) * (B_i(y_t) - <B_i>_pi).
std::vector<double> eligibility_base(const PolicyEngine& engine, const WeightVector& theta,
                                     std::span<const double> x, double y_t, double T);

/// d ln pi'(y_t) / d theta_i. The smoothed policy depends on theta only
/// through the gravity center, giving
///   (A_i(x) / (T*T')) * <(y - y_G) B_i(y)>_pi * (y_t - <y>_pi').
std::vector<double> eligibility_smoothed(const PolicyEngine& engine, const WeightVector& theta,
                                         std::span<const double> x, double y_t, double y_prev,
                                         const PolicyParams& params);

/// Kernels taking already-computed pieces; the functions above and the
/// learning loop both land here.
std::vector<double> eligibility_base_given(const PolicyEngine& engine,
                                           std::span<const double> antecedents,
                                           const PolicyDistribution& pi, std::size_t y_index,
                                           double T);
std::vector<double> eligibility_smoothed_given(const PolicyEngine& engine,
                                               std::span<const double> antecedents,
                                               const PolicyDistribution& pi, double y_G,
                                               const PolicyDistribution& pi_prime, double y_t,
                                               double T, double T_prime);

/// theta_i + rate * r * trace_i, clipped and renormalized onto the simplex.
WeightVector update_weights(const WeightVector& theta, const EligibilityTrace& trace, double r,
                            double rate);

std::size_t sample_index(const PolicyDistribution& dist, Rng& rng);
double sample_action(const PolicyDistribution& dist, const OutputGrid& grid, Rng& rng);

}  // namespace fuzzypg
