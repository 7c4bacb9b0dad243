#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzypg {

/// Learnable rule weights. Normalized means every component is
/// non-negative and the components sum to 1.
struct WeightVector {
  std::vector<double> theta;

  static WeightVector uniform(std::size_t n);

  std::size_t size() const { return theta.size(); }
  double operator[](std::size_t i) const { return theta[i]; }
};

/// Clip negative components to 0, then rescale to sum 1. An all-zero (or
/// all-clipped) input falls back to the uniform vector.
WeightVector normalize_weights(std::span<const double> theta_raw);

/// True iff non-negative and summing to 1 within `tol`.
bool is_normalized(const WeightVector& theta, double tol = 1e-9);

}  // namespace fuzzypg
