#include "fuzzypg/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzypg {

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("weight vector must be non-empty");
  WeightVector w;
  w.theta.assign(n, 1.0 / static_cast<double>(n));
  return w;
}

WeightVector normalize_weights(std::span<const double> theta_raw) {
  if (theta_raw.empty()) throw std::invalid_argument("weight vector must be non-empty");
  WeightVector w;
  w.theta.assign(theta_raw.begin(), theta_raw.end());
  double sum = 0.0;
  for (double& t : w.theta) {
    if (t < 0.0) t = 0.0;
    sum += t;
  }
  if (sum == 0.0) {
    return WeightVector::uniform(w.theta.size());
  }
  for (double& t : w.theta) t /= sum;
  return w;
}

bool is_normalized(const WeightVector& theta, double tol) {
  double sum = 0.0;
  for (double t : theta.theta) {
    if (t < 0.0) return false;
    sum += t;
  }
  return std::abs(sum - 1.0) <= tol;
}

}  // namespace fuzzypg
