#include "fuzzypg/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzypg {

OutputGrid OutputGrid::car_default() {
  OutputGrid grid;
  grid.values.resize(101);
  for (int h = 0; h <= 100; ++h) {
    grid.values[static_cast<std::size_t>(h)] = static_cast<double>(h - 50) * 0.1;
  }
  return grid;
}

std::size_t OutputGrid::index_of(double y) const {
  for (std::size_t h = 0; h < values.size(); ++h) {
    if (values[h] == y) return h;
  }
  throw std::invalid_argument("value is not a grid point");
}

std::size_t OutputGrid::nearest_index(double y) const {
  if (values.empty()) throw std::invalid_argument("empty grid");
  std::size_t best = 0;
  double best_d = std::abs(values[0] - y);
  for (std::size_t h = 1; h < values.size(); ++h) {
    const double d = std::abs(values[h] - y);
    if (d < best_d) {
      best = h;
      best_d = d;
    }
  }
  return best;
}

void validate(const OutputGrid& grid) {
  if (grid.values.empty()) throw std::invalid_argument("empty grid");
  for (std::size_t h = 1; h < grid.values.size(); ++h) {
    if (!(grid.values[h] > grid.values[h - 1])) {
      throw std::invalid_argument("grid values must be strictly increasing");
    }
  }
}

void validate(const PolicyDistribution& dist, const OutputGrid& grid) {
  if (dist.probs.size() != grid.values.size()) {
    throw std::invalid_argument("distribution does not match grid size");
  }
  double sum = 0.0;
  for (double p : dist.probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities do not sum to 1");
  }
}

}  // namespace fuzzypg
