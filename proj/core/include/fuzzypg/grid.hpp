#pragma once

#include <cstddef>
#include <vector>

namespace fuzzypg {

/// The admissible discrete outputs, strictly increasing.
struct OutputGrid {
  std::vector<double> values;

  /// 101 pedal intensities, -5.0 + 0.1h for h = 0..100, built so that
  /// values[h] == -values[100 - h] bit-exactly and values[50] == 0.
  static OutputGrid car_default();

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t h) const { return values[h]; }

  /// Index of an exact grid member; throws std::invalid_argument otherwise.
  std::size_t index_of(double y) const;
  /// Index minimizing |values[h] - y|.
  std::size_t nearest_index(double y) const;
};

void validate(const OutputGrid& grid);

/// Probability mass over an OutputGrid, aligned by index.
struct PolicyDistribution {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
};

/// Throws std::invalid_argument unless probs are non-negative, match the
/// grid size, and sum to 1 within 1e-12.
void validate(const PolicyDistribution& dist, const OutputGrid& grid);

}  // namespace fuzzypg
