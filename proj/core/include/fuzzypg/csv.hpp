#pragma once

#include <string>
#include <vector>

#include "fuzzypg/car_env.hpp"
#include "fuzzypg/experiment.hpp"

// CSV exports: '.' decimal separator, LF line endings, no timestamps, so
// equal inputs produce byte-equal files.
namespace fuzzypg {

const char* reward_name(RewardVariant variant);

/// One row per experiment: method, reward, seed, m_c, solved_all, smooth,
/// then t_in per training problem (-1 where unsolved).
std::string results_csv(Method method, RewardVariant variant,
                        const std::vector<ExperimentResult>& results);

/// One row per (method, reward) cell, mirroring the learning-results table.
std::string summary_csv(Method method, RewardVariant variant, const SolutionStats& stats);

/// Per-step time series for plotting: t, distance, following_speed, y1.
std::string trace_csv(const EpisodeTrace& trace);

/// One row per (weight set, evaluation problem).
std::string evaluation_csv(Method method, RewardVariant variant,
                           const std::vector<std::string>& member_names,
                           const EvaluationReport& report, const std::vector<Problem>& problems);

std::string evaluation_summary_csv(Method method, RewardVariant variant,
                                   const EvaluationReport& report, std::size_t member_count);

/// Shortest-ish deterministic rendering used by every writer above.
std::string format_double(double value);

}  // namespace fuzzypg
