#include "fuzzypg/car_env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzypg {

void validate(const Problem& problem) {
  if (!(problem.l1 < problem.l2)) throw std::invalid_argument("require l1 < l2");
  if (problem.leading_speed < 0.0 || problem.following_speed_init < 0.0 ||
      problem.distance_init < 0.0 || problem.l1 < 0.0) {
    throw std::invalid_argument("speeds and distances must be non-negative");
  }
}

CarState step(const CarState& state, double y1, double leading_speed) {
  CarState next;
  next.following_speed = std::max(0.0, state.following_speed + 2.0 * y1);
  next.distance = state.distance + (leading_speed - next.following_speed) / 3.6;
  next.t = state.t + 1;
  return next;
}

Outcome classify_outcome(const EpisodeTrace& trace) {
  if (trace.states.size() != static_cast<std::size_t>(kEpisodeLength) + 1) {
    throw std::invalid_argument("classify_outcome requires a full-length trace");
  }
  const double l1 = trace.problem.l1;
  const double l2 = trace.problem.l2;
  const auto in_band = [&](double d) { return d >= l1 && d <= l2; };

  if (!in_band(trace.states[kEpisodeLength].distance)) {
    return Outcome{OutcomeKind::NeverEntered, -1, -1, trace.states[kEpisodeLength].distance};
  }
  int t_in = kEpisodeLength;
  while (t_in > 0 && in_band(trace.states[static_cast<std::size_t>(t_in) - 1].distance)) {
    --t_in;
  }
  if (t_in <= 80) return Outcome{OutcomeKind::Success, t_in, -1, 0.0};
  return Outcome{OutcomeKind::LateSuccess, t_in, -1, 0.0};
}

double reward(const Outcome& outcome, RewardVariant variant, const RewardConfig& cfg, double l1,
              double l2) {
  switch (outcome.kind) {
    case OutcomeKind::Success:
      return variant == RewardVariant::r1 ? 0.0 : 0.01 / (outcome.t_in + 1);
    case OutcomeKind::LateSuccess:
      return variant == RewardVariant::r1
                 ? (80.0 - outcome.t_in) / 100.0 + cfg.c
                 : 0.01 / (outcome.t_in + 1);
    case OutcomeKind::NeverEntered:
      return -std::abs(((l1 + l2) / 2.0 - outcome.distance) / 20000.0) + cfg.c;
    case OutcomeKind::Collision:
      return -(outcome.distance * outcome.distance) / 100.0 + cfg.c;
    case OutcomeKind::TooFar:
      return (outcome.t_far - 110.0) / 100.0 + cfg.c;
  }
  throw std::logic_error("unreachable outcome kind");
}

std::vector<Problem> learning_problems() {
  // leading speed, following speed, initial distance, l1, l2
  return {
      {20.0, 30.0, 50.0, 30.0, 45.0}, {20.0, 30.0, 50.0, 10.0, 15.0},
      {20.0, 30.0, 10.0, 30.0, 45.0}, {20.0, 30.0, 10.0, 10.0, 15.0},
      {30.0, 30.0, 50.0, 30.0, 45.0}, {30.0, 30.0, 50.0, 10.0, 15.0},
      {30.0, 30.0, 10.0, 30.0, 45.0}, {30.0, 30.0, 10.0, 10.0, 15.0},
      {50.0, 30.0, 50.0, 30.0, 45.0}, {50.0, 30.0, 50.0, 10.0, 15.0},
      {50.0, 30.0, 10.0, 30.0, 45.0}, {50.0, 30.0, 10.0, 10.0, 15.0},
      {60.0, 30.0, 50.0, 30.0, 45.0}, {60.0, 30.0, 50.0, 10.0, 15.0},
      {60.0, 30.0, 10.0, 30.0, 45.0}, {60.0, 30.0, 10.0, 10.0, 15.0},
  };
}

std::vector<Problem> evaluation_problems() {
  std::vector<Problem> problems;
  problems.reserve(697);

  const double leading1[] = {45, 55, 65, 75, 85};
  const double following1[] = {0, 10, 30, 50, 70};
  const double distance1[] = {30, 45, 65, 70, 80};
  const std::pair<double, double> target1[] = {{10, 30}, {20, 40}, {40, 60}, {50, 60}, {60, 70}};
  for (double lead : leading1)
    for (double follow : following1)
      for (double dist : distance1)
        for (auto [l1, l2] : target1) problems.push_back({lead, follow, dist, l1, l2});

  const double leading2[] = {40, 50, 60};
  const double following2[] = {20, 40, 60};
  const double distance2[] = {20, 40, 60};
  const std::pair<double, double> target2[] = {{10, 20}, {40, 50}, {45, 60}};
  for (double lead : leading2)
    for (double follow : following2)
      for (double dist : distance2)
        for (auto [l1, l2] : target2) {
          if (lead == 50.0 && dist == 20.0) continue;
          problems.push_back({lead, follow, dist, l1, l2});
        }

  return problems;
}

}  // namespace fuzzypg
