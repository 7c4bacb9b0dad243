#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fuzzypg {

inline constexpr int kEpisodeLength = 110;     // control steps per episode
inline constexpr double kMaxDistance = 200.0;  // metres; reaching it aborts the episode

/// Initial conditions of one two-car following task. Speeds in km/h,
/// distances in metres; [l1, l2] is the target distance band.
struct Problem {
  double leading_speed = 0.0;
  double following_speed_init = 0.0;
  double distance_init = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

void validate(const Problem& problem);

struct CarState {
  int t = 0;                    // seconds since episode start
  double distance = 0.0;        // x1, metres
  double following_speed = 0.0; // x2, km/h
};

enum class OutcomeKind {
  Success,       // entered [l1, l2] at t_in <= 80 and stayed through t = 110
  LateSuccess,   // entered at 80 < t_in <= 110 and stayed through t = 110
  NeverEntered,  // not inside the band at t = 110
  Collision,     // distance went negative
  TooFar,        // distance reached 200 m
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::NeverEntered;
  int t_in = -1;          // Success / LateSuccess
  int t_far = -1;         // TooFar: step at which control was aborted
  double distance = 0.0;  // NeverEntered: distance at t=110; Collision: distance at impact
};

struct RewardConfig {
  double c = -0.01;
};

enum class RewardVariant { r1, r2 };

/// One second of vehicle dynamics: acceleration 2*y1 [km/h/s] is applied
/// first (speed clamped at 0, no reversing), then the gap advances by the
/// relative speed of the new step, (leading - following') / 3.6 metres.
CarState step(const CarState& state, double y1, double leading_speed);

struct EpisodeTrace {
  Problem problem;
  std::vector<CarState> states;   // states[t] is the state at time t
  std::vector<double> outputs;    // outputs[t] produced state t+1
  Outcome outcome;
  int episode_length_used = 0;
};

/// Retrospective classification of a full-length trace: t_in is the start
/// of the longest uninterrupted in-band run ending at t = 110.
Outcome classify_outcome(const EpisodeTrace& trace);

/// Reward for a finished episode. Cases, for both variants:
///   Success       r1 = 0,                      r2 = 0.01/(t_in+1)
///   LateSuccess   r1 = (80 - t_in)/100 + c,    r2 = 0.01/(t_in+1)
///   NeverEntered  r1 = r2 = -|((l1+l2)/2 - x1)/20000| + c
///   Collision     r1 = r2 = -x1^2/100 + c
///   TooFar        r1 = r2 = (t_far - 110)/100 + c
double reward(const Outcome& outcome, RewardVariant variant, const RewardConfig& cfg, double l1,
              double l2);

/// The 16 training tasks, in their canonical order.
std::vector<Problem> learning_problems();

/// The 697 held-out tasks: the 5^4 product set plus the 3^4 product set
/// minus the nine (leading 50 km/h, distance 20 m) combinations.
std::vector<Problem> evaluation_problems();

/// Rolls the controller out from the problem's initial state for up to
/// 110 steps, stopping early on collision (distance < 0) or excessive
/// distance (>= 200 m). The controller sees the current state and returns
/// the pedal intensity y1 in [-5, 5].
template <class Controller>
EpisodeTrace run_episode(const Problem& problem, Controller&& controller) {
  EpisodeTrace trace;
  trace.problem = problem;
  trace.states.reserve(kEpisodeLength + 1);
  trace.outputs.reserve(kEpisodeLength);

  CarState state{0, problem.distance_init, problem.following_speed_init};
  trace.states.push_back(state);
  for (int t = 0; t < kEpisodeLength; ++t) {
    const double y1 = controller(state);
    state = step(state, y1, problem.leading_speed);
    trace.outputs.push_back(y1);
    trace.states.push_back(state);
    if (state.distance < 0.0) {
      trace.outcome = Outcome{OutcomeKind::Collision, -1, -1, state.distance};
      trace.episode_length_used = static_cast<int>(trace.outputs.size());
      return trace;
    }
    if (state.distance >= kMaxDistance) {
      trace.outcome = Outcome{OutcomeKind::TooFar, -1, state.t, state.distance};
      trace.episode_length_used = static_cast<int>(trace.outputs.size());
      return trace;
    }
  }
  trace.episode_length_used = kEpisodeLength;
  trace.outcome = classify_outcome(trace);
  return trace;
}

}  // namespace fuzzypg
