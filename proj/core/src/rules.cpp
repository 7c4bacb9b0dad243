#include "fuzzypg/rules.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fuzzypg {

void validate(const RuleBase& rb) {
  if (rb.rules.empty()) throw std::invalid_argument("rule base is empty");
  if (rb.input_dim <= 0 || rb.output_dim <= 0) {
    throw std::invalid_argument("rule base dimensions must be positive");
  }
  for (const auto& rule : rb.rules) {
    if (rule.antecedents.size() != static_cast<std::size_t>(rb.input_dim) ||
        rule.consequents.size() != static_cast<std::size_t>(rb.output_dim)) {
      throw std::invalid_argument("rule arity does not match rule base dimensions");
    }
    for (const auto& mf : rule.antecedents) validate(mf);
    for (const auto& mf : rule.consequents) validate(mf);
  }
}

ShapeConfig::ShapeConfig()
    : strong_accel(MembershipFunction::piecewise({{0.0, 0.0}, {5.0, 1.0}})),
      weak_accel(MembershipFunction::piecewise({{0.0, 0.0}, {2.5, 1.0}, {5.0, 0.0}})),
      strong_decel(MembershipFunction::piecewise({{-5.0, 1.0}, {0.0, 0.0}})),
      weak_decel(MembershipFunction::piecewise({{-5.0, 0.0}, {-2.5, 1.0}, {0.0, 0.0}})),
      none(MembershipFunction::crisp(0.0)) {}

RuleBase build_car_rulebase(double l1, double l2, double v, const ShapeConfig& shape) {
  if (!(l1 > 0.0) || !(l1 < l2)) {
    throw std::invalid_argument("require 0 < l1 < l2 for the target distance band");
  }
  if (!(v >= 0.0)) throw std::invalid_argument("leading speed must be non-negative");
  if (!(shape.delta_v > 0.0)) throw std::invalid_argument("delta_v must be positive");
  if (!(shape.band_extension >= 0.0)) {
    throw std::invalid_argument("band_extension must be non-negative");
  }

  // Distance: "short" holds fully up to the inner edge and fades out at the
  // outer edge; "long" is its complement. Speed: same construction around
  // the leading speed.
  const double margin = shape.band_extension * (l2 - l1);
  const double inner = l1 - margin;
  const double outer = l2 + margin;
  const auto short_d = MembershipFunction::piecewise({{inner, 1.0}, {outer, 0.0}});
  const auto long_d = MembershipFunction::piecewise({{inner, 0.0}, {outer, 1.0}});
  const double dv = shape.delta_v_scale > 0.0
                      ? std::min(shape.delta_v_scale * v, shape.delta_v_cap)
                      : shape.delta_v;
  if (!(dv > 0.0)) throw std::invalid_argument("speed transition width must be positive");
  const auto slow = MembershipFunction::piecewise({{v - dv, 1.0}, {v + dv, 0.0}});
  const auto fast = MembershipFunction::piecewise({{v - dv, 0.0}, {v + dv, 1.0}});

  const std::array<std::pair<const MembershipFunction*, const char*>, 2> distances = {
      {{&long_d, "long"}, {&short_d, "short"}}};
  const std::array<std::pair<const MembershipFunction*, const char*>, 2> speeds = {
      {{&fast, "fast"}, {&slow, "slow"}}};
  const std::array<std::pair<const MembershipFunction*, const char*>, 5> operations = {
      {{&shape.strong_accel, "strong ac."},
       {&shape.weak_accel, "weak ac."},
       {&shape.strong_decel, "strong de."},
       {&shape.weak_decel, "weak de."},
       {&shape.none, "none"}}};

  RuleBase rb;
  rb.input_dim = 2;
  rb.output_dim = 1;
  rb.rules.reserve(20);
  for (const auto& [dist_mf, dist_name] : distances) {
    for (const auto& [speed_mf, speed_name] : speeds) {
      for (const auto& [op_mf, op_name] : operations) {
        FuzzyRule rule;
        rule.antecedents = {*dist_mf, *speed_mf};
        rule.consequents = {*op_mf};
        rule.label = std::string(dist_name) + " / " + speed_name + " / " + op_name;
        rb.rules.push_back(std::move(rule));
      }
    }
  }
  validate(rb);
  return rb;
}

}  // namespace fuzzypg
