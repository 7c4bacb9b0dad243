#pragma once

#include <string>
#include <vector>

#include "fuzzypg/membership.hpp"

namespace fuzzypg {

/// One weighted if-then rule: M antecedent sets over the inputs, N
/// consequent sets over the outputs. The weight itself lives in a
/// WeightVector aligned with the rule base, not in the rule.
struct FuzzyRule {
  std::vector<MembershipFunction> antecedents;
  std::vector<MembershipFunction> consequents;
  std::string label;
};

struct RuleBase {
  std::vector<FuzzyRule> rules;
  int input_dim = 0;
  int output_dim = 0;

  std::size_t size() const { return rules.size(); }
};

/// Structural consistency: at least one rule, every rule matching the
/// declared dimensions, every membership function valid.
void validate(const RuleBase& rb);

/// Shapes of the car controller's membership functions. Inputs are always
/// the complementary ramps built from the problem's target distance band
/// [l1, l2] and the leading speed v +/- delta_v; the five pedal shapes can
/// be replaced wholesale.
struct ShapeConfig {
  double delta_v = 10.0;  // half-width of the slow/fast transition [km/h]

  // When positive, the transition half-width becomes delta_v_scale * v
  // (geometry proportional to the leading speed, saturated at delta_v_cap)
  // and delta_v is ignored.
  double delta_v_scale = 0.35;
  double delta_v_cap = 1e9;

  // The short/long ramps span [l1 - e*(l2-l1), l2 + e*(l2-l1)] where
  // e = band_extension; 0 puts the ramp exactly across the band.
  double band_extension = 0.25;

  MembershipFunction strong_accel;
  MembershipFunction weak_accel;
  MembershipFunction strong_decel;
  MembershipFunction weak_decel;
  MembershipFunction none;

  ShapeConfig();
};

/// The 20-rule speed controller: {long, short} x {fast, slow} x
/// {strong ac., weak ac., strong de., weak de., none}, distance band
/// [l1, l2] in metres, leading speed v in km/h.
/// Throws std::invalid_argument unless 0 < l1 < l2 and v >= 0.
RuleBase build_car_rulebase(double l1, double l2, double v, const ShapeConfig& shape = ShapeConfig());

}  // namespace fuzzypg
