#include <doctest.h>

#include <stdexcept>

#include <random>

#include "fuzzypg/membership.hpp"
#include "fuzzypg/rules.hpp"

using namespace fuzzypg;

TEST_SUITE_BEGIN("fuzzy-core");

TEST_CASE("crisp point is one exactly at its location") {
  const auto none = MembershipFunction::crisp(0.0);
  CHECK(membership_eval(none, 0.0) == 1.0);
  CHECK(membership_eval(none, 0.1) == 0.0);
  CHECK(membership_eval(none, -0.1) == 0.0);
  CHECK(membership_eval(none, 1.0) == 0.0);
}

TEST_CASE("piecewise ramp interpolates linearly") {
  const auto ramp = MembershipFunction::piecewise({{0.0, 0.0}, {5.0, 1.0}});
  CHECK(membership_eval(ramp, 2.5) == doctest::Approx(0.5));
  CHECK(membership_eval(ramp, 0.0) == 0.0);
  CHECK(membership_eval(ramp, 5.0) == 1.0);
}

TEST_CASE("degrees extend as constants beyond the breakpoint range") {
  const auto ramp = MembershipFunction::piecewise({{10.0, 1.0}, {15.0, 0.0}});
  CHECK(membership_eval(ramp, -100.0) == 1.0);
  CHECK(membership_eval(ramp, 9.99) == 1.0);
  CHECK(membership_eval(ramp, 15.0) == 0.0);
  CHECK(membership_eval(ramp, 1e6) == 0.0);
}

TEST_CASE("triangle shape evaluates to its peak") {
  const auto tri = MembershipFunction::piecewise({{0.0, 0.0}, {2.5, 1.0}, {5.0, 0.0}});
  CHECK(membership_eval(tri, 2.5) == 1.0);
  CHECK(membership_eval(tri, 1.25) == doctest::Approx(0.5));
  CHECK(membership_eval(tri, 3.75) == doctest::Approx(0.5));
  CHECK(membership_eval(tri, 6.0) == 0.0);
}

TEST_CASE("degrees stay in [0,1] for arbitrary inputs") {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> any(-250.0, 250.0);
  const ShapeConfig shape;
  const MembershipFunction mfs[] = {shape.strong_accel, shape.weak_accel, shape.strong_decel,
                                    shape.weak_decel, shape.none,
                                    MembershipFunction::piecewise({{-3.0, 0.2}, {4.0, 0.9}})};
  for (int k = 0; k < 2000; ++k) {
    const double x = any(gen);
    for (const auto& mf : mfs) {
      const double degree = membership_eval(mf, x);
      CHECK(degree >= 0.0);
      CHECK(degree <= 1.0);
    }
  }
}

TEST_CASE("validation rejects bad breakpoints") {
  MembershipFunction mf;
  mf.kind = MembershipFunction::Kind::PiecewiseLinear;
  mf.breakpoints = {{0.0, 0.0}, {0.0, 1.0}};  // not strictly increasing
  CHECK_THROWS_AS(validate(mf), std::invalid_argument);
  mf.breakpoints = {{0.0, 1.5}};  // degree out of range
  CHECK_THROWS_AS(validate(mf), std::invalid_argument);
  mf.breakpoints = {};
  CHECK_THROWS_AS(validate(mf), std::invalid_argument);
}

TEST_CASE("car rule base has the twenty canonical rules") {
  const auto rb = build_car_rulebase(30.0, 45.0, 20.0);
  REQUIRE(rb.rules.size() == 20);
  CHECK(rb.input_dim == 2);
  CHECK(rb.output_dim == 1);
  CHECK(rb.rules[0].label == "long / fast / strong ac.");
  CHECK(rb.rules[5].label == "long / slow / strong ac.");
  CHECK(rb.rules[7].label == "long / slow / strong de.");
  CHECK(rb.rules[10].label == "short / fast / strong ac.");
  CHECK(rb.rules[12].label == "short / fast / strong de.");
  CHECK(rb.rules[19].label == "short / slow / none");
}

TEST_CASE("short and long are complementary for any distance") {
  const auto rb = build_car_rulebase(10.0, 15.0, 50.0);
  const auto& long_d = rb.rules[0].antecedents[0];
  const auto& short_d = rb.rules[10].antecedents[0];
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-50.0, 250.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = dist(gen);
    CHECK(membership_eval(short_d, x) + membership_eval(long_d, x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("slow and fast are complementary around the leading speed") {
  ShapeConfig fixed_width;
  fixed_width.delta_v = 10.0;
  fixed_width.delta_v_scale = 0.0;
  const auto rb = build_car_rulebase(30.0, 45.0, 60.0, fixed_width);
  const auto& fast = rb.rules[0].antecedents[1];
  const auto& slow = rb.rules[5].antecedents[1];
  CHECK(membership_eval(slow, 50.0) == 1.0);
  CHECK(membership_eval(fast, 70.0) == 1.0);
  CHECK(membership_eval(slow, 60.0) == doctest::Approx(0.5));
  for (double x : {0.0, 40.0, 55.0, 61.0, 69.9, 120.0}) {
    CHECK(membership_eval(slow, x) + membership_eval(fast, x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("proportional speed widths scale with the leading speed") {
  const auto rb = build_car_rulebase(30.0, 45.0, 40.0);  // default scale 0.35 -> half-width 14
  const auto& fast = rb.rules[0].antecedents[1];
  const auto& slow = rb.rules[5].antecedents[1];
  CHECK(membership_eval(slow, 40.0) == doctest::Approx(0.5));
  CHECK(membership_eval(fast, 40.0) == doctest::Approx(0.5));
  CHECK(membership_eval(slow, 26.0) == 1.0);
  CHECK(membership_eval(fast, 54.0) == 1.0);
}

TEST_CASE("car rule base rejects a degenerate band") {
  CHECK_THROWS_AS(build_car_rulebase(45.0, 30.0, 20.0), std::invalid_argument);
  CHECK_THROWS_AS(build_car_rulebase(30.0, 30.0, 20.0), std::invalid_argument);
  CHECK_THROWS_AS(build_car_rulebase(30.0, 45.0, -1.0), std::invalid_argument);
}

TEST_SUITE_END();
