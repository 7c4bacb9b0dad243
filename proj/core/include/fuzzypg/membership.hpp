#pragma once

#include <vector>

namespace fuzzypg {

struct Breakpoint {
  double x = 0.0;       // abscissa, in input/output units
  double degree = 0.0;  // truth degree in [0, 1]
};

/// A fuzzy set over one variable. Piecewise-linear functions interpolate
/// between breakpoints and extend the first/last degree as a constant
/// outside the breakpoint range. A crisp point evaluates to 1 exactly at
/// `location` and 0 everywhere else.
struct MembershipFunction {
  enum class Kind { PiecewiseLinear, CrispPoint };

  Kind kind = Kind::PiecewiseLinear;
  std::vector<Breakpoint> breakpoints;  // PiecewiseLinear only
  double location = 0.0;                // CrispPoint only

  static MembershipFunction piecewise(std::vector<Breakpoint> pts);
  static MembershipFunction crisp(double location);
};

/// Degree of membership of `x`. Total over all reals.
double membership_eval(const MembershipFunction& mf, double x);

/// Throws std::invalid_argument if degrees leave [0,1] or abscissas are not
/// strictly increasing.
void validate(const MembershipFunction& mf);

}  // namespace fuzzypg
