#include "fuzzypg/membership.hpp"

#include <stdexcept>
#include <utility>

namespace fuzzypg {

MembershipFunction MembershipFunction::piecewise(std::vector<Breakpoint> pts) {
  MembershipFunction mf;
  mf.kind = Kind::PiecewiseLinear;
  mf.breakpoints = std::move(pts);
  validate(mf);
  return mf;
}

MembershipFunction MembershipFunction::crisp(double location) {
  MembershipFunction mf;
  mf.kind = Kind::CrispPoint;
  mf.location = location;
  return mf;
}

double membership_eval(const MembershipFunction& mf, double x) {
  if (mf.kind == MembershipFunction::Kind::CrispPoint) {
    return x == mf.location ? 1.0 : 0.0;
  }
  const auto& bp = mf.breakpoints;
  if (bp.empty()) return 0.0;
  if (x <= bp.front().x) return bp.front().degree;
  if (x >= bp.back().x) return bp.back().degree;
  for (std::size_t k = 1; k < bp.size(); ++k) {
    if (x <= bp[k].x) {
      const double t = (x - bp[k - 1].x) / (bp[k].x - bp[k - 1].x);
      return bp[k - 1].degree + t * (bp[k].degree - bp[k - 1].degree);
    }
  }
  return bp.back().degree;
}

void validate(const MembershipFunction& mf) {
  if (mf.kind == MembershipFunction::Kind::CrispPoint) return;
  if (mf.breakpoints.empty()) {
    throw std::invalid_argument("piecewise membership function needs at least one breakpoint");
  }
  for (std::size_t k = 0; k < mf.breakpoints.size(); ++k) {
    const auto& p = mf.breakpoints[k];
    if (!(p.degree >= 0.0 && p.degree <= 1.0)) {
      throw std::invalid_argument("membership degree outside [0,1]");
    }
    if (k > 0 && !(p.x > mf.breakpoints[k - 1].x)) {
      throw std::invalid_argument("breakpoint abscissas must be strictly increasing");
    }
  }
}

}  // namespace fuzzypg
