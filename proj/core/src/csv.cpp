#include "fuzzypg/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fuzzypg {

const char* reward_name(RewardVariant variant) {
  return variant == RewardVariant::r1 ? "r1" : "r2";
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string results_csv(Method method, RewardVariant variant,
                        const std::vector<ExperimentResult>& results) {
  std::ostringstream out;
  out << "method,reward,seed,m_c,solved_all,smooth";
  const std::size_t problem_count = results.empty() ? 16 : results.front().t_in.size();
  for (std::size_t p = 1; p <= problem_count; ++p) out << ",t_in_" << p;
  out << "\n";
  for (const auto& r : results) {
    out << method_name(method) << ',' << reward_name(variant) << ',' << r.seed << ',' << r.m_c
        << ',' << (r.solved_all ? 1 : 0) << ',' << (r.smooth ? 1 : 0);
    for (int t : r.t_in) out << ',' << t;
    out << "\n";
  }
  return out.str();
}

std::string summary_csv(Method method, RewardVariant variant, const SolutionStats& stats) {
  std::ostringstream out;
  out << "method,reward,repetitions,base_seed,S,S_c,mean_mc,mean_mc_over_S,mean_tin_c\n";
  out << method_name(method) << ',' << reward_name(variant) << ',' << stats.repetitions << ','
      << stats.base_seed << ',' << stats.S << ',' << stats.S_c << ','
      << format_double(stats.mean_mc) << ',' << format_double(stats.mean_mc_over_S) << ','
      << format_double(stats.mean_tin_c) << "\n";
  return out.str();
}

std::string trace_csv(const EpisodeTrace& trace) {
  std::ostringstream out;
  out << "t,distance,following_speed,y1\n";
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    const auto& s = trace.states[k];
    out << s.t << ',' << format_double(s.distance) << ',' << format_double(s.following_speed)
        << ',';
    if (k < trace.outputs.size()) out << format_double(trace.outputs[k]);
    out << "\n";
  }
  return out.str();
}

std::string evaluation_csv(Method method, RewardVariant variant,
                           const std::vector<std::string>& member_names,
                           const EvaluationReport& report, const std::vector<Problem>& problems) {
  if (member_names.size() != report.members.size()) {
    throw std::invalid_argument("member name count does not match report");
  }
  std::ostringstream out;
  out << "method,reward,member,problem,leading_speed,following_speed_init,distance_init,l1,l2,"
         "passed,smooth,t_in\n";
  for (std::size_t m = 0; m < report.members.size(); ++m) {
    const auto& eval = report.members[m];
    for (std::size_t p = 0; p < problems.size(); ++p) {
      const auto& prob = problems[p];
      out << method_name(method) << ',' << reward_name(variant) << ',' << member_names[m] << ','
          << p + 1 << ',' << format_double(prob.leading_speed) << ','
          << format_double(prob.following_speed_init) << ',' << format_double(prob.distance_init)
          << ',' << format_double(prob.l1) << ',' << format_double(prob.l2) << ','
          << int(eval.passed[p]) << ',' << int(eval.smooth[p]) << ',' << eval.t_in[p] << "\n";
    }
  }
  return out.str();
}

std::string evaluation_summary_csv(Method method, RewardVariant variant,
                                   const EvaluationReport& report, std::size_t member_count) {
  std::ostringstream out;
  out << "method,reward,members,S_prime,S_prime_c,mean_tin_prime_c\n";
  out << method_name(method) << ',' << reward_name(variant) << ',' << member_count << ','
      << report.S_prime << ',' << report.S_prime_c << ','
      << format_double(report.mean_tin_prime_c) << "\n";
  return out.str();
}

}  // namespace fuzzypg
