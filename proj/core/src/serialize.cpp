#include "fuzzypg/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fuzzypg {

using nlohmann::json;

namespace {

json mf_to_json(const MembershipFunction& mf) {
  json j;
  if (mf.kind == MembershipFunction::Kind::CrispPoint) {
    j["kind"] = "crisp-point";
    j["location"] = mf.location;
  } else {
    j["kind"] = "piecewise-linear";
    json pts = json::array();
    for (const auto& bp : mf.breakpoints) pts.push_back({bp.x, bp.degree});
    j["breakpoints"] = std::move(pts);
  }
  return j;
}

MembershipFunction mf_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "crisp-point") {
    return MembershipFunction::crisp(j.at("location").get<double>());
  }
  if (kind != "piecewise-linear") {
    throw std::runtime_error("unknown membership function kind: " + kind);
  }
  std::vector<Breakpoint> pts;
  for (const auto& p : j.at("breakpoints")) {
    pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  }
  return MembershipFunction::piecewise(std::move(pts));
}

json rule_to_json(const FuzzyRule& rule) {
  json j;
  j["label"] = rule.label;
  json ante = json::array();
  for (const auto& mf : rule.antecedents) ante.push_back(mf_to_json(mf));
  json cons = json::array();
  for (const auto& mf : rule.consequents) cons.push_back(mf_to_json(mf));
  j["antecedents"] = std::move(ante);
  j["consequents"] = std::move(cons);
  return j;
}

FuzzyRule rule_from_json(const json& j) {
  FuzzyRule rule;
  rule.label = j.value("label", "");
  for (const auto& mf : j.at("antecedents")) rule.antecedents.push_back(mf_from_json(mf));
  for (const auto& mf : j.at("consequents")) rule.consequents.push_back(mf_from_json(mf));
  return rule;
}

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("failed to parse ") + what + ": " + e.what());
  }
}

const char* outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Success: return "success";
    case OutcomeKind::LateSuccess: return "late-success";
    case OutcomeKind::NeverEntered: return "never-entered";
    case OutcomeKind::Collision: return "collision";
    case OutcomeKind::TooFar: return "too-far";
  }
  return "unknown";
}

}  // namespace

std::string to_json(const RuleBase& rb) {
  json j;
  j["input_dim"] = rb.input_dim;
  j["output_dim"] = rb.output_dim;
  json rules = json::array();
  for (const auto& rule : rb.rules) rules.push_back(rule_to_json(rule));
  j["rules"] = std::move(rules);
  return j.dump(2);
}

RuleBase rulebase_from_json(std::string_view text) {
  const json j = parse(text, "rule base");
  RuleBase rb;
  try {
    rb.input_dim = j.at("input_dim").get<int>();
    rb.output_dim = j.at("output_dim").get<int>();
    for (const auto& rule : j.at("rules")) rb.rules.push_back(rule_from_json(rule));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed rule base: ") + e.what());
  }
  validate(rb);
  return rb;
}

std::string to_json(const ShapeConfig& shape) {
  json j;
  j["delta_v"] = shape.delta_v;
  j["band_extension"] = shape.band_extension;
  j["delta_v_scale"] = shape.delta_v_scale;
  j["delta_v_cap"] = shape.delta_v_cap;
  j["strong_accel"] = mf_to_json(shape.strong_accel);
  j["weak_accel"] = mf_to_json(shape.weak_accel);
  j["strong_decel"] = mf_to_json(shape.strong_decel);
  j["weak_decel"] = mf_to_json(shape.weak_decel);
  j["none"] = mf_to_json(shape.none);
  return j.dump(2);
}

ShapeConfig shape_from_json(std::string_view text) {
  const json j = parse(text, "shape config");
  ShapeConfig shape;
  try {
    shape.delta_v = j.value("delta_v", shape.delta_v);
    shape.band_extension = j.value("band_extension", shape.band_extension);
    shape.delta_v_scale = j.value("delta_v_scale", shape.delta_v_scale);
    shape.delta_v_cap = j.value("delta_v_cap", shape.delta_v_cap);
    if (j.contains("strong_accel")) shape.strong_accel = mf_from_json(j.at("strong_accel"));
    if (j.contains("weak_accel")) shape.weak_accel = mf_from_json(j.at("weak_accel"));
    if (j.contains("strong_decel")) shape.strong_decel = mf_from_json(j.at("strong_decel"));
    if (j.contains("weak_decel")) shape.weak_decel = mf_from_json(j.at("weak_decel"));
    if (j.contains("none")) shape.none = mf_from_json(j.at("none"));
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed shape config: ") + e.what());
  }
  return shape;
}

std::string to_json(const WeightVector& theta) {
  return json(theta.theta).dump();
}

WeightVector weights_from_json(std::string_view text) {
  const json j = parse(text, "weight vector");
  if (!j.is_array() || j.empty()) {
    throw std::runtime_error("weight vector must be a non-empty JSON array");
  }
  WeightVector w;
  for (const auto& v : j) {
    if (!v.is_number()) throw std::runtime_error("weight vector entries must be numbers");
    w.theta.push_back(v.get<double>());
  }
  return w;
}

std::string to_json(const Problem& problem) {
  json j;
  j["leading_speed"] = problem.leading_speed;
  j["following_speed_init"] = problem.following_speed_init;
  j["distance_init"] = problem.distance_init;
  j["l1"] = problem.l1;
  j["l2"] = problem.l2;
  return j.dump(2);
}

Problem problem_from_json(std::string_view text) {
  const json j = parse(text, "problem");
  Problem p;
  try {
    p.leading_speed = j.at("leading_speed").get<double>();
    p.following_speed_init = j.at("following_speed_init").get<double>();
    p.distance_init = j.at("distance_init").get<double>();
    p.l1 = j.at("l1").get<double>();
    p.l2 = j.at("l2").get<double>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed problem: ") + e.what());
  }
  validate(p);
  return p;
}

std::string to_json(const EpisodeTrace& trace) {
  json j;
  j["problem"] = json::parse(to_json(trace.problem));
  json states = json::array();
  for (const auto& s : trace.states) {
    states.push_back({{"t", s.t}, {"distance", s.distance}, {"following_speed", s.following_speed}});
  }
  j["states"] = std::move(states);
  j["outputs"] = trace.outputs;
  json outcome;
  outcome["kind"] = outcome_name(trace.outcome.kind);
  outcome["t_in"] = trace.outcome.t_in;
  outcome["t_far"] = trace.outcome.t_far;
  outcome["distance"] = trace.outcome.distance;
  j["outcome"] = std::move(outcome);
  j["episode_length_used"] = trace.episode_length_used;
  return j.dump(2);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

WeightVector load_weights(const std::filesystem::path& path) {
  try {
    return weights_from_json(read_text_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error("bad weight file " + path.string() + ": " + e.what());
  }
}

void save_weights(const std::filesystem::path& path, const WeightVector& theta) {
  write_text_file(path, to_json(theta) + "\n");
}

}  // namespace fuzzypg
