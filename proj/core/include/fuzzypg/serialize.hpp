#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fuzzypg/car_env.hpp"
#include "fuzzypg/rules.hpp"
#include "fuzzypg/weights.hpp"

// JSON round-trips for the shareable value types. Parsing failures throw
// std::runtime_error naming what was being read.
namespace fuzzypg {

std::string to_json(const RuleBase& rb);
RuleBase rulebase_from_json(std::string_view text);

std::string to_json(const ShapeConfig& shape);
ShapeConfig shape_from_json(std::string_view text);

/// A weight vector is a plain JSON array of numbers.
std::string to_json(const WeightVector& theta);
WeightVector weights_from_json(std::string_view text);

std::string to_json(const Problem& problem);
Problem problem_from_json(std::string_view text);

std::string to_json(const EpisodeTrace& trace);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

WeightVector load_weights(const std::filesystem::path& path);
void save_weights(const std::filesystem::path& path, const WeightVector& theta);

}  // namespace fuzzypg
