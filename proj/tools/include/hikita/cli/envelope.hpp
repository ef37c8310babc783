#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hikita/matrix.hpp"
#include "hikita/rational.hpp"

namespace hikita::cli {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class Status { verified, failed, budget_exceeded, invalid_input };

std::string to_string(Status s);
Status parse_status(const std::string& s);
/// 0 verified, 1 failed, 2 invalid input, 3 budget exceeded.
int exit_code(Status s);

struct Envelope {
  std::string verb;
  json inputs = json::object();
  json outputs = json::object();
  Status status = Status::verified;
  std::int64_t runtime_ms = 0;
};

json to_json(const Envelope& e);
Envelope envelope_from_json(const json& j);
std::string serialize(const Envelope& e);
Envelope parse_envelope(const std::string& text);

/// Key: value lines for --format text.
std::string render_text(const Envelope& e);

json rationals_to_json(const std::vector<Rational>& xs);
std::vector<Rational> rationals_from_json(const json& j);
json matrix_to_json(const QMatrix& m);
/// Accepts an array of rows; each entry a string "a/b" or an integer.
QMatrix matrix_from_json(const json& j);
json series_to_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& series);

}  // namespace hikita::cli
