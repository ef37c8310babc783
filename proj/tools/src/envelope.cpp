#include "hikita/cli/envelope.hpp"

#include <sstream>

#include "hikita/error.hpp"

namespace hikita::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::failed: return "failed";
    case Status::budget_exceeded: return "budget_exceeded";
    case Status::invalid_input: return "invalid_input";
  }
  return "failed";
}

Status parse_status(const std::string& s) {
  if (s == "verified") return Status::verified;
  if (s == "failed") return Status::failed;
  if (s == "budget_exceeded") return Status::budget_exceeded;
  if (s == "invalid_input") return Status::invalid_input;
  throw InvalidInput("unknown status: " + s);
}

int exit_code(Status s) {
  switch (s) {
    case Status::verified: return 0;
    case Status::failed: return 1;
    case Status::invalid_input: return 2;
    case Status::budget_exceeded: return 3;
  }
  return 1;
}

json to_json(const Envelope& e) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["verb"] = e.verb;
  j["inputs"] = e.inputs;
  j["outputs"] = e.outputs;
  j["status"] = to_string(e.status);
  j["runtime_ms"] = e.runtime_ms;
  return j;
}

Envelope envelope_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("envelope must be a JSON object");
  if (j.value("schema_version", -1) != kSchemaVersion) throw InvalidInput("unsupported schema_version");
  Envelope e;
  e.verb = j.at("verb").get<std::string>();
  e.inputs = j.at("inputs");
  e.outputs = j.at("outputs");
  e.status = parse_status(j.at("status").get<std::string>());
  e.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  return e;
}

std::string serialize(const Envelope& e) { return to_json(e).dump(2) + "\n"; }

Envelope parse_envelope(const std::string& text) {
  try {
    return envelope_from_json(json::parse(text));
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed envelope: ") + ex.what());
  }
}

namespace {

void render_value(std::ostringstream& os, const std::string& prefix, const json& v) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, sub] : v.items()) render_value(os, prefix.empty() ? k : prefix + "." + k, sub);
    return;
  }
  os << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

std::string render_text(const Envelope& e) {
  std::ostringstream os;
  os << "verb: " << e.verb << "\n" << "status: " << to_string(e.status) << "\n";
  render_value(os, "input", e.inputs);
  render_value(os, "", e.outputs);
  os << "runtime_ms: " << e.runtime_ms << "\n";
  return os.str();
}

json rationals_to_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InvalidInput("expected a rational as \"a/b\" or an integer");
}

}  // namespace

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json matrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (const auto& row : to_strings(m)) out.push_back(row);
  return out;
}

QMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) rows.push_back(rationals_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size() || r.empty()) throw InvalidInput("matrix rows must have equal nonzero length");
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rows[i][k];
  return m;
}

json series_to_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& series) {
  json out = json::array();
  for (const auto& [deg, count] : series) out.push_back({deg, count});
  return out;
}

}  // namespace hikita::cli
