#include "hikita/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include "hikita/error.hpp"
#include "hikita/poly_io.hpp"

namespace hikita {

namespace {

std::string strip(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

Ideal parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Ring ring;
  std::vector<Polynomial> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    if (!ring) {
      std::istringstream header(line);
      std::string keyword;
      std::string order;
      header >> keyword >> order;
      if (keyword != "ring" || order.empty()) {
        throw InvalidInput("line " + std::to_string(lineno) + ": expected 'ring <order> <vars...>'");
      }
      std::vector<std::string> names;
      for (std::string v; header >> v;) names.push_back(v);
      if (names.empty()) throw InvalidInput("line " + std::to_string(lineno) + ": ring without variables");
      ring = make_ring(std::move(names), MonomialOrder(parse_order_kind(order)));
      continue;
    }
    try {
      gens.push_back(parse_polynomial(line, ring));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!ring) throw InvalidInput("ideal file has no 'ring' header");
  if (gens.empty()) throw InvalidInput("ideal file has no generators");
  return Ideal(ring, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open ideal file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

std::string format_ideal(const Ideal& ideal) {
  std::string out = "ring " + to_string(ideal.ring()->order().kind());
  for (const std::string& v : ideal.ring()->names()) out += " " + v;
  out += "\n";
  for (const Polynomial& g : ideal.generators()) out += format_polynomial(g) + "\n";
  return out;
}

}  // namespace hikita
