#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hikita/groebner.hpp"

namespace hikita {

// Ideal files: '#' starts a comment, blank lines are skipped, the first
// remaining line is "ring <order> <var> <var> ..." and every further line is
// one generator in the polynomial grammar.
Ideal parse_ideal(std::string_view text);
Ideal read_ideal_file(const std::string& path);
std::string format_ideal(const Ideal& ideal);

}  // namespace hikita
