#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hikita/cli/envelope.hpp"

namespace hikita::cli {

struct Budgets {
  std::size_t max_basis_size = 5000;
  std::uint64_t max_steps = 50'000'000;
  std::uint64_t max_enumeration = 50'000'000;
};

/// Defaults overridden by HIKITA_MAX_BASIS, HIKITA_MAX_STEPS and
/// HIKITA_MAX_ENUMERATION. Non-positive or malformed values are rejected.
Budgets budgets_from_env();

enum class Format { json, text };

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RunConfig {
  std::string verb;  // "ring hikita", "gb compute", ...
  unsigned n = 0;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::json;
  bool timing = true;
  Budgets budgets;

  bool hilbert = false;
  bool complement = false;
  std::string emit_ideal;
  std::string input;
  std::string matrix_file;
  std::string family;
  bool resolution = false;
  std::vector<std::string> nu;
  std::vector<std::string> gamma;
  std::string check;
  std::string level;
};

/// Dispatches one verb. Library errors become statuses: InvalidInput ->
/// invalid_input, BudgetExceeded -> budget_exceeded, anything else -> failed
/// with outputs.error set.
Envelope run(const RunConfig& config);

std::vector<std::string> verbs();

struct OperationEntry {
  std::string module;
  std::string operation;
  std::string verb;
};

/// Which verb reaches each library operation.
const std::vector<OperationEntry>& operation_registry();

}  // namespace hikita::cli
