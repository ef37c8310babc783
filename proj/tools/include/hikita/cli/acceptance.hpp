#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hikita/cli/envelope.hpp"
#include "hikita/cli/run.hpp"
#include "hikita/quiver.hpp"
#include "hikita/random.hpp"

namespace hikita::cli {

enum class Level { quick, full };

Level parse_level(const std::string& s);
std::string to_string(Level level);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  json detail = json::object();
};

using Progress = std::function<void(const CriterionResult&)>;

/// Criteria 1-9, then criterion 10: a second pass over 1-9 with the same
/// seed whose serialized details must match the first byte for byte.
std::vector<CriterionResult> acceptance_suite(Level level, std::uint64_t seed, const Budgets& budgets,
                                              const Progress& progress = {});

/// Single criteria, exposed for tests.
CriterionResult criterion_fixed_point_dims(Level level, const Budgets& budgets);
CriterionResult criterion_complement(Level level, const Budgets& budgets);
CriterionResult criterion_abundant_bouquet(Level level, const Budgets& budgets);
CriterionResult criterion_gelfand_graev(Level level);
CriterionResult criterion_fixed_ring_images(Level level);
CriterionResult criterion_stability_oracles(Level level, std::uint64_t seed);
CriterionResult criterion_fiber_pipeline(Level level, std::uint64_t seed);
CriterionResult criterion_sections(Level level, std::uint64_t seed);
CriterionResult criterion_hyperpolygon(Level level, const Budgets& budgets);

/// One fiber sample through the whole pipeline. `params` supplies the
/// expected lambda and delta; tampering with them must make the check fail.
struct FiberCheck {
  bool moment_round_trip = false;
  bool telescoping = false;
  bool top_quotient_zero = false;
  bool readouts_match = false;
  bool in_y = false;
  bool stable = false;
  bool passed() const {
    return moment_round_trip && telescoping && top_quotient_zero && readouts_match && in_y && stable;
  }
};
FiberCheck check_fiber(unsigned n, const DeformationParams& params, std::uint64_t seed);

/// Random (nu, gamma) with sum(gamma) = sum_j j nu_j, redrawn until the
/// derived (lambda, delta) pass genericity_certificate outside the forced pairs.
DeformationParams random_generic_params(unsigned n, Rng& rng);

}  // namespace hikita::cli
