#include "hikita/cli/acceptance.hpp"

#include <set>

#include "hikita/error.hpp"
#include "hikita/gelfand_graev.hpp"
#include "hikita/hikita_ring.hpp"
#include "hikita/rep_geometry.hpp"

namespace hikita::cli {

Level parse_level(const std::string& s) {
  if (s == "quick") return Level::quick;
  if (s == "full") return Level::full;
  throw InvalidInput("--level must be quick or full");
}

std::string to_string(Level level) { return level == Level::quick ? "quick" : "full"; }

namespace {

GroebnerBudget gb_budget(const Budgets& b) { return {b.max_basis_size, b.max_steps}; }

unsigned top(Level level, unsigned quick, unsigned full) { return level == Level::quick ? quick : full; }

// Distinct values summing to zero, plus a delta summing to zero.
std::pair<std::vector<Rational>, std::vector<Rational>> random_certified_pair(unsigned n, Rng& rng) {
  while (true) {
    std::vector<Rational> lambda, delta;
    Rational ls(0), ds(0);
    for (unsigned i = 1; i < n; ++i) {
      lambda.push_back(rng.rational(40, 3));
      delta.push_back(rng.rational(40, 3));
      ls += lambda.back();
      ds += delta.back();
    }
    lambda.push_back(-ls);
    delta.push_back(-ds);
    if (genericity_certificate(lambda, delta).generic) return {lambda, delta};
  }
}

}  // namespace

DeformationParams random_generic_params(unsigned n, Rng& rng) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  while (true) {
    std::vector<Rational> nu, gamma;
    Rational weighted(0), partial(0);
    for (unsigned j = 1; j < n; ++j) {
      nu.push_back(rng.rational(20, 7));
      weighted += Rational(j) * nu.back();
    }
    for (unsigned j = 1; j + 1 < n; ++j) {
      gamma.push_back(rng.rational(20, 5));
      partial += gamma.back();
    }
    gamma.push_back(weighted - partial);
    DeformationParams p = lambda_delta_from_nu_gamma(nu, gamma);
    if (genericity_certificate(p.lambda, p.delta, GenericityScope::except_forced).generic) return p;
  }
}

FiberCheck check_fiber(unsigned n, const DeformationParams& params, std::uint64_t seed) {
  FiberCheck out;
  const FiberSample fs = solve_cotangent_fiber(n, params.nu, params.gamma, seed);
  const MomentValue mm = moment_map(fs.rep);
  out.moment_round_trip = mm.nu && *mm.nu == params.nu && mm.gamma == params.gamma;
  out.stable = is_theta_stable(fs.rep).stable;
  if (!out.stable) return out;
  const FlagReadout fr = rep_to_flagged_matrix(fs.rep);
  out.telescoping = fr.adapted;
  Rational tail(0);
  for (unsigned k = n - 1; k >= 1; --k) {
    tail += params.nu[k - 1];
    out.telescoping = out.telescoping && fr.phipsi_steps[k - 1] == tail;
  }
  out.top_quotient_zero = fr.phipsi_steps[n - 1].is_zero();
  out.readouts_match = fr.lambda == params.lambda && fr.delta == params.delta;
  out.in_y = in_Y(fr.fm, params.lambda, params.delta);
  return out;
}

CriterionResult criterion_fixed_point_dims(Level level, const Budgets& budgets) {
  CriterionResult r{1, "fixed-point ring dimensions", true, json::object()};
  for (unsigned n = 2; n <= top(level, 3, 5); ++n) {
    json d;
    try {
      const RingAnalysis a = fixed_point_ring_analysis(n, gb_budget(budgets));
      d = {{"finite", a.profile.finite},
           {"dimension", a.profile.dimension},
           {"hilbert_series", format_series(a.profile.hilbert_series)},
           {"groebner_size", a.groebner_size}};
      bool ok = a.profile.finite;
      if (n == 2) ok = ok && a.profile.dimension == 1 && format_series(a.profile.hilbert_series) == "1";
      if (n == 3) ok = ok && a.profile.dimension == 5 && format_series(a.profile.hilbert_series) == "1 + 4q^2";
      r.passed = r.passed && ok;
    } catch (const BudgetExceeded& ex) {
      d = {{"budget_exceeded", ex.what()}};
      r.passed = false;
    }
    r.detail[std::to_string(n)] = d;
  }
  return r;
}

CriterionResult criterion_complement(Level level, const Budgets& budgets) {
  CriterionResult r{2, "complement identity", true, json::object()};
  for (unsigned n = 2; n <= top(level, 3, 5); ++n) {
    const auto checks = verify_complement_identity(n, gb_budget(budgets));
    std::size_t ok = 0;
    for (const auto& c : checks) ok += c.passed ? 1 : 0;
    r.detail[std::to_string(n)] = {{"cases", checks.size()}, {"passed", ok}};
    r.passed = r.passed && ok == checks.size() && !checks.empty();
  }
  return r;
}

CriterionResult criterion_abundant_bouquet(Level level, const Budgets& budgets) {
  CriterionResult r{3, "abundant bouquet: sigma_0, Ringel form, anisotropy", true, json::object()};
  json sigma = json::object();
  for (unsigned n = 3; n <= top(level, 4, 7); ++n) {
    const Quiver q = abundant_bouquet(n);
    const DimVector v = bouquet_dimension(n, true);
    const Sigma0Result s = in_sigma0(q, v, budgets.max_enumeration);
    const AmGmReport am = am_gm_bound_check(n);
    sigma[std::to_string(n)] = {{"in_sigma0", s.member},
                                {"enumerated", s.enumerated},
                                {"am_gm_checked", am.checked},
                                {"am_gm_violations", am.violations}};
    r.passed = r.passed && s.member && am.violations == 0;
  }
  json ringel = json::object();
  for (unsigned n = 2; n <= 12; ++n) {
    const Quiver q = abundant_bouquet(n);
    const DimVector v = bouquet_dimension(n, true);
    const std::int64_t value = ringel_form(q, v, v);
    const auto ni = static_cast<std::int64_t>(n);
    const bool aniso = is_anisotropic(q, v);
    ringel[std::to_string(n)] = {{"ringel_self", value}, {"anisotropic", aniso}};
    r.passed = r.passed && value == ni - ni * (ni - 1) / 2 && aniso == (n >= 4);
  }
  r.detail = {{"sigma0", sigma}, {"ringel", ringel}};
  return r;
}

CriterionResult criterion_gelfand_graev(Level level) {
  CriterionResult r{4, "Gelfand-Graev involutions, braids, longest element", true, json::object()};
  for (unsigned n = 2; n <= top(level, 3, 4); ++n) {
    const Ring ring = gg_ring(n);
    const GGPoint seed = symbolic_seed(ring, n);
    const RationalFunction d = det(seed.g);
    std::size_t involution = 0, braid = 0, commuting = 0, determinant = 0, failures = 0;
    for (unsigned k = 1; k < n; ++k) {
      const GGPoint once = sigma_k(seed, k);
      ++involution;
      if (!(sigma_k(once, k) == seed)) ++failures;
      ++determinant;
      if (!(det(once.g) == d)) ++failures;
      if (k + 1 < n) {
        ++braid;
        if (!(apply_word(seed, {k, k + 1, k}) == apply_word(seed, {k + 1, k, k + 1}))) ++failures;
      }
      for (unsigned j = k + 2; j < n; ++j) {
        ++commuting;
        if (!(apply_word(seed, {k, j}) == apply_word(seed, {j, k}))) ++failures;
      }
    }
    const bool w0 = apply_word(seed, longest_word(n)).g == w0_closed_form(ring, n);
    r.detail[std::to_string(n)] = {{"involutions", involution}, {"braids", braid},
                                   {"commuting", commuting},     {"determinant", determinant},
                                   {"failures", failures},       {"w0_matches_closed_form", w0}};
    r.passed = r.passed && failures == 0 && w0;
  }
  return r;
}

CriterionResult criterion_fixed_ring_images(Level level) {
  CriterionResult r{5, "fixed-ring images and orbit sweep", true, json::object()};
  for (unsigned n = 2; n <= top(level, 3, 4); ++n) {
    const OrbitSweep s = generator_orbit_sweep(n);
    r.detail[std::to_string(n)] = {{"images", s.images},
                                   {"image_failures", s.image_failures},
                                   {"orbit_failures", s.orbit_failures},
                                   {"recovered", s.recovered.size()},
                                   {"expected", fst_generator_count(n)}};
    r.passed = r.passed && s.complete && s.image_failures == 0 && s.orbit_failures == 0;
  }
  return r;
}

namespace {

// True when no column of m in s has a nonzero entry outside s.
bool preserves(const QMatrix& m, const std::vector<unsigned>& s) {
  std::vector<bool> in(m.rows() + 1, false);
  for (unsigned v : s) in[v] = true;
  for (unsigned c : s)
    for (unsigned j = 1; j <= m.rows(); ++j)
      if (!in[j] && !m(j - 1, c - 1).is_zero()) return false;
  return true;
}

}  // namespace

CriterionResult criterion_stability_oracles(Level level, std::uint64_t seed) {
  CriterionResult r{6, "key stability: closure against brute force", true, json::object()};
  json exhaustive = json::object();
  for (unsigned n = 2; n <= top(level, 3, 5); ++n) {
    const unsigned bits = n * n;
    std::uint64_t disagreements = 0;
    std::uint32_t cols[8] = {};
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
      for (unsigned s = 0; s < n; ++s) cols[s] = static_cast<std::uint32_t>((pattern >> (s * n)) & ((1U << n) - 1));
      if (key_stability_bruteforce_mask(n, cols) != key_stability_closure_mask(n, cols)) ++disagreements;
    }
    exhaustive[std::to_string(n)] = {{"patterns", std::uint64_t{1} << bits}, {"disagreements", disagreements}};
    r.passed = r.passed && disagreements == 0;
  }
  Rng rng(seed ^ 0x6b6579ULL);
  const unsigned count = top(level, 100, 1000);
  std::uint64_t disagreements = 0, bad_witness = 0, stable = 0;
  for (unsigned i = 0; i < count; ++i) {
    const auto n = static_cast<unsigned>(rng.uniform(2, 8));
    const auto density = static_cast<std::uint64_t>(rng.uniform(5, 60));
    QMatrix m(n, n);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (rng.chance(density, 100)) m(a, b) = rng.rational(9, 4);
    const KeyStability c = key_stability_closure(m);
    const KeyStability b = key_stability_bruteforce(m);
    if (c.holds != b.holds) ++disagreements;
    if (c.holds) ++stable;
    if (!c.holds && !preserves(m, c.witness)) ++bad_witness;
    if (!b.holds && !preserves(m, b.witness)) ++bad_witness;
  }
  r.detail = {{"exhaustive", exhaustive},
              {"random", {{"instances", count}, {"disagreements", disagreements},
                          {"bad_witnesses", bad_witness}, {"key_condition_true", stable}}}};
  r.passed = r.passed && disagreements == 0 && bad_witness == 0;
  return r;
}

CriterionResult criterion_fiber_pipeline(Level level, std::uint64_t seed) {
  CriterionResult r{7, "moment map and flag pipeline", true, json::object()};
  const unsigned samples = top(level, 10, 100);
  const unsigned hi = top(level, 3, 5);
  for (unsigned n = 3; n <= hi; ++n) {
    Rng rng(seed + 1000 * n);
    std::size_t round_trip = 0, telescoping = 0, readouts = 0, in_y = 0, stable = 0, passed = 0;
    for (unsigned i = 0; i < samples; ++i) {
      const DeformationParams p = random_generic_params(n, rng);
      const FiberCheck c = check_fiber(n, p, rng.next());
      round_trip += c.moment_round_trip;
      telescoping += c.telescoping && c.top_quotient_zero;
      readouts += c.readouts_match;
      in_y += c.in_y;
      stable += c.stable;
      passed += c.passed();
    }
    r.detail[std::to_string(n)] = {{"samples", samples},   {"moment_round_trip", round_trip},
                                   {"telescoping", telescoping}, {"readouts_match", readouts},
                                   {"in_Y", in_y},          {"stable", stable}};
    r.passed = r.passed && passed == samples;
  }
  return r;
}

CriterionResult criterion_sections(Level level, std::uint64_t seed) {
  CriterionResult r{8, "section machinery, disjointness, codimension", true, json::object()};
  for (unsigned n = 3; n <= top(level, 3, 5); ++n) {
    Rng rng(seed + 77 * n);
    std::size_t vanish_checks = 0, vanish_failures = 0, zero_locus = 0, zero_locus_failures = 0, in_z = 0;
    std::size_t disjoint = 0, disjoint_failures = 0, diag_hits = 0, codim = 0, codim_failures = 0;
    const unsigned pairs = top(level, 6, 20);
    for (unsigned trial = 0; trial < pairs; ++trial) {
      const auto [lambda, delta] = random_certified_pair(n, rng);
      const FlaggedMatrix fm = random_adapted_pair(lambda, rng, trial % 2 == 0 ? 0 : 45);
      for (unsigned s = 1; s <= n; ++s) {
        for (unsigned t = 1; t <= n; ++t) {
          const auto row = section_value(fm.x, lambda, s, t, fm.flag);
          ++vanish_checks;
          for (unsigned k = 0; k + 1 < s; ++k)
            if (!row[k].is_zero()) {
              ++vanish_failures;
              break;
            }
        }
      }
      std::vector<Rational> diag;
      for (unsigned i = 0; i < n; ++i) diag.push_back(fm.x(i, i));
      for (unsigned i = 1; i < n; ++i) {
        for (const Subset& s : subsets_of_size(n, i)) {
          for (const Subset& t : subsets_of_size(n, n - i)) {
            const bool z = in_Z(fm.x, lambda, s, t);
            bool vanish = true;
            for (unsigned sv : s)
              for (unsigned tv : t) vanish = vanish && section_value(fm.x, lambda, sv, tv, fm.flag)[sv - 1].is_zero();
            ++zero_locus;
            if (z != vanish) ++zero_locus_failures;
            if (z) {
              ++in_z;
              if (diag == delta) ++diag_hits;
            }
            ++disjoint;
            if (!disjointness_arithmetic(lambda, delta, s, t)) ++disjoint_failures;
            if (trial == 0) {
              ++codim;
              if (coordinate_stabilizer_codim(n, t.size()) != s.size() * t.size()) ++codim_failures;
            }
          }
        }
      }
    }
    r.detail[std::to_string(n)] = {{"vanish_checks", vanish_checks},       {"vanish_failures", vanish_failures},
                                   {"zero_locus_cases", zero_locus},       {"zero_locus_failures", zero_locus_failures},
                                   {"in_Z_positive", in_z},                {"disjointness_cases", disjoint},
                                   {"disjointness_failures", disjoint_failures}, {"diag_hits", diag_hits},
                                   {"codim_cases", codim},                 {"codim_failures", codim_failures}};
    r.passed = r.passed && vanish_failures == 0 && zero_locus_failures == 0 && in_z > 0 && disjoint_failures == 0 &&
               diag_hits == 0 && codim_failures == 0;
  }
  return r;
}

CriterionResult criterion_hyperpolygon(Level level, const Budgets& budgets) {
  CriterionResult r{9, "hyperpolygon dimensions", true, json::object()};
  for (unsigned n = 4; n <= top(level, 5, 8); ++n) {
    const RingAnalysis a = hyperpolygon_ring_analysis(n, gb_budget(budgets));
    const std::uint64_t oracle = hyperpolygon_dim_oracle(n);
    r.detail[std::to_string(n)] = {{"dimension", a.profile.dimension}, {"oracle", oracle}};
    r.passed = r.passed && a.profile.finite && a.profile.dimension == oracle;
  }
  return r;
}

namespace {

std::vector<CriterionResult> one_pass(Level level, std::uint64_t seed, const Budgets& budgets, const Progress& progress) {
  std::vector<std::function<CriterionResult()>> steps = {
      [&] { return criterion_fixed_point_dims(level, budgets); },
      [&] { return criterion_complement(level, budgets); },
      [&] { return criterion_abundant_bouquet(level, budgets); },
      [&] { return criterion_gelfand_graev(level); },
      [&] { return criterion_fixed_ring_images(level); },
      [&] { return criterion_stability_oracles(level, seed); },
      [&] { return criterion_fiber_pipeline(level, seed); },
      [&] { return criterion_sections(level, seed); },
      [&] { return criterion_hyperpolygon(level, budgets); },
  };
  const char* names[] = {"fixed-point ring dimensions", "complement identity", "abundant bouquet",
                         "Gelfand-Graev", "fixed-ring images", "key stability", "fiber pipeline",
                         "section machinery", "hyperpolygon dimensions"};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    CriterionResult r;
    try {
      r = steps[i]();
    } catch (const std::exception& ex) {
      r = {static_cast<int>(i + 1), names[i], false, {{"error", ex.what()}}};
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string canonical(const std::vector<CriterionResult>& results) {
  json j = json::array();
  for (const auto& r : results) j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return j.dump();
}

}  // namespace

std::vector<CriterionResult> acceptance_suite(Level level, std::uint64_t seed, const Budgets& budgets,
                                              const Progress& progress) {
  std::vector<CriterionResult> first = one_pass(level, seed, budgets, progress);
  const std::vector<CriterionResult> second = one_pass(level, seed, budgets, {});
  const std::string a = canonical(first), b = canonical(second);
  CriterionResult det{10, "determinism", a == b, {{"bytes", a.size()}, {"identical", a == b}}};
  if (progress) progress(det);
  first.push_back(std::move(det));
  return first;
}

}  // namespace hikita::cli
