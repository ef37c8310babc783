#include <chrono>
#include <cstdlib>
#include <fstream>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hikita/cli/acceptance.hpp"
#include "hikita/cli/run.hpp"
#include "hikita/error.hpp"
#include "hikita/gelfand_graev.hpp"
#include "hikita/hikita_ring.hpp"
#include "hikita/ideal_io.hpp"
#include "hikita/poly_io.hpp"
#include "hikita/quiver.hpp"
#include "hikita/rep_geometry.hpp"

namespace hikita::cli {

namespace {

std::uint64_t env_positive(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw InvalidInput(std::string(name) + " must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

GroebnerBudget gb_budget(const Budgets& b) { return {b.max_basis_size, b.max_steps}; }

json subset_json(const Subset& s) { return json(s); }

json stats_json(const GroebnerStats& s) {
  return {{"pairs_created", s.pairs_created},
          {"pairs_reduced", s.pairs_reduced},
          {"zero_reductions", s.zero_reductions},
          {"reduction_steps", s.reduction_steps}};
}

void require_n(unsigned n, unsigned lo) {
  if (n < lo) throw InvalidInput("--n must be at least " + std::to_string(lo));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Outcome {
  json outputs = json::object();
  Status status = Status::verified;
};

Outcome ring_hikita(const RunConfig& c, json& inputs) {
  require_n(c.n, 2);
  inputs["hilbert"] = c.hilbert;
  inputs["complement"] = c.complement;
  if (!c.emit_ideal.empty()) {
    inputs["emit_ideal"] = c.emit_ideal;
    std::ofstream out(c.emit_ideal);
    if (!out) throw InvalidInput("cannot write " + c.emit_ideal);
    out << format_ideal(hikita_ideal(c.n));
  }
  Outcome o;
  const RingAnalysis r = fixed_point_ring_analysis(c.n, gb_budget(c.budgets));
  o.outputs["n"] = c.n;
  o.outputs["generator_count"] = r.generator_count;
  o.outputs["fst_generator_count"] = fst_generator_count(c.n);
  o.outputs["groebner_size"] = r.groebner_size;
  o.outputs["finite"] = r.profile.finite;
  o.outputs["dimension"] = r.profile.dimension;
  o.outputs["groebner_stats"] = stats_json(r.stats);
  if (c.hilbert) {
    o.outputs["hilbert_series"] = series_to_json(r.profile.hilbert_series);
    o.outputs["hilbert_series_text"] = format_series(r.profile.hilbert_series);
  }
  if (!r.profile.finite) o.status = Status::failed;
  if (c.complement) {
    const auto checks = verify_complement_identity(c.n, gb_budget(c.budgets));
    json failures = json::array();
    std::size_t passed = 0;
    for (const auto& ch : checks) {
      if (ch.passed) {
        ++passed;
      } else {
        failures.push_back({subset_json(ch.s), subset_json(ch.t)});
      }
    }
    o.outputs["complement_identity"] = {{"cases", checks.size()}, {"passed", passed}, {"failures", failures}};
    if (passed != checks.size()) o.status = Status::failed;
  }
  return o;
}

Outcome ring_hyperpolygon(const RunConfig& c, json&) {
  require_n(c.n, 3);
  Outcome o;
  const RingAnalysis r = hyperpolygon_ring_analysis(c.n, gb_budget(c.budgets));
  const std::uint64_t oracle = hyperpolygon_dim_oracle(c.n);
  o.outputs["n"] = c.n;
  o.outputs["generator_count"] = r.generator_count;
  o.outputs["groebner_size"] = r.groebner_size;
  o.outputs["dimension"] = r.profile.dimension;
  o.outputs["oracle_dimension"] = oracle;
  o.outputs["hilbert_series"] = series_to_json(r.profile.hilbert_series);
  o.outputs["hilbert_series_text"] = format_series(r.profile.hilbert_series);
  o.outputs["groebner_stats"] = stats_json(r.stats);
  if (!r.profile.finite || r.profile.dimension != oracle) o.status = Status::failed;
  return o;
}

Outcome gb_compute(const RunConfig& c, json& inputs) {
  if (c.input.empty()) throw InvalidInput("--input is required");
  inputs["input"] = c.input;
  const Ideal ideal = read_ideal_file(c.input);
  GroebnerStats stats;
  const GroebnerBasis gb = buchberger(ideal, gb_budget(c.budgets), &stats);
  Outcome o;
  const Ring& ring = gb.ring();
  o.outputs["variables"] = ring->names();
  o.outputs["order"] = to_string(ring->order().kind());
  json basis = json::array();
  for (const auto& g : gb.elements()) basis.push_back(format_polynomial(g));
  o.outputs["groebner_basis"] = basis;
  o.outputs["groebner_size"] = gb.size();
  o.outputs["groebner_stats"] = stats_json(stats);

  // Certificate: inputs reduce to zero and every S-pair of the basis does too.
  bool members = true;
  for (const auto& f : ideal.generators()) members = members && gb.contains(f);
  bool closed = true;
  for (std::size_t i = 0; i < gb.size() && closed; ++i)
    for (std::size_t j = i + 1; j < gb.size() && closed; ++j)
      closed = gb.normal_form(s_polynomial(gb.elements()[i], gb.elements()[j])).is_zero();
  o.outputs["generators_reduce_to_zero"] = members;
  o.outputs["s_pairs_reduce_to_zero"] = closed;

  const std::vector<std::uint64_t> weights(ring->nvars(), 1);
  const QuotientProfile q = quotient_profile(gb, weights, c.budgets.max_enumeration);
  o.outputs["finite"] = q.finite;
  if (q.finite) {
    o.outputs["dimension"] = q.dimension;
    o.outputs["hilbert_series"] = series_to_json(q.hilbert_series);
  } else {
    o.outputs["witness_variable"] = q.witness_variable.value_or("");
  }
  if (!members || !closed) o.status = Status::failed;
  return o;
}

DimVector family_vector(const std::string& family, const Quiver& q, unsigned n) {
  if (family == "bouquet") return bouquet_dimension(n, false);
  if (family == "abundant") return bouquet_dimension(n, true);
  DimVector v(q.vertex_count(), 1);
  v[q.index_of("*")] = 2;
  return v;
}

json resolution_json(const ResolutionRecord& r) {
  json j = {{"in_sigma0", r.in_sigma0},       {"indivisible", r.indivisible},
            {"anisotropic", r.anisotropic},   {"kleinian_d4", r.kleinian_d4},
            {"ringel_self", r.ringel_self},   {"enumeration_size", r.enumeration_size},
            {"verdict", r.verdict}};
  if (r.sigma0_witness) j["sigma0_witness"] = *r.sigma0_witness;
  return j;
}

Outcome quiver_check(const RunConfig& c, json& inputs) {
  inputs["family"] = c.family;
  inputs["resolution"] = c.resolution;
  Quiver q;
  if (c.family == "bouquet") {
    q = bouquet(c.n);
  } else if (c.family == "abundant") {
    q = abundant_bouquet(c.n);
  } else if (c.family == "star") {
    q = star_quiver(c.n);
  } else {
    throw InvalidInput("--family must be bouquet, abundant or star");
  }
  const DimVector v = family_vector(c.family, q, c.n);
  Outcome o;
  o.outputs["family"] = c.family;
  o.outputs["n"] = c.n;
  o.outputs["labels"] = q.labels;
  o.outputs["edge_count"] = q.edges.size();
  o.outputs["dimension_vector"] = v;
  o.outputs["ringel_self"] = ringel_form(q, v, v);
  o.outputs["euler_self"] = euler_form(q, v, v);
  o.outputs["anisotropic"] = is_anisotropic(q, v);
  o.outputs["enumeration_size"] = enumeration_size(v);
  const Sigma0Result s = in_sigma0(q, v, c.budgets.max_enumeration);
  o.outputs["in_sigma0"] = s.member;
  if (s.witness) o.outputs["sigma0_witness"] = {{"w", *s.witness}, {"value", s.witness_value}};

  if (c.resolution) {
    Quiver target = q;
    DimVector tv = v;
    if (c.family == "bouquet") {
      // Absorb the one-dimensional framing at the top stem vertex.
      const std::vector<Rational> theta(q.vertex_count(), Rational(1));
      const std::vector<Rational> lambda(q.vertex_count(), Rational(0));
      const CrawleyBoevey cb = crawley_boevey_trick(q, v, lambda, theta, q.index_of("s" + std::to_string(c.n - 1)));
      Rational theta_dot(0), lambda_dot(0);
      for (std::size_t i = 0; i < cb.v.size(); ++i) {
        theta_dot += cb.theta[i] * Rational(cb.v[i]);
        lambda_dot += cb.lambda[i] * Rational(cb.v[i]);
      }
      const Quiver abundant = abundant_bouquet(c.n);
      const NondegeneracyResult nd = nondegenerate_stability(theta, v, c.budgets.max_enumeration);
      o.outputs["crawley_boevey"] = {{"v_hat", cb.v},
                                     {"theta_hat", rationals_to_json(cb.theta)},
                                     {"lambda_hat", rationals_to_json(cb.lambda)},
                                     {"theta_dot_v", theta_dot.to_string()},
                                     {"lambda_dot_v", lambda_dot.to_string()},
                                     {"matches_abundant",
                                      cb.quiver.edges == abundant.edges && cb.v == bouquet_dimension(c.n, true)},
                                     {"theta_nondegenerate", nd.nondegenerate}};
      if (!theta_dot.is_zero() || !lambda_dot.is_zero()) o.status = Status::failed;
      target = cb.quiver;
      tv = cb.v;
    }
    const ResolutionRecord r = admits_resolution(target, tv, c.budgets.max_enumeration);
    o.outputs["resolution"] = resolution_json(r);
    o.outputs["verdict"] = r.verdict;
    o.outputs["indivisible"] = r.indivisible;
  }
  return o;
}

json rep_json(const BouquetRep& rep) {
  json xs = json::array(), ys = json::array();
  for (const auto& m : rep.x) xs.push_back(matrix_to_json(m));
  for (const auto& m : rep.y) ys.push_back(matrix_to_json(m));
  return {{"x", xs}, {"y", ys}, {"phi", matrix_to_json(rep.phi)}, {"psi", matrix_to_json(rep.psi)}};
}

BouquetRep rep_from_json(const json& j) {
  BouquetRep rep;
  rep.phi = matrix_from_json(j.at("phi"));
  rep.psi = matrix_from_json(j.at("psi"));
  rep.n = static_cast<unsigned>(rep.phi.rows());
  for (const auto& m : j.value("x", json::array())) rep.x.push_back(matrix_from_json(m));
  for (const auto& m : j.value("y", json::array())) rep.y.push_back(matrix_from_json(m));
  rep.validate();
  return rep;
}

json stability_json(const StabilityReport& s) {
  return {{"x_injective", s.x_injective},
          {"phi_injective", s.phi_injective},
          {"key_condition", s.key_condition},
          {"witness", s.witness},
          {"stable", s.stable}};
}

std::vector<Rational> parse_list(const std::vector<std::string>& raw) {
  std::vector<Rational> out;
  for (const auto& s : raw) {
    // Accept both repeated flags and one comma-separated value.
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(Rational::parse(part));
    }
  }
  return out;
}

Outcome rep_sample(const RunConfig& c, json& inputs) {
  require_n(c.n, 2);
  DeformationParams p;
  if (c.nu.empty() && c.gamma.empty()) {
    Rng rng(c.seed);
    p = random_generic_params(c.n, rng);
  } else {
    const auto nu = parse_list(c.nu);
    const auto gamma = parse_list(c.gamma);
    if (nu.size() != c.n - 1 || gamma.size() != c.n - 1) throw InvalidInput("--nu and --gamma need n-1 entries each");
    p = lambda_delta_from_nu_gamma(nu, gamma);
  }
  inputs["nu"] = rationals_to_json(p.nu);
  inputs["gamma"] = rationals_to_json(p.gamma);

  Outcome o;
  const GenericityResult gen = genericity_certificate(p.lambda, p.delta, GenericityScope::except_forced);
  const GenericityResult strict = genericity_certificate(p.lambda, p.delta);
  o.outputs["lambda"] = rationals_to_json(p.lambda);
  o.outputs["delta"] = rationals_to_json(p.delta);
  o.outputs["generic"] = gen.generic;
  o.outputs["generic_all_pairs"] = strict.generic;
  if (!strict.generic) o.outputs["all_pairs_witness"] = {{"reason", strict.reason}, {"a", strict.a}, {"b", strict.b}};

  const FiberSample fs = solve_cotangent_fiber(c.n, p.nu, p.gamma, c.seed);
  const QMatrix pp = phi_psi(fs.rep);
  const MomentValue mm = moment_map(fs.rep);
  const StabilityReport st = is_theta_stable(fs.rep);
  o.outputs["rep"] = rep_json(fs.rep);
  o.outputs["phi_psi"] = matrix_to_json(pp);
  o.outputs["phi_psi_rank"] = rank(pp);
  o.outputs["fiber"] = {{"attempts", fs.attempts},
                        {"unknowns", fs.unknowns},
                        {"equations", fs.equations},
                        {"solution_dimension", fs.solution_dimension}};
  const bool round_trip = mm.nu && *mm.nu == p.nu && mm.gamma == p.gamma;
  o.outputs["moment_round_trip"] = round_trip;
  o.outputs["stability"] = stability_json(st);

  const FiberCheck fc = check_fiber(c.n, p, c.seed);
  bool ok = round_trip && st.stable && fc.passed();
  o.outputs["telescoping"] = fc.telescoping && fc.top_quotient_zero;
  o.outputs["readouts_match"] = fc.readouts_match;

  if (st.stable) {
    const FlagReadout fr = rep_to_flagged_matrix(fs.rep);
    const bool y = in_Y(fr.fm, p.lambda, p.delta);
    o.outputs["flag"] = {{"x", matrix_to_json(fr.fm.x)},
                         {"basis", matrix_to_json(fr.fm.flag)},
                         {"phipsi_steps", rationals_to_json(fr.phipsi_steps)},
                         {"lambda_readout", rationals_to_json(fr.lambda)},
                         {"delta_readout", rationals_to_json(fr.delta)},
                         {"adapted", fr.adapted}};
    o.outputs["in_Y"] = y;
    ok = ok && y;

    // Y meets no Z_{S,T}: the arithmetic certificate next to the direct test.
    std::size_t pairs = 0, certified = 0, in_z = 0, section_agree = 0, codim_ok = 0;
    std::set<Rational> distinct(fr.lambda.begin(), fr.lambda.end());
    const bool simple = distinct.size() == fr.lambda.size();
    for (unsigned i = 1; i < c.n; ++i) {
      for (const Subset& s : subsets_of_size(c.n, i)) {
        for (const Subset& t : subsets_of_size(c.n, c.n - i)) {
          ++pairs;
          if (disjointness_arithmetic(p.lambda, p.delta, s, t)) ++certified;
          if (coordinate_stabilizer_codim(c.n, t.size()) == s.size() * t.size()) ++codim_ok;
          if (!simple) continue;
          const bool z = in_Z(fr.fm.x, fr.lambda, s, t);
          if (z) ++in_z;
          bool vanish = true;
          for (unsigned sv : s)
            for (unsigned tv : t) vanish = vanish && section_value(fr.fm.x, fr.lambda, sv, tv, fr.fm.flag)[sv - 1].is_zero();
          if (vanish == z) ++section_agree;
        }
      }
    }
    o.outputs["y_z"] = {{"pairs", pairs},
                        {"arithmetic_certified", certified},
                        {"simple_spectrum", simple},
                        {"in_Z", in_z},
                        {"section_agreement", simple ? section_agree : 0},
                        {"codim_identity", codim_ok}};
    ok = ok && in_z == 0 && codim_ok == pairs && (!simple || section_agree == pairs);
  }
  o.status = ok ? Status::verified : Status::failed;
  return o;
}

Outcome rep_stability(const RunConfig& c, json& inputs) {
  if (c.matrix_file.empty()) throw InvalidInput("--matrix is required");
  inputs["matrix"] = c.matrix_file;
  json doc;
  try {
    doc = json::parse(read_file(c.matrix_file));
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("malformed JSON: ") + ex.what());
  }
  Outcome o;
  QMatrix m;
  if (doc.is_object() && doc.contains("phi")) {
    const BouquetRep rep = rep_from_json(doc);
    const StabilityReport st = is_theta_stable(rep);
    o.outputs["stability"] = stability_json(st);
    o.outputs["stable"] = st.stable;
    m = phi_psi(rep);
  } else {
    m = matrix_from_json(doc.is_object() ? doc.at("matrix") : doc);
    if (!m.is_square()) throw InvalidInput("the matrix must be square");
  }
  const KeyStability closure = key_stability_closure(m);
  const KeyStability brute = key_stability_bruteforce(m);
  o.outputs["n"] = m.rows();
  o.outputs["key_condition"] = closure.holds;
  o.outputs["closure_witness"] = closure.witness;
  o.outputs["bruteforce_witness"] = brute.witness;
  o.outputs["oracles_agree"] = closure.holds == brute.holds;
  if (closure.holds != brute.holds) o.status = Status::failed;
  return o;
}

std::string subset_key(const Subset& s) { return format_subset(s); }

std::string perm_key(const Permutation& w) {
  std::string out;
  for (unsigned v : w) out += std::to_string(v);
  return out;
}

Outcome gg_verify(const RunConfig& c, json& inputs) {
  require_n(c.n, 2);
  inputs["check"] = c.check;
  const Ring ring = gg_ring(c.n);
  const GGPoint seed = symbolic_seed(ring, c.n);
  std::size_t total = 0, passed = 0;
  json signs = json::object();
  Outcome o;
  auto tally = [&](bool ok) {
    ++total;
    if (ok) ++passed;
  };
  if (c.check == "involution") {
    const RationalFunction d = det(seed.g);
    for (unsigned k = 1; k < c.n; ++k) {
      const GGPoint once = sigma_k(seed, k);
      tally(sigma_k(once, k) == seed);
      tally(det(once.g) == d);
    }
  } else if (c.check == "braid") {
    for (unsigned k = 1; k + 1 < c.n; ++k)
      tally(apply_word(seed, {k, k + 1, k}) == apply_word(seed, {k + 1, k, k + 1}));
    for (unsigned k = 1; k < c.n; ++k)
      for (unsigned j = k + 2; j < c.n; ++j) tally(apply_word(seed, {k, j}) == apply_word(seed, {j, k}));
  } else if (c.check == "w0") {
    const RFMatrix closed = w0_closed_form(ring, c.n);
    const GGPoint moved = apply_word(seed, longest_word(c.n));
    json entries = json::array();
    for (unsigned i = 0; i < c.n; ++i) {
      json row = json::array();
      for (unsigned j = 0; j < c.n; ++j) {
        tally(moved.g(i, j) == closed(i, j));
        row.push_back(moved.g(i, j).to_string());
      }
      entries.push_back(row);
    }
    o.outputs["matrix"] = entries;
    o.outputs["word"] = longest_word(c.n);
  } else if (c.check == "restrict") {
    for (unsigned i = 1; i < c.n; ++i) {
      for (const Subset& s : subsets_of_size(c.n, i)) {
        const W0DeltaCheck r = restrict_w0_delta(ring, c.n, s);
        tally(r.passed);
        signs[subset_key(s)] = r.epsilon;
      }
    }
  } else if (c.check == "theorem12") {
    const auto perms = all_permutations(c.n);
    for (unsigned i = 1; i < c.n; ++i) {
      for (const Subset& s : subsets_of_size(c.n, i)) {
        for (const Permutation& w : perms) {
          const ImageCheck r = image_in_fixed_ring(c.n, s, w);
          tally(r.passed);
          if (r.support) signs[subset_key(s) + " " + perm_key(w)] = r.sign;
        }
      }
    }
    const OrbitSweep sweep = generator_orbit_sweep(c.n);
    o.outputs["orbit"] = {{"images", sweep.images},
                          {"orbit_failures", sweep.orbit_failures},
                          {"recovered", sweep.recovered.size()},
                          {"expected", fst_generator_count(c.n)},
                          {"complete", sweep.complete}};
    if (!sweep.complete || sweep.orbit_failures != 0) o.status = Status::failed;
  } else {
    throw InvalidInput("--check must be involution, braid, w0, restrict or theorem12");
  }
  o.outputs["n"] = c.n;
  o.outputs["check"] = c.check;
  o.outputs["cases_total"] = total;
  o.outputs["cases_passed"] = passed;
  o.outputs["recorded_signs"] = signs;
  if (passed != total) o.status = Status::failed;
  return o;
}

Outcome accept(const RunConfig& c, json& inputs) {
  const Level level = parse_level(c.level.empty() ? "quick" : c.level);
  inputs["level"] = to_string(level);
  const auto results = acceptance_suite(level, c.seed, c.budgets, [](const CriterionResult& r) {
    std::fprintf(stderr, "criterion %d %s: %s\n", r.id, r.name.c_str(), r.passed ? "PASS" : "FAIL");
  });
  Outcome o;
  json criteria = json::array();
  json failing = json::array();
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) failing.push_back(r.id);
  }
  o.outputs["level"] = to_string(level);
  o.outputs["criteria"] = criteria;
  o.outputs["failing"] = failing;
  if (!failing.empty()) o.status = Status::failed;
  return o;
}

using Handler = std::function<Outcome(const RunConfig&, json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"ring hikita", ring_hikita},   {"ring hyperpolygon", ring_hyperpolygon}, {"gb compute", gb_compute},
      {"quiver check", quiver_check}, {"rep sample", rep_sample},               {"rep stability", rep_stability},
      {"gg verify", gg_verify},       {"accept", accept},
  };
  return table;
}

}  // namespace

Budgets budgets_from_env() {
  Budgets b;
  b.max_basis_size = env_positive("HIKITA_MAX_BASIS", b.max_basis_size);
  b.max_steps = env_positive("HIKITA_MAX_STEPS", b.max_steps);
  b.max_enumeration = env_positive("HIKITA_MAX_ENUMERATION", b.max_enumeration);
  return b;
}

std::vector<std::string> verbs() {
  std::vector<std::string> out;
  for (const auto& [name, h] : handlers()) out.push_back(name);
  return out;
}

Envelope run(const RunConfig& config) {
  Envelope e;
  e.verb = config.verb;
  e.inputs["seed"] = config.seed;
  e.inputs["budgets"] = {{"max_basis_size", config.budgets.max_basis_size},
                         {"max_steps", config.budgets.max_steps},
                         {"max_enumeration", config.budgets.max_enumeration}};
  if (config.n != 0) e.inputs["n"] = config.n;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto it = handlers().find(config.verb);
    if (it == handlers().end()) throw InvalidInput("unknown verb: " + config.verb);
    Outcome o = it->second(config, e.inputs);
    e.outputs = std::move(o.outputs);
    e.status = o.status;
  } catch (const BudgetExceeded& ex) {
    e.status = Status::budget_exceeded;
    e.outputs = {{"error", ex.what()}};
  } catch (const InvalidInput& ex) {
    e.status = Status::invalid_input;
    e.outputs = {{"error", ex.what()}};
  } catch (const std::exception& ex) {
    e.status = Status::failed;
    e.outputs = {{"error", ex.what()}};
  }
  if (config.timing) {
    e.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return e;
}

const std::vector<OperationEntry>& operation_registry() {
  static const std::vector<OperationEntry> table = {
      {"core_algebra", "poly_arithmetic", "gb compute"},
      {"core_algebra", "elementary_symmetric", "ring hikita"},
      {"core_algebra", "ratfun_arithmetic", "gg verify"},
      {"core_algebra", "matrix_ops", "rep sample"},
      {"groebner", "s_polynomial", "gb compute"},
      {"groebner", "buchberger", "gb compute"},
      {"groebner", "normal_form", "gb compute"},
      {"groebner", "quotient_profile", "gb compute"},
      {"hikita_ring", "f_polynomial", "ring hikita"},
      {"hikita_ring", "cartan_square_ideal", "ring hikita"},
      {"hikita_ring", "hikita_ideal", "ring hikita"},
      {"hikita_ring", "fixed_point_ring_analysis", "ring hikita"},
      {"hikita_ring", "verify_complement_identity", "ring hikita"},
      {"hikita_ring", "hyperpolygon_ring_analysis", "ring hyperpolygon"},
      {"hikita_ring", "hyperpolygon_dim_oracle", "ring hyperpolygon"},
      {"quiver_lab", "bouquet", "quiver check"},
      {"quiver_lab", "abundant_bouquet", "quiver check"},
      {"quiver_lab", "star_quiver", "quiver check"},
      {"quiver_lab", "ringel_form", "quiver check"},
      {"quiver_lab", "euler_form", "quiver check"},
      {"quiver_lab", "is_anisotropic", "quiver check"},
      {"quiver_lab", "in_sigma0", "quiver check"},
      {"quiver_lab", "admits_resolution", "quiver check"},
      {"quiver_lab", "crawley_boevey_trick", "quiver check"},
      {"quiver_lab", "nondegenerate_stability", "quiver check"},
      {"quiver_lab", "lambda_delta_from_nu_gamma", "rep sample"},
      {"quiver_lab", "genericity_certificate", "rep sample"},
      {"rep_geometry", "phi_psi", "rep sample"},
      {"rep_geometry", "moment_map", "rep sample"},
      {"rep_geometry", "key_stability_bruteforce", "rep stability"},
      {"rep_geometry", "key_stability_closure", "rep stability"},
      {"rep_geometry", "is_theta_stable", "rep stability"},
      {"rep_geometry", "solve_cotangent_fiber", "rep sample"},
      {"rep_geometry", "rep_to_flagged_matrix", "rep sample"},
      {"rep_geometry", "in_Y", "rep sample"},
      {"rep_geometry", "in_Z", "rep sample"},
      {"rep_geometry", "disjointness_arithmetic", "rep sample"},
      {"rep_geometry", "section_value", "rep sample"},
      {"gelfand_graev", "sk_matrix", "gg verify"},
      {"gelfand_graev", "sigma_k", "gg verify"},
      {"gelfand_graev", "apply_word", "gg verify"},
      {"gelfand_graev", "w0_closed_form", "gg verify"},
      {"gelfand_graev", "delta_minor", "gg verify"},
      {"gelfand_graev", "restrict_w0_delta", "gg verify"},
      {"gelfand_graev", "image_in_fixed_ring", "gg verify"},
      {"cli", "acceptance_suite", "accept"},
  };
  return table;
}

}  // namespace hikita::cli
