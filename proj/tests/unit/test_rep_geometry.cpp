#include "doctest.h"

#include <numeric>

#include "hikita/error.hpp"
#include "hikita/hikita_ring.hpp"
#include "hikita/quiver.hpp"
#include "hikita/ratfun.hpp"
#include "hikita/rep_geometry.hpp"

using namespace hikita;

namespace {

BouquetRep random_rep(unsigned n, Rng& rng) {
  BouquetRep rep = BouquetRep::zero(n);
  auto fill = [&](QMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng.rational(6, 3);
  };
  for (auto& m : rep.x) fill(m);
  for (auto& m : rep.y) fill(m);
  fill(rep.phi);
  fill(rep.psi);
  return rep;
}

// A generic fiber point for tests that need a stable rep.
struct Sample {
  DeformationParams params;
  FiberSample fiber;
};

Sample stable_sample(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    std::vector<Rational> nu, gamma;
    Rational w(0), g(0);
    for (unsigned j = 1; j < n; ++j) {
      nu.push_back(rng.rational(15, 4));
      w += Rational(j) * nu.back();
    }
    for (unsigned j = 1; j + 1 < n; ++j) {
      gamma.push_back(rng.rational(15, 4));
      g += gamma.back();
    }
    gamma.push_back(w - g);
    const DeformationParams p = lambda_delta_from_nu_gamma(nu, gamma);
    if (!genericity_certificate(p.lambda, p.delta, GenericityScope::except_forced).generic) continue;
    return {p, solve_cotangent_fiber(n, nu, gamma, rng.next())};
  }
}

// Column test: no column in S has a nonzero entry outside S.
bool preserves(const QMatrix& m, const std::vector<unsigned>& s) {
  for (unsigned c : s)
    for (unsigned j = 1; j <= m.rows(); ++j)
      if (std::find(s.begin(), s.end(), j) == s.end() && !m(j - 1, c - 1).is_zero()) return false;
  return !s.empty();
}

QMatrix diag(const std::vector<Rational>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("phi psi") {
  CHECK(phi_psi(BouquetRep::zero(4)).is_zero());
  BouquetRep rep = BouquetRep::zero(3);
  // alpha_j = e_j^* and beta_i = e_i for i, j < 3.
  rep.phi(0, 0) = 1;
  rep.phi(1, 1) = 1;
  rep.psi(0, 0) = 1;
  rep.psi(1, 1) = 1;
  QMatrix expected(3, 3);
  expected(0, 0) = 1;
  expected(1, 1) = 1;
  CHECK(phi_psi(rep) == expected);
  Rng rng(1);
  for (unsigned n = 2; n <= 6; ++n) {
    const BouquetRep r = random_rep(n, rng);
    const QMatrix m = phi_psi(r);
    CHECK(rank(m) <= n - 1);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        Rational e(0);
        for (unsigned k = 0; k + 1 < n; ++k) e += r.phi(i, k) * r.psi(k, j);
        CHECK(m(i, j) == e);
      }
  }
}

TEST_CASE("moment map") {
  const MomentValue z = moment_map(BouquetRep::zero(4));
  REQUIRE(z.nu.has_value());
  for (const auto& v : *z.nu) CHECK(v.is_zero());
  for (const auto& g : z.gamma) CHECK(g.is_zero());
  Rng rng(2);
  for (unsigned n = 2; n <= 6; ++n) {
    const BouquetRep r = random_rep(n, rng);
    const MomentValue m = moment_map(r);
    // Telescoping: the stem traces sum to tr(psi phi) = tr(phi psi).
    Rational total(0);
    for (const auto& block : m.stem) total += trace(block);
    CHECK(total == trace(r.psi * r.phi));
    CHECK(total == trace(phi_psi(r)));
    for (unsigned i = 0; i + 1 < n; ++i) {
      Rational g(0);
      for (unsigned k = 0; k + 1 < n; ++k) g += r.phi(i, k) * r.psi(k, i);
      CHECK(m.gamma[i] == g);
    }
  }
}

TEST_CASE("key stability examples") {
  const QMatrix id = QMatrix::identity(3);
  const KeyStability b = key_stability_bruteforce(id);
  CHECK_FALSE(b.holds);
  CHECK(b.witness == std::vector<unsigned>{1});
  CHECK_FALSE(key_stability_closure(id).holds);
  QMatrix full(4, 4);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) full(i, j) = 1;
  CHECK(key_stability_bruteforce(full).holds);
  CHECK(key_stability_closure(full).holds);
  QMatrix upper(3, 3);
  upper(0, 1) = 1;
  upper(0, 2) = 1;
  upper(1, 2) = 1;
  CHECK_FALSE(key_stability_bruteforce(upper).holds);
  CHECK_FALSE(key_stability_closure(upper).holds);
  CHECK(preserves(upper, key_stability_closure(upper).witness));
  CHECK_THROWS_AS(key_stability_bruteforce(QMatrix(20, 20)), BudgetExceeded);
  CHECK_THROWS_AS(key_stability_closure(QMatrix(2, 3)), InvalidInput);
}

TEST_CASE("closure equals brute force on every pattern up to n = 4") {
  for (unsigned n = 2; n <= 4; ++n) {
    std::uint32_t cols[8] = {};
    std::uint64_t stable = 0;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << (n * n)); ++p) {
      for (unsigned s = 0; s < n; ++s) cols[s] = static_cast<std::uint32_t>((p >> (s * n)) & ((1U << n) - 1));
      const bool a = key_stability_bruteforce_mask(n, cols);
      REQUIRE(a == key_stability_closure_mask(n, cols));
      stable += a;
    }
    CHECK(stable > 0);
  }
}

TEST_CASE("mask and matrix versions agree") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<unsigned>(rng.uniform(2, 7));
    QMatrix m(n, n);
    std::uint32_t cols[8] = {};
    for (unsigned j = 0; j < n; ++j)
      for (unsigned s = 0; s < n; ++s)
        if (rng.chance(1, 3)) {
          m(j, s) = rng.integer(1, 5);
          cols[s] |= 1U << j;
        }
    const bool holds = key_stability_closure(m).holds;
    CHECK(holds == key_stability_bruteforce(m).holds);
    CHECK(holds == key_stability_closure_mask(n, cols));
    if (!holds) {
      CHECK(preserves(m, key_stability_closure(m).witness));
      CHECK(preserves(m, key_stability_bruteforce(m).witness));
    }
  }
}

TEST_CASE("theta stability") {
  const StabilityReport z = is_theta_stable(BouquetRep::zero(4));
  CHECK_FALSE(z.stable);
  CHECK_FALSE(z.phi_injective);
  for (unsigned n = 3; n <= 5; ++n) {
    const Sample s = stable_sample(n, 100 + n);
    CHECK(is_theta_stable(s.fiber.rep).stable);
    BouquetRep cut = s.fiber.rep;
    for (unsigned k = 0; k + 1 < n; ++k) {
      cut.phi(0, k) = 0;
      cut.psi(k, 0) = 0;
    }
    const StabilityReport r = is_theta_stable(cut);
    CHECK_FALSE(r.key_condition);
    CHECK_FALSE(r.stable);
    CHECK(key_stability_bruteforce(phi_psi(cut)).witness == std::vector<unsigned>{1});
  }
}

TEST_CASE("fiber samples round trip") {
  for (unsigned n = 2; n <= 5; ++n) {
    const Sample s = stable_sample(n, 7 * n);
    const MomentValue m = moment_map(s.fiber.rep);
    REQUIRE(m.nu.has_value());
    CHECK(*m.nu == s.params.nu);
    CHECK(m.gamma == s.params.gamma);
    Rational weighted(0);
    for (unsigned k = 1; k < n; ++k) weighted += Rational(k) * s.params.nu[k - 1];
    CHECK(trace(phi_psi(s.fiber.rep)) == weighted);
    CHECK(s.fiber.unknowns >= s.fiber.solution_dimension);
  }
  // nu = gamma = 0 lands in the zero fiber.
  const FiberSample zero = solve_cotangent_fiber(3, {Rational(0), Rational(0)}, {Rational(0), Rational(0)}, 5);
  const MomentValue mz = moment_map(zero.rep);
  REQUIRE(mz.nu.has_value());
  for (const auto& v : *mz.nu) CHECK(v.is_zero());
  CHECK_THROWS_AS(solve_cotangent_fiber(3, {Rational(1), Rational(0)}, {Rational(0), Rational(0)}, 5), InvalidInput);
}

TEST_CASE("stability is invariant under the stem group and the bouquet torus") {
  Rng rng(44);
  for (unsigned n = 3; n <= 5; ++n) {
    const Sample s = stable_sample(n, 300 + n);
    std::vector<QMatrix> g;
    for (unsigned k = 1; k < n; ++k) g.push_back(random_invertible(k, rng));
    const BouquetRep moved = act_stem(s.fiber.rep, g);
    CHECK(is_theta_stable(moved).stable);
    const MomentValue m = moment_map(moved);
    REQUIRE(m.nu.has_value());
    CHECK(*m.nu == s.params.nu);
    CHECK(m.gamma == s.params.gamma);
    std::vector<Rational> t;
    for (unsigned i = 1; i < n; ++i) t.push_back(rng.integer(1, 6) * (rng.chance(1, 2) ? Rational(1) : Rational(-1)));
    const BouquetRep tor = act_bouquet_torus(s.fiber.rep, t);
    CHECK(is_theta_stable(tor).stable);
    CHECK(moment_map(tor).gamma == s.params.gamma);
    // Breaking the rep makes both copies unstable together.
    BouquetRep broken = s.fiber.rep;
    for (unsigned k = 0; k + 1 < n; ++k) broken.phi(1, k) = broken.psi(k, 1) = 0;
    CHECK(is_theta_stable(act_stem(broken, g)).stable == is_theta_stable(broken).stable);
  }
}

TEST_CASE("flag readouts") {
  for (unsigned n = 3; n <= 5; ++n) {
    const Sample s = stable_sample(n, 500 + n);
    const FlagReadout fr = rep_to_flagged_matrix(s.fiber.rep);
    CHECK(fr.adapted);
    CHECK(trace(fr.fm.x).is_zero());
    Rational tail(0);
    for (unsigned k = n - 1; k >= 1; --k) {
      tail += s.params.nu[k - 1];
      CHECK(fr.phipsi_steps[k - 1] == tail);
    }
    CHECK(fr.phipsi_steps[n - 1].is_zero());
    CHECK(fr.lambda == s.params.lambda);
    CHECK(fr.delta == s.params.delta);
    CHECK(in_Y(fr.fm, s.params.lambda, s.params.delta));
    Rng rng(n);
    CHECK(acts_by_scalars_on_flag(fr.fm.x, fr.fm.flag, s.params.lambda, &rng, 4));

    FlaggedMatrix bumped = fr.fm;
    bumped.x(0, 0) += Rational(1);
    bumped.x(1, 1) -= Rational(1);
    CHECK_FALSE(in_Y(bumped, s.params.lambda, s.params.delta));
    std::vector<Rational> wrong = s.params.lambda;
    std::swap(wrong[0], wrong[1]);
    CHECK_FALSE(in_Y(fr.fm, wrong, s.params.delta));
  }
  CHECK_THROWS_AS(rep_to_flagged_matrix(BouquetRep::zero(4)), InvalidInput);
}

TEST_CASE("in_Z") {
  const std::vector<Rational> lambda = {Rational(3), Rational(-1), Rational(5), Rational(-7)};
  const QMatrix d = diag(lambda);
  CHECK(in_Z(d, lambda, {1}, {2, 3, 4}));
  CHECK_FALSE(in_Z(d, lambda, {1}, {1, 2, 3}));
  CHECK(in_Z(d, lambda, {1, 2}, {3, 4}));
  Rng rng(6);
  const QMatrix p = random_invertible(4, rng);
  const QMatrix dense = p * d * inverse(p);
  int positives = 0;
  for (unsigned i = 1; i < 4; ++i)
    for (const Subset& s : subsets_of_size(4, i))
      for (const Subset& t : subsets_of_size(4, 4 - i)) positives += in_Z(dense, lambda, s, t);
  CHECK(positives == 0);
  CHECK_THROWS_AS(in_Z(d, {Rational(1), Rational(1), Rational(5), Rational(-7)}, {1}, {2, 3, 4}), InvalidInput);
  CHECK_THROWS_AS(in_Z(d, {Rational(2), Rational(-2), Rational(5), Rational(-5)}, {1}, {2, 3, 4}), InvalidInput);

  // When in_Z holds with |S| + |T| = n, x preserves C^{[n]\T}.
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const FlaggedMatrix fm = random_adapted_pair(lambda, rng, 50);
    for (unsigned i = 1; i < 4; ++i)
      for (const Subset& s : subsets_of_size(4, i))
        for (const Subset& t : subsets_of_size(4, 4 - i)) {
          if (!in_Z(fm.x, lambda, s, t)) continue;
          ++checked;
          const Subset keep = complement(t, 4);
          for (unsigned c : keep)
            for (unsigned r : t) CHECK(fm.x(r - 1, c - 1).is_zero());
        }
  }
  CHECK(checked > 0);
}

TEST_CASE("disjointness arithmetic and codimension") {
  const std::vector<Rational> l = {Rational(1), Rational(2), Rational(-3)};
  // lambda == delta: S = {1}, T = {2, 3} compares delta_1 with lambda_1.
  CHECK_FALSE(disjointness_arithmetic(l, l, {1}, {2, 3}));
  CHECK(disjointness_arithmetic(l, {Rational(10), Rational(-4), Rational(-6)}, {1}, {2, 3}));
  CHECK_THROWS_AS(disjointness_arithmetic(l, l, {1}, {2}), InvalidInput);
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned t = 1; t < n; ++t) CHECK(coordinate_stabilizer_codim(n, t) == (n - t) * t);
}

TEST_CASE("section values") {
  const std::vector<Rational> lambda = {Rational(2), Rational(-5), Rational(4), Rational(-1)};
  Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const FlaggedMatrix fm = random_adapted_pair(lambda, rng, trial % 2 ? 40 : 0);
    for (unsigned s = 1; s <= 4; ++s)
      for (unsigned t = 1; t <= 4; ++t) {
        const auto row = section_value(fm.x, lambda, s, t, fm.flag);
        REQUIRE(row.size() == s);
        for (unsigned k = 0; k + 1 < s; ++k) CHECK(row[k].is_zero());
        if (s == 1) CHECK(row[0] == fm.flag(t - 1, 0));
      }
  }
  const FlaggedMatrix fm = random_adapted_pair(lambda, rng);
  std::vector<Rational> wrong = lambda;
  std::swap(wrong[0], wrong[2]);
  CHECK_THROWS_AS(section_value(fm.x, wrong, 2, 1, fm.flag), InvalidInput);
}

TEST_CASE("section rows are equivariant under an indeterminate diagonal") {
  const unsigned n = 3;
  const Ring ring = make_ring({"a1", "a2", "a3"});
  const std::vector<Rational> lambda = {Rational(1), Rational(3), Rational(-4)};
  Rng rng(19);
  const FlaggedMatrix fm = random_adapted_pair(lambda, rng);
  auto lift = [&](const QMatrix& m) { return m.map([&](const Rational& c) { return RationalFunction::constant(ring, c); }); };
  RFMatrix a(n, n, RationalFunction(ring)), a_inv(n, n, RationalFunction(ring));
  for (unsigned i = 0; i < n; ++i) {
    a(i, i) = RationalFunction(Polynomial::variable(ring, i));
    a_inv(i, i) = a(i, i).inverse();
  }
  const RFMatrix x = lift(fm.x), flag = lift(fm.flag);
  const RFMatrix x_moved = a * x * a_inv, flag_moved = a * flag;
  std::vector<RationalFunction> lam;
  for (const auto& l : lambda) lam.push_back(RationalFunction::constant(ring, l));
  for (unsigned s = 1; s <= n; ++s)
    for (unsigned t = 1; t <= n; ++t) {
      const auto before = section_row(x, lam, s, t, flag);
      const auto after = section_row(x_moved, lam, s, t, flag_moved);
      for (unsigned k = 0; k < s; ++k) CHECK(after[k] == a(t - 1, t - 1) * before[k]);
    }
}

TEST_CASE("certified parameters admit no sampled point of Y inside Z") {
  Rng rng(27);
  const unsigned n = 4;
  std::vector<Rational> lambda = {Rational(5), Rational(-2), Rational(8), Rational(-11)};
  std::vector<Rational> delta = {Rational(17, 3), Rational(-4, 5), Rational(1, 7), Rational(0)};
  Rational s(0);
  for (unsigned i = 0; i + 1 < n; ++i) s += delta[i];
  delta[n - 1] = -s;
  REQUIRE(genericity_certificate(lambda, delta).generic);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const FlaggedMatrix fm = random_adapted_pair(lambda, rng, 45);
    std::vector<Rational> d;
    for (unsigned i = 0; i < n; ++i) d.push_back(fm.x(i, i));
    for (unsigned i = 1; i < n; ++i)
      for (const Subset& S : subsets_of_size(n, i))
        for (const Subset& T : subsets_of_size(n, n - i)) {
          CHECK(disjointness_arithmetic(lambda, delta, S, T));
          if (in_Z(fm.x, lambda, S, T)) {
            ++positives;
            CHECK(d != delta);
          }
        }
  }
  CHECK(positives > 0);
}
