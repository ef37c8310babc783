#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "hikita/error.hpp"
#include "hikita/quiver.hpp"
#include "hikita/random.hpp"

using namespace hikita;

namespace {

// (a, b) straight from the adjacency counts, independent of ringel_form.
std::int64_t symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  const std::size_t k = a.size();
  std::vector<std::vector<std::int64_t>> adj(k, std::vector<std::int64_t>(k, 0));
  for (const auto& [t, h] : q.edges) {
    ++adj[t][h];
    ++adj[h][t];
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    s += 2 * a[i] * b[i];
    for (std::size_t j = 0; j < k; ++j) s -= adj[i][j] * a[i] * b[j];
  }
  return s;
}

// Recursive walk over 0 <= w <= v.
bool sigma0_oracle(const Quiver& q, const DimVector& v) {
  DimVector w(v.size(), 0);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (!ok) return;
    if (i == v.size()) {
      const bool zero = std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
      if (zero || w == v) return;
      DimVector rest(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) rest[j] = v[j] - w[j];
      if (symmetric_form(q, w, rest) > -2) ok = false;
      return;
    }
    for (std::int64_t x = 0; x <= v[i]; ++x) {
      w[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return ok;
}

}  // namespace

TEST_CASE("family shapes") {
  // The stem chain s1 -> ... -> s_{n-1} has n-2 edges.
  const Quiver b4 = bouquet(4);
  CHECK(b4.vertex_count() == 6);
  CHECK(b4.edges.size() == 5);
  const Quiver a4 = abundant_bouquet(4);
  CHECK(a4.vertex_count() == 7);
  CHECK(a4.edges.size() == 6);
  const Quiver s8 = star_quiver(8);
  CHECK(s8.vertex_count() == 9);
  CHECK(s8.edges.size() == 8);
  for (const auto& [t, h] : s8.edges) CHECK(h == s8.index_of("*"));
  CHECK(a4.labels.back() == "b4");
  CHECK_THROWS_AS(bouquet(1), InvalidInput);
  CHECK_THROWS_AS(star_quiver(2), InvalidInput);
  CHECK(bouquet_dimension(4, true) == DimVector{1, 2, 3, 1, 1, 1, 1});
}

TEST_CASE("Ringel closed form for the abundant bouquet") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    const Quiver q = abundant_bouquet(static_cast<unsigned>(n));
    const DimVector v = bouquet_dimension(static_cast<unsigned>(n), true);
    CHECK(ringel_form(q, v, v) == n - n * (n - 1) / 2);
    CHECK(is_anisotropic(q, v) == (n >= 4));
    CHECK(euler_form(q, v, v) == 2 * ringel_form(q, v, v));
  }
  const Quiver q = abundant_bouquet(4);
  const DimVector v = bouquet_dimension(4, true);
  CHECK(ringel_form(q, v, DimVector(v.size(), 0)) == 0);
  CHECK(euler_form(q, v, v) == -4);
  CHECK_FALSE(is_anisotropic(q, DimVector(v.size(), 0)));
  CHECK_THROWS_AS(ringel_form(q, v, DimVector{1}), InvalidInput);
}

TEST_CASE("Euler form is the symmetrization") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Quiver q;
    const auto k = static_cast<std::size_t>(rng.uniform(2, 5));
    for (std::size_t i = 0; i < k; ++i) q.labels.push_back("v" + std::to_string(i));
    for (int e = 0; e < rng.uniform(1, 6); ++e)
      q.edges.emplace_back(rng.below(k), rng.below(k));
    DimVector a(k), b(k);
    for (auto& x : a) x = rng.uniform(0, 3);
    for (auto& x : b) x = rng.uniform(0, 3);
    CHECK(euler_form(q, a, b) == euler_form(q, b, a));
    CHECK(euler_form(q, a, b) == symmetric_form(q, a, b));
  }
}

TEST_CASE("sigma_0 examples") {
  Quiver a2;
  a2.labels = {"1", "2"};
  a2.edges = {{0, 1}};
  const Sigma0Result r = in_sigma0(a2, {1, 1});
  CHECK_FALSE(r.member);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == DimVector{0, 1});  // first proper w in odometer order
  CHECK(r.witness_value == -1);
  CHECK(in_sigma0(a2, {0, 1}).member);
  for (unsigned n = 3; n <= 5; ++n) {
    const Sigma0Result s = in_sigma0(abundant_bouquet(n), bouquet_dimension(n, true));
    CHECK(s.member);
    CHECK(s.enumerated + 2 == enumeration_size(bouquet_dimension(n, true)));
  }
  CHECK_THROWS_AS(in_sigma0(abundant_bouquet(7), bouquet_dimension(7, true), 10), BudgetExceeded);
}

TEST_CASE("sigma_0 against a recursive oracle on random quivers") {
  Rng rng(23);
  int members = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Quiver q;
    const auto k = static_cast<std::size_t>(rng.uniform(2, 4));
    for (std::size_t i = 0; i < k; ++i) q.labels.push_back("v" + std::to_string(i));
    for (int e = 0; e < rng.uniform(1, 7); ++e) {
      const auto t = rng.below(k), h = rng.below(k);
      if (t != h) q.edges.emplace_back(t, h);
    }
    DimVector v(k);
    for (auto& x : v) x = rng.uniform(0, 3);
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) v[0] = 1;
    const bool expected = sigma0_oracle(q, v);
    CHECK(in_sigma0(q, v).member == expected);
    members += expected;
  }
  CHECK(members > 0);
}

TEST_CASE("the AM-GM step holds for every enumerated vector") {
  for (unsigned n = 3; n <= 6; ++n) {
    const AmGmReport r = am_gm_bound_check(n);
    CHECK(r.checked > 0);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("resolution verdicts") {
  const ResolutionRecord five = admits_resolution(abundant_bouquet(5), bouquet_dimension(5, true));
  CHECK(five.in_sigma0);
  CHECK(five.anisotropic);
  CHECK(five.verdict == "resolution via generic parameter");
  const ResolutionRecord three = admits_resolution(abundant_bouquet(3), bouquet_dimension(3, true));
  CHECK(three.kleinian_d4);
  CHECK(three.ringel_self == 0);
  CHECK(three.verdict.find("Kleinian D4") != std::string::npos);
  DimVector doubled = bouquet_dimension(4, true);
  for (auto& x : doubled) x *= 2;
  const ResolutionRecord d = admits_resolution(abundant_bouquet(4), doubled);
  CHECK_FALSE(d.indivisible);
}

TEST_CASE("Crawley-Boevey trick") {
  for (unsigned n = 3; n <= 6; ++n) {
    const Quiver q = bouquet(n);
    const DimVector v = bouquet_dimension(n, false);
    const std::vector<Rational> theta(v.size(), Rational(1)), zero(v.size(), Rational(0));
    const CrawleyBoevey cb = crawley_boevey_trick(q, v, zero, theta, q.index_of("s" + std::to_string(n - 1)));
    const auto ni = static_cast<std::int64_t>(n);
    CHECK(cb.theta.back() == Rational(-(ni * (ni - 1) / 2 + ni - 1)));
    CHECK(std::all_of(cb.lambda.begin(), cb.lambda.end(), [](const Rational& x) { return x.is_zero(); }));
    CHECK(cb.v == bouquet_dimension(n, true));
    CHECK(cb.quiver.edges == abundant_bouquet(n).edges);
    Rng rng(n);
    std::vector<Rational> lambda;
    for (std::size_t i = 0; i < v.size(); ++i) lambda.push_back(rng.rational(9, 4));
    const CrawleyBoevey cb2 = crawley_boevey_trick(q, v, lambda, theta, 0);
    Rational ldot(0), tdot(0);
    for (std::size_t i = 0; i < cb2.v.size(); ++i) {
      ldot += cb2.lambda[i] * Rational(cb2.v[i]);
      tdot += cb2.theta[i] * Rational(cb2.v[i]);
    }
    CHECK(ldot.is_zero());
    CHECK(tdot.is_zero());
  }
}

TEST_CASE("nondegenerate stability") {
  CHECK(nondegenerate_stability({Rational(1), Rational(2), Rational(3)}, {2, 1, 3}).nondegenerate);
  const NondegeneracyResult z = nondegenerate_stability({Rational(0), Rational(0)}, {1, 1});
  CHECK_FALSE(z.nondegenerate);
  CHECK(z.witness.has_value());
  CHECK(nondegenerate_stability({Rational(1), Rational(-1)}, {1, 1}).nondegenerate);
  CHECK_FALSE(nondegenerate_stability({Rational(1), Rational(-1)}, {2, 1}).nondegenerate);
}

TEST_CASE("lambda and delta from nu and gamma") {
  const DeformationParams zero = lambda_delta_from_nu_gamma({Rational(0), Rational(0)}, {Rational(0), Rational(0)});
  for (const auto& x : zero.lambda) CHECK(x.is_zero());
  for (const auto& x : zero.delta) CHECK(x.is_zero());
  const DeformationParams two = lambda_delta_from_nu_gamma({Rational(2)}, {Rational(2)});
  CHECK(two.lambda == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK(two.delta == std::vector<Rational>{Rational(1), Rational(-1)});
  // Hand computation, n = 3: nu = (1, 2), gamma = (4, 1).
  const DeformationParams three = lambda_delta_from_nu_gamma({Rational(1), Rational(2)}, {Rational(4), Rational(1)});
  CHECK(three.lambda == std::vector<Rational>{Rational(4, 3), Rational(1, 3), Rational(-5, 3)});
  CHECK(three.delta == std::vector<Rational>{Rational(7, 3), Rational(-2, 3), Rational(-5, 3)});
  CHECK_THROWS_AS(lambda_delta_from_nu_gamma({Rational(1)}, {Rational(0)}), InvalidInput);
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> nu;
    Rational w(0);
    for (int j = 1; j <= 4; ++j) {
      nu.push_back(rng.rational(9, 5));
      w += Rational(j) * nu.back();
    }
    const std::vector<Rational> gamma = {w, Rational(0), Rational(0), Rational(0)};
    const DeformationParams p = lambda_delta_from_nu_gamma(nu, gamma);
    CHECK(std::accumulate(p.lambda.begin(), p.lambda.end(), Rational(0)).is_zero());
    CHECK(std::accumulate(p.delta.begin(), p.delta.end(), Rational(0)).is_zero());
    // Derived parameters always share their last entry.
    CHECK(p.lambda.back() == p.delta.back());
  }
}

TEST_CASE("genericity certificate") {
  const std::vector<Rational> z(3, Rational(0));
  CHECK_FALSE(genericity_certificate(z, z).generic);
  const GenericityResult r = genericity_certificate({Rational(1), Rational(2), Rational(-3)},
                                                    {Rational(5), Rational(-7), Rational(2)});
  CHECK_FALSE(r.generic);
  CHECK(r.reason == "subset sums coincide");
  CHECK(r.a == std::vector<unsigned>{3});
  CHECK(r.b == std::vector<unsigned>{2});
  CHECK(genericity_certificate({Rational(1), Rational(10), Rational(-11)}, {Rational(100), Rational(-97), Rational(-3)})
            .generic);
  const GenericityResult rep = genericity_certificate({Rational(1), Rational(1), Rational(-2)},
                                                      {Rational(100), Rational(-97), Rational(-3)});
  CHECK(rep.reason == "repeated lambda");
}

TEST_CASE("genericity is permutation equivariant") {
  Rng rng(31);
  int generic = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4;
    std::vector<Rational> l, d;
    Rational ls(0), ds(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      l.push_back(rng.integer(-1000, 1000));
      d.push_back(rng.integer(-1000, 1000));
      ls += l.back();
      ds += d.back();
    }
    l.push_back(-ls);
    d.push_back(-ds);
    const bool base = genericity_certificate(l, d).generic;
    generic += base;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    std::vector<Rational> lp, dp;
    for (auto i : p) lp.push_back(l[i]);
    std::vector<std::size_t> q(n);
    std::iota(q.begin(), q.end(), 0);
    rng.shuffle(q);
    for (auto i : q) dp.push_back(d[i]);
    CHECK(genericity_certificate(lp, dp).generic == base);
  }
  CHECK(generic > 0);
}

TEST_CASE("forced coincidences of derived parameters") {
  Rng rng(8);
  for (unsigned n = 3; n <= 6; ++n) {
    std::vector<Rational> nu, gamma;
    Rational w(0), g(0);
    for (unsigned j = 1; j < n; ++j) {
      nu.push_back(rng.rational(30, 7));
      w += Rational(j) * nu.back();
    }
    for (unsigned j = 1; j + 1 < n; ++j) {
      gamma.push_back(rng.rational(30, 7));
      g += gamma.back();
    }
    gamma.push_back(w - g);
    const DeformationParams p = lambda_delta_from_nu_gamma(nu, gamma);
    const GenericityResult strict = genericity_certificate(p.lambda, p.delta);
    CHECK_FALSE(strict.generic);
    CHECK(strict.a == std::vector<unsigned>{n});
    CHECK(strict.b == std::vector<unsigned>{n});
    CHECK(genericity_certificate(p.lambda, p.delta, GenericityScope::except_forced).generic);
  }
}
