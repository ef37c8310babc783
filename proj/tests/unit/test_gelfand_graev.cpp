#include "doctest.h"

#include "hikita/error.hpp"
#include "hikita/gelfand_graev.hpp"
#include "hikita/poly_io.hpp"
#include "hikita/random.hpp"
#include "oracles.hpp"

using namespace hikita;

namespace {

Polynomial product(const Ring& r, const std::vector<std::string>& factors) {
  Polynomial p = Polynomial::constant(r, 1);
  for (const auto& f : factors) p *= parse_polynomial(f, r);
  return p;
}

RationalFunction typed(const Ring& r, const std::vector<std::string>& num, const std::vector<std::string>& den) {
  return RationalFunction(product(r, num), product(r, den));
}

}  // namespace

TEST_CASE("s_k matrices") {
  const Ring r = gg_ring(2);
  const RFMatrix s = sk_matrix(r, 2, 1);
  CHECK(s(0, 0).is_zero());
  CHECK(s(1, 1).is_zero());
  CHECK(s(0, 1) == typed(r, {"1"}, {"y1 - y2"}));
  CHECK(s(1, 0) == typed(r, {"y2 - y1"}, {}));
  CHECK(det(s).is_one());
  CHECK_THROWS_AS(sk_matrix(r, 2, 2), InvalidInput);
  CHECK_THROWS_AS(sk_matrix(r, 3, 1, 2, 2), InvalidInput);
}

TEST_CASE("sigma_1 on the identity") {
  const Ring r = gg_ring(2);
  const GGPoint out = sigma_k(constant_seed(r, QMatrix::identity(2)), 1);
  CHECK(out.perm == Permutation{2, 1});
  CHECK(out.g == sk_matrix(r, 2, 1));
}

TEST_CASE("involution and braid relations") {
  for (unsigned n = 2; n <= 4; ++n) {
    const Ring r = gg_ring(n);
    const GGPoint seed = symbolic_seed(r, n);
    for (unsigned k = 1; k < n; ++k) {
      CHECK(apply_word(seed, {k, k}) == seed);
      CHECK(det(sigma_k(seed, k).g) == det(seed.g));
    }
    for (unsigned k = 1; k + 1 < n; ++k) CHECK(apply_word(seed, {k, k + 1, k}) == apply_word(seed, {k + 1, k, k + 1}));
    for (unsigned k = 1; k + 2 < n; ++k) CHECK(apply_word(seed, {k, k + 2}) == apply_word(seed, {k + 2, k}));
  }
}

TEST_CASE("longest word") {
  CHECK(longest_word(3) == std::vector<unsigned>{1, 2, 1});
  for (unsigned n = 2; n <= 6; ++n) CHECK(longest_word(n).size() == n * (n - 1) / 2);
}

TEST_CASE("n = 2 longest element") {
  const Ring r = gg_ring(2);
  const GGPoint out = apply_word(symbolic_seed(r, 2), longest_word(2));
  CHECK(out.perm == Permutation{2, 1});
  CHECK(out.g(0, 0) == typed(r, {"g12", "y2 - y1"}, {}));
  CHECK(out.g(1, 0) == typed(r, {"g22", "y2 - y1"}, {}));
  CHECK(out.g(0, 1) == typed(r, {"g11"}, {"y1 - y2"}));
  CHECK(out.g(1, 1) == typed(r, {"g21"}, {"y1 - y2"}));
}

TEST_CASE("n = 4 longest element against the typed matrix") {
  const Ring r = gg_ring(4);
  RFMatrix expected(4, 4, RationalFunction(r));
  for (unsigned i = 1; i <= 4; ++i) {
    const std::string g = "g" + std::to_string(i);
    expected(i - 1, 0) = typed(r, {g + "4", "y4 - y1", "y4 - y2", "y4 - y3"}, {});
    expected(i - 1, 1) = typed(r, {g + "3", "y3 - y1", "y3 - y2"}, {"y3 - y4"});
    expected(i - 1, 2) = typed(r, {g + "2", "y2 - y1"}, {"y2 - y3", "y2 - y4"});
    expected(i - 1, 3) = typed(r, {g + "1"}, {"y1 - y2", "y1 - y3", "y1 - y4"});
  }
  const GGPoint out = apply_word(symbolic_seed(r, 4), longest_word(4));
  CHECK(out.g == expected);
  CHECK(w0_closed_form(r, 4) == expected);
  CHECK(out.perm == Permutation{4, 3, 2, 1});
}

TEST_CASE("closed form matches the word for small n") {
  for (unsigned n = 2; n <= 5; ++n) {
    const Ring r = gg_ring(n);
    CHECK(apply_word(symbolic_seed(r, n), longest_word(n)).g == w0_closed_form(r, n));
  }
}

TEST_CASE("delta minors") {
  Rng rng(8);
  const Ring r = gg_ring(3);
  QMatrix q(3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) q(i, j) = rng.rational(5, 2);
  const RFMatrix g = constant_seed(r, q).g;
  CHECK(delta_minor(g, {1, 2, 3}, {1, 2, 3}) == RationalFunction::constant(r, oracle::leibniz_det(q)));
  CHECK(delta_minor(g, {1, 3}, {2, 3}) == RationalFunction::constant(r, oracle::leibniz_det(q.submatrix({0, 2}, {1, 2}))));
  CHECK(delta_minor(g, {}, {}).is_one());
  CHECK_THROWS_AS(delta_minor(g, {1}, {1, 2}), InvalidInput);

  // Scaling row i by t_i scales Delta_{S,*} by prod_{s in S} t_s.
  QMatrix scaled = q;
  const std::vector<Rational> t = {Rational(2), Rational(-3), Rational(5, 7)};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) scaled(i, j) *= t[i];
  const RFMatrix gs = constant_seed(r, scaled).g;
  CHECK(delta_minor(gs, {1, 3}, {1, 2}) == delta_minor(g, {1, 3}, {1, 2}) * RationalFunction::constant(r, t[0] * t[2]));
}

TEST_CASE("restriction signs") {
  const Ring r3 = gg_ring(3);
  for (const Subset& s : {Subset{1}, Subset{2}, Subset{3}}) {
    const W0DeltaCheck c = restrict_w0_delta(r3, 3, s);
    CHECK(c.passed);
    CHECK(c.epsilon == 1);
  }
  for (const Subset& s : {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}) {
    const W0DeltaCheck c = restrict_w0_delta(r3, 3, s);
    CHECK(c.passed);
    CHECK(c.epsilon == -1);
  }
  const Ring r4 = gg_ring(4);
  for (unsigned i = 1; i < 4; ++i)
    for (const Subset& s : subsets_of_size(4, i)) CHECK(restrict_w0_delta(r4, 4, s).passed);
  CHECK_THROWS_AS(restrict_w0_delta(r3, 3, {1, 2, 3}), InvalidInput);
}

TEST_CASE("permutation matrices have determinant one") {
  for (unsigned n = 2; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n)) CHECK(oracle::leibniz_det(permutation_matrix(w)) == Rational(1));
  CHECK(all_permutations(4).size() == 24);
  CHECK(permutation_sign({2, 1, 3}) == -1);
  CHECK_THROWS_AS(permutation_matrix({1, 1}), InvalidInput);
}

TEST_CASE("fixed-ring images for n = 2") {
  const ImageCheck off = image_in_fixed_ring(2, {2}, {1, 2});
  CHECK_FALSE(off.support);
  CHECK(off.value.is_zero());
  const ImageCheck on = image_in_fixed_ring(2, {2}, {2, 1});
  CHECK(on.support);
  CHECK(on.passed);
  const Ring& c = on.value.ring();
  const Polynomial f = parse_polynomial("y2 - y1", c);
  CHECK((on.value == f || on.value == -f));
  CHECK(on.value == Rational(on.sign) * f);
}

TEST_CASE("images over all (S, w) and the orbit sweep") {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned i = 1; i < n; ++i)
      for (const Subset& s : subsets_of_size(n, i))
        for (const Permutation& w : all_permutations(n)) {
          const ImageCheck c = image_in_fixed_ring(n, s, w);
          CHECK(c.passed);
          if (!c.support) CHECK(c.value.is_zero());
        }
    const OrbitSweep sweep = generator_orbit_sweep(n);
    CHECK(sweep.image_failures == 0);
    CHECK(sweep.orbit_failures == 0);
    CHECK(sweep.complete);
    CHECK(sweep.recovered.size() == fst_generator_count(n));
  }
}
