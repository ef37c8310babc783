#include "doctest.h"

#include "hikita/error.hpp"
#include "hikita/matrix.hpp"
#include "hikita/poly_io.hpp"
#include "hikita/polynomial.hpp"
#include "hikita/random.hpp"
#include "hikita/ratfun.hpp"
#include "oracles.hpp"

using namespace hikita;

namespace {

Ring xyz() { return make_ring({"x1", "x2", "x3"}); }

Polynomial P(const std::string& s, const Ring& r) { return parse_polynomial(s, r); }

// Random polynomial with small integer coefficients.
Polynomial random_poly(const Ring& r, Rng& rng, unsigned terms, unsigned maxdeg) {
  std::vector<Term> ts;
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<Exponent> e(r->nvars());
    for (auto& x : e) x = static_cast<Exponent>(rng.uniform(0, maxdeg));
    ts.push_back({Monomial(e), rng.rational(9, 3)});
  }
  return Polynomial(r, ts);
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidInput);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("big rationals do not overflow") {
  Rational r(1);
  for (int i = 0; i < 100; ++i) r *= Rational(1'000'000'007);
  for (int i = 0; i < 100; ++i) r /= Rational(1'000'000'007);
  CHECK(r.is_one());
}

TEST_CASE("polynomial ring axioms on random inputs") {
  const Ring r = xyz();
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = random_poly(r, rng, 4, 3), b = random_poly(r, rng, 3, 2), c = random_poly(r, rng, 3, 2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
  }
}

TEST_CASE("parse and print round trip") {
  const Ring r = make_ring({"x1", "x2", "y1", "z1", "p"});
  for (const std::string s : {"3/2*x1^2*y1 - x1 + 4", "p^3 - z1*p + 1/7", "0", "-x2", "x1*x2*y1*z1*p"}) {
    const Polynomial f = P(s, r);
    CHECK(P(format_polynomial(f), r) == f);
    CHECK(format_polynomial(P(format_polynomial(f), r)) == format_polynomial(f));
  }
  CHECK(format_polynomial(P("x1 - x1", r)) == "0");
  CHECK_THROWS_AS(P("x1 + + ", r), InvalidInput);
  CHECK_THROWS_AS(P("w7", r), InvalidInput);
  CHECK_THROWS_AS(P("x1 * x2", make_ring({"x1"})), InvalidInput);
}

TEST_CASE("mixing rings is rejected") {
  const Polynomial a = Polynomial::variable(make_ring({"x1"}), 0);
  const Polynomial b = Polynomial::variable(make_ring({"x1", "x2"}), 0);
  CHECK_THROWS_AS(a + b, ContextMismatch);
}

TEST_CASE("elementary symmetric polynomials against subset expansion") {
  const Ring r = make_ring({"x1", "x2", "x3", "x4"});
  for (unsigned k = 0; k <= 4; ++k) {
    Polynomial expected(r);
    for (unsigned mask = 0; mask < 16; ++mask) {
      if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
      Polynomial term = Polynomial::constant(r, 1);
      for (unsigned i = 0; i < 4; ++i)
        if (mask & (1U << i)) term *= Polynomial::variable(r, i);
      expected += term;
    }
    CHECK(elementary_symmetric(r, k, {0, 1, 2, 3}) == expected);
  }
  // prod (t - x_i) = sum (-1)^k e_k t^{n-k}, evaluated coefficientwise.
  const Ring rt = make_ring({"x1", "x2", "x3", "t"});
  Polynomial prod = Polynomial::constant(rt, 1);
  for (unsigned i = 0; i < 3; ++i) prod *= Polynomial::variable(rt, 3) - Polynomial::variable(rt, i);
  Polynomial viete(rt);
  for (unsigned k = 0; k <= 3; ++k) {
    Polynomial e = elementary_symmetric(rt, k, {0, 1, 2}) * Polynomial::variable(rt, 3).pow(3 - k);
    viete += (k % 2 ? Rational(-1) : Rational(1)) * e;
  }
  CHECK(prod == viete);
}

TEST_CASE("exact division and gcd") {
  const Ring r = xyz();
  const Polynomial a = P("x1^2 - x2^2", r), b = P("x1 + x2", r);
  REQUIRE(divide_exact(a, b).has_value());
  CHECK(*divide_exact(a, b) == P("x1 - x2", r));
  CHECK_FALSE(divide_exact(a, P("x1 + x3", r)).has_value());
  CHECK(gcd(a, P("x1^2 + 2*x1*x2 + x2^2", r)) == b);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial g = random_poly(r, rng, 2, 2) + Polynomial::variable(r, 0);
    const Polynomial u = random_poly(r, rng, 2, 2) + Polynomial::constant(r, 1);
    const Polynomial v = random_poly(r, rng, 2, 1) + Polynomial::variable(r, 2);
    const Polynomial d = gcd(g * u, g * v);
    CHECK(divide_exact(g * u, d).has_value());
    CHECK(divide_exact(d, g.monic()).has_value());
  }
}

TEST_CASE("rational functions normalize") {
  const Ring r = make_ring({"y1", "y2"});
  const Polynomial y1 = Polynomial::variable(r, 0), y2 = Polynomial::variable(r, 1);
  const RationalFunction f(y1 * y1 - y2 * y2, y1 - y2);
  CHECK(f.is_polynomial());
  CHECK(f == RationalFunction(y1 + y2));
  const RationalFunction g(Polynomial::constant(r, 1), y1 - y2);
  CHECK(g * RationalFunction(y2 - y1) == RationalFunction::constant(r, -1));
  CHECK((g - g).is_zero());
  CHECK(g.inverse() == RationalFunction(y1 - y2));
  CHECK_THROWS_AS(g / RationalFunction(r), ArithmeticError);
  CHECK(RationalFunction(2 * y1, 4 * y2) == RationalFunction(y1, 2 * y2));
}

TEST_CASE("Bareiss determinant against the Leibniz sum") {
  Rng rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.chance(1, 4) ? Rational(0) : rng.rational(7, 5);
      CHECK(det(m) == oracle::leibniz_det(m));
      CHECK(det_expansion(m) == oracle::leibniz_det(m));
    }
  }
}

TEST_CASE("solve, kernel, inverse, rank") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = rng.rational(5, 2);
    std::vector<Rational> x0 = {rng.rational(3, 1), rng.rational(3, 1), rng.rational(3, 1), rng.rational(3, 1)};
    std::vector<Rational> b(3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) b[i] += a(i, j) * x0[j];
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      Rational lhs(0);
      for (std::size_t j = 0; j < 4; ++j) lhs += a(i, j) * sol->particular[j];
      CHECK(lhs == b[i]);
    }
    CHECK(kernel(a).size() == 4 - rank(a));
    for (const auto& k : kernel(a))
      for (std::size_t i = 0; i < 3; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * k[j];
        CHECK(s.is_zero());
      }
  }
  const QMatrix m = qmatrix_from_strings({{"2", "1"}, {"1", "1/2"}});
  CHECK(rank(m) == 1);
  CHECK_THROWS_AS(inverse(m), RankError);
  const QMatrix g = qmatrix_from_strings({{"2", "1"}, {"1", "1"}});
  CHECK(g * inverse(g) == QMatrix::identity(2, Rational(1)));
  CHECK_FALSE(solve(qmatrix_from_strings({{"1", "1"}, {"1", "1"}}), {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("characteristic polynomial of a companion-like matrix") {
  // diag(1, 2, -3): t^3 - 0 t^2 - 7 t + 6.
  QMatrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = -3;
  const auto c = characteristic_polynomial(d);
  CHECK(c == std::vector<Rational>{Rational(6), Rational(-7), Rational(0), Rational(1)});
}
