#include "doctest.h"

#include "hikita/error.hpp"
#include "hikita/hikita_ring.hpp"
#include "hikita/poly_io.hpp"
#include "oracles.hpp"

using namespace hikita;

TEST_CASE("subset helpers") {
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(4, 2).front() == Subset{1, 2});
  CHECK(subsets_of_size(4, 2).back() == Subset{3, 4});
  CHECK(complement({2, 4}, 5) == Subset{1, 3, 5});
  CHECK(format_subset({1, 3}) == "{1,3}");
}

TEST_CASE("f_{S,T} is the product of differences") {
  const Ring r = cartan_ring(2);
  CHECK(f_polynomial(r, 2, {1}, {2}) == parse_polynomial("x1 - y2", r));
  CHECK(f_polynomial(r, 2, {1, 2}, {1}) == parse_polynomial("x1*x2 - x1*y1 - x2*y1 + y1^2", r));
  CHECK_THROWS_AS(f_polynomial(r, 2, {}, {1}), InvalidInput);
  CHECK_THROWS_AS(f_polynomial(r, 2, {3}, {1}), InvalidInput);
}

TEST_CASE("generator counts") {
  for (unsigned n = 2; n <= 7; ++n) {
    std::uint64_t expected = 0;
    for (unsigned i = 1; i < n; ++i) expected += oracle::choose(n, n - i) * oracle::choose(n, i);
    CHECK(fst_generator_count(n) == expected);
    if (n <= 5) CHECK(hikita_presentation(n).fst_generators.size() == expected);
  }
}

TEST_CASE("Cartan square ideal membership matches the oracle") {
  const Ideal c = cartan_square_ideal(2);
  const Ring& r = c.ring();
  // x1 x2 - y1 y2 lies in it; x1 - y1 does not.
  CHECK(oracle::member_up_to_degree(parse_polynomial("x1*x2 - y1*y2", r), c.generators(), 3));
  CHECK_FALSE(oracle::member_up_to_degree(parse_polynomial("x1 - y1", r), c.generators(), 3));
  const GroebnerBasis gb = buchberger(c);
  CHECK(gb.contains(parse_polynomial("x1*x2 - y1*y2", r)));
  CHECK_FALSE(gb.contains(parse_polynomial("x1 - y1", r)));
}

TEST_CASE("fixed-point ring for n = 2 and 3") {
  const RingAnalysis two = fixed_point_ring_analysis(2);
  CHECK(two.profile.finite);
  CHECK(two.profile.dimension == 1);
  CHECK(format_series(two.profile.hilbert_series) == "1");
  const RingAnalysis three = fixed_point_ring_analysis(3);
  CHECK(three.profile.dimension == 5);
  CHECK(format_series(three.profile.hilbert_series) == "1 + 4q^2");
}

TEST_CASE("fixed-point ring for n = 2 by the membership oracle") {
  // Every monomial of positive degree should already lie in the ideal.
  const Ideal ideal = hikita_ideal(2);
  const Ring& r = ideal.ring();
  for (const std::string m : {"x1", "y2", "x1*y1"})
    CHECK(oracle::member_up_to_degree(parse_polynomial(m, r), ideal.generators(), 3));
  CHECK_FALSE(oracle::member_up_to_degree(Polynomial::constant(r, 1), ideal.generators(), 3));
}

TEST_CASE("complement identity") {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto checks = verify_complement_identity(n);
    CHECK(checks.size() == fst_generator_count(n));
    for (const auto& c : checks) CHECK(c.passed);
  }
  // Direct oracle for n = 2: f_{1,1} + f_{2,2} lies in the Cartan square ideal.
  const Ideal c = cartan_square_ideal(2);
  const Ring& r = c.ring();
  const Polynomial lhs = f_polynomial(r, 2, {1}, {1}) + f_polynomial(r, 2, {2}, {2});
  CHECK(oracle::member_up_to_degree(lhs, c.generators(), 2));
}

TEST_CASE("hyperpolygon dimensions against the square-swap oracle") {
  for (unsigned n = 4; n <= 7; ++n) {
    const std::uint64_t expected = oracle::square_swap_quotient_dim(n, n - 2);
    CHECK(hyperpolygon_dim_oracle(n) == expected);
    CHECK(hyperpolygon_ring_analysis(n).profile.dimension == expected);
  }
  CHECK(hyperpolygon_ring_analysis(4).profile.dimension == 5);
  CHECK(hyperpolygon_ring_analysis(5).profile.dimension == 17);
}
