#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hikita/groebner.hpp"

namespace hikita {

/// Sorted 1-based subset of [n].
using Subset = std::vector<unsigned>;

/// Every subset of [n] of size k, in lexicographic order.
std::vector<Subset> subsets_of_size(unsigned n, unsigned k);
/// [n] minus s.
Subset complement(const Subset& s, unsigned n);
std::string format_subset(const Subset& s);

/// Q[x1..xn, y1..yn] in degree-reverse-lexicographic order.
Ring cartan_ring(unsigned n);

/// prod_{s in S, t in T} (x_s - y_t). S and T must be nonempty: the empty
/// product is 1 and would make the quotient zero.
Polynomial f_polynomial(const Ring& ring, unsigned n, const Subset& s, const Subset& t);

/// e_1(x), e_1(y) and e_k(x) - e_k(y) for 2 <= k <= n.
Ideal cartan_square_ideal(unsigned n);

struct FstGenerator {
  Subset s;
  Subset t;
  Polynomial f;
};

struct HikitaPresentation {
  unsigned n = 0;
  Ring ring;
  std::vector<Polynomial> cartan_generators;
  std::vector<FstGenerator> fst_generators;  // nonempty S, T with |S| + |T| = n
  std::vector<std::uint64_t> weights;        // 2 on every variable

  Ideal ideal() const;
};

HikitaPresentation hikita_presentation(unsigned n);
Ideal hikita_ideal(unsigned n);

/// Closed-form count sum_{i=1}^{n-1} C(n, n-i) C(n, i).
std::uint64_t fst_generator_count(unsigned n);

struct RingAnalysis {
  unsigned n = 0;
  std::size_t generator_count = 0;
  std::size_t groebner_size = 0;
  GroebnerStats stats;
  QuotientProfile profile;  // series binned by cohomological degree
  std::vector<std::pair<std::uint64_t, std::uint64_t>> polynomial_degree_series;
};

RingAnalysis fixed_point_ring_analysis(unsigned n, const GroebnerBudget& budget = {});

struct ComplementCheck {
  Subset s;
  Subset t;
  int sign = 1;  // (-1)^{|S||T|}
  bool passed = false;
};

/// f_{S,T} - (-1)^{|S||T|} f_{[n]\S,[n]\T} reduces to 0 modulo the Cartan
/// square ideal, for every admissible (S,T).
std::vector<ComplementCheck> verify_complement_identity(unsigned n, const GroebnerBudget& budget = {});

/// Q[z1..zn, p] modulo p - z_i^2 and every monomial of weighted degree
/// 2(n-2), with deg z_i = 2, deg p = 4.
Ideal hyperpolygon_ideal(unsigned n);
RingAnalysis hyperpolygon_ring_analysis(unsigned n, const GroebnerBudget& budget = {});
/// sum over k + 2m <= n - 3 of C(n, k).
std::uint64_t hyperpolygon_dim_oracle(unsigned n);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace hikita
