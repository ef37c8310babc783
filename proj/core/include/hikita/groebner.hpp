#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hikita/polynomial.hpp"

namespace hikita {

/// Generators in one ring. Zero generators are dropped on construction.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

struct GroebnerBudget {
  std::size_t max_basis_size = 5000;
  std::uint64_t max_steps = 50'000'000;  // reduction steps
};

struct GroebnerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> elements);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::vector<Monomial> leading_monomials() const;

  /// Remainder of full reduction; zero iff f lies in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
};

/// (lcm/lt(f)) f - (lcm/lt(g)) g for the leading terms.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full reduction of f by `basis`; adds the number of steps to *steps.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, std::uint64_t* steps = nullptr);

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy, in the ideal's ring order. Throws BudgetExceeded.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr);
/// Same, after moving the ideal to the given order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerBudget& budget = {},
                         GroebnerStats* stats = nullptr);

struct QuotientProfile {
  bool finite = false;
  std::optional<std::string> witness_variable;  // set when infinite
  std::uint64_t dimension = 0;
  std::vector<Monomial> standard_monomials;  // increasing in the ring order
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hilbert_series;  // (weighted degree, count)
};

/// Standard monomials and their weighted-degree histogram. Throws
/// BudgetExceeded past max_monomials standard monomials.
QuotientProfile quotient_profile(const GroebnerBasis& gb, const std::vector<std::uint64_t>& weights,
                                 std::uint64_t max_monomials = 1'000'000);

/// "1 + 4q^2 + q^4" style rendering of a series.
std::string format_series(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& series);

}  // namespace hikita
