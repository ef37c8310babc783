#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hikita/monomial.hpp"
#include "hikita/rational.hpp"

namespace hikita {

/// Ordered variable names plus a monomial order. Polynomials only combine
/// when their rings compare equal.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, MonomialOrder order);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws InvalidInput for unknown names.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const PolyRing>;

Ring make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder(OrderKind::GrevLex));
/// Same variables, different order.
Ring with_order(const Ring& ring, MonomialOrder order);
bool same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) = default;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly
/// decreasing in the ring's monomial order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, Monomial m, Rational coeff = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant coefficient; zero for the zero polynomial.
  Rational constant_value() const;

  /// Leading data; the polynomial must be nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  /// Maximum total degree of a term, 0 for constants and zero.
  std::uint64_t total_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous(const std::vector<std::uint64_t>& weights) const;

  /// Divides by the leading coefficient (zero stays zero).
  Polynomial monic() const;
  /// All terms but the leading one.
  Polynomial tail() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// c * m * this.
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  /// this - c * m * g, a single merge pass.
  Polynomial sub_mul_term(const Monomial& m, const Rational& c, const Polynomial& g) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Exponent degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  /// Coefficients c_k with this = sum_k c_k * var^k; c_k does not involve var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Substitutes images[i] for variable i (nullopt keeps the variable).
  /// Images must live in `target`; variables kept must exist there by name.
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images, const Ring& target) const;
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images) const {
    return substitute(images, ring_);
  }
  /// Moves the polynomial to another ring, matching variables by name.
  Polynomial rebase(const Ring& target) const;
  /// Renames variable i to variable perm[i] (perm must be a permutation).
  Polynomial permute_variables(const std::vector<std::size_t>& perm) const;

  /// Text form in the polynomial grammar (see poly_io.hpp).
  std::string to_string() const;

 private:
  Polynomial(Ring ring, std::vector<Term> terms, bool /*already_canonical*/);
  void check_ring(const Polynomial& other) const;
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 const Rational* scale_b, const MonomialOrder& order);

  Ring ring_;
  std::vector<Term> terms_;
};

/// Throws ContextMismatch unless both rings agree.
void require_same_ring(const Ring& a, const Ring& b);

/// e_k of the given variables; e_0 = 1.
Polynomial elementary_symmetric(const Ring& ring, unsigned k, const std::vector<std::size_t>& vars);

/// a / b when b divides a exactly, nullopt otherwise. Throws on b == 0.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor normalized to leading coefficient 1; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hikita
