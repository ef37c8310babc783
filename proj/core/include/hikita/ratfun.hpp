#pragma once

#include <string>

#include "hikita/polynomial.hpp"

namespace hikita {

/// Quotient of polynomials in lowest terms; the denominator is monic with
/// respect to the ring's monomial order.
class RationalFunction {
 public:
  explicit RationalFunction(Ring ring);
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  /// Throws ArithmeticError on a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(Ring ring, const Rational& c) {
    return RationalFunction(Polynomial::constant(std::move(ring), c));
  }

  const Ring& ring() const { return num_.ring(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value().is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws ArithmeticError when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Applies a polynomial substitution to numerator and denominator.
  RationalFunction substitute(const std::vector<std::optional<Polynomial>>& images, const Ring& target) const;
  RationalFunction permute_variables(const std::vector<std::size_t>& perm) const;

  /// "num" for polynomials, "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced);
  void normalize_unit();

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline RationalFunction zero_like(const RationalFunction& f) { return RationalFunction(f.ring()); }
inline RationalFunction one_like(const RationalFunction& f) { return RationalFunction::constant(f.ring(), 1); }

}  // namespace hikita
