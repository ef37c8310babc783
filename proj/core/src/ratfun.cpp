#include "hikita/ratfun.hpp"

#include "hikita/error.hpp"

namespace hikita {

namespace {

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant()) return a * b.constant_value().inverse();
  auto q = divide_exact(a, b);
  if (!q) throw VerificationFailure("inexact division inside rational-function arithmetic");
  return std::move(*q);
}

bool is_one_poly(const Polynomial& p) { return p.is_constant() && p.constant_value().is_one(); }

}  // namespace

RationalFunction::RationalFunction(Ring ring)
    : num_(ring), den_(Polynomial::constant(ring, Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.ring(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ring(num_.ring(), den_.ring());
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), Rational(1));
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact(num_, g);
    den_ = exact(den_, g);
  }
  normalize_unit();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), Rational(1));
    return;
  }
  normalize_unit();
}

void RationalFunction::normalize_unit() {
  const Rational lc = den_.leading_coeff();
  if (lc.is_one()) return;
  const Rational inv = lc.inverse();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (is_one_poly(a.den_)) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Reduced{});
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d) and only
  // gcd(numerator, g) can cancel.
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFunction::Reduced{});
  }
  const Polynomial bp = exact(a.den_, g);
  const Polynomial dp = exact(b.den_, g);
  Polynomial num = a.num_ * dp + b.num_ * bp;
  Polynomial den = bp * b.den_;
  if (num.is_zero()) return RationalFunction(a.ring());
  const Polynomial h = gcd(num, g);
  if (!h.is_constant()) {
    num = exact(num, h);
    den = exact(den, h);
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.ring());
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  // Cross-cancel: (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b).
  Polynomial an = a.num_;
  Polynomial ad = a.den_;
  Polynomial bn = b.num_;
  Polynomial bd = b.den_;
  if (!is_one_poly(bd)) {
    const Polynomial g1 = gcd(an, bd);
    if (!g1.is_constant()) {
      an = exact(an, g1);
      bd = exact(bd, g1);
    }
  }
  if (!is_one_poly(ad)) {
    const Polynomial g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
      bn = exact(bn, g2);
      ad = exact(ad, g2);
    }
  }
  return RationalFunction(an * bn, ad * bd, RationalFunction::Reduced{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
  return RationalFunction(den_, num_, Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
  return a * b.inverse();
}

RationalFunction RationalFunction::substitute(const std::vector<std::optional<Polynomial>>& images,
                                              const Ring& target) const {
  Polynomial den = den_.substitute(images, target);
  if (den.is_zero()) throw ArithmeticError("substitution makes the denominator vanish");
  return RationalFunction(num_.substitute(images, target), std::move(den));
}

RationalFunction RationalFunction::permute_variables(const std::vector<std::size_t>& perm) const {
  // A variable permutation preserves coprimality; only the unit changes.
  return RationalFunction(num_.permute_variables(perm), den_.permute_variables(perm), Reduced{});
}

std::string RationalFunction::to_string() const {
  if (is_one_poly(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hikita
