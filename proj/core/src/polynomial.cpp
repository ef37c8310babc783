#include "hikita/polynomial.hpp"

#include <algorithm>
#include <map>

#include "hikita/error.hpp"

namespace hikita {

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  if (!order_.priority().empty() && order_.priority().size() != names_.size()) {
    throw InvalidInput("variable priority length does not match the variable count");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInput("empty variable name");
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidInput("duplicate variable name '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InvalidInput("unknown variable '" + std::string(name) + "'");
}

Ring make_ring(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(names), std::move(order));
}

Ring with_order(const Ring& ring, MonomialOrder order) { return make_ring(ring->names(), std::move(order)); }

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw ContextMismatch("polynomials belong to different rings");
}

namespace {

void canonicalize(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
      c += terms[j].coeff;
      ++j;
    }
    if (!c.is_zero()) {
      terms[out].monomial = std::move(terms[i].monomial);
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
  for (const Term& t : terms_) {
    if (t.monomial.size() != ring_->nvars()) throw InvalidInput("monomial arity does not match the ring");
  }
  canonicalize(terms_, ring_->order());
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms, bool)
    : ring_(std::move(ring)), terms_(std::move(terms)) {}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(p.ring_->nvars(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  const std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational coeff) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->nvars()) throw InvalidInput("monomial arity does not match the ring");
  if (!coeff.is_zero()) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty() || !terms_.back().monomial.is_one()) return Rational(0);
  return terms_.back().coeff;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

bool Polynomial::is_homogeneous(const std::vector<std::uint64_t>& weights) const {
  if (terms_.empty()) return true;
  const std::uint64_t d = terms_.front().monomial.weighted_degree(weights);
  for (const Term& t : terms_) {
    if (t.monomial.weighted_degree(weights) != d) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  const Rational inv = terms_.front().coeff.inverse();
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff *= inv;
  return r;
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), true);
}

void Polynomial::check_ring(const Polynomial& other) const { require_same_ring(ring_, other.ring_); }

std::vector<Term> Polynomial::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                    const Rational* scale_b, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, scale_b ? b[j].coeff * *scale_b : b[j].coeff});
      ++j;
    } else {
      Rational s = scale_b ? a[i].coeff + b[j].coeff * *scale_b : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, scale_b ? b[j].coeff * *scale_b : b[j].coeff});
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge(terms_, rhs.terms_, nullptr, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_ring(rhs);
  if (rhs.terms_.empty()) return *this;
  const Rational minus_one(-1);
  terms_ = merge(terms_, rhs.terms_, &minus_one, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) terms.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  canonicalize(terms, a.ring_->order());
  return Polynomial(a.ring_, std::move(terms), true);
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of the terms.
  for (const Term& t : terms_) terms.push_back({t.monomial * m, t.coeff * c});
  return Polynomial(ring_, std::move(terms), true);
}

Polynomial Polynomial::sub_mul_term(const Monomial& m, const Rational& c, const Polynomial& g) const {
  check_ring(g);
  const MonomialOrder& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < terms_.size() && j < g.terms_.size()) {
    if (!have_shifted) {
      shifted = g.terms_[j].monomial * m;
      have_shifted = true;
    }
    const int cmp = order.compare(terms_[i].monomial, shifted);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), -(g.terms_[j].coeff * c)});
      have_shifted = false;
      ++j;
    } else {
      Rational s = terms_[i].coeff - g.terms_[j].coeff * c;
      if (!s.is_zero()) out.push_back({terms_[i].monomial, std::move(s)});
      have_shifted = false;
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back({g.terms_[j].monomial * m, -(g.terms_[j].coeff * c)});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Exponent Polynomial::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const Term& t : terms_) {
    Monomial m = t.monomial;
    const Exponent e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(ring_, std::move(b));
  return out;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images, const Ring& target) const {
  if (images.size() != ring_->nvars()) throw InvalidInput("substitution needs one entry per variable");
  for (const auto& img : images) {
    if (img) require_same_ring(img->ring(), target);
  }
  std::vector<std::optional<std::size_t>> kept(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    if (!images[v]) kept[v] = target->require_index(ring_->name(v));
  }
  // powers[v][e] = images[v]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(ring_->nvars());
  const auto power = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };
  std::vector<Term> plain;
  Polynomial result(target);
  for (const Term& t : terms_) {
    Monomial base(target->nvars());
    bool pure = true;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      const Exponent e = t.monomial[v];
      if (e == 0) continue;
      if (kept[v]) {
        base.set(*kept[v], base[*kept[v]] + e);
      } else {
        pure = false;
      }
    }
    if (pure) {
      plain.push_back({std::move(base), t.coeff});
      continue;
    }
    Polynomial piece = monomial(target, std::move(base), t.coeff);
    for (std::size_t v = 0; v < ring_->nvars() && !piece.is_zero(); ++v) {
      const Exponent e = t.monomial[v];
      if (e != 0 && !kept[v]) piece = piece * power(v, e);
    }
    result += piece;
  }
  if (!plain.empty()) result += Polynomial(target, std::move(plain));
  return result;
}

Polynomial Polynomial::rebase(const Ring& target) const {
  if (same_ring(ring_, target)) return Polynomial(target, terms_, true);
  std::vector<std::size_t> map(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v) map[v] = target->require_index(ring_->name(v));
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      if (t.monomial[v] != 0) m.set(map[v], t.monomial[v]);
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial Polynomial::permute_variables(const std::vector<std::size_t>& perm) const {
  if (perm.size() != ring_->nvars()) throw InvalidInput("permutation length does not match the ring");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidInput("not a permutation");
    seen[p] = true;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(ring_->nvars());
    for (std::size_t v = 0; v < perm.size(); ++v) {
      if (t.monomial[v] != 0) m.set(perm[v], t.monomial[v]);
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(ring_, std::move(terms));
}

Polynomial elementary_symmetric(const Ring& ring, unsigned k, const std::vector<std::size_t>& vars) {
  if (k > vars.size()) {
    throw InvalidInput("e_" + std::to_string(k) + " requested on " + std::to_string(vars.size()) + " variables");
  }
  for (std::size_t v : vars) {
    if (v >= ring->nvars()) throw InvalidInput("variable index out of range");
  }
  // Enumerate k-subsets in lexicographic order.
  std::vector<Term> terms;
  std::vector<std::size_t> pick(k);
  for (unsigned i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Monomial m(ring->nvars());
    for (std::size_t i : pick) m.set(vars[i], m[vars[i]] + 1);
    terms.push_back({std::move(m), Rational(1)});
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == vars.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Polynomial(ring, std::move(terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (a.is_zero()) return Polynomial(a.ring());
  const Term& lb = b.leading_term();
  const Rational inv = lb.coeff.inverse();
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.monomial.divides(lr.monomial)) return std::nullopt;
    Monomial q = lr.monomial / lb.monomial;
    Rational c = lr.coeff * inv;
    r = r.sub_mul_term(q, c, b);
    quotient.push_back({std::move(q), std::move(c)});
  }
  return Polynomial(a.ring(), std::move(quotient));
}

}  // namespace hikita
