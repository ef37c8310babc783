#include <algorithm>
#include <limits>

#include "hikita/error.hpp"
#include "hikita/polynomial.hpp"

namespace hikita {

namespace {

Monomial monomial_content(const Polynomial& p) {
  Monomial m = p.terms().front().monomial;
  for (const Term& t : p.terms()) m = gcd(m, t.monomial);
  return m;
}

Polynomial strip_monomial(const Polynomial& p, const Monomial& m) {
  if (m.is_one()) return p;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) terms.push_back({t.monomial / m, t.coeff});
  return Polynomial(p.ring(), std::move(terms));
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// gcd of all coefficients of `a` in `var`, folded together with `seed`.
Polynomial content_with(const Polynomial& a, std::size_t var, Polynomial seed) {
  auto coeffs = a.coefficients_in(var);
  // Small coefficients first: they shrink the running gcd fastest.
  std::stable_sort(coeffs.begin(), coeffs.end(),
                   [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  for (const Polynomial& c : coeffs) {
    if (c.is_zero()) continue;
    seed = seed.is_zero() ? c.monic() : gcd_impl(seed, c);
    if (seed.is_constant()) break;
  }
  return seed;
}

// Pseudo-remainder of a by b in `var`, up to a nonzero factor from the ring
// of coefficients.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const Exponent db = b.degree_in(var);
  const auto bc = b.coefficients_in(var);
  const Polynomial& lb = bc.back();
  const Ring& ring = a.ring();
  while (!a.is_zero()) {
    const Exponent da = a.degree_in(var);
    if (da < db) break;
    const Polynomial la = a.coefficients_in(var).back();
    const Polynomial shift = Polynomial::monomial(ring, Monomial::variable(ring->nvars(), var, da - db));
    a = lb * a - la * shift * b;
  }
  return a;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Ring& ring = a.ring();
  const Polynomial one = Polynomial::constant(ring, Rational(1));
  if (a.is_constant() || b.is_constant()) return one;

  const Monomial ma = monomial_content(a);
  const Monomial mb = monomial_content(b);
  if (!ma.is_one() || !mb.is_one()) {
    const Polynomial rest = gcd_impl(strip_monomial(a, ma), strip_monomial(b, mb));
    return rest.mul_term(gcd(ma, mb), Rational(1));
  }
  if (a.is_monomial() || b.is_monomial()) return one;
  if (a.size() >= b.size()) {
    if (divide_exact(a, b)) return b.monic();
  } else if (divide_exact(b, a)) {
    return a.monic();
  }

  const std::size_t n = ring->nvars();
  std::optional<std::size_t> only_a;
  std::optional<std::size_t> only_b;
  std::size_t best = n;
  Exponent best_deg = std::numeric_limits<Exponent>::max();
  for (std::size_t v = 0; v < n; ++v) {
    const Exponent da = a.degree_in(v);
    const Exponent db = b.degree_in(v);
    if (da > 0 && db == 0 && !only_a) only_a = v;
    if (db > 0 && da == 0 && !only_b) only_b = v;
    if (da > 0 && db > 0 && std::max(da, db) < best_deg) {
      best_deg = std::max(da, db);
      best = v;
    }
  }
  if (only_a) return content_with(a, *only_a, b.monic());
  if (only_b) return content_with(b, *only_b, a.monic());
  if (best == n) return one;

  const std::size_t v = best;
  const Polynomial ca = content_with(a, v, Polynomial(ring));
  const Polynomial cb = content_with(b, v, Polynomial(ring));
  const Polynomial c = gcd_impl(ca, cb);
  Polynomial p = *divide_exact(a, ca);
  Polynomial q = *divide_exact(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      q = one;
      break;
    }
    const Polynomial cr = content_with(r, v, Polynomial(ring));
    p = std::move(q);
    q = divide_exact(r, cr)->monic();
  }
  return (c * q).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  return gcd_impl(a, b);
}

}  // namespace hikita
