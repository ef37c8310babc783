#include "hikita/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "hikita/error.hpp"

namespace hikita {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (Polynomial& g : generators) {
    require_same_ring(g.ring(), ring_);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  for (const Polynomial& e : elements_) require_same_ring(e.ring(), ring_);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const Polynomial& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_);
  return reduce(f, elements_);
}

bool GroebnerBasis::is_unit_ideal() const {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw InvalidInput("S-polynomial of a zero polynomial");
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial l = lcm(lf.monomial, lg.monomial);
  const Polynomial a = f.mul_term(l / lf.monomial, lf.coeff.inverse());
  return a.sub_mul_term(l / lg.monomial, lg.coeff.inverse(), g);
}

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& basis) {
  for (const Polynomial* g : basis) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

Polynomial reduce_ptrs(Polynomial r, const std::vector<const Polynomial*>& basis, std::uint64_t* steps,
                       std::uint64_t max_steps) {
  std::vector<Term> rem;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    const Polynomial* g = find_reducer(lt.monomial, basis);
    if (g == nullptr) {
      rem.push_back(lt);
      r = r.tail();
      continue;
    }
    if (steps != nullptr) {
      if (++*steps > max_steps) throw BudgetExceeded("Groebner reduction step budget exceeded");
    }
    const Term& lg = g->leading_term();
    const Rational c = lg.coeff.is_one() ? lt.coeff : lt.coeff / lg.coeff;
    r = r.sub_mul_term(lt.monomial / lg.monomial, c, *g);
  }
  // Remainder terms were emitted in decreasing order already.
  return Polynomial(r.ring(), std::move(rem));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class PairQueue {
 public:
  explicit PairQueue(const MonomialOrder& order) : order_(&order) {}

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  void assign(std::vector<Pair> pairs) { pairs_ = std::move(pairs); }

  // Normal strategy: smallest lcm degree, then smallest lcm, then indices.
  Pair pop() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (before(pairs_[k], pairs_[best])) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    const int c = order_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  const MonomialOrder* order_;
  std::vector<Pair> pairs_;
};

class Engine {
 public:
  Engine(const Ring& ring, const GroebnerBudget& budget, GroebnerStats& stats)
      : ring_(ring), budget_(budget), stats_(stats), queue_(ring->order()) {}

  void add_generators(std::vector<Polynomial> gens) {
    const MonomialOrder& order = ring_->order();
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (Polynomial& g : gens) {
      Polynomial h = reduce_ptrs(std::move(g), active_ptrs(), &stats_.reduction_steps, budget_.max_steps);
      if (!h.is_zero()) insert(h.monic());
      if (unit_) return;
    }
  }

  void run() {
    while (!queue_.empty() && !unit_) {
      const Pair p = queue_.pop();
      ++stats_.pairs_reduced;
      const Polynomial& f = polys_[p.i];
      const Polynomial& g = polys_[p.j];
      if (f.is_monomial() && g.is_monomial()) {
        ++stats_.zero_reductions;
        continue;
      }
      Polynomial h = reduce_ptrs(s_polynomial(f, g), active_ptrs(), &stats_.reduction_steps, budget_.max_steps);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic());
    }
  }

  std::vector<Polynomial> reduced_basis() {
    if (unit_) return {Polynomial::constant(ring_, Rational(1))};
    std::vector<const Polynomial*> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(&polys_[k]);
    }
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m) {
        if (m != k) others.push_back(minimal[m]);
      }
      const Polynomial& g = *minimal[k];
      Polynomial tail = reduce_ptrs(g.tail(), others, &stats_.reduction_steps, budget_.max_steps);
      out.push_back(Polynomial::monomial(ring_, g.leading_monomial(), Rational(1)) + tail);
    }
    const MonomialOrder& order = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  std::vector<const Polynomial*> active_ptrs() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    std::size_t live = 0;
    for (std::size_t k = 0; k < hi; ++k) live += active_[k] ? 1 : 0;
    if (live + 1 > budget_.max_basis_size) {
      throw BudgetExceeded("Groebner basis size budget exceeded (" + std::to_string(budget_.max_basis_size) + ")");
    }

    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) fresh.push_back({k, hi, lcm(polys_[k].leading_monomial(), lh)});
    }
    // Chain criterion among the new pairs: drop (g,h) if another new pair's
    // lcm properly divides it; keep one representative of equal lcms,
    // preferring a coprime one.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) keep[a] = false;
      }
    }
    std::vector<bool> coprime(fresh.size());
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      coprime[a] = polys_[fresh[a].i].leading_monomial().coprime(lh);
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = 0; b < a; ++b) {
        if (!keep[b] || !(fresh[a].lcm == fresh[b].lcm)) continue;
        // Equal lcms: keep b unless a is coprime and b is not.
        if (coprime[a] && !coprime[b]) {
          keep[b] = false;
        } else {
          keep[a] = false;
          break;
        }
      }
    }
    // Product criterion: a kept coprime pair reduces to zero.
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (keep[a] && !coprime[a]) accepted.push_back(fresh[a]);
    }
    // Old pairs (f,g) made redundant by h.
    std::vector<Pair> old;
    for (const Pair& p : queue_.pairs()) {
      const bool redundant = lh.divides(p.lcm) &&
                             !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                             !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!redundant) old.push_back(p);
    }
    stats_.pairs_created += accepted.size();
    for (Pair& p : accepted) old.push_back(std::move(p));
    queue_.assign(std::move(old));
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
  }

  Ring ring_;
  const GroebnerBudget& budget_;
  GroebnerStats& stats_;
  PairQueue queue_;
  std::deque<Polynomial> polys_;
  std::vector<bool> active_;
  bool unit_ = false;
};

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, std::uint64_t* steps) {
  std::vector<const Polynomial*> ptrs;
  for (const Polynomial& g : basis) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw InvalidInput("cannot reduce by the zero polynomial");
    ptrs.push_back(&g);
  }
  return reduce_ptrs(f, ptrs, steps, UINT64_MAX);
}

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerBudget& budget, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& s = stats != nullptr ? *stats : local;
  if (ideal.generators().empty()) return GroebnerBasis(ideal.ring(), {});
  Engine engine(ideal.ring(), budget, s);
  engine.add_generators(ideal.generators());
  engine.run();
  return GroebnerBasis(ideal.ring(), engine.reduced_basis());
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerBudget& budget,
                         GroebnerStats* stats) {
  const Ring target = with_order(ideal.ring(), order);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size());
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.rebase(target));
  return buchberger(Ideal(target, std::move(gens)), budget, stats);
}

QuotientProfile quotient_profile(const GroebnerBasis& gb, const std::vector<std::uint64_t>& weights,
                                 std::uint64_t max_monomials) {
  const Ring& ring = gb.ring();
  const std::size_t n = ring->nvars();
  if (weights.size() != n) throw InvalidInput("grading needs one weight per variable");
  QuotientProfile out;
  const std::vector<Monomial> lms = gb.leading_monomials();
  if (gb.is_unit_ideal()) {
    out.finite = true;
    return out;
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool has_power = false;
    for (const Monomial& m : lms) {
      const auto pv = m.pure_power_variable();
      if (pv && *pv == v) has_power = true;
    }
    if (!has_power) {
      out.finite = false;
      out.witness_variable = ring->name(v);
      return out;
    }
  }
  out.finite = true;
  const auto standard = [&](const Monomial& m) {
    for (const Monomial& l : lms) {
      if (l.divides(m)) return false;
    }
    return true;
  };
  struct Hash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
  };
  std::unordered_set<Monomial, Hash> seen;
  std::deque<Monomial> frontier;
  frontier.emplace_back(n);
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.front());
    frontier.pop_front();
    out.standard_monomials.push_back(m);
    if (out.standard_monomials.size() > max_monomials) {
      throw BudgetExceeded("standard monomial enumeration budget exceeded");
    }
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (seen.count(next) != 0 || !standard(next)) continue;
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  const MonomialOrder& order = ring->order();
  std::sort(out.standard_monomials.begin(), out.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  out.dimension = out.standard_monomials.size();
  std::map<std::uint64_t, std::uint64_t> bins;
  for (const Monomial& m : out.standard_monomials) ++bins[m.weighted_degree(weights)];
  out.hilbert_series.assign(bins.begin(), bins.end());
  return out;
}

std::string format_series(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& series) {
  if (series.empty()) return "0";
  std::string out;
  for (const auto& [deg, count] : series) {
    if (!out.empty()) out += " + ";
    if (deg == 0) {
      out += std::to_string(count);
      continue;
    }
    if (count != 1) out += std::to_string(count);
    out += "q";
    if (deg != 1) out += "^" + std::to_string(deg);
  }
  return out;
}

}  // namespace hikita
