#include "hikita/hikita_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hikita/error.hpp"

namespace hikita {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Subset> subsets_of_size(unsigned n, unsigned k) {
  std::vector<Subset> out;
  if (k > n) return out;
  Subset cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    unsigned i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (unsigned j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Subset complement(const Subset& s, unsigned n) {
  Subset out;
  for (unsigned i = 1; i <= n; ++i) {
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  }
  return out;
}

std::string format_subset(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Ring cartan_ring(unsigned n) {
  if (n < 1) throw InvalidInput("n must be positive");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return make_ring(std::move(names));
}

namespace {

void check_subset(const Subset& s, unsigned n, const char* which) {
  if (s.empty()) {
    throw InvalidInput(std::string(which) +
                       " is empty; generators use nonempty S and T (the empty product is 1 and would "
                       "collapse the quotient)");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) throw InvalidInput(std::string(which) + " has an element outside [n]");
    if (i > 0 && s[i] <= s[i - 1]) throw InvalidInput(std::string(which) + " must be strictly increasing");
  }
}

std::vector<std::size_t> range(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

}  // namespace

Polynomial f_polynomial(const Ring& ring, unsigned n, const Subset& s, const Subset& t) {
  check_subset(s, n, "S");
  check_subset(t, n, "T");
  Polynomial f = Polynomial::constant(ring, Rational(1));
  for (unsigned a : s) {
    const Polynomial xa = Polynomial::variable(ring, "x" + std::to_string(a));
    for (unsigned b : t) f = f * (xa - Polynomial::variable(ring, "y" + std::to_string(b)));
  }
  return f;
}

Ideal cartan_square_ideal(unsigned n) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  const Ring ring = cartan_ring(n);
  const auto xs = range(0, n);
  const auto ys = range(n, n);
  std::vector<Polynomial> gens;
  gens.push_back(elementary_symmetric(ring, 1, xs));
  gens.push_back(elementary_symmetric(ring, 1, ys));
  for (unsigned k = 2; k <= n; ++k) {
    gens.push_back(elementary_symmetric(ring, k, xs) - elementary_symmetric(ring, k, ys));
  }
  return Ideal(ring, std::move(gens));
}

Ideal HikitaPresentation::ideal() const {
  std::vector<Polynomial> gens = cartan_generators;
  for (const FstGenerator& g : fst_generators) gens.push_back(g.f);
  return Ideal(ring, std::move(gens));
}

HikitaPresentation hikita_presentation(unsigned n) {
  HikitaPresentation p;
  p.n = n;
  const Ideal cartan = cartan_square_ideal(n);
  p.ring = cartan.ring();
  p.cartan_generators = cartan.generators();
  for (unsigned i = 1; i < n; ++i) {
    for (const Subset& s : subsets_of_size(n, n - i)) {
      for (const Subset& t : subsets_of_size(n, i)) {
        p.fst_generators.push_back({s, t, f_polynomial(p.ring, n, s, t)});
      }
    }
  }
  p.weights.assign(2 * n, 2);
  return p;
}

Ideal hikita_ideal(unsigned n) { return hikita_presentation(n).ideal(); }

std::uint64_t fst_generator_count(unsigned n) {
  std::uint64_t total = 0;
  for (unsigned i = 1; i < n; ++i) total += binomial(n, n - i) * binomial(n, i);
  return total;
}

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> degree_series(const QuotientProfile& profile) {
  std::map<std::uint64_t, std::uint64_t> bins;
  for (const Monomial& m : profile.standard_monomials) ++bins[m.degree()];
  return {bins.begin(), bins.end()};
}

}  // namespace

RingAnalysis fixed_point_ring_analysis(unsigned n, const GroebnerBudget& budget) {
  const HikitaPresentation p = hikita_presentation(n);
  RingAnalysis out;
  out.n = n;
  const Ideal ideal = p.ideal();
  out.generator_count = ideal.size();
  const GroebnerBasis gb = buchberger(ideal, budget, &out.stats);
  out.groebner_size = gb.size();
  out.profile = quotient_profile(gb, p.weights);
  out.polynomial_degree_series = degree_series(out.profile);
  return out;
}

std::vector<ComplementCheck> verify_complement_identity(unsigned n, const GroebnerBudget& budget) {
  const Ideal cartan = cartan_square_ideal(n);
  const GroebnerBasis gb = buchberger(cartan, budget);
  const Ring& ring = cartan.ring();
  std::vector<ComplementCheck> out;
  for (unsigned i = 1; i < n; ++i) {
    for (const Subset& s : subsets_of_size(n, n - i)) {
      for (const Subset& t : subsets_of_size(n, i)) {
        ComplementCheck c;
        c.s = s;
        c.t = t;
        c.sign = (s.size() * t.size()) % 2 == 0 ? 1 : -1;
        const Polynomial lhs = f_polynomial(ring, n, s, t);
        const Polynomial rhs = f_polynomial(ring, n, complement(s, n), complement(t, n));
        c.passed = gb.normal_form(lhs - Rational(c.sign) * rhs).is_zero();
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Ideal hyperpolygon_ideal(unsigned n) {
  if (n < 4) throw InvalidInput("hyperpolygon rings need n >= 4");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  names.push_back("p");
  const Ring ring = make_ring(std::move(names));
  const Polynomial p = Polynomial::variable(ring, n);
  std::vector<Polynomial> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back(p - Polynomial::variable(ring, i).pow(2));
  // Monomials z^a p^m with 2|a| + 4m = 2(n-2), i.e. |a| + 2m = n - 2.
  const unsigned target = n - 2;
  for (unsigned m = 0; 2 * m <= target; ++m) {
    const unsigned k = target - 2 * m;
    // Exponent vectors of total degree k over n variables.
    std::vector<Exponent> e(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned left) {
      if (var + 1 == n) {
        e[var] = left;
        std::vector<Exponent> full(e);
        full.push_back(m);
        gens.push_back(Polynomial::monomial(ring, Monomial(full)));
        return;
      }
      for (unsigned d = 0; d <= left; ++d) {
        e[var] = d;
        rec(var + 1, left - d);
      }
    };
    rec(0, k);
  }
  return Ideal(ring, std::move(gens));
}

RingAnalysis hyperpolygon_ring_analysis(unsigned n, const GroebnerBudget& budget) {
  const Ideal ideal = hyperpolygon_ideal(n);
  RingAnalysis out;
  out.n = n;
  out.generator_count = ideal.size();
  const GroebnerBasis gb = buchberger(ideal, budget, &out.stats);
  out.groebner_size = gb.size();
  std::vector<std::uint64_t> weights(n, 2);
  weights.push_back(4);
  out.profile = quotient_profile(gb, weights);
  out.polynomial_degree_series = degree_series(out.profile);
  return out;
}

std::uint64_t hyperpolygon_dim_oracle(unsigned n) {
  if (n < 4) throw InvalidInput("hyperpolygon rings need n >= 4");
  std::uint64_t total = 0;
  for (unsigned m = 0; 2 * m <= n - 3; ++m) {
    for (unsigned k = 0; k + 2 * m <= n - 3 && k <= n; ++k) total += binomial(n, k);
  }
  return total;
}

}  // namespace hikita
