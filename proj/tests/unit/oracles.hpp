#pragma once

// Test-side reference computations. Each one takes a different route from
// the library code it is compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hikita/matrix.hpp"
#include "hikita/polynomial.hpp"

namespace oracle {

using hikita::Monomial;
using hikita::Polynomial;
using hikita::QMatrix;
using hikita::Rational;

// Leibniz sum over all permutations.
inline Rational leibniz_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Every monomial in nvars variables of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<hikita::Exponent> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  return out;
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// f in the ideal iff f = sum c_{g,m} m g with deg(m g) <= bound; exact linear
// algebra over the monomial basis. Only a certificate up to the bound.
inline bool member_up_to_degree(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned bound) {
  const auto& ring = f.ring();
  std::vector<Polynomial> columns;
  for (const auto& g : gens) {
    const auto gd = static_cast<unsigned>(g.total_degree());
    if (gd > bound) continue;
    for (const auto& m : monomials_up_to(ring->nvars(), bound - gd)) columns.push_back(g.mul_term(m, Rational(1)));
  }
  std::map<std::vector<hikita::Exponent>, std::size_t> index;
  auto key = [](const Monomial& m) { return std::vector<hikita::Exponent>(m.exponents().begin(), m.exponents().end()); };
  for (const auto& c : columns)
    for (const auto& t : c.terms()) index.emplace(key(t.monomial), 0);
  for (const auto& t : f.terms()) index.emplace(key(t.monomial), 0);
  std::size_t row = 0;
  for (auto& [k, v] : index) v = row++;
  QMatrix a(index.size(), columns.size());
  std::vector<Rational> b(index.size(), Rational(0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms()) a(index.at(key(t.monomial)), j) = t.coeff;
  for (const auto& t : f.terms()) b[index.at(key(t.monomial))] = t.coeff;
  if (columns.empty()) return f.is_zero();
  return hikita::solve(a, b).has_value();
}

// Dimension of Q[z1..zn]/(z_i^2 - z_j^2, all monomials of degree >= top):
// the ideal is spanned by differences of monomials, so in each degree the
// quotient has one basis element per class of monomials connected by
// swapping a square z_i^2 for z_j^2.
inline std::uint64_t square_swap_quotient_dim(unsigned n, unsigned top) {
  std::uint64_t total = 0;
  for (unsigned d = 0; d < top; ++d) {
    const auto mons = monomials_of_degree(n, d);
    std::map<std::vector<hikita::Exponent>, std::size_t> id;
    for (std::size_t i = 0; i < mons.size(); ++i)
      id[std::vector<hikita::Exponent>(mons[i].exponents().begin(), mons[i].exponents().end())] = i;
    std::vector<std::size_t> parent(mons.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < mons.size(); ++i) {
      std::vector<hikita::Exponent> e(mons[i].exponents().begin(), mons[i].exponents().end());
      for (unsigned a = 0; a < n; ++a) {
        if (e[a] < 2) continue;
        for (unsigned b = 0; b < n; ++b) {
          if (a == b) continue;
          auto f = e;
          f[a] -= 2;
          f[b] += 2;
          parent[find(i)] = find(id.at(f));
        }
      }
    }
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (find(i) == i) ++total;
  }
  return total;
}

inline std::uint64_t choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
