#include "hikita/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "hikita/error.hpp"

namespace hikita {

std::size_t Quiver::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidInput("no vertex labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void Quiver::validate() const {
  for (const auto& [t, h] : edges) {
    if (t >= labels.size() || h >= labels.size()) throw InvalidInput("edge endpoint out of range");
  }
}

namespace {

Quiver bouquet_impl(unsigned n, unsigned petals) {
  if (n < 2) throw InvalidInput("bouquet quivers need n >= 2");
  Quiver q;
  for (unsigned i = 1; i < n; ++i) q.labels.push_back("s" + std::to_string(i));
  for (unsigned i = 1; i <= petals; ++i) q.labels.push_back("b" + std::to_string(i));
  for (unsigned i = 0; i + 2 < n; ++i) q.edges.emplace_back(i, i + 1);
  const std::size_t top = n - 2;
  for (unsigned i = 0; i < petals; ++i) q.edges.emplace_back(top, n - 1 + i);
  return q;
}

void check_lengths(const Quiver& q, const DimVector& a) {
  if (a.size() != q.vertex_count()) throw InvalidInput("dimension vector length does not match the quiver");
}

}  // namespace

Quiver bouquet(unsigned n) { return bouquet_impl(n, n - 1); }
Quiver abundant_bouquet(unsigned n) { return bouquet_impl(n, n); }

Quiver star_quiver(unsigned n) {
  if (n < 3) throw InvalidInput("star quivers need n >= 3");
  Quiver q;
  q.labels.push_back("*");
  for (unsigned i = 1; i <= n; ++i) {
    q.labels.push_back(std::to_string(i));
    q.edges.emplace_back(i, 0);
  }
  return q;
}

DimVector bouquet_dimension(unsigned n, bool abundant) {
  if (n < 2) throw InvalidInput("bouquet quivers need n >= 2");
  DimVector v;
  for (unsigned i = 1; i < n; ++i) v.push_back(i);
  v.insert(v.end(), abundant ? n : n - 1, 1);
  return v;
}

std::int64_t ringel_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_lengths(q, a);
  check_lengths(q, b);
  std::int64_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  for (const auto& [t, h] : q.edges) r -= a[t] * b[h];
  return r;
}

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return ringel_form(q, a, b) + ringel_form(q, b, a);
}

bool is_anisotropic(const Quiver& q, const DimVector& v) { return ringel_form(q, v, v) < 0; }

std::uint64_t enumeration_size(const DimVector& v) {
  std::uint64_t total = 1;
  for (std::int64_t x : v) {
    if (x < 0) throw InvalidInput("dimension vectors are nonnegative");
    const auto f = static_cast<std::uint64_t>(x) + 1;
    if (total > UINT64_MAX / f) return UINT64_MAX;
    total *= f;
  }
  return total;
}

namespace {

// Odometer over the box 0 <= w <= v, lexicographic with the last entry
// fastest. Returns false after the last vector.
bool advance(DimVector& w, const DimVector& v) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < v[i]) {
      ++w[i];
      return true;
    }
    w[i] = 0;
  }
  return false;
}

void check_budget(const DimVector& v, std::uint64_t max_enumeration) {
  const std::uint64_t size = enumeration_size(v);
  if (size > max_enumeration) {
    throw BudgetExceeded("enumeration of " + std::to_string(size) + " vectors exceeds the budget of " +
                         std::to_string(max_enumeration));
  }
}

}  // namespace

Sigma0Result in_sigma0(const Quiver& q, const DimVector& v, std::uint64_t max_enumeration) {
  check_lengths(q, v);
  check_budget(v, max_enumeration);
  Sigma0Result out;
  if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return out;
  DimVector w(v.size(), 0);
  DimVector rest(v.size());
  while (advance(w, v)) {
    if (w == v) continue;
    ++out.enumerated;
    for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - w[i];
    const std::int64_t value = euler_form(q, w, rest);
    if (value > -2) {
      out.witness = w;
      out.witness_value = value;
      return out;
    }
  }
  out.member = true;
  return out;
}

AmGmReport am_gm_bound_check(unsigned n) {
  if (n < 3) throw InvalidInput("the bound check needs n >= 3");
  const Quiver q = abundant_bouquet(n);
  const DimVector v = bouquet_dimension(n, true);
  const std::size_t top = n - 2;
  AmGmReport report;
  DimVector w(v.size(), 0);
  DimVector rest(v.size());
  while (advance(w, v)) {
    if (w == v) continue;
    DimVector u = w;
    if (2 * u[top] > v[top]) {
      for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] - w[i];
    }
    std::size_t m = top + 1;
    std::size_t big_m = 0;
    for (std::size_t i = 0; i <= top; ++i) {
      if (u[i] != 0) {
        m = std::min(m, i);
        big_m = i;
      }
    }
    if (m > top) continue;
    ++report.checked;
    for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - u[i];
    const std::int64_t value = euler_form(q, u, rest);
    if (value > -(u[m] * u[m]) - (u[big_m] * u[big_m])) ++report.violations;
  }
  return report;
}

namespace {

bool is_affine_d4(const Quiver& q, const DimVector& v) {
  if (q.vertex_count() != 5 || q.edges.size() != 4) return false;
  std::vector<int> degree(5, 0);
  for (const auto& [t, h] : q.edges) {
    if (t == h) return false;
    ++degree[t];
    ++degree[h];
  }
  const auto centre = std::find(degree.begin(), degree.end(), 4);
  if (centre == degree.end()) return false;
  const auto c = static_cast<std::size_t>(centre - degree.begin());
  for (std::size_t i = 0; i < 5; ++i) {
    if (v[i] != (i == c ? 2 : 1)) return false;
  }
  return true;
}

}  // namespace

ResolutionRecord admits_resolution(const Quiver& q, const DimVector& v, std::uint64_t max_enumeration) {
  check_lengths(q, v);
  ResolutionRecord r;
  r.enumeration_size = enumeration_size(v);
  const Sigma0Result s = in_sigma0(q, v, max_enumeration);
  r.in_sigma0 = s.member;
  r.sigma0_witness = s.witness;
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  r.indivisible = g == 1;
  r.ringel_self = ringel_form(q, v, v);
  r.anisotropic = r.ringel_self < 0;
  r.kleinian_d4 = is_affine_d4(q, v);
  if (!r.in_sigma0) {
    r.verdict = "criterion does not apply: vector not in Sigma_0";
  } else if (r.anisotropic) {
    r.verdict = "resolution via generic parameter";
  } else if (r.kleinian_d4) {
    r.verdict = "Kleinian D4 singularity: affine D4 minimal imaginary root, minimal resolution by Kronheimer";
  } else if (r.indivisible) {
    r.verdict = "projective symplectic resolution exists (indivisible)";
  } else {
    r.verdict = "no conclusion";
  }
  return r;
}

CrawleyBoevey crawley_boevey_trick(const Quiver& q, const DimVector& v, const std::vector<Rational>& lambda,
                                   const std::vector<Rational>& theta, std::size_t framed_vertex,
                                   const std::string& new_label) {
  check_lengths(q, v);
  if (lambda.size() != v.size() || theta.size() != v.size()) throw InvalidInput("parameter length mismatch");
  if (framed_vertex >= v.size()) throw InvalidInput("framed vertex out of range");
  CrawleyBoevey out;
  out.quiver = q;
  out.quiver.labels.push_back(new_label);
  out.quiver.edges.emplace_back(framed_vertex, v.size());
  out.v = v;
  out.v.push_back(1);
  Rational lsum(0);
  Rational tsum(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    lsum += lambda[i] * Rational(v[i]);
    tsum += theta[i] * Rational(v[i]);
  }
  out.lambda = lambda;
  out.lambda.push_back(-lsum);
  out.theta = theta;
  out.theta.push_back(-tsum);
  return out;
}

NondegeneracyResult nondegenerate_stability(const std::vector<Rational>& theta, const DimVector& v,
                                            std::uint64_t max_enumeration) {
  if (theta.size() != v.size()) throw InvalidInput("theta and v differ in length");
  check_budget(v, max_enumeration);
  NondegeneracyResult out;
  DimVector w(v.size(), 0);
  while (advance(w, v)) {
    if (w == v) continue;
    Rational dot(0);
    for (std::size_t i = 0; i < v.size(); ++i) dot += theta[i] * Rational(w[i]);
    if (dot.is_zero()) {
      out.witness = w;
      return out;
    }
  }
  out.nondegenerate = true;
  return out;
}

DeformationParams lambda_delta_from_nu_gamma(const std::vector<Rational>& nu, const std::vector<Rational>& gamma) {
  if (nu.empty()) throw InvalidInput("nu must have n - 1 >= 1 entries");
  if (gamma.size() != nu.size()) throw InvalidInput("gamma must have as many entries as nu");
  const std::size_t n = nu.size() + 1;
  Rational weighted(0);
  for (std::size_t j = 0; j < nu.size(); ++j) weighted += Rational(j + 1) * nu[j];
  Rational gsum(0);
  for (const Rational& g : gamma) gsum += g;
  if (gsum != weighted) {
    throw InvalidInput("incompatible parameters: sum(gamma) = " + gsum.to_string() + " but sum_j j*nu_j = " +
                       weighted.to_string() + "; with gamma_n = 0 the diagonal delta would not be traceless");
  }
  const Rational shift = weighted / Rational(n);
  DeformationParams p;
  p.nu = nu;
  p.gamma = gamma;
  Rational tail(0);
  p.lambda.assign(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    if (i < nu.size()) tail += nu[i];
    p.lambda[i] = tail - shift;
  }
  for (std::size_t i = 0; i < n; ++i) p.delta.push_back((i < gamma.size() ? gamma[i] : Rational(0)) - shift);
  return p;
}

GenericityResult genericity_certificate(const std::vector<Rational>& lambda, const std::vector<Rational>& delta,
                                        GenericityScope scope) {
  const std::size_t n = lambda.size();
  if (n < 2 || delta.size() != n) throw InvalidInput("lambda and delta must have the same length n >= 2");
  if (n > 12) throw BudgetExceeded("genericity enumeration is limited to n <= 12");
  GenericityResult out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lambda[i] == lambda[j]) {
        out.reason = "repeated lambda";
        out.a = {static_cast<unsigned>(i + 1), static_cast<unsigned>(j + 1)};
        return out;
      }
    }
  }
  // Subsets of each size in lexicographic order, as index lists.
  auto subsets = [n](std::size_t k) {
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> cur(k);
    std::iota(cur.begin(), cur.end(), 1U);
    while (true) {
      all.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return all;
  };
  auto sum = [](const std::vector<Rational>& xs, const std::vector<unsigned>& idx) {
    Rational s(0);
    for (unsigned i : idx) s += xs[i - 1];
    return s;
  };
  for (std::size_t k = 1; k < n; ++k) {
    const auto family = subsets(k);
    std::vector<Rational> lambda_sums;
    lambda_sums.reserve(family.size());
    for (const auto& b : family) lambda_sums.push_back(sum(lambda, b));
    const bool skip_forced = scope == GenericityScope::except_forced;
    auto forced = [&](const std::vector<unsigned>& s) {
      return (k == 1 && s.front() == n) || (k == n - 1 && s == family.front());
    };
    for (const auto& a : family) {
      const Rational da = sum(delta, a);
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (skip_forced && a == family[j] && forced(a)) continue;
        if (da == lambda_sums[j]) {
          out.reason = "subset sums coincide";
          out.a = a;
          out.b = family[j];
          return out;
        }
      }
    }
  }
  out.generic = true;
  return out;
}

}  // namespace hikita
