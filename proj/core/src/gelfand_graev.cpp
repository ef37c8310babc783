#include "hikita/gelfand_graev.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hikita/error.hpp"

namespace hikita {

Ring gg_ring(unsigned n) {
  if (n < 2) throw InvalidInput("n must be at least 2");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) names.push_back("g" + std::to_string(i) + std::to_string(j));
  return make_ring(std::move(names));
}

namespace {

unsigned ring_n(const Ring& ring) {
  unsigned n = 1;
  while (n + n * n < ring->nvars()) ++n;
  if (n + n * n != ring->nvars()) throw InvalidInput("not a Gelfand-Graev ring");
  return n;
}

Polynomial yv(const Ring& ring, unsigned i) { return Polynomial::variable(ring, i - 1); }

Polynomial gv(const Ring& ring, unsigned n, unsigned i, unsigned j) {
  return Polynomial::variable(ring, n + (i - 1) * n + (j - 1));
}

Permutation identity_perm(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1U);
  return p;
}

std::vector<std::size_t> zero_based(const Subset& s) {
  std::vector<std::size_t> out;
  for (unsigned v : s) out.push_back(v - 1);
  return out;
}

Subset first_k(unsigned k) {
  Subset s(k);
  std::iota(s.begin(), s.end(), 1U);
  return s;
}

}  // namespace

GGPoint symbolic_seed(const Ring& ring, unsigned n) {
  if (ring_n(ring) != n) throw InvalidInput("ring does not match n");
  RFMatrix g(n, n, RationalFunction(ring));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) g(i - 1, j - 1) = gv(ring, n, i, j);
  return {std::move(g), identity_perm(n)};
}

GGPoint constant_seed(const Ring& ring, const QMatrix& g) {
  const unsigned n = ring_n(ring);
  if (g.rows() != n || g.cols() != n) throw InvalidInput("seed shape does not match the ring");
  return {g.map([&](const Rational& c) { return RationalFunction::constant(ring, c); }), identity_perm(n)};
}

RFMatrix sk_matrix(const Ring& ring, unsigned n, unsigned k) { return sk_matrix(ring, n, k, k, k + 1); }

RFMatrix sk_matrix(const Ring& ring, unsigned n, unsigned k, unsigned a, unsigned b) {
  if (k < 1 || k >= n) throw InvalidInput("generator index out of range");
  if (a < 1 || a > n || b < 1 || b > n || a == b) throw InvalidInput("diagonal indices out of range");
  RFMatrix m = RFMatrix::identity(n, RationalFunction::constant(ring, 1));
  const Polynomial diff = yv(ring, a) - yv(ring, b);
  m(k - 1, k - 1) = RationalFunction(ring);
  m(k, k) = RationalFunction(ring);
  m(k - 1, k) = RationalFunction(Polynomial::constant(ring, 1), diff);
  m(k, k - 1) = RationalFunction(-diff);
  return m;
}

GGPoint sigma_k(const GGPoint& pt, unsigned k) {
  const unsigned n = static_cast<unsigned>(pt.perm.size());
  if (k < 1 || k >= n) throw InvalidInput("generator index out of range");
  const Ring& ring = pt.g(0, 0).ring();
  GGPoint out;
  out.g = pt.g * sk_matrix(ring, n, k, pt.perm[k - 1], pt.perm[k]);
  out.perm = pt.perm;
  std::swap(out.perm[k - 1], out.perm[k]);
  return out;
}

GGPoint apply_word(GGPoint pt, const std::vector<unsigned>& word) {
  for (unsigned k : word) pt = sigma_k(pt, k);
  return pt;
}

std::vector<unsigned> longest_word(unsigned n) {
  std::vector<unsigned> w;
  for (unsigned m = n; m >= 2; --m)
    for (unsigned k = 1; k < m; ++k) w.push_back(k);
  return w;
}

RFMatrix w0_closed_form(const Ring& ring, unsigned n) {
  if (ring_n(ring) != n) throw InvalidInput("ring does not match n");
  RFMatrix out(n, n, RationalFunction(ring));
  for (unsigned j = 1; j <= n; ++j) {
    const unsigned a = n + 1 - j;
    Polynomial num = Polynomial::constant(ring, 1);
    Polynomial den = Polynomial::constant(ring, 1);
    for (unsigned l = 1; l <= n; ++l) {
      if (l == j) continue;
      const Polynomial f = yv(ring, a) - yv(ring, n + 1 - l);
      if (l > j) {
        num = num * f;
      } else {
        den = den * f;
      }
    }
    const RationalFunction factor(num, den);
    for (unsigned i = 1; i <= n; ++i) out(i - 1, j - 1) = RationalFunction(gv(ring, n, i, a)) * factor;
  }
  return out;
}

RationalFunction delta_minor(const RFMatrix& g, const Subset& rows, const Subset& cols) {
  if (rows.size() != cols.size()) throw InvalidInput("minor needs as many rows as columns");
  if (rows.empty()) return one_like(g(0, 0));
  return det(g.submatrix(zero_based(rows), zero_based(cols)));
}

W0DeltaCheck restrict_w0_delta(const Ring& ring, unsigned n, const Subset& s) {
  const auto i = static_cast<unsigned>(s.size());
  if (i == 0 || i >= n) throw InvalidInput("S must be a nonempty proper subset");
  W0DeltaCheck out;
  out.s = s;
  const RationalFunction lhs = delta_minor(w0_closed_form(ring, n), s, first_k(i));
  RFMatrix g = symbolic_seed(ring, n).g;
  Subset reversed_cols;
  for (unsigned t = 1; t <= i; ++t) reversed_cols.push_back(n + 1 - t);
  // Columns n, n-1, ..., n+1-i in that order; submatrix keeps the order.
  RFMatrix sub(i, i, RationalFunction(ring));
  for (unsigned r = 0; r < i; ++r)
    for (unsigned c = 0; c < i; ++c) sub(r, c) = g(s[r] - 1, reversed_cols[c] - 1);
  Polynomial prod = Polynomial::constant(ring, 1);
  for (unsigned a = n - i + 1; a <= n; ++a)
    for (unsigned b = 1; b <= n - i; ++b) prod = prod * (yv(ring, a) - yv(ring, b));
  const RationalFunction base = det(sub) * RationalFunction(prod);
  if (base.is_zero()) return out;
  const RationalFunction ratio = lhs / base;
  if (ratio.is_one()) {
    out.epsilon = 1;
  } else if ((-ratio).is_one()) {
    out.epsilon = -1;
  }
  out.passed = out.epsilon != 0;
  return out;
}

int permutation_sign(const Permutation& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) sign = -sign;
  return sign;
}

QMatrix permutation_matrix(const Permutation& w) {
  const std::size_t n = w.size();
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : w) {
    if (v < 1 || v > n || seen[v]) throw InvalidInput("not a permutation");
    seen[v] = true;
  }
  QMatrix p(n, n);
  for (std::size_t r = 0; r < n; ++r) p(r, w[r] - 1) = 1;
  if (permutation_sign(w) < 0) p(n - 1, w[n - 1] - 1) = -1;
  return p;
}

std::vector<Permutation> all_permutations(unsigned n) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// f_{[n]\S,[i]} with x_s replaced by y_{w(s)}, in the Cartan ring.
Polynomial expected_image(const Ring& cartan, unsigned n, const Subset& s, const Permutation& w) {
  const auto i = static_cast<unsigned>(s.size());
  const Polynomial f = f_polynomial(cartan, n, complement(s, n), first_k(i));
  std::vector<std::optional<Polynomial>> images(2 * n);
  for (unsigned v = 1; v <= n; ++v) images[v - 1] = Polynomial::variable(cartan, n + w[v - 1] - 1);
  return f.substitute(images);
}

Polynomial to_cartan(const Polynomial& p, const Ring& cartan, unsigned n) {
  std::vector<std::optional<Polynomial>> images(n + n * n, Polynomial(cartan));
  for (unsigned v = 1; v <= n; ++v) images[v - 1] = Polynomial::variable(cartan, n + v - 1);
  return p.substitute(images, cartan);
}

}  // namespace

ImageCheck image_in_fixed_ring(unsigned n, const Subset& s, const Permutation& w) {
  const auto i = static_cast<unsigned>(s.size());
  if (i == 0 || i >= n) throw InvalidInput("S must be a nonempty proper subset");
  if (w.size() != n) throw InvalidInput("permutation length must be n");
  const Ring ring = gg_ring(n);
  const Ring cartan = cartan_ring(n);
  ImageCheck out{Polynomial(cartan)};
  out.s = s;
  out.w = w;
  out.i = i;
  Subset image;
  for (unsigned v : s) image.push_back(w[v - 1]);
  std::sort(image.begin(), image.end());
  out.support = image == first_k(i);

  const GGPoint seed = constant_seed(ring, permutation_matrix(w));
  const GGPoint moved = apply_word(seed, longest_word(n));
  const Subset rest = complement(s, n);
  const RationalFunction value =
      delta_minor(seed.g, s, first_k(i)) * delta_minor(moved.g, rest, first_k(n - i));
  if (!value.is_polynomial()) throw VerificationFailure("image is not a polynomial");
  const Polynomial num = value.numerator() * value.denominator().constant_value().inverse();
  out.value = to_cartan(num, cartan, n);

  if (!out.support) {
    out.passed = out.value.is_zero();
    return out;
  }
  const Polynomial expected = expected_image(cartan, n, s, w);
  if (out.value == expected) {
    out.sign = 1;
  } else if (out.value == -expected) {
    out.sign = -1;
  }
  out.passed = out.sign != 0 && !out.value.is_zero();
  return out;
}

OrbitSweep generator_orbit_sweep(unsigned n) {
  const Ring cartan = cartan_ring(n);
  OrbitSweep out;
  std::set<std::pair<Subset, Subset>> found;
  const auto perms = all_permutations(n);
  for (unsigned i = 1; i < n; ++i) {
    for (const Subset& s : subsets_of_size(n, i)) {
      const Subset rest = complement(s, n);
      for (const Permutation& w : perms) {
        const ImageCheck c = image_in_fixed_ring(n, s, w);
        if (!c.passed) ++out.image_failures;
        if (!c.support) continue;
        ++out.images;
        const Polynomial base = f_polynomial(cartan, n, rest, first_k(i));
        for (const Permutation& u : perms) {
          std::vector<std::optional<Polynomial>> images(2 * n);
          for (unsigned t = 1; t <= n; ++t) images[n + t - 1] = Polynomial::variable(cartan, n + u[t - 1] - 1);
          Subset target;
          for (unsigned t = 1; t <= i; ++t) target.push_back(u[t - 1]);
          std::sort(target.begin(), target.end());
          if (base.substitute(images) != f_polynomial(cartan, n, rest, target)) {
            ++out.orbit_failures;
            continue;
          }
          found.emplace(rest, target);
        }
      }
    }
  }
  out.recovered.assign(found.begin(), found.end());
  out.complete = out.recovered.size() == fst_generator_count(n);
  return out;
}

}  // namespace hikita
