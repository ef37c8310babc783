#include "hikita/rep_geometry.hpp"

#include <algorithm>

#include "hikita/error.hpp"

namespace hikita {

namespace {

void check_shape(const QMatrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c) {
    throw InvalidInput(std::string(what) + " should be " + std::to_string(r) + "x" + std::to_string(c));
  }
}

QMatrix scalar(std::size_t k, const Rational& c) {
  QMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = c;
  return m;
}

std::optional<Rational> scalar_value(const QMatrix& m) {
  const Rational c = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? c : Rational(0))) return std::nullopt;
  return c;
}

}  // namespace

void BouquetRep::validate() const {
  if (n < 2) throw InvalidInput("bouquet reps need n >= 2");
  if (x.size() != n - 2 || y.size() != n - 2) throw InvalidInput("expected n-2 stem maps in each direction");
  for (std::size_t k = 0; k + 2 < n; ++k) {
    check_shape(x[k], k + 2, k + 1, "x");
    check_shape(y[k], k + 1, k + 2, "y");
  }
  check_shape(phi, n, n - 1, "phi");
  check_shape(psi, n - 1, n, "psi");
}

BouquetRep BouquetRep::zero(unsigned n) {
  if (n < 2) throw InvalidInput("bouquet reps need n >= 2");
  BouquetRep r;
  r.n = n;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    r.x.emplace_back(k + 2, k + 1);
    r.y.emplace_back(k + 1, k + 2);
  }
  r.phi = QMatrix(n, n - 1);
  r.psi = QMatrix(n - 1, n);
  return r;
}

QMatrix phi_psi(const BouquetRep& rep) {
  rep.validate();
  return rep.phi * rep.psi;
}

MomentValue moment_map(const BouquetRep& rep) {
  rep.validate();
  const unsigned n = rep.n;
  MomentValue out;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Vertex of dimension k+1.
    const QMatrix out_map = k + 2 < n ? rep.x[k] : rep.phi;
    const QMatrix back = k + 2 < n ? rep.y[k] : rep.psi;
    QMatrix block = back * out_map;
    if (k > 0) block = block - rep.x[k - 1] * rep.y[k - 1];
    out.stem.push_back(std::move(block));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational g(0);
    for (std::size_t c = 0; c + 1 < n; ++c) g += rep.phi(i, c) * rep.psi(c, i);
    out.gamma.push_back(g);
  }
  std::vector<Rational> nu;
  for (const QMatrix& b : out.stem) {
    const auto c = scalar_value(b);
    if (!c) return out;
    nu.push_back(*c);
  }
  out.nu = std::move(nu);
  return out;
}

KeyStability key_stability_bruteforce(const QMatrix& m, unsigned max_n) {
  if (!m.is_square() || m.rows() < 2) throw InvalidInput("key stability needs a square matrix of size >= 2");
  const std::size_t n = m.rows();
  if (n > max_n) throw BudgetExceeded("subset enumeration limited to n <= " + std::to_string(max_n));
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool preserved = true;
    for (std::size_t s = 0; s + 1 < n && preserved; ++s) {
      if (!(mask >> s & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const bool j_in_s = j + 1 < n && (mask >> j & 1U);
        if (!j_in_s && !m(j, s).is_zero()) {
          preserved = false;
          break;
        }
      }
    }
    if (preserved) {
      KeyStability r;
      for (std::size_t s = 0; s + 1 < n; ++s)
        if (mask >> s & 1U) r.witness.push_back(static_cast<unsigned>(s + 1));
      return r;
    }
  }
  return {true, {}};
}

KeyStability key_stability_closure(const QMatrix& m) {
  if (!m.is_square() || m.rows() < 2) throw InvalidInput("key stability needs a square matrix of size >= 2");
  const std::size_t n = m.rows();
  for (std::size_t start = 0; start + 1 < n; ++start) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t s = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && !m(j, s).is_zero()) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    if (!seen[n - 1]) {
      KeyStability r;
      for (std::size_t j = 0; j < n; ++j)
        if (seen[j]) r.witness.push_back(static_cast<unsigned>(j + 1));
      return r;
    }
  }
  return {true, {}};
}

bool key_stability_bruteforce_mask(unsigned n, const std::uint32_t* cols) {
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::uint32_t image = 0;
    for (unsigned s = 0; s + 1 < n; ++s)
      if (mask >> s & 1U) image |= cols[s];
    if ((image & ~mask) == 0) return false;
  }
  return true;
}

bool key_stability_closure_mask(unsigned n, const std::uint32_t* cols) {
  const std::uint32_t last = std::uint32_t{1} << (n - 1);
  for (unsigned start = 0; start + 1 < n; ++start) {
    std::uint32_t reach = std::uint32_t{1} << start;
    std::uint32_t frontier = reach;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (unsigned s = 0; s < n; ++s)
        if (frontier >> s & 1U) next |= cols[s];
      frontier = next & ~reach;
      reach |= next;
    }
    if (!(reach & last)) return false;
  }
  return true;
}

StabilityReport is_theta_stable(const BouquetRep& rep) {
  rep.validate();
  StabilityReport r;
  bool all = true;
  for (std::size_t k = 0; k < rep.x.size(); ++k) {
    const bool inj = rank(rep.x[k]) == k + 1;
    r.x_injective.push_back(inj);
    all = all && inj;
  }
  r.phi_injective = rank(rep.phi) == rep.n - 1;
  const KeyStability key = key_stability_closure(phi_psi(rep));
  r.key_condition = key.holds;
  r.witness = key.witness;
  r.stable = all && r.phi_injective && r.key_condition;
  return r;
}

namespace {

QMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.integer(-4, 4);
  return m;
}

QMatrix random_injective(std::size_t r, std::size_t c, Rng& rng) {
  while (true) {
    QMatrix m = random_matrix(r, c, rng);
    if (rank(m) == c) return m;
  }
}

// Unknown layout: y[0], ..., y[n-3], psi, each row-major.
struct Layout {
  std::vector<std::size_t> y_offset;
  std::size_t psi_offset = 0;
  std::size_t total = 0;
};

Layout make_layout(unsigned n) {
  Layout l;
  std::size_t off = 0;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    l.y_offset.push_back(off);
    off += (k + 1) * (k + 2);
  }
  l.psi_offset = off;
  off += static_cast<std::size_t>(n - 1) * n;
  l.total = off;
  return l;
}

}  // namespace

QMatrix random_invertible(std::size_t k, Rng& rng) {
  while (true) {
    QMatrix m = random_matrix(k, k, rng);
    if (!det(m).is_zero()) return m;
  }
}

FiberSample solve_cotangent_fiber(unsigned n, const std::vector<Rational>& nu, const std::vector<Rational>& gamma,
                                  std::uint64_t seed) {
  if (n < 2) throw InvalidInput("bouquet reps need n >= 2");
  if (nu.size() != n - 1 || gamma.size() != n - 1) throw InvalidInput("nu and gamma need n-1 entries each");
  Rational weighted(0);
  Rational gsum(0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    weighted += Rational(j + 1) * nu[j];
    gsum += gamma[j];
  }
  if (weighted != gsum) throw InvalidInput("sum(gamma) must equal sum_j j*nu_j (gamma_n = 0)");

  Rng rng(seed);
  const Layout layout = make_layout(n);
  constexpr unsigned kMaxAttempts = 16;
  for (unsigned attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    BouquetRep rep = BouquetRep::zero(n);
    for (std::size_t k = 0; k + 2 < n; ++k) rep.x[k] = random_injective(k + 2, k + 1, rng);
    rep.phi = random_injective(n, n - 1, rng);

    // Rows: stem blocks (k+1)^2 each, then alpha_i beta_i for i in [n].
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::size_t d = k + 1;
      const bool top = k + 2 == n;
      const QMatrix& out_map = top ? rep.phi : rep.x[k];
      const std::size_t back_offset = top ? layout.psi_offset : layout.y_offset[k];
      const std::size_t back_cols = d + 1 + (top ? n - 1 - d : 0);  // d+1, or n at the top
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<Rational> row(layout.total, Rational(0));
          // (back * out)(i, j) = sum_c back(i, c) out(c, j)
          for (std::size_t c = 0; c < back_cols; ++c) row[back_offset + i * back_cols + c] += out_map(c, j);
          // minus (x_{k-1} y_{k-1})(i, j) = sum_c x(i, c) y(c, j)
          if (k > 0) {
            const QMatrix& xp = rep.x[k - 1];
            for (std::size_t c = 0; c < k; ++c) row[layout.y_offset[k - 1] + c * (k + 1) + j] -= xp(i, c);
          }
          rows.push_back(std::move(row));
          rhs.push_back(i == j ? nu[k] : Rational(0));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(layout.total, Rational(0));
      for (std::size_t c = 0; c + 1 < n; ++c) row[layout.psi_offset + c * n + i] = rep.phi(i, c);
      rows.push_back(std::move(row));
      rhs.push_back(i + 1 < n ? gamma[i] : Rational(0));
    }
    const QMatrix a = QMatrix::from_rows(rows);
    const auto sol = solve(a, rhs);
    if (!sol) continue;
    std::vector<Rational> values = sol->particular;
    for (const auto& k : sol->kernel) {
      const Rational r = rng.integer(-3, 3);
      if (r.is_zero()) continue;
      for (std::size_t i = 0; i < values.size(); ++i) values[i] += r * k[i];
    }
    for (std::size_t k = 0; k + 2 < n; ++k) {
      for (std::size_t i = 0; i < k + 1; ++i)
        for (std::size_t j = 0; j < k + 2; ++j) rep.y[k](i, j) = values[layout.y_offset[k] + i * (k + 2) + j];
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rep.psi(i, j) = values[layout.psi_offset + i * n + j];
    FiberSample s;
    s.rep = std::move(rep);
    s.seed = seed;
    s.attempts = attempt;
    s.unknowns = layout.total;
    s.equations = rows.size();
    s.solution_dimension = sol->kernel.size();
    return s;
  }
  throw Error("fiber sampling failed after 16 draws (seed " + std::to_string(seed) + ")");
}

std::optional<std::vector<Rational>> coordinates_in(const QMatrix& basis, const std::vector<Rational>& v) {
  const auto sol = solve(basis, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

FlagReadout rep_to_flagged_matrix(const BouquetRep& rep) {
  rep.validate();
  const unsigned n = rep.n;
  for (std::size_t k = 0; k < rep.x.size(); ++k)
    if (rank(rep.x[k]) != k + 1) throw InvalidInput("x_" + std::to_string(k + 1) + " is not injective");
  if (rank(rep.phi) != n - 1) throw InvalidInput("phi is not injective");

  const QMatrix m = phi_psi(rep);
  const Rational shift = trace(m) / Rational(n);
  FlagReadout out;
  out.fm.x = m - scalar(n, shift);

  // Image chain P_k = phi x_{n-2} ... x_k, P_{n-1} = phi; then the
  // standard basis fills F_n.
  std::vector<QMatrix> chain(n);
  chain[n - 1] = rep.phi;
  for (std::size_t k = n - 1; k-- > 1;) chain[k] = chain[k + 1] * rep.x[k - 1];
  std::vector<std::vector<Rational>> basis;
  auto in_span = [&](const std::vector<Rational>& v) {
    if (basis.empty()) {
      return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
    }
    QMatrix b(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) b.set_col(j, basis[j]);
    return coordinates_in(b, v).has_value();
  };
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t c = 0; c < chain[k].cols(); ++c) {
      const auto v = chain[k].col(c);
      if (!in_span(v)) {
        basis.push_back(v);
        break;
      }
    }
    if (basis.size() != k) throw VerificationFailure("image chain is not a strictly increasing flag");
  }
  for (std::size_t e = 0; e < n && basis.size() < n; ++e) {
    std::vector<Rational> v(n, Rational(0));
    v[e] = 1;
    if (!in_span(v)) basis.push_back(v);
  }
  out.fm.flag = QMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) out.fm.flag.set_col(j, basis[j]);

  const QMatrix xv = out.fm.x * out.fm.flag;
  const QMatrix mv = m * out.fm.flag;
  const QMatrix inv = inverse(out.fm.flag);
  const QMatrix xc = inv * xv;
  const QMatrix mc = inv * mv;
  out.adapted = true;
  for (std::size_t k = 0; k < n; ++k) {
    out.lambda.push_back(xc(k, k));
    out.phipsi_steps.push_back(mc(k, k));
    for (std::size_t r = k + 1; r < n; ++r)
      if (!xc(r, k).is_zero()) out.adapted = false;
  }
  for (std::size_t i = 0; i < n; ++i) out.delta.push_back(out.fm.x(i, i));
  return out;
}

bool acts_by_scalars_on_flag(const QMatrix& a, const QMatrix& flag, const std::vector<Rational>& scalars, Rng* rng,
                             unsigned probes) {
  const std::size_t n = a.rows();
  if (flag.rows() != n || flag.cols() != n || scalars.size() != n) throw InvalidInput("flag shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Rational>> tests{flag.col(k)};
    for (unsigned p = 0; rng != nullptr && p < probes; ++p) {
      std::vector<Rational> v(n, Rational(0));
      for (std::size_t j = 0; j <= k; ++j) {
        Rational c = j == k ? Rational(rng->uniform(1, 5)) : rng->integer(-5, 5);
        for (std::size_t i = 0; i < n; ++i) v[i] += c * flag(i, j);
      }
      tests.push_back(std::move(v));
    }
    for (const auto& v : tests) {
      // (a - scalars[k]) v must lie in F_{k-1}.
      std::vector<Rational> w(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i] += a(i, j) * v[j];
        w[i] -= scalars[k] * v[i];
      }
      if (k == 0) {
        if (!std::all_of(w.begin(), w.end(), [](const Rational& r) { return r.is_zero(); })) return false;
        continue;
      }
      std::vector<std::size_t> rows(n);
      for (std::size_t i = 0; i < n; ++i) rows[i] = i;
      std::vector<std::size_t> cols(k);
      for (std::size_t j = 0; j < k; ++j) cols[j] = j;
      if (!coordinates_in(flag.submatrix(rows, cols), w)) return false;
    }
  }
  return true;
}

bool in_Y(const FlaggedMatrix& fm, const std::vector<Rational>& lambda, const std::vector<Rational>& delta) {
  const std::size_t n = fm.x.rows();
  if (lambda.size() != n || delta.size() != n) throw InvalidInput("lambda and delta need n entries");
  if (!trace(fm.x).is_zero()) throw InvalidInput("in_Y expects a traceless matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (fm.x(i, i) != delta[i]) return false;
  if (rank(fm.flag) != n) return false;
  return acts_by_scalars_on_flag(fm.x, fm.flag, lambda, nullptr);
}

namespace {

void check_spectrum(const QMatrix& x, const std::vector<Rational>& lambda) {
  const std::size_t n = x.rows();
  if (!x.is_square() || lambda.size() != n) throw InvalidInput("spectrum length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lambda[i] == lambda[j]) throw InvalidInput("eigenvalues must be pairwise distinct");
  // prod (t - lambda_i), coefficients low to high.
  std::vector<Rational> expected{Rational(1)};
  for (const Rational& l : lambda) {
    std::vector<Rational> next(expected.size() + 1, Rational(0));
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i + 1] += expected[i];
      next[i] -= l * expected[i];
    }
    expected = std::move(next);
  }
  if (characteristic_polynomial(x) != expected) throw InvalidInput("x does not have the stated spectrum");
}

void check_subset(const std::vector<unsigned>& s, std::size_t n) {
  for (unsigned v : s)
    if (v < 1 || v > n) throw InvalidInput("subset element outside [n]");
}

}  // namespace

std::vector<Rational> eigenvector(const QMatrix& x, const Rational& mu) {
  const std::size_t n = x.rows();
  const auto k = kernel(x - scalar(n, mu));
  if (k.size() != 1) throw InvalidInput("eigenvalue is not simple");
  std::vector<Rational> v = k.front();
  Rational lead(0);
  for (const Rational& c : v) {
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  }
  for (Rational& c : v) c /= lead;
  return v;
}

bool in_Z(const QMatrix& x, const std::vector<Rational>& lambda, const std::vector<unsigned>& s,
          const std::vector<unsigned>& t) {
  check_spectrum(x, lambda);
  check_subset(s, x.rows());
  check_subset(t, x.rows());
  for (unsigned si : s) {
    const auto v = eigenvector(x, lambda[si - 1]);
    for (unsigned ti : t)
      if (!v[ti - 1].is_zero()) return false;
  }
  return true;
}

bool disjointness_arithmetic(const std::vector<Rational>& lambda, const std::vector<Rational>& delta,
                             const std::vector<unsigned>& s, const std::vector<unsigned>& t) {
  const std::size_t n = lambda.size();
  if (delta.size() != n) throw InvalidInput("lambda and delta differ in length");
  if (s.size() + t.size() != n) throw InvalidInput("disjointness needs |S| + |T| = n");
  check_subset(s, n);
  check_subset(t, n);
  Rational lhs(0);
  for (std::size_t i = 1; i <= n; ++i)
    if (std::find(t.begin(), t.end(), i) == t.end()) lhs += delta[i - 1];
  Rational rhs(0);
  for (unsigned si : s) rhs += lambda[si - 1];
  return lhs != rhs;
}

std::uint64_t coordinate_stabilizer_codim(unsigned n, std::size_t t_size) {
  if (t_size > n) throw InvalidInput("|T| exceeds n");
  return static_cast<std::uint64_t>(n - t_size) * t_size;
}

std::vector<Rational> section_value(const QMatrix& x, const std::vector<Rational>& lambda, unsigned s, unsigned t,
                                    const QMatrix& flag) {
  if (!acts_by_scalars_on_flag(x, flag, lambda, nullptr)) throw InvalidInput("flag is not adapted to x and lambda");
  return section_row(x, lambda, s, t, flag);
}

FlaggedMatrix random_adapted_pair(const std::vector<Rational>& lambda, Rng& rng, unsigned zero_chance_percent) {
  const std::size_t n = lambda.size();
  while (true) {
    QMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) = rng.chance(zero_chance_percent, 100) ? Rational(0) : rng.integer(-4, 4);
    if (det(p).is_zero()) continue;
    QMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = lambda[i];
    return {p * d * inverse(p), p};
  }
}

BouquetRep act_stem(const BouquetRep& rep, const std::vector<QMatrix>& g) {
  rep.validate();
  const unsigned n = rep.n;
  if (g.size() != n - 1) throw InvalidInput("need one change of basis per stem vertex");
  std::vector<QMatrix> inv;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    check_shape(g[k], k + 1, k + 1, "g");
    inv.push_back(inverse(g[k]));
  }
  BouquetRep out = rep;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    out.x[k] = g[k + 1] * rep.x[k] * inv[k];
    out.y[k] = g[k] * rep.y[k] * inv[k + 1];
  }
  out.phi = rep.phi * inv[n - 2];
  out.psi = g[n - 2] * rep.psi;
  return out;
}

BouquetRep act_bouquet_torus(const BouquetRep& rep, const std::vector<Rational>& t) {
  rep.validate();
  if (t.size() != rep.n - 1) throw InvalidInput("need n-1 torus weights");
  BouquetRep out = rep;
  for (std::size_t i = 0; i + 1 < rep.n; ++i) {
    if (t[i].is_zero()) throw InvalidInput("torus weights must be nonzero");
    for (std::size_t c = 0; c + 1 < rep.n; ++c) {
      out.phi(i, c) = t[i] * rep.phi(i, c);
      out.psi(c, i) = rep.psi(c, i) / t[i];
    }
  }
  return out;
}

}  // namespace hikita
