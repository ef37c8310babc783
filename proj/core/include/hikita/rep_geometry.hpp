#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hikita/matrix.hpp"
#include "hikita/random.hpp"

namespace hikita {

/// A point of the doubled representation space of the framed bouquet with
/// stem dimensions 1, 2, ..., n-1. Indices are 0-based: x[k] is the map
/// C^{k+1} -> C^{k+2} and y[k] goes back.
struct BouquetRep {
  unsigned n = 0;
  std::vector<QMatrix> x;  // n-2 maps, x[k] of shape (k+2) x (k+1)
  std::vector<QMatrix> y;  // n-2 maps, y[k] of shape (k+1) x (k+2)
  QMatrix phi;             // n x (n-1), row i is alpha_{i+1}
  QMatrix psi;             // (n-1) x n, column i is beta_{i+1}

  /// Throws InvalidInput on any shape inconsistency.
  void validate() const;
  static BouquetRep zero(unsigned n);
};

/// Matrix of the composite phi psi : C^n -> C^n; entry (i, j) is alpha_i beta_j.
QMatrix phi_psi(const BouquetRep& rep);

struct MomentValue {
  /// Per stem vertex k (dimension k): y_k x_k - x_{k-1} y_{k-1}, with
  /// x_{n-1} = phi and y_{n-1} = psi.
  std::vector<QMatrix> stem;
  /// alpha_i beta_i for i in [n-1].
  std::vector<Rational> gamma;
  /// Set when every stem block is scalar.
  std::optional<std::vector<Rational>> nu;
};

MomentValue moment_map(const BouquetRep& rep);

struct KeyStability {
  bool holds = false;
  std::vector<unsigned> witness;  // 1-based S in [n-1] with M(C^S) inside C^S
};

/// Literal check over every nonempty S in [n-1], in order of the bitmask.
KeyStability key_stability_bruteforce(const QMatrix& m, unsigned max_n = 16);
/// Reachability in the digraph s -> j for m(j, s) != 0.
KeyStability key_stability_closure(const QMatrix& m);

/// Nonzero patterns as column bitmasks (bit j of cols[s] set when entry
/// (j, s) is nonzero), for exhaustive sweeps.
bool key_stability_bruteforce_mask(unsigned n, const std::uint32_t* cols);
bool key_stability_closure_mask(unsigned n, const std::uint32_t* cols);

struct StabilityReport {
  std::vector<bool> x_injective;
  bool phi_injective = false;
  bool key_condition = false;
  std::vector<unsigned> witness;
  bool stable = false;
};

StabilityReport is_theta_stable(const BouquetRep& rep);

struct FiberSample {
  BouquetRep rep;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t solution_dimension = 0;  // kernel dimension of the linear system
};

/// Draws random injective x and alpha and solves the moment equations
/// exactly for y and beta, with gamma_n = 0. Throws InvalidInput when the
/// parameters are incompatible and Error after 16 failed draws.
FiberSample solve_cotangent_fiber(unsigned n, const std::vector<Rational>& nu, const std::vector<Rational>& gamma,
                                  std::uint64_t seed);

struct FlaggedMatrix {
  QMatrix x;     // traceless
  QMatrix flag;  // columns v_1..v_n, F_k spanned by the first k
};

struct FlagReadout {
  FlaggedMatrix fm;
  std::vector<Rational> phipsi_steps;  // phi psi on F_k / F_{k-1}
  std::vector<Rational> lambda;        // x on F_k / F_{k-1}
  std::vector<Rational> delta;         // diag(x)
  bool adapted = false;                // x preserves the flag
};

/// Rejects reps whose x_i or phi are not injective.
FlagReadout rep_to_flagged_matrix(const BouquetRep& rep);

/// Coordinates c with basis * c == v, or nullopt if v is outside the span.
std::optional<std::vector<Rational>> coordinates_in(const QMatrix& basis, const std::vector<Rational>& v);

/// True when a acts on F_k / F_{k-1} by scalars[k-1] for all k, tested on
/// the flag basis and on `probes` random combinations inside each F_k.
bool acts_by_scalars_on_flag(const QMatrix& a, const QMatrix& flag, const std::vector<Rational>& scalars, Rng* rng,
                             unsigned probes = 2);

bool in_Y(const FlaggedMatrix& fm, const std::vector<Rational>& lambda, const std::vector<Rational>& delta);

/// Requires distinct lambda matching the characteristic polynomial of x;
/// S and T are 1-based.
bool in_Z(const QMatrix& x, const std::vector<Rational>& lambda, const std::vector<unsigned>& s,
          const std::vector<unsigned>& t);

/// Eigenvector of x for the simple eigenvalue mu, scaled so its first
/// nonzero coordinate is 1.
std::vector<Rational> eigenvector(const QMatrix& x, const Rational& mu);

/// sum over [n]\T of delta != sum over S of lambda; requires |S| + |T| = n.
bool disjointness_arithmetic(const std::vector<Rational>& lambda, const std::vector<Rational>& delta,
                             const std::vector<unsigned>& s, const std::vector<unsigned>& t);

/// dim GL_n minus dim of the stabiliser of C^{[n]\T}: (n - |T|) |T|.
std::uint64_t coordinate_stabilizer_codim(unsigned n, std::size_t t_size);

/// Row of (z_t o M^{(s)}) on v_1..v_s, where M^{(s)} is the product of
/// (x - lambda_j) over j < s. s and t are 1-based. No adaptedness check.
template <class T>
std::vector<T> section_row(const Matrix<T>& x, const std::vector<T>& lambda, unsigned s, unsigned t,
                           const Matrix<T>& flag) {
  const std::size_t n = x.rows();
  if (!x.is_square() || flag.rows() != n || flag.cols() != n || lambda.size() != n) {
    throw InvalidInput("section_row: shape mismatch");
  }
  if (s < 1 || s > n || t < 1 || t > n) throw InvalidInput("section_row: index out of range");
  Matrix<T> m = Matrix<T>::identity(n, x.one());
  for (unsigned j = 1; j < s; ++j) m = m * (x - lambda[j - 1] * Matrix<T>::identity(n, x.one()));
  std::vector<T> row;
  for (unsigned k = 0; k < s; ++k) {
    T value = x.zero();
    for (std::size_t c = 0; c < n; ++c) value += m(t - 1, c) * flag(c, k);
    row.push_back(value);
  }
  return row;
}

/// section_row after checking that the flag is x-adapted with eigenvalues lambda.
std::vector<Rational> section_value(const QMatrix& x, const std::vector<Rational>& lambda, unsigned s, unsigned t,
                                    const QMatrix& flag);

/// x = P diag(lambda) P^{-1} with the flag given by the columns of P. With
/// zero_chance > 0 some entries of P are forced to zero, which is how
/// points of Z are reached. P is redrawn until invertible.
FlaggedMatrix random_adapted_pair(const std::vector<Rational>& lambda, Rng& rng, unsigned zero_chance_percent = 0);

/// Change of basis g_k at every stem vertex (g.back() acts on C^{n-1}).
BouquetRep act_stem(const BouquetRep& rep, const std::vector<QMatrix>& g);
/// Bouquet torus: alpha_i scaled by t_i, beta_i by 1/t_i, i in [n-1].
BouquetRep act_bouquet_torus(const BouquetRep& rep, const std::vector<Rational>& t);

/// Random invertible k x k rational matrix.
QMatrix random_invertible(std::size_t k, Rng& rng);

}  // namespace hikita
