#pragma once

#include <vector>

#include "hikita/hikita_ring.hpp"
#include "hikita/matrix.hpp"

namespace hikita {

/// Q[y1..yn, g11, g12, ..., gnn] in grevlex; y_i has index i-1 and g_ij has
/// index n + (i-1) n + (j-1).
Ring gg_ring(unsigned n);

using Permutation = std::vector<unsigned>;  // 1-based images w(1..n)

struct GGPoint {
  RFMatrix g;
  Permutation perm;  // formal diagonal is (y_perm(1), ..., y_perm(n))

  friend bool operator==(const GGPoint& a, const GGPoint& b) = default;
};

/// The matrix of indeterminates g_ij with the identity arrangement.
GGPoint symbolic_seed(const Ring& ring, unsigned n);
/// A constant matrix with the identity arrangement.
GGPoint constant_seed(const Ring& ring, const QMatrix& g);

/// Identity except the (k, k+1) block [[0, 1/(y_a - y_b)], [y_b - y_a, 0]]
/// with (a, b) = (k, k+1) by default.
RFMatrix sk_matrix(const Ring& ring, unsigned n, unsigned k);
RFMatrix sk_matrix(const Ring& ring, unsigned n, unsigned k, unsigned a, unsigned b);

/// g <- g s_k evaluated at the current arrangement; swaps perm(k), perm(k+1).
GGPoint sigma_k(const GGPoint& pt, unsigned k);
GGPoint apply_word(GGPoint pt, const std::vector<unsigned>& word);

/// s_1 s_2 ... s_{n-1} followed by the same word for n-1, i.e. the
/// inductive reduced word of the longest element. Length n(n-1)/2.
std::vector<unsigned> longest_word(unsigned n);

/// Entry (i, j): g_{i,n+1-j} prod_{l>j}(y_{n+1-j} - y_{n+1-l}) / prod_{l<j}(same).
RFMatrix w0_closed_form(const Ring& ring, unsigned n);

RationalFunction delta_minor(const RFMatrix& g, const Subset& rows, const Subset& cols);

struct W0DeltaCheck {
  Subset s;
  int epsilon = 0;  // recorded sign, 0 when the ratio is not +-1
  bool passed = false;
};

/// Delta_{S,[i]} of the w0 closed form against
/// eps det(g_{s,n+1-t})_{s in S, t in [i]} prod_{a > n-i, b <= n-i}(y_a - y_b).
W0DeltaCheck restrict_w0_delta(const Ring& ring, unsigned n, const Subset& s);

/// Signed permutation matrix with entries at (r, w(r)), last row negated
/// when w is odd, so the determinant is 1.
QMatrix permutation_matrix(const Permutation& w);
int permutation_sign(const Permutation& w);
std::vector<Permutation> all_permutations(unsigned n);

struct ImageCheck {
  explicit ImageCheck(Polynomial v) : value(std::move(v)) {}

  Subset s;
  Permutation w;
  unsigned i = 0;          // |S|
  bool support = false;    // w(S) == [i]
  Polynomial value;        // in the Cartan ring, y variables only
  int sign = 0;            // value == sign * f_{[n]\S,[i]}(x_s = y_w(s)); 0 if value is 0
  bool passed = false;
};

/// Delta_S(g) * Delta_{[n]\S}(w0.[g, y]) at g = P_w, computed by applying the
/// longest word to the seed P_w. |S| = i with 1 <= i <= n-1.
ImageCheck image_in_fixed_ring(unsigned n, const Subset& s, const Permutation& w);

struct OrbitSweep {
  std::size_t images = 0;           // (S, w) with w(S) = [i]
  std::size_t image_failures = 0;
  std::size_t orbit_failures = 0;   // y-permuted image not equal to f_{S',T}
  std::vector<std::pair<Subset, Subset>> recovered;  // sorted, unique (S', T)
  bool complete = false;            // recovered every nonempty (S', T), |S'|+|T| = n
};

/// Runs image_in_fixed_ring over all (S, w) and closes each nonzero image
/// under permutations of the y variables.
OrbitSweep generator_orbit_sweep(unsigned n);

}  // namespace hikita
