#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hikita/rational.hpp"

namespace hikita {

struct Quiver {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (tail, head), multi-edges allowed

  std::size_t vertex_count() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;
  /// Throws InvalidInput on an endpoint out of range.
  void validate() const;
};

using DimVector = std::vector<std::int64_t>;

/// Stem s1..s_{n-1} with s_i -> s_{i+1}, plus s_{n-1} -> b_i for i < n.
Quiver bouquet(unsigned n);
/// As bouquet, with the extra bouquet vertex b_n.
Quiver abundant_bouquet(unsigned n);
/// Centre "*" and leaves 1..n, each leaf oriented towards the centre.
Quiver star_quiver(unsigned n);

/// (1, 2, ..., n-1; 1, ..., 1) with n-1 bouquet entries, or n when abundant.
DimVector bouquet_dimension(unsigned n, bool abundant);

std::int64_t ringel_form(const Quiver& q, const DimVector& a, const DimVector& b);
std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
bool is_anisotropic(const Quiver& q, const DimVector& v);

struct Sigma0Result {
  bool member = false;
  std::optional<DimVector> witness;  // first violating w in lexicographic order
  std::int64_t witness_value = 0;    // (w, v - w) at the witness
  std::uint64_t enumerated = 0;      // number of proper w visited
};

/// v > 0 and (w, v - w) <= -2 for every 0 < w < v, by full enumeration.
Sigma0Result in_sigma0(const Quiver& q, const DimVector& v, std::uint64_t max_enumeration = 50'000'000);

/// Product of (v_i + 1): the size of the box that in_sigma0 walks.
std::uint64_t enumeration_size(const DimVector& v);

struct AmGmReport {
  std::uint64_t checked = 0;    // w with nonzero stem part after the halving swap
  std::uint64_t violations = 0;
};

/// For the abundant bouquet and its standard vector, checks
/// (w, v - w) <= -(w_{s_m})^2 - (w_{s_M})^2 for every proper w, after
/// replacing w by v - w when w_{s_{n-1}} exceeds half of n - 1, with m and M
/// the first and last nonzero stem indices.
AmGmReport am_gm_bound_check(unsigned n);

struct ResolutionRecord {
  bool in_sigma0 = false;
  bool indivisible = false;
  bool anisotropic = false;
  bool kleinian_d4 = false;  // affine D4 shape with its minimal imaginary root
  std::int64_t ringel_self = 0;
  std::uint64_t enumeration_size = 0;
  std::optional<DimVector> sigma0_witness;
  std::string verdict;
};

ResolutionRecord admits_resolution(const Quiver& q, const DimVector& v,
                                   std::uint64_t max_enumeration = 50'000'000);

struct CrawleyBoevey {
  Quiver quiver;  // q plus one vertex fed by a single edge from the framed vertex
  DimVector v;
  std::vector<Rational> lambda;
  std::vector<Rational> theta;
};

/// Absorbs a one-dimensional framing at framed_vertex into a new vertex.
CrawleyBoevey crawley_boevey_trick(const Quiver& q, const DimVector& v, const std::vector<Rational>& lambda,
                                   const std::vector<Rational>& theta, std::size_t framed_vertex,
                                   const std::string& new_label = "b*");

struct NondegeneracyResult {
  bool nondegenerate = false;
  std::optional<DimVector> witness;
};

/// theta . v' != 0 for every nonzero v' <= v with v' != v.
NondegeneracyResult nondegenerate_stability(const std::vector<Rational>& theta, const DimVector& v,
                                            std::uint64_t max_enumeration = 50'000'000);

struct DeformationParams {
  std::vector<Rational> nu;     // n - 1 stem entries
  std::vector<Rational> gamma;  // n - 1 bouquet entries
  std::vector<Rational> lambda; // n entries
  std::vector<Rational> delta;  // n entries, gamma_n taken as 0
};

/// Rejects input unless sum(gamma) == sum_j j nu_j, which is what makes
/// delta sum to zero.
DeformationParams lambda_delta_from_nu_gamma(const std::vector<Rational>& nu, const std::vector<Rational>& gamma);

struct GenericityResult {
  bool generic = false;
  std::string reason;  // "repeated lambda" or "subset sums coincide"
  std::vector<unsigned> a;  // 1-based; for repeated lambda, the two indices
  std::vector<unsigned> b;
};

enum class GenericityScope {
  all_pairs,
  /// Skips (A, B) = ({n}, {n}) and ([n-1], [n-1]). For lambda, delta built
  /// from (nu, gamma) those two sums agree identically, because
  /// lambda_n = delta_n = -(1/n) sum_j j nu_j.
  except_forced,
};

/// All lambda distinct, and sum(delta over A) != sum(lambda over B) for
/// every pair of nonempty proper subsets with |A| == |B|.
GenericityResult genericity_certificate(const std::vector<Rational>& lambda, const std::vector<Rational>& delta,
                                        GenericityScope scope = GenericityScope::all_pairs);

}  // namespace hikita
