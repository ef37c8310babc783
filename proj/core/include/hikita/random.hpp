#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hikita/rational.hpp"

namespace hikita {

/// Seeded generator with portable bounded draws. The standard distributions
/// are implementation-defined, so bounded integers use rejection sampling on
/// the raw 64-bit stream instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  Rational integer(std::int64_t lo, std::int64_t hi) { return Rational(uniform(lo, hi)); }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    const std::int64_t p = uniform(-max_num, max_num);
    const std::int64_t q = uniform(1, max_den);
    return Rational(p, q);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  /// Independent child stream, for fanning one seed out to subtasks.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hikita
