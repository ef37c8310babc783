#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hikita {

using Exponent = std::uint32_t;

/// Power product over a fixed number of variables. The exponent vector is
/// dense (one slot per ring variable) and the total degree is cached.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 16>;

  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  std::uint64_t weighted_degree(const std::vector<std::uint64_t>& weights) const;
  bool is_one() const { return degree_ == 0; }

  /// Sets one exponent, keeping the cached degree in sync.
  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Number of variables with a nonzero exponent.
  std::size_t support_size() const;
  /// Index of the only variable with a nonzero exponent, if there is one.
  std::optional<std::size_t> pure_power_variable() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;
  const Storage& exponents() const { return exps_; }

 private:
  Storage exps_;
  std::uint64_t degree_ = 0;
};

enum class OrderKind { Lex, GrLex, GrevLex };

std::string to_string(OrderKind kind);
/// Accepts "lex", "grlex"/"deglex", "grevlex"/"degrevlex".
OrderKind parse_order_kind(const std::string& name);

/// A monomial order together with a variable priority permutation:
/// `priority()[0]` is the most significant variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {});

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  /// -1, 0, +1 as a < b, a == b, a > b. Both monomials must have the same
  /// number of variables; an empty priority means the natural order.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.priority_ == b.priority_;
  }

 private:
  std::size_t var_at(std::size_t rank) const { return priority_.empty() ? rank : priority_[rank]; }
  int compare_lex(const Monomial& a, const Monomial& b) const;
  int compare_revlex_tail(const Monomial& a, const Monomial& b) const;

  OrderKind kind_ = OrderKind::GrevLex;
  std::vector<std::size_t> priority_;
};

}  // namespace hikita
