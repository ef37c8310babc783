#include "hikita/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "hikita/error.hpp"

namespace hikita {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw InvalidInput("variable index out of range");
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

std::uint64_t Monomial::weighted_degree(const std::vector<std::uint64_t>& weights) const {
  if (weights.size() != exps_.size()) throw InvalidInput("weight vector length mismatch");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += weights[i] * exps_[i];
  return d;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    if (b.exps_[i] > r.exps_[i]) throw ArithmeticError("monomial division is not exact");
    r.exps_[i] -= b.exps_[i];
  }
  r.degree_ -= b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "grevlex";
}

OrderKind parse_order_kind(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex" || name == "deglex") return OrderKind::GrLex;
  if (name == "grevlex" || name == "degrevlex") return OrderKind::GrevLex;
  throw InvalidInput("unknown monomial order '" + name + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  if (priority_.empty()) return;
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidInput("variable priority is not a permutation");
  }
  bool identity = true;
  for (std::size_t i = 0; i < priority_.size(); ++i) identity = identity && priority_[i] == i;
  if (identity) priority_.clear();
}

int MonomialOrder::compare_lex(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t v = var_at(r);
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare_revlex_tail(const Monomial& a, const Monomial& b) const {
  // With equal total degree: the monomial with the smaller exponent in the
  // least significant differing variable is the larger one.
  for (std::size_t r = a.size(); r-- > 0;) {
    const std::size_t v = var_at(r);
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      return compare_lex(a, b);
    case OrderKind::GrLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return compare_lex(a, b);
    case OrderKind::GrevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return compare_revlex_tail(a, b);
  }
  return 0;
}

}  // namespace hikita
