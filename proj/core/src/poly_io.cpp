#include "hikita/poly_io.hpp"

#include <cctype>

#include "hikita/error.hpp"

namespace hikita {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                       std::string(text_) + "'");
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Term term() {
    Term t{Monomial(ring_->nvars()), Rational(1)};
    while (true) {
      skip_space();
      if (pos_ == text_.size()) fail("dangling operator");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::string_view num = digits();
        skip_space();
        if (pos_ < text_.size() && peek() == '/') {
          ++pos_;
          skip_space();
          const std::string_view den = digits();
          t.coeff *= Rational::parse(std::string(num) + "/" + std::string(den));
        } else {
          t.coeff *= Rational::parse(num);
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto index = ring_->index_of(name);
        if (!index) fail("unknown variable '" + std::string(name) + "'");
        Exponent e = 1;
        skip_space();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_space();
          const std::string_view ds = digits();
          if (ds.size() > 9) fail("exponent too large");
          e = static_cast<Exponent>(std::stoul(std::string(ds)));
        }
        t.monomial.set(*index, t.monomial[*index] + e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const PolyRing& ring = *p.ring();
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = t.coeff.abs();
    bool need_star = false;
    if (!mag.is_one() || t.monomial.is_one()) {
      out += mag.to_string();
      need_star = true;
    }
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      const Exponent e = t.monomial[v];
      if (e == 0) continue;
      if (need_star) out += '*';
      out += ring.name(v);
      if (e > 1) out += '^' + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return format_polynomial(*this); }

}  // namespace hikita
