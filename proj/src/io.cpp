#include "inalg/io.hpp"

#include <cctype>

namespace inalg {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, std::size_t line)
      : s_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    terms.push_back(term(negative));
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

  Monomial monomial() {
    Term t = term(false);
    skip();
    if (pos_ != s_.size()) fail("trailing characters after monomial");
    if (t.coeff != 1) fail("expected a monomial without coefficient");
    return t.mono;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    Term t{Rational(negative ? -1 : 1), Monomial(ring_->nvars())};
    bool after_number = false;
    bool first = true;
    for (;;) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational q{Integer(digits())};
        skip();
        if (peek() == '/') {
          ++pos_;
          std::size_t at = pos_;
          Integer den(digits());
          if (den == 0) {
            pos_ = at;
            fail("zero denominator");
          }
          q = Rational(q.get_num(), den);
          q.canonicalize();
        }
        t.coeff *= q;
        after_number = true;
      } else if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident(s_[pos_])) ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) {
          pos_ = start;
          fail("unknown variable '" + std::string(name) + "'");
        }
        Exponent e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          std::string d = digits();
          if (d.size() > 9) fail("exponent too large");
          e = static_cast<Exponent>(std::stol(d));
        }
        t.mono[*idx] += e;
        after_number = false;
      } else {
        fail(first ? "expected a coefficient or variable" : "expected a factor after '*'");
      }
      first = false;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      // Implicit multiplication only between a coefficient and a variable.
      if (after_number && is_ident_start(peek())) continue;
      break;
    }
    return t;
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string format_terms(const std::vector<Term>& terms, const PolyRing& ring) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    bool neg = sgn(t.coeff) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += to_string(t.mono, ring);
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line) {
  return PolyParser(text, ring, line).parse();
}

Monomial parse_monomial(std::string_view text, const Ring& ring, std::size_t line) {
  return PolyParser(text, ring, line).monomial();
}

std::string to_string(const Monomial& m, const PolyRing& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Polynomial& f) { return format_terms(f.terms(), *f.ring()); }

std::string to_string(const Polynomial& f, const OrderSpec& ord) {
  return format_terms(sorted_terms(f, ord), *f.ring());
}

}  // namespace inalg
