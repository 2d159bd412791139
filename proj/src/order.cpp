#include "inalg/order.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace inalg {

namespace {

std::vector<std::size_t> checked_priority(std::size_t n, std::vector<std::size_t> p) {
  if (p.empty()) {
    p.resize(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
  if (p.size() != n) throw InvalidArgument("variable permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto i : p) {
    if (i >= n || seen[i]) throw InvalidArgument("variable permutation is not a bijection");
    seen[i] = true;
  }
  return p;
}

std::strong_ordering cmp_int(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering weighted_compare(const WeightVector& w,
                                      std::span<const Exponent> a,
                                      std::span<const Exponent> b) {
  if (w.fits_int64()) {
    __int128 da = 0, db = 0;
    const auto& s = w.small();
    for (std::size_t i = 0; i < s.size(); ++i) {
      da += static_cast<__int128>(s[i]) * a[i];
      db += static_cast<__int128>(s[i]) * b[i];
    }
    return da <=> db;
  }
  return cmp_int(w.degree_prefix(a), w.degree_prefix(b));
}

}  // namespace

OrderSpec OrderSpec::lex(std::size_t n, std::vector<std::size_t> priority) {
  OrderSpec o;
  o.kind_ = Kind::Lex;
  o.priority_ = checked_priority(n, std::move(priority));
  return o;
}

OrderSpec OrderSpec::deglex(std::size_t n, std::vector<std::size_t> priority) {
  OrderSpec o = lex(n, std::move(priority));
  o.kind_ = Kind::DegLex;
  return o;
}

OrderSpec OrderSpec::revlex(std::size_t n, std::vector<std::size_t> priority) {
  OrderSpec o = lex(n, std::move(priority));
  o.kind_ = Kind::RevLex;
  return o;
}

OrderSpec OrderSpec::weight_refined(WeightVector a, OrderSpec base) {
  if (base.kind_ == Kind::ExtendedToT)
    throw InvalidArgument("a weight refinement cannot wrap an extended order");
  if (a.size() != base.arity()) throw InvalidArgument("weight arity does not match the order");
  OrderSpec o;
  o.kind_ = Kind::WeightRefined;
  o.weight_ = std::move(a);
  o.base_ = std::make_shared<const OrderSpec>(std::move(base));
  return o;
}

OrderSpec OrderSpec::extended_to_t(WeightVector a, OrderSpec base) {
  if (base.kind_ == Kind::ExtendedToT)
    throw InvalidArgument("order is already extended");
  if (a.size() != base.arity()) throw InvalidArgument("weight arity does not match the order");
  OrderSpec o;
  o.kind_ = Kind::ExtendedToT;
  o.weight_ = std::move(a);
  o.base_ = std::make_shared<const OrderSpec>(std::move(base));
  return o;
}

OrderSpec OrderSpec::block(std::vector<bool> eliminate, OrderSpec kept) {
  if (eliminate.size() != kept.arity()) throw InvalidArgument("block mask arity mismatch");
  OrderSpec o;
  o.kind_ = Kind::Block;
  o.eliminate_ = std::move(eliminate);
  o.base_ = std::make_shared<const OrderSpec>(std::move(kept));
  return o;
}

std::size_t OrderSpec::arity() const {
  switch (kind_) {
    case Kind::Lex:
    case Kind::DegLex:
    case Kind::RevLex:
      return priority_.size();
    case Kind::WeightRefined:
    case Kind::Block:
      return base_->arity();
    case Kind::ExtendedToT:
      return base_->arity() + 1;
  }
  return 0;
}

std::strong_ordering OrderSpec::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != arity() || b.size() != arity())
    throw RingMismatch("monomial arity does not match the order");
  return compare_span(a.exponents(), b.exponents());
}

std::strong_ordering OrderSpec::compare_span(std::span<const Exponent> a,
                                             std::span<const Exponent> b) const {
  auto lex_part = [&]() {
    for (auto i : priority_)
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
  };
  auto degree = [&](std::span<const Exponent> m) {
    std::int64_t d = 0;
    for (auto i : priority_) d += m[i];
    return d;
  };
  switch (kind_) {
    case Kind::Lex:
      return lex_part();
    case Kind::DegLex:
      if (auto c = degree(a) <=> degree(b); c != 0) return c;
      return lex_part();
    case Kind::RevLex: {
      if (auto c = degree(a) <=> degree(b); c != 0) return c;
      for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
        if (auto c = b[*it] <=> a[*it]; c != 0) return c;
      return std::strong_ordering::equal;
    }
    case Kind::WeightRefined:
      if (auto c = weighted_compare(weight_, a, b); c != 0) return c;
      return base_->compare_span(a, b);
    case Kind::ExtendedToT: {
      std::size_t tv = base_->arity();
      auto ra = a.first(tv);
      auto rb = b.first(tv);
      auto c = weighted_compare(weight_, ra, rb);
      // a'-degree = a-degree + t-exponent
      if (c == 0) {
        if (auto ct = a[tv] <=> b[tv]; ct != 0) return ct;
      } else {
        Integer da = weight_.degree_prefix(ra) + a[tv];
        Integer db = weight_.degree_prefix(rb) + b[tv];
        if (auto cd = cmp_int(da, db); cd != 0) return cd;
        // Same a'-degree: the smaller t-exponent wins.
        return b[tv] <=> a[tv];
      }
      return base_->compare_span(ra, rb);
    }
    case Kind::Block: {
      std::int64_t da = 0, db = 0;
      for (std::size_t i = 0; i < eliminate_.size(); ++i)
        if (eliminate_[i]) {
          da += a[i];
          db += b[i];
        }
      if (auto c = da <=> db; c != 0) return c;
      for (std::size_t i = 0; i < eliminate_.size(); ++i)
        if (eliminate_[i])
          if (auto c = a[i] <=> b[i]; c != 0) return c;
      std::vector<Exponent> ka(a.begin(), a.end()), kb(b.begin(), b.end());
      for (std::size_t i = 0; i < eliminate_.size(); ++i)
        if (eliminate_[i]) ka[i] = kb[i] = 0;
      return base_->compare_span(ka, kb);
    }
  }
  return std::strong_ordering::equal;
}

std::string OrderSpec::to_string(const PolyRing& ring) const {
  auto names = [&](const char* head) {
    std::string s = head;
    std::vector<std::size_t> natural(priority_.size());
    std::iota(natural.begin(), natural.end(), 0);
    if (priority_ == natural) return s;
    s += "(";
    for (std::size_t k = 0; k < priority_.size(); ++k) {
      if (k) s += ",";
      s += ring.name(priority_[k]);
    }
    return s + ")";
  };
  switch (kind_) {
    case Kind::Lex:
      return names("lex");
    case Kind::DegLex:
      return names("deglex");
    case Kind::RevLex:
      return names("revlex");
    case Kind::WeightRefined:
      return "weight(" + weight_.to_string() + "; " + base_->to_string(ring) + ")";
    case Kind::ExtendedToT:
      return "extended(" + weight_.to_string() + "; " + base_->to_string(ring) + ")";
    case Kind::Block: {
      std::string s = "block(";
      bool first = true;
      for (std::size_t i = 0; i < eliminate_.size(); ++i)
        if (eliminate_[i]) {
          if (!first) s += ",";
          s += ring.name(i);
          first = false;
        }
      return s + "; " + base_->to_string(ring) + ")";
    }
  }
  return {};
}

bool OrderSpec::operator==(const OrderSpec& other) const {
  if (kind_ != other.kind_ || priority_ != other.priority_ ||
      !(weight_ == other.weight_) || eliminate_ != other.eliminate_)
    return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return *base_ == *other.base_;
}

// ---------------------------------------------------------------------------

Term leading_term(const Polynomial& f, const OrderSpec& ord) {
  if (f.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Monomial leading_monomial(const Polynomial& f, const OrderSpec& ord) {
  return leading_term(f, ord).mono;
}

std::vector<Term> sorted_terms(const Polynomial& f, const OrderSpec& ord) {
  auto t = f.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return t;
}

// ---------------------------------------------------------------------------

namespace {

class OrderParser {
 public:
  OrderParser(std::string_view text, const PolyRing& ring) : s_(text), ring_(ring) {}

  OrderSpec parse() {
    OrderSpec o = order();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return o;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("order: " + what, 0, pos_ + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  OrderSpec order() {
    std::size_t at = pos_;
    std::string head = word();
    std::size_t n = ring_.nvars();
    if (head == "weight") {
      expect('(');
      std::vector<Integer> w;
      do {
        std::string num = word();
        try {
          w.emplace_back(num);
        } catch (const std::invalid_argument&) {
          fail("bad weight entry '" + num + "'");
        }
      } while (accept(','));
      expect(';');
      OrderSpec base = order();
      expect(')');
      if (w.size() != n) fail("weight arity does not match the ring");
      try {
        return OrderSpec::weight_refined(WeightVector(std::move(w)), std::move(base));
      } catch (const InvalidArgument& e) {
        fail(e.what());
      }
    }
    std::vector<std::size_t> prio;
    if (accept('(')) {
      do {
        std::string v = word();
        auto idx = ring_.index_of(v);
        if (!idx) fail("unknown variable '" + v + "'");
        prio.push_back(*idx);
      } while (accept(','));
      expect(')');
    }
    try {
      if (head == "lex") return OrderSpec::lex(n, prio);
      if (head == "deglex") return OrderSpec::deglex(n, prio);
      if (head == "revlex" || head == "degrevlex") return OrderSpec::revlex(n, prio);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    pos_ = at;
    fail("unknown order '" + head + "'");
  }

  std::string_view s_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

OrderSpec parse_order(std::string_view text, const PolyRing& ring) {
  return OrderParser(text, ring).parse();
}

}  // namespace inalg
