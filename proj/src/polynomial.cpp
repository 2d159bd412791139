#include "inalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace inalg {

PolyRing::PolyRing(std::vector<std::string> names, bool has_homvar)
    : names_(std::move(names)), has_homvar_(has_homvar) {
  if (names_.empty()) throw InvalidArgument("a ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(n).second)
      throw InvalidArgument("duplicate variable name '" + n + "'");
  }
}

std::size_t PolyRing::homvar() const {
  if (!has_homvar_) throw InvalidArgument("ring has no homogenizing variable");
  return names_.size() - 1;
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

Ring extend_ring(const Ring& base) {
  if (base->has_homvar()) throw InvalidArgument("ring is already extended");
  std::string t = "t";
  while (base->index_of(t)) t += "_";
  auto names = base->names();
  names.push_back(t);
  return std::make_shared<const PolyRing>(std::move(names), true);
}

Ring base_ring(const Ring& extended) {
  if (!extended->has_homvar()) throw InvalidArgument("ring is not extended");
  auto names = extended->names();
  names.pop_back();
  return make_ring(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingMismatch("polynomials from different rings");
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    if (e < 0) throw InvalidArgument("negative exponent");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent e) {
  Monomial m(nvars);
  m.exps_.at(i) = e;
  return m;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exponents())
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

WeightVector::WeightVector(std::vector<Integer> entries)
    : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e < 1) throw InvalidArgument("weight entries must be positive integers");
    if (e.fits_slong_p() && e < Integer(1) << 62)
      small_.push_back(e.get_si());
  }
  if (small_.size() != entries_.size()) small_.clear();
}

WeightVector::WeightVector(std::initializer_list<long> entries)
    : WeightVector([&] {
        std::vector<Integer> v;
        for (long e : entries) v.emplace_back(e);
        return v;
      }()) {}

WeightVector WeightVector::ones(std::size_t n) {
  return WeightVector(std::vector<Integer>(n, Integer(1)));
}

WeightVector WeightVector::extended() const {
  auto e = entries_;
  e.emplace_back(1);
  return WeightVector(std::move(e));
}

Integer WeightVector::degree(const Monomial& m) const {
  if (m.size() != entries_.size())
    throw RingMismatch("weight arity does not match the monomial");
  return degree_prefix(m.exponents());
}

Integer WeightVector::degree_prefix(std::span<const Exponent> exps) const {
  if (exps.size() < entries_.size()) throw RingMismatch("weight arity too large");
  if (fits_int64()) {
    // |w| < 2^62, |e| < 2^31: the sum cannot overflow 128 bits.
    __int128 d = 0;
    for (std::size_t i = 0; i < small_.size(); ++i)
      d += static_cast<__int128>(small_[i]) * exps[i];
    if (d <= INT64_MAX) return Integer(static_cast<long>(d));
  }
  Integer d = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    d += entries_[i] * static_cast<long>(exps[i]);
  return d;
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].get_str();
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Term> normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

void check_arity(const Ring& ring, const Monomial& m) {
  if (m.size() != ring->nvars())
    throw RingMismatch("monomial arity does not match the ring");
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  for (auto& t : terms) {
    check_arity(ring_, t.mono);
    t.coeff.canonicalize();
  }
  terms_ = normalize(std::move(terms));
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms, bool)
    : ring_(std::move(ring)), terms_(std::move(terms)) {}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  auto n = ring->nvars();
  if (i >= n) throw InvalidArgument("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(n, i));
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational c) {
  check_arity(ring, m);
  std::vector<Term> t;
  if (c != 0) t.push_back({c, std::move(m)});
  return Polynomial(std::move(ring), std::move(t), true);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::int64_t Polynomial::total_degree() const {
  if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
  return terms_.front().mono.degree();  // DegLex storage
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  auto d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::is_homogeneous(const WeightVector& w) const {
  if (is_zero()) return true;
  auto d = w.degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return w.degree(t.mono) == d; });
}

Polynomial Polynomial::operator-() const {
  auto t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return Polynomial(ring_, std::move(t), true);
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      out.push_back(g.terms_[j++]);
      continue;
    }
    auto c = inalg::canonical_compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + g.terms_[j].coeff;
      if (s != 0) out.push_back({s, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial(ring_, normalize(std::move(prod)), true);
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  auto t = terms_;
  for (auto& x : t) x.coeff *= c;
  return Polynomial(ring_, std::move(t), true);
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  check_arity(ring_, m);
  if (c == 0) return Polynomial(ring_);
  auto t = terms_;
  for (auto& x : t) {
    x.coeff *= c;
    x.mono *= m;
  }
  // Multiplying by a monomial preserves DegLex order.
  return Polynomial(ring_, std::move(t), true);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::canonical_monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / terms_.front().coeff);
}

bool Polynomial::operator==(const Polynomial& g) const {
  return same_ring(ring_, g.ring_) && terms_ == g.terms_;
}

std::strong_ordering Polynomial::canonical_compare(const Polynomial& g) const {
  std::size_t n = std::min(terms_.size(), g.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = inalg::canonical_compare(terms_[i].mono, g.terms_[i].mono); c != 0)
      return c;
    int s = cmp(terms_[i].coeff, g.terms_[i].coeff);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> g.terms_.size();
}

Polynomial Polynomial::with_ring(Ring ring) const {
  if (ring->nvars() != ring_->nvars()) throw RingMismatch("variable count differs");
  return Polynomial(std::move(ring), terms_, true);
}

// ---------------------------------------------------------------------------

Integer a_degree(const Polynomial& f, const WeightVector& a) {
  if (f.is_zero()) throw ZeroPolynomial("a-degree of the zero polynomial");
  Integer best = a.degree(f.terms().front().mono);
  for (const auto& t : f.terms()) {
    Integer d = a.degree(t.mono);
    if (d > best) best = d;
  }
  return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& a) {
  Integer top = a_degree(f, a);
  std::vector<Term> keep;
  for (const auto& t : f.terms())
    if (a.degree(t.mono) == top) keep.push_back(t);
  return Polynomial(f.ring(), std::move(keep));
}

Polynomial homogenize(const Polynomial& f, const WeightVector& a) {
  return homogenize(f, a, extend_ring(f.ring()));
}

Polynomial homogenize(const Polynomial& f, const WeightVector& a,
                      const Ring& extended) {
  if (!extended->has_homvar() || extended->nvars() != f.ring()->nvars() + 1)
    throw RingMismatch("target is not the extension of the source ring");
  Integer top = a_degree(f, a);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer gap = top - a.degree(t.mono);
    if (!gap.fits_sint_p()) throw InvalidArgument("homogenizing exponent overflow");
    auto e = t.mono.vec();
    e.push_back(static_cast<Exponent>(gap.get_si()));
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(extended, std::move(out));
}

Polynomial specialize_t(const Polynomial& f, const Rational& c) {
  return specialize_t(f, c, base_ring(f.ring()));
}

Polynomial specialize_t(const Polynomial& f, const Rational& c, const Ring& base) {
  std::size_t tv = f.ring()->homvar();
  if (base->nvars() != tv) throw RingMismatch("base ring does not match");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Rational coeff = t.coeff;
    Exponent k = t.mono[tv];
    if (k > 0) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(k));
      mpz_pow_ui(den.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(k));
      coeff *= Rational(num, den);
    }
    auto e = t.mono.vec();
    e.pop_back();
    out.push_back({coeff, Monomial(std::move(e))});
  }
  return Polynomial(base, std::move(out));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images,
                      const Ring& target) {
  if (images.size() != f.ring()->nvars())
    throw RingMismatch("substitution needs one image per variable");
  for (const auto& g : images) require_same_ring(g.ring(), target);
  Polynomial acc(target);
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Polynomial::constant(target, 1));
    while (p.size() <= static_cast<std::size_t>(e)) p.push_back(p.back() * images[i]);
    return p[static_cast<std::size_t>(e)];
  };
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i] > 0) term = term * power(i, t.mono[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace inalg
