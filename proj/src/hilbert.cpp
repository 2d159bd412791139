#include "inalg/hilbert.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace inalg {

namespace {

using Coeffs = std::vector<Integer>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Coeffs add(Coeffs a, const Coeffs& b, std::int64_t shift = 0) {
  auto s = static_cast<std::size_t>(shift);
  if (a.size() < b.size() + s) a.resize(b.size() + s, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + s] += b[i];
  trim(a);
  return a;
}

/// p * (1 - t^d)
Coeffs times_one_minus(const Coeffs& p, std::int64_t d) {
  Coeffs neg(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
  return add(p, neg, d);
}

/// Exact quotient p / (1 - t^d), or nullopt if it does not divide.
std::optional<Coeffs> divide_one_minus(const Coeffs& p, std::int64_t d) {
  if (p.empty()) return Coeffs{};
  auto ud = static_cast<std::size_t>(d);
  if (p.size() <= ud) return std::nullopt;
  Coeffs q(p.size() - ud, 0);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[k] + (k >= ud ? q[k - ud] : Integer(0));
  if (times_one_minus(q, d) != p) return std::nullopt;
  return q;
}

std::int64_t small_degree(const WeightVector& a, const Monomial& m) {
  Integer d = a.degree(m);
  if (!d.fits_slong_p() || d > (Integer(1) << 40))
    throw InvalidArgument("weighted degree too large for a Hilbert series");
  return d.get_si();
}

std::vector<Monomial> minimal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& m : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& d) { return d.divides(m); }))
      out.push_back(std::move(m));
  return out;
}

class SeriesRecursion {
 public:
  SeriesRecursion(const WeightVector& a, PivotStrategy s) : a_(a), strategy_(s) {}

  Coeffs numerator(const std::vector<Monomial>& gens) {
    if (gens.empty()) return Coeffs{1};
    std::size_t n = gens.front().size();
    std::vector<std::size_t> count(n, 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] > 0) ++count[v];
    if (std::all_of(count.begin(), count.end(), [](std::size_t c) { return c <= 1; })) {
      Coeffs p{1};
      for (const auto& g : gens) p = times_one_minus(p, small_degree(a_, g));
      return p;
    }
    std::size_t var = n;
    if (strategy_ == PivotStrategy::MostFrequentVariable) {
      for (std::size_t v = 0; v < n; ++v)
        if (var == n || count[v] > count[var]) var = v;
    } else {
      for (std::size_t v = 0; v < n && var == n; ++v)
        if (count[v] >= 2) var = v;
    }
    Exponent e = 1;
    if (strategy_ == PivotStrategy::MostFrequentVariable) {
      e = -1;
      for (const auto& g : gens)
        if (g[var] > 0) e = e < 0 ? g[var] : std::min(e, g[var]);
    }
    // x_var^e lies outside M: it divides two minimal generators.
    Monomial p = Monomial::variable(n, var, e);
    std::vector<Monomial> sum{p}, colon;
    for (const auto& g : gens) {
      if (!p.divides(g)) sum.push_back(g);
      colon.push_back(g / g.gcd(p));
    }
    Coeffs left = numerator(minimal(std::move(sum)));
    Coeffs right = numerator(minimal(std::move(colon)));
    return add(left, right, small_degree(a_, p));
  }

 private:
  const WeightVector& a_;
  PivotStrategy strategy_;
};

void enumerate(std::size_t var, std::size_t n, const std::vector<std::int64_t>& w,
               std::int64_t remaining, std::vector<Exponent>& cur, std::vector<Monomial>& out) {
  if (var == n) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (std::int64_t e = remaining / w[var]; e >= 0; --e) {
    cur[var] = static_cast<Exponent>(e);
    enumerate(var + 1, n, w, remaining - e * w[var], cur, out);
  }
  cur[var] = 0;
}

}  // namespace

HilbertSeries hilbert_series_monomial(const MonomialIdeal& M, const WeightVector& a,
                                      PivotStrategy pivot) {
  std::size_t n = M.ring->nvars();
  if (a.size() != n) throw RingMismatch("weight arity does not match the ring");
  HilbertSeries H;
  H.numerator = SeriesRecursion(a, pivot).numerator(M.mingens);
  for (std::size_t v = 0; v < n; ++v)
    H.denom_degrees.push_back(small_degree(a, Monomial::variable(n, v)));
  return H;
}

HilbertFunctionTable hilbert_function(const HilbertSeries& H, std::int64_t d_max) {
  if (d_max < 0) throw InvalidArgument("negative degree bound");
  auto len = static_cast<std::size_t>(d_max + 1);
  Coeffs series(len, 0);
  for (std::size_t k = 0; k < len && k < H.numerator.size(); ++k) series[k] = H.numerator[k];
  for (auto d : H.denom_degrees) {
    if (d <= 0) throw InvalidArgument("denominator degrees must be positive");
    auto ud = static_cast<std::size_t>(d);
    for (std::size_t k = ud; k < len; ++k) series[k] += series[k - ud];
  }
  return HilbertFunctionTable{std::move(series), std::nullopt};
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, const WeightVector& a,
                                          std::int64_t d) {
  if (a.size() != nvars) throw RingMismatch("weight arity does not match");
  std::vector<std::int64_t> w;
  for (std::size_t v = 0; v < nvars; ++v) w.push_back(small_degree(a, Monomial::variable(nvars, v)));
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<Exponent> cur(nvars, 0);
  enumerate(0, nvars, w, d, cur, out);
  return out;
}

HilbertFunctionTable hilbert_function_subalgebra(const SagbiState& state,
                                                 const OrderSpec& ord,
                                                 const WeightVector& b,
                                                 std::int64_t d_max) {
  const Ring& ring = state.gens.ring;
  if (b.size() != ring->nvars()) throw RingMismatch("grading arity does not match the ring");
  if (d_max < 0) throw InvalidArgument("negative degree bound");
  for (const auto& g : state.gens.gens)
    if (!g.is_homogeneous(b)) throw NotGraded("subalgebra generators are not graded");
  auto gens = initial_algebra_gens(state, ord);
  auto len = static_cast<std::size_t>(d_max + 1);
  std::vector<std::set<Monomial>> level(len);
  level[0].insert(Monomial(ring->nvars()));
  for (std::size_t d = 1; d < len; ++d)
    for (const auto& g : gens) {
      auto e = static_cast<std::size_t>(small_degree(b, g));
      if (e > d) continue;
      for (const auto& m : level[d - e]) level[d].insert(m * g);
    }
  HilbertFunctionTable table;
  for (const auto& l : level) table.values.emplace_back(static_cast<unsigned long>(l.size()));
  if (state.truncated_at) table.valid_through = *state.truncated_at;
  return table;
}

HilbertFunctionTable hilbert_function_subalgebra(const SubalgebraGens& F,
                                                 const OrderSpec& ord,
                                                 const WeightVector& b,
                                                 std::int64_t d_max) {
  for (const auto& g : F.gens)
    if (!g.is_homogeneous(b)) throw NotGraded("subalgebra generators are not graded");
  std::int64_t cap = std::max<std::int64_t>(d_max, 1);
  for (const auto& g : F.gens) cap = std::max(cap, g.total_degree());
  return hilbert_function_subalgebra(sagbi_complete(F, ord, cap), ord, b, d_max);
}

HilbertSeries hilbert_series_subalgebra(const SagbiState& state, const OrderSpec& ord,
                                        const WeightVector& b, bool normalize) {
  if (!state.confirmed())
    throw InvalidArgument("Hilbert series needs a confirmed Sagbi basis");
  const Ring& ring = state.gens.ring;
  if (b.size() != ring->nvars()) throw RingMismatch("grading arity does not match the ring");
  for (const auto& g : state.gens.gens)
    if (!g.is_homogeneous(b)) throw NotGraded("subalgebra generators are not graded");
  auto gens = initial_algebra_gens(state, ord);
  if (gens.empty()) return HilbertSeries{{1}, {}};
  std::vector<Integer> deg;
  Integer g = 0;
  for (const auto& m : gens) {
    deg.push_back(b.degree(m));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), deg.back().get_mpz_t());
  }
  if (normalize)
    for (auto& d : deg) d /= g;
  // ini(A) = K[Y]/T with T the toric ideal, graded by deg(Y_i).
  auto T = toric_kernel(ring, gens);
  auto M = initial_ideal(T, OrderSpec::revlex(gens.size()));
  return hilbert_series_monomial(M, WeightVector(std::move(deg)));
}

std::size_t krull_dim_monomial(const MonomialIdeal& M) {
  std::size_t n = M.ring->nvars();
  if (M.mingens.empty()) return n;
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : M.mingens) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (g[v] > 0) s.push_back(v);
    if (s.empty()) return 0;  // unit ideal, dim of the zero ring is taken as 0
    supports.push_back(std::move(s));
  }
  // dim = n - minimal size of a variable set meeting every support.
  std::size_t best = n;
  std::vector<bool> chosen(n, false);
  auto solve = [&](auto& self, std::size_t size) -> void {
    if (size >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports)
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; })) {
        if (!open || s.size() < open->size()) open = &s;
      }
    if (!open) {
      best = size;
      return;
    }
    for (auto v : *open) {
      chosen[v] = true;
      self(self, size + 1);
      chosen[v] = false;
    }
  };
  solve(solve, 0);
  return n - best;
}

std::int64_t pole_order(const HilbertSeries& H) {
  Coeffs p = H.numerator;
  std::int64_t k = static_cast<std::int64_t>(H.denom_degrees.size());
  if (p.empty()) throw InvalidArgument("zero numerator");
  for (;;) {
    auto q = divide_one_minus(p, 1);
    if (!q) break;
    p = std::move(*q);
    --k;
  }
  return k;
}

HilbertComparison compare_hilbert(const IdealGens& I, const WeightVector& b,
                                  const OrderSpec& first, const OrderSpec& second,
                                  std::int64_t d_max) {
  if (b.size() != I.ring->nvars()) throw RingMismatch("grading arity does not match the ring");
  for (const auto& g : I.gens)
    if (!g.is_homogeneous(b)) throw NotGraded("ideal is not graded for the given weight");
  auto m1 = initial_ideal(I, first);
  auto m2 = initial_ideal(I, second);
  auto h1 = hilbert_function(hilbert_series_monomial(m1, b), d_max);
  auto h2 = hilbert_function(hilbert_series_monomial(m2, b), d_max);
  bool equal = h1.values == h2.values;
  auto dim1 = krull_dim_monomial(m1);
  auto dim2 = krull_dim_monomial(m2);
  return HilbertComparison{std::move(m1), std::move(m2), std::move(h1), std::move(h2),
                           dim1,          dim2,          equal};
}

ReducedSeries reduce_series(const HilbertSeries& H) {
  Coeffs h = H.numerator;
  trim(h);
  if (h.empty()) throw InvalidArgument("malformed series: zero numerator");
  std::vector<std::int64_t> denom = H.denom_degrees;
  for (auto d : denom)
    if (d <= 0) throw InvalidArgument("malformed series: nonpositive denominator degree");
  std::sort(denom.begin(), denom.end());
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < denom.size(); ++i) {
      if (auto q = divide_one_minus(h, denom[i])) {
        h = std::move(*q);
        denom.erase(denom.begin() + static_cast<std::ptrdiff_t>(i));
        progress = true;
        break;
      }
    }
  }
  Integer at_one = 0;
  for (const auto& c : h) at_one += c;
  if (at_one == 0)
    throw InvalidArgument("malformed series: numerator vanishes at 1 after cancellation");
  return ReducedSeries{std::move(h), std::move(denom)};
}

bool gorenstein_symmetry_check(const HilbertSeries& H) {
  auto r = reduce_series(H);
  const auto& h = r.h;
  if (h.front() == 0) throw InvalidArgument("malformed series: numerator vanishes at 0");
  std::size_t s = h.size() - 1;
  bool plus = true, minus = true;
  for (std::size_t k = 0; k <= s; ++k) {
    if (h[k] != h[s - k]) plus = false;
    if (h[k] != -h[s - k]) minus = false;
  }
  return plus || minus;
}

std::string numerator_to_string(const std::vector<Integer>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

std::string to_string(const HilbertSeries& H) {
  std::ostringstream out;
  out << "(" << numerator_to_string(H.numerator) << ") / (";
  auto d = H.denom_degrees;
  std::sort(d.begin(), d.end());
  if (d.empty()) out << "1";
  bool first = true;
  for (std::size_t i = 0; i < d.size();) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    if (!first) out << "*";
    first = false;
    out << "(1-t";
    if (d[i] > 1) out << "^" << d[i];
    out << ")";
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  out << ")";
  return out.str();
}

}  // namespace inalg
