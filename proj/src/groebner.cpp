#include "inalg/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "ordered_poly.hpp"

namespace inalg {

using detail::OrderedPoly;

IdealGens::IdealGens(Ring r, std::vector<Polynomial> g) : ring(std::move(r)) {
  for (auto& p : g) {
    require_same_ring(ring, p.ring());
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  // Ascending degree: a divisor of m always precedes m.
  for (auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& d) { return d.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring r, std::vector<Monomial> gens) : ring(std::move(r)) {
  for (const auto& m : gens)
    if (m.size() != ring->nvars()) throw RingMismatch("monomial arity does not match the ring");
  mingens = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(mingens.begin(), mingens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> ReducedGroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(leading_monomial(g, ord));
  return out;
}

std::uint64_t GbOptions::default_step_limit() {
  const char* env = std::getenv("INALG_STEP_LIMIT");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw InvalidArgument("INALG_STEP_LIMIT must be a nonnegative integer");
  }
}

namespace {

class Reducer {
 public:
  Reducer(const OrderSpec& ord, std::uint64_t limit) : ord_(ord), limit_(limit) {}

  void tick() {
    if (limit_ != 0 && ++steps_ > limit_)
      throw StepLimitExceeded("reduction step limit of " + std::to_string(limit_) +
                              " exceeded");
  }

  /// Index of the reducer for m: smallest leading monomial, then index.
  std::ptrdiff_t find_reducer(const Monomial& m, const std::vector<OrderedPoly>& G,
                              const std::vector<bool>* active = nullptr) const {
    std::ptrdiff_t best = -1;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (active && !(*active)[k]) continue;
      const auto& lm = G[k].lead().mono;
      if (!lm.divides(m)) continue;
      if (best < 0 || ord_.compare(lm, G[static_cast<std::size_t>(best)].lead().mono) < 0)
        best = static_cast<std::ptrdiff_t>(k);
    }
    return best;
  }

  OrderedPoly normal_form(OrderedPoly p, const std::vector<OrderedPoly>& G,
                          const std::vector<bool>* active = nullptr) {
    std::vector<Term> rem;  // descending
    while (!p.empty()) {
      const Term& lt = p.lead();
      auto k = find_reducer(lt.mono, G, active);
      if (k < 0) {
        rem.push_back(std::move(p.terms.back()));
        p.terms.pop_back();
        continue;
      }
      tick();
      const auto& g = G[static_cast<std::size_t>(k)];
      Rational c = lt.coeff / g.lead().coeff;
      Monomial m = lt.mono / g.lead().mono;
      detail::sub_mul(p, c, m, g, ord_);
    }
    std::reverse(rem.begin(), rem.end());
    return OrderedPoly{std::move(rem)};
  }

  const OrderSpec& ord() const { return ord_; }

 private:
  const OrderSpec& ord_;
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const OrderSpec& ord) {
  Monomial l = f.lead().mono.lcm(g.lead().mono);
  OrderedPoly s;
  // f, g monic
  for (const auto& t : f.terms) s.terms.push_back({t.coeff, t.mono * (l / f.lead().mono)});
  detail::sub_mul(s, Rational(1), l / g.lead().mono, g, ord);
  return s;
}

void check_order(const Ring& ring, const OrderSpec& ord) {
  if (ord.arity() != ring->nvars())
    throw RingMismatch("order arity does not match the ring");
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const OrderSpec& ord) {
  check_order(f.ring(), ord);
  std::vector<OrderedPoly> basis;
  for (const auto& g : G) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw ZeroPolynomial("zero polynomial among the divisors");
    basis.push_back(detail::to_ordered(g, ord));
  }
  if (basis.empty()) throw InvalidArgument("normal form needs at least one divisor");
  Reducer red(ord, GbOptions::default_step_limit());
  return detail::to_polynomial(red.normal_form(detail::to_ordered(f, ord), basis), f.ring());
}

Polynomial normal_form(const Polynomial& f, const ReducedGroebnerBasis& G) {
  require_same_ring(f.ring(), G.ring);
  if (G.elements.empty()) return f;
  return normal_form(f, G.elements, G.ord);
}

ReducedGroebnerBasis buchberger(const IdealGens& I, const OrderSpec& ord,
                                const GbOptions& opts) {
  check_order(I.ring, ord);
  Reducer red(ord, opts.step_limit);
  std::vector<OrderedPoly> G;

  struct Pair {
    std::int64_t degree;
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (auto c = ord.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::vector<std::vector<bool>> pending;  // pending[j][i] for i < j

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<bool>(pending[b][a]);
  };

  auto add = [&](OrderedPoly p) {
    detail::make_monic(p);
    std::size_t k = G.size();
    G.push_back(std::move(p));
    pending.emplace_back(k, true);
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = G[i].lead().mono.lcm(G[k].lead().mono);
      queue.insert(Pair{l.degree(), std::move(l), i, k});
    }
  };

  for (const auto& f : I.gens) {
    auto r = red.normal_form(detail::to_ordered(f, ord), G);
    if (!r.empty()) add(std::move(r));
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending[p.j][p.i] = false;
    const auto& gi = G[p.i];
    const auto& gj = G[p.j];
    if (gi.lead().mono.coprime(gj.lead().mono)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].lead().mono.divides(p.lcm)) continue;
      chain = !is_pending(p.i, k) && !is_pending(p.j, k);
    }
    if (chain) continue;
    auto r = red.normal_form(s_polynomial(gi, gj, ord), G);
    if (!r.empty()) add(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another.
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const auto& li = G[i].lead().mono;
      const auto& lj = G[j].lead().mono;
      if (lj.divides(li) && (lj != li || j < i)) keep[i] = false;
    }
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(G[i]));

  // Interreduce tails against the other elements.
  std::vector<OrderedPoly> reduced;
  std::vector<bool> active(minimal.size(), true);
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    active[i] = false;
    OrderedPoly head;
    head.terms.push_back(minimal[i].lead());
    OrderedPoly tail = minimal[i];
    tail.terms.pop_back();
    auto r = red.normal_form(std::move(tail), minimal, &active);
    r.terms.push_back(head.terms.back());
    detail::make_monic(r);
    reduced.push_back(std::move(r));
    active[i] = true;
  }
  std::sort(reduced.begin(), reduced.end(), [&ord](const OrderedPoly& a, const OrderedPoly& b) {
    return ord.compare(a.lead().mono, b.lead().mono) < 0;
  });

  ReducedGroebnerBasis out{I.ring, ord, {}};
  for (const auto& r : reduced) out.elements.push_back(detail::to_polynomial(r, I.ring));
  return out;
}

bool ideal_contains(const ReducedGroebnerBasis& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

MonomialIdeal initial_ideal(const ReducedGroebnerBasis& G) {
  return MonomialIdeal(G.ring, G.leading_monomials());
}

MonomialIdeal initial_ideal(const IdealGens& I, const OrderSpec& ord) {
  return initial_ideal(buchberger(I, ord));
}

IdealGens initial_ideal_weight(const IdealGens& I, const WeightVector& a,
                               const OrderSpec& tiebreak) {
  if (a.size() != I.ring->nvars()) throw RingMismatch("weight arity does not match the ring");
  auto G = buchberger(I, OrderSpec::weight_refined(a, tiebreak));
  std::vector<Polynomial> forms;
  for (const auto& g : G.elements) forms.push_back(initial_form(g, a));
  return IdealGens(I.ring, std::move(forms));
}

IdealGens eliminate(const IdealGens& I, std::span<const std::size_t> keep) {
  return eliminate(I, keep, OrderSpec::revlex(I.ring->nvars()));
}

IdealGens eliminate(const IdealGens& I, std::span<const std::size_t> keep,
                    const OrderSpec& kept_order) {
  std::size_t n = I.ring->nvars();
  std::vector<bool> elim(n, true);
  for (auto k : keep) {
    if (k >= n) throw InvalidArgument("kept variable index out of range");
    elim[k] = false;
  }
  auto G = buchberger(I, OrderSpec::block(elim, kept_order));
  std::vector<Polynomial> out;
  for (const auto& g : G.elements) {
    bool inside = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < n; ++i)
        if (elim[i] && t.mono[i] != 0) return false;
      return true;
    });
    if (inside) out.push_back(g);
  }
  return IdealGens(I.ring, std::move(out));
}

Ring kernel_ring(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("Y" + std::to_string(i));
  return make_ring(std::move(names));
}

IdealGens presentation_kernel(std::span<const Polynomial> f) {
  if (f.empty()) throw InvalidArgument("presentation needs at least one polynomial");
  const Ring& source = f.front().ring();
  std::size_t n = source->nvars();
  std::size_t k = f.size();
  Ring target = kernel_ring(k);

  std::vector<std::string> names = source->names();
  for (const auto& y : target->names()) {
    std::string name = y;
    while (source->index_of(name)) name += "_";
    names.push_back(name);
  }
  Ring joint = make_ring(std::move(names));

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    require_same_ring(source, f[i].ring());
    if (f[i].is_zero()) throw ZeroPolynomial("zero polynomial in a presentation");
    std::vector<Term> terms;
    terms.push_back({Rational(1), Monomial::variable(n + k, n + i)});
    for (const auto& t : f[i].terms()) {
      auto e = t.mono.vec();
      e.resize(n + k, 0);
      terms.push_back({-t.coeff, Monomial(std::move(e))});
    }
    gens.emplace_back(joint, std::move(terms));
  }
  std::vector<std::size_t> keep(k);
  std::iota(keep.begin(), keep.end(), n);
  std::vector<std::size_t> yprio(keep);
  std::vector<std::size_t> xprio(n);
  std::iota(xprio.begin(), xprio.end(), 0);
  // RevLex on the Y block; X entries come last and are zero on kept monomials.
  std::vector<std::size_t> prio = yprio;
  prio.insert(prio.end(), xprio.begin(), xprio.end());
  auto kernel = eliminate(IdealGens(joint, std::move(gens)), keep,
                          OrderSpec::revlex(n + k, std::move(prio)));

  std::vector<Polynomial> out;
  for (const auto& g : kernel.gens) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<Exponent> e(t.mono.vec().begin() + static_cast<std::ptrdiff_t>(n),
                              t.mono.vec().end());
      terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    out.emplace_back(target, std::move(terms));
  }
  return IdealGens(target, std::move(out));
}

IdealGens toric_kernel(const Ring& source, std::span<const Monomial> m) {
  std::vector<Polynomial> f;
  for (const auto& mono : m) f.push_back(Polynomial::monomial(source, mono));
  return presentation_kernel(f);
}

bool quadratic_initial_certificate(const IdealGens& I, const OrderSpec& ord) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) throw NotGraded("ideal is not standard graded");
  auto M = initial_ideal(I, ord);
  return std::all_of(M.mingens.begin(), M.mingens.end(),
                     [](const Monomial& m) { return m.degree() == 2; });
}

}  // namespace inalg
