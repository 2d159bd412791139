#include "inalg/sagbi.hpp"

#include <algorithm>
#include <map>

namespace inalg {

SubalgebraGens::SubalgebraGens(Ring r, std::vector<Polynomial> g)
    : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& f : gens) {
    require_same_ring(ring, f.ring());
    if (f.is_constant()) throw InvalidArgument("subalgebra generators must be nonconstant");
  }
}

namespace {

bool search(const Monomial& target, std::vector<Exponent>& rem, std::size_t i,
            std::span<const Monomial> gens, const std::vector<std::vector<bool>>& reach,
            std::vector<Exponent>& c) {
  std::size_t n = rem.size();
  if (i == gens.size()) {
    return std::all_of(rem.begin(), rem.end(), [](Exponent e) { return e == 0; });
  }
  // Every remaining variable must still be coverable by gens[i..].
  for (std::size_t v = 0; v < n; ++v)
    if (rem[v] > 0 && !reach[i][v]) return false;
  const Monomial& g = gens[i];
  Exponent bound = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (g[v] > 0) {
      Exponent q = rem[v] / g[v];
      bound = bound < 0 ? q : std::min(bound, q);
    }
  if (bound < 0) bound = 0;
  for (Exponent k = bound; k >= 0; --k) {
    for (std::size_t v = 0; v < n; ++v) rem[v] -= k * g[v];
    c[i] = k;
    bool ok = search(target, rem, i + 1, gens, reach, c);
    for (std::size_t v = 0; v < n; ++v) rem[v] += k * g[v];
    if (ok) return true;
  }
  c[i] = 0;
  return false;
}

class PowerCache {
 public:
  PowerCache(const SubalgebraGens& F) : F_(F), powers_(F.gens.size()) {}

  const Polynomial& power(std::size_t i, Exponent e) {
    auto& p = powers_[i];
    if (p.empty()) p.push_back(Polynomial::constant(F_.ring, 1));
    while (p.size() <= static_cast<std::size_t>(e)) p.push_back(p.back() * F_.gens[i]);
    return p[static_cast<std::size_t>(e)];
  }

  Polynomial product(std::span<const Exponent> c) {
    Polynomial r = Polynomial::constant(F_.ring, 1);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] > 0) r = r * power(i, c[i]);
    return r;
  }

 private:
  const SubalgebraGens& F_;
  std::vector<std::vector<Polynomial>> powers_;
};

Subduction subduct_cached(const Polynomial& f, const OrderSpec& ord, PowerCache& cache,
                          const std::vector<Term>& leads) {
  std::vector<Monomial> lm;
  for (const auto& t : leads) lm.push_back(t.mono);
  Subduction out{f, {}};
  while (!out.remainder.is_zero()) {
    Term lt = leading_term(out.remainder, ord);
    auto c = factor_over(lt.mono, lm);
    if (!c) break;
    Rational lc = 1;
    for (std::size_t i = 0; i < c->size(); ++i)
      for (Exponent k = 0; k < (*c)[i]; ++k) lc *= leads[i].coeff;
    Rational scalar = lt.coeff / lc;
    out.remainder = out.remainder - cache.product(*c) * scalar;
    out.steps.push_back({scalar, std::move(*c)});
  }
  return out;
}

std::vector<Term> leading_terms(const SubalgebraGens& F, const OrderSpec& ord) {
  std::vector<Term> leads;
  for (const auto& g : F.gens) leads.push_back(leading_term(g, ord));
  return leads;
}

/// Lifts each kernel generator sum c_j Y^u_j to sum c_j prod (f_i / lc_i)^u_ji.
std::vector<std::pair<Polynomial, Polynomial>> lifted_relations(const SubalgebraGens& F,
                                                                const OrderSpec& ord) {
  std::vector<Monomial> lm;
  std::vector<Polynomial> monic;
  for (const auto& g : F.gens) {
    Term lt = leading_term(g, ord);
    lm.push_back(lt.mono);
    monic.push_back(g * (1 / lt.coeff));
  }
  SubalgebraGens M(F.ring, monic);
  PowerCache cache(M);
  auto kernel = toric_kernel(F.ring, lm);
  std::vector<std::pair<Polynomial, Polynomial>> out;
  for (const auto& rel : kernel.gens) {
    Polynomial lift(F.ring);
    for (const auto& t : rel.terms()) lift = lift + cache.product(t.mono.exponents()) * t.coeff;
    out.emplace_back(rel, std::move(lift));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Exponent>> factor_over(const Monomial& m,
                                                 std::span<const Monomial> gens) {
  std::size_t n = m.size();
  std::vector<std::vector<bool>> reach(gens.size() + 1, std::vector<bool>(n, false));
  for (std::size_t i = gens.size(); i-- > 0;) {
    if (gens[i].size() != n) throw RingMismatch("monomial arity mismatch");
    if (gens[i].is_one()) throw InvalidArgument("cannot factor over the unit monomial");
    for (std::size_t v = 0; v < n; ++v) reach[i][v] = reach[i + 1][v] || gens[i][v] > 0;
  }
  std::vector<Exponent> rem = m.vec();
  std::vector<Exponent> c(gens.size(), 0);
  if (search(m, rem, 0, gens, reach, c)) return c;
  return std::nullopt;
}

Subduction subduct(const Polynomial& f, const SubalgebraGens& F, const OrderSpec& ord) {
  require_same_ring(f.ring(), F.ring);
  PowerCache cache(F);
  return subduct_cached(f, ord, cache, leading_terms(F, ord));
}

Polynomial replay_subduction(const Polynomial& f, std::span<const SubductionStep> steps,
                             const SubalgebraGens& F) {
  PowerCache cache(F);
  Polynomial r = f;
  for (const auto& s : steps) {
    if (s.exponents.size() != F.gens.size())
      throw InvalidArgument("subduction step has wrong arity");
    r = r - cache.product(s.exponents) * s.scalar;
  }
  return r;
}

SagbiTest sagbi_test(const SubalgebraGens& F, const OrderSpec& ord) {
  SagbiTest out;
  out.passed = true;
  if (F.gens.empty()) return out;
  PowerCache cache(F);
  auto leads = leading_terms(F, ord);
  for (auto& [rel, lift] : lifted_relations(F, ord)) {
    auto sub = subduct_cached(lift, ord, cache, leads);
    if (!sub.remainder.is_zero()) {
      out.passed = false;
      out.witnesses.push_back(sub.remainder);
    }
    out.relations.push_back({rel, lift, std::move(sub)});
  }
  return out;
}

SagbiState sagbi_complete(const SubalgebraGens& F, const OrderSpec& ord,
                          std::int64_t degree_cap) {
  if (degree_cap <= 0) throw InvalidArgument("degree cap must be positive");
  for (const auto& g : F.gens)
    if (g.total_degree() > degree_cap)
      throw InvalidArgument("degree cap is below a generator degree");
  SagbiState state{F, std::nullopt};
  bool discarded = false;
  for (;;) {
    std::vector<Polynomial> fresh;
    SubalgebraGens current = state.gens;
    for (auto& [rel, lift] : lifted_relations(state.gens, ord)) {
      // New elements join immediately so later relations reduce against them.
      auto sub = subduct(lift, current, ord);
      if (sub.remainder.is_zero()) continue;
      if (sub.remainder.total_degree() > degree_cap) {
        discarded = true;
        continue;
      }
      Term lt = leading_term(sub.remainder, ord);
      Polynomial g = sub.remainder * (1 / lt.coeff);
      current.gens.push_back(g);
      fresh.push_back(std::move(g));
    }
    if (fresh.empty()) break;
    state.gens = std::move(current);
  }
  if (discarded) state.truncated_at = degree_cap;
  return state;
}

std::vector<Monomial> minimal_semigroup_generators(std::vector<Monomial> m) {
  std::sort(m.begin(), m.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  m.erase(std::unique(m.begin(), m.end()), m.end());
  std::vector<Monomial> out;
  // Degrees ascend, so a decomposition of m only uses earlier elements.
  for (auto& x : m) {
    if (x.is_one()) continue;
    if (!out.empty() && factor_over(x, out)) continue;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Monomial> initial_algebra_gens(const SagbiState& state, const OrderSpec& ord) {
  std::vector<Monomial> lm;
  for (const auto& g : state.gens.gens) lm.push_back(leading_monomial(g, ord));
  auto out = minimal_semigroup_generators(std::move(lm));
  std::sort(out.begin(), out.end(),
            [&ord](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  return out;
}

KernelDegeneration verify_kernel_degeneration(const SubalgebraGens& F,
                                              const WeightVector& a,
                                              const OrderSpec& tiebreak) {
  if (a.size() != F.ring->nvars()) throw InvalidArgument("weight arity does not match the ring");
  if (tiebreak.arity() != F.ring->nvars())
    throw InvalidArgument("tiebreak order arity does not match the ring");
  if (F.gens.empty()) throw InvalidArgument("no generators");
  std::vector<Integer> bdeg;
  std::vector<Polynomial> forms;
  for (const auto& f : F.gens) {
    bdeg.push_back(a_degree(f, a));
    forms.push_back(initial_form(f, a));
  }
  WeightVector b(std::move(bdeg));
  auto kernel = presentation_kernel(F.gens);
  auto special = presentation_kernel(forms);
  auto yorder = OrderSpec::revlex(F.gens.size());
  auto initial = initial_ideal_weight(kernel, b, yorder);
  bool holds = buchberger(initial, yorder) == buchberger(special, yorder);
  return KernelDegeneration{holds, std::move(b), std::move(kernel), std::move(initial),
                            std::move(special)};
}

}  // namespace inalg
