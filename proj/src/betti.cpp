#include "inalg/betti.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "inalg/hilbert.hpp"
#include "inalg/linalg.hpp"

namespace inalg {

Integer BettiTable::at(std::int64_t i, std::int64_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Integer(0) : it->second;
}

std::int64_t betti_degree_bound(const MonomialIdeal& M) {
  const auto& g = M.mingens;
  if (g.empty()) return 0;
  std::size_t n = M.ring->nvars();
  std::size_t depth = std::min(n, g.size());
  // Count subsets up to `depth`; fall back to the full lcm when too many.
  double subsets = 0, c = 1;
  for (std::size_t s = 1; s <= depth; ++s) {
    c = c * static_cast<double>(g.size() - s + 1) / static_cast<double>(s);
    subsets += c;
  }
  if (subsets > 2e5) {
    Monomial l = g.front();
    for (const auto& m : g) l = l.lcm(m);
    return l.degree();
  }
  std::int64_t best = 0;
  auto walk = [&](auto& self, std::size_t start, std::size_t size, const Monomial& l) -> void {
    best = std::max(best, l.degree());
    if (size == depth) return;
    for (std::size_t k = start; k < g.size(); ++k) self(self, k + 1, size + 1, l.lcm(g[k]));
  };
  walk(walk, 0, 0, Monomial(n));
  return best;
}

namespace {

struct Strand {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

BettiTable koszul_betti(const ReducedGroebnerBasis& G, std::int64_t j_max) {
  std::size_t n = G.ring->nvars();
  auto M = initial_ideal(G);
  WeightVector ones = WeightVector::ones(n);

  std::vector<Strand> standard(static_cast<std::size_t>(j_max + 2));
  for (std::int64_t d = 0; d <= j_max + 1; ++d) {
    auto& s = standard[static_cast<std::size_t>(d)];
    for (auto& m : monomials_of_degree(n, ones, d))
      if (!M.contains(m)) {
        s.index.emplace(m, s.monos.size());
        s.monos.push_back(std::move(m));
      }
  }

  std::unordered_map<Monomial, Polynomial, MonomialHash> nf_cache;
  auto nf = [&](const Monomial& m) -> const Polynomial& {
    auto it = nf_cache.find(m);
    if (it == nf_cache.end())
      it = nf_cache.emplace(m, normal_form(Polynomial::monomial(G.ring, m), G)).first;
    return it->second;
  };

  std::vector<std::vector<std::uint32_t>> subsets(n + 1);
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> subset_index(n + 1);
  if (n > 20) throw InvalidArgument("Koszul strands support at most 20 variables");
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    auto k = static_cast<std::size_t>(std::popcount(mask));
    subset_index[k].emplace(mask, subsets[k].size());
    subsets[k].push_back(mask);
  }

  auto strand_size = [&](std::int64_t d) -> std::size_t {
    if (d < 0) return 0;
    return standard[static_cast<std::size_t>(d)].monos.size();
  };

  BettiTable table;
  table.nvars = n;
  table.j_max = j_max;
  for (std::int64_t j = 0; j <= j_max; ++j) {
    // rank of d_i : K_{i,j} -> K_{i-1,j}, i = 1..n
    std::vector<std::size_t> rk(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      std::int64_t d = j - static_cast<std::int64_t>(i);
      if (d < 0) continue;
      const auto& src = standard[static_cast<std::size_t>(d)];
      const auto& dst = standard[static_cast<std::size_t>(d + 1)];
      std::size_t width = dst.monos.size();
      std::vector<linalg::SparseRow> rows;
      for (auto mask : subsets[i]) {
        for (const auto& m : src.monos) {
          std::map<std::size_t, Rational> acc;
          int sign = 1;
          for (std::size_t k = 0; k < n; ++k) {
            if (!(mask & (1U << k))) continue;
            std::uint32_t face = mask & ~(1U << k);
            std::size_t base = subset_index[i - 1].at(face) * width;
            for (const auto& t : nf(m * Monomial::variable(n, k)).terms())
              acc[base + dst.index.at(t.mono)] += sign * t.coeff;
            sign = -sign;
          }
          linalg::SparseRow row;
          for (auto& [col, v] : acc)
            if (v != 0) row.emplace_back(col, std::move(v));
          rows.push_back(std::move(row));
        }
      }
      rk[i] = linalg::rank(std::move(rows));
    }
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t dim = subsets[i].size() * strand_size(j - static_cast<std::int64_t>(i));
      std::size_t beta = dim - rk[i] - rk[i + 1];
      if (beta != 0)
        table.entries[{static_cast<std::int64_t>(i), j}] = Integer(static_cast<unsigned long>(beta));
    }
  }

  // Euler identity against the K-polynomial of R/ini(I).
  auto H = hilbert_series_monomial(M, ones);
  for (std::int64_t j = 0; j <= j_max; ++j) {
    Integer alt = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      Integer b = table.at(static_cast<std::int64_t>(i), j);
      alt += (i % 2 == 0) ? b : Integer(-b);
    }
    Integer expected = static_cast<std::size_t>(j) < H.numerator.size()
                           ? H.numerator[static_cast<std::size_t>(j)]
                           : Integer(0);
    if (alt != expected)
      throw InternalInconsistency("Betti table violates the Euler identity in degree " +
                                  std::to_string(j));
  }
  bool tail_clear = true;
  for (std::size_t k = static_cast<std::size_t>(j_max) + 1; k < H.numerator.size(); ++k)
    if (H.numerator[k] != 0) tail_clear = false;
  table.complete = tail_clear && j_max >= betti_degree_bound(M);
  return table;
}

}  // namespace

BettiTable graded_betti(const IdealGens& I, std::int64_t j_max) {
  if (j_max < 0) throw InvalidArgument("negative degree bound");
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) throw NotGraded("ideal is not standard graded");
  return koszul_betti(buchberger(I, OrderSpec::revlex(I.ring->nvars())), j_max);
}

BettiTable graded_betti(const MonomialIdeal& M, std::int64_t j_max) {
  std::vector<Polynomial> gens;
  for (const auto& m : M.mingens) gens.push_back(Polynomial::monomial(M.ring, m));
  return graded_betti(IdealGens(M.ring, std::move(gens)), j_max);
}

ProjdimReg projdim_and_reg(const BettiTable& T) {
  if (!T.complete) throw IncompleteTable("Betti table may miss entries above j_max");
  ProjdimReg r;
  for (const auto& [ij, b] : T.entries) {
    if (b == 0) continue;
    r.projdim = std::max(r.projdim, ij.first);
    r.reg = std::max(r.reg, ij.second - ij.first);
  }
  return r;
}

BettiComparison betti_comparison(const IdealGens& I, const OrderSpec& ord, std::int64_t j_max) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) throw NotGraded("ideal is not standard graded");
  auto ini = initial_ideal(I, ord);
  if (j_max <= 0) {
    auto rev = initial_ideal(I, OrderSpec::revlex(I.ring->nvars()));
    j_max = std::max<std::int64_t>({betti_degree_bound(ini), betti_degree_bound(rev), 1});
  }
  BettiComparison cmp{graded_betti(I, j_max), graded_betti(ini, j_max), {}, {}, false};
  cmp.ideal_invariants = projdim_and_reg(cmp.ideal);
  cmp.initial_invariants = projdim_and_reg(cmp.initial);
  for (const auto& [ij, b] : cmp.ideal.entries)
    if (b > cmp.initial.at(ij.first, ij.second))
      throw InternalInconsistency("Betti number of R/I exceeds that of R/ini(I) at (" +
                                  std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                  ")");
  if (cmp.ideal_invariants.projdim > cmp.initial_invariants.projdim)
    throw InternalInconsistency("projective dimension of R/I exceeds that of R/ini(I)");
  if (cmp.ideal_invariants.reg > cmp.initial_invariants.reg)
    throw InternalInconsistency("regularity of R/I exceeds that of R/ini(I)");
  cmp.equal = cmp.ideal.entries == cmp.initial.entries;
  return cmp;
}

std::string to_string(const BettiTable& T) {
  std::int64_t maxi = 0, maxrow = 0;
  for (const auto& [ij, b] : T.entries) {
    maxi = std::max(maxi, ij.first);
    maxrow = std::max(maxrow, ij.second - ij.first);
  }
  std::vector<Integer> totals(static_cast<std::size_t>(maxi + 1), 0);
  for (const auto& [ij, b] : T.entries) totals[static_cast<std::size_t>(ij.first)] += b;
  std::size_t w = 1;
  for (const auto& [ij, b] : T.entries) w = std::max(w, b.get_str().size());
  for (const auto& t : totals) w = std::max(w, t.get_str().size());
  std::ostringstream out;
  out << std::setw(7) << "";
  for (std::int64_t i = 0; i <= maxi; ++i) out << " " << std::setw(static_cast<int>(w)) << i;
  out << "\n" << std::setw(7) << "total:";
  for (const auto& t : totals) out << " " << std::setw(static_cast<int>(w)) << t.get_str();
  out << "\n";
  for (std::int64_t r = 0; r <= maxrow; ++r) {
    out << std::setw(6) << r << ":";
    for (std::int64_t i = 0; i <= maxi; ++i) {
      Integer b = T.at(i, i + r);
      out << " " << std::setw(static_cast<int>(w)) << (b == 0 ? std::string(".") : b.get_str());
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace inalg
