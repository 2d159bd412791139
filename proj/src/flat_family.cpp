#include "inalg/flat_family.hpp"

#include <map>
#include <sstream>

#include "inalg/hilbert.hpp"
#include "inalg/io.hpp"
#include "inalg/linalg.hpp"

namespace inalg {

HomogenizedFamily homogenize_ideal(const IdealGens& I, const WeightVector& a) {
  return homogenize_ideal(I, a, OrderSpec::revlex(I.ring->nvars()));
}

HomogenizedFamily homogenize_ideal(const IdealGens& I, const WeightVector& a,
                                   const OrderSpec& tiebreak) {
  if (a.size() != I.ring->nvars()) throw RingMismatch("weight arity does not match the ring");
  auto G = buchberger(I, OrderSpec::weight_refined(a, tiebreak));
  Ring S = extend_ring(I.ring);
  std::vector<Polynomial> hom;
  for (const auto& g : G.elements) hom.push_back(homogenize(g, a, S));
  auto total = buchberger(IdealGens(S, std::move(hom)), OrderSpec::extended_to_t(a, tiebreak));
  return HomogenizedFamily{I, a, tiebreak, std::move(G), std::move(total)};
}

IdealGens fiber(const HomogenizedFamily& F, const Rational& c) {
  std::vector<Polynomial> out;
  for (const auto& g : F.total.elements) out.push_back(specialize_t(g, c, F.base.ring));
  return IdealGens(F.base.ring, std::move(out));
}

FreenessReport freeness_basis_check(const HomogenizedFamily& F, std::int64_t bound) {
  if (bound < 0) throw InvalidArgument("negative freeness bound");
  std::size_t n = F.base.ring->nvars();
  const WeightVector& a = F.weight;
  WeightVector ap = a.extended();
  auto initial = initial_ideal(F.base_basis);

  // Standard monomials of R by a-degree.
  std::vector<std::size_t> standard_by_degree(static_cast<std::size_t>(bound + 1), 0);
  for (std::int64_t d = 0; d <= bound; ++d)
    for (const auto& m : monomials_of_degree(n, a, d))
      if (!initial.contains(m)) ++standard_by_degree[static_cast<std::size_t>(d)];

  std::vector<std::int64_t> gen_degree;
  for (const auto& g : F.total.elements) {
    if (!g.is_homogeneous(ap)) throw InternalInconsistency("total generator is not a'-homogeneous");
    gen_degree.push_back(a_degree(g, ap).get_si());
  }

  FreenessReport report;
  report.free = true;
  std::size_t standard_cumulative = 0;
  for (std::int64_t d = 0; d <= bound; ++d) {
    standard_cumulative += standard_by_degree[static_cast<std::size_t>(d)];
    auto basis = monomials_of_degree(n + 1, ap, d);
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
    std::vector<linalg::SparseRow> rows;
    for (std::size_t k = 0; k < F.total.elements.size(); ++k) {
      if (gen_degree[k] > d) continue;
      for (const auto& u : monomials_of_degree(n + 1, ap, d - gen_degree[k])) {
        linalg::SparseRow row;
        for (const auto& t : F.total.elements[k].terms())
          row.emplace_back(column.at(t.mono * u), t.coeff);
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
      }
    }
    std::size_t codim = basis.size() - linalg::rank(std::move(rows));
    report.degrees.push_back({d, standard_cumulative, codim});
    if (codim != standard_cumulative) report.free = false;
  }
  return report;
}

std::int64_t default_freeness_bound(const HomogenizedFamily& F) {
  Integer top = 0;
  for (const auto& g : F.base.gens) {
    Integer d = a_degree(g, F.weight);
    if (d > top) top = d;
  }
  std::int64_t b = 2 * top.get_si();
  return b < 1 ? 1 : b;
}

std::string family_dump(const HomogenizedFamily& F) {
  std::ostringstream out;
  const auto& S = *F.total.ring;
  out << "# weight " << F.weight.to_string() << "\n";
  out << "# tiebreak " << F.tiebreak.to_string(*F.base.ring) << "\n";
  out << "ring ";
  for (std::size_t i = 0; i < S.nvars(); ++i) out << (i ? ", " : "") << S.name(i);
  out << "\nideal\n";
  for (const auto& g : F.total.elements) out << "  " << to_string(g, F.total.ord) << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace inalg
