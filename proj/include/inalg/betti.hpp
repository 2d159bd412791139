#pragma once

// Graded Betti numbers of R/I as Koszul homology, computed strand by strand
// with exact ranks over the rationals.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "inalg/groebner.hpp"

namespace inalg {

struct BettiTable {
  std::size_t nvars = 0;
  /// (i, j) -> beta_{i,j}; only nonzero entries are stored.
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> entries;
  std::int64_t j_max = 0;
  /// Every nonzero beta_{i,j} has j <= j_max.
  bool complete = false;

  Integer at(std::int64_t i, std::int64_t j) const;
};

/// Upper bound on the internal degrees of nonzero Betti numbers of R/M: the
/// largest degree of an lcm of at most n minimal generators.
std::int64_t betti_degree_bound(const MonomialIdeal& M);

/// Requires standard-graded generators. The strand basis uses standard
/// monomials of the RevLex initial ideal.
BettiTable graded_betti(const IdealGens& I, std::int64_t j_max);
BettiTable graded_betti(const MonomialIdeal& M, std::int64_t j_max);

struct ProjdimReg {
  std::int64_t projdim = 0;
  std::int64_t reg = 0;
};

/// Throws IncompleteTable unless the table is complete.
ProjdimReg projdim_and_reg(const BettiTable& T);

struct BettiComparison {
  BettiTable ideal;    // R/I
  BettiTable initial;  // R/ini(I)
  ProjdimReg ideal_invariants;
  ProjdimReg initial_invariants;
  bool equal = false;
};

/// Tables of R/I and R/ini_ord(I). Throws InternalInconsistency if any
/// entrywise, projdim or regularity inequality fails. j_max <= 0 selects the
/// degree bound of ini_ord(I) and of the RevLex initial ideal.
BettiComparison betti_comparison(const IdealGens& I, const OrderSpec& ord,
                                 std::int64_t j_max = 0);

/// Rows j - i, columns i.
std::string to_string(const BettiTable& T);

}  // namespace inalg
