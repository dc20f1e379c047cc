#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bettilab/diagram.hpp"

namespace bettilab {

// Monomial ideal given by exponent vectors of its minimal generators.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<std::vector<int>> gens;
};

// Validates, deduplicates, and minimalizes the generator list.
// was_minimal reports whether the input was already minimal.
MonomialIdeal make_monomial_ideal(int nvars, std::vector<std::vector<int>> gens,
                                  bool* was_minimal = nullptr);

// Graded Betti numbers of S/I from the subset-lcm strand complexes.
// char_p = 0 computes over the rationals, otherwise over F_p (p prime, p < 2^32).
// Requires at most 20 generators.
BettiDiagram betti_table(const MonomialIdeal& I, std::uint64_t char_p = 0);

// Deterministic pseudo-random minimal squarefree ideal, n <= 10, r <= 10.
// May return fewer than r generators when minimality saturates.
MonomialIdeal random_squarefree(int n, int r, std::uint64_t seed);

bool is_squarefree(const MonomialIdeal& I);

// Common total degree of the generators, or nullopt if mixed.
std::optional<int> equigenerated_degree(const MonomialIdeal& I);

// Height of I: minimum size of a variable set meeting every generator's support.
int height(const MonomialIdeal& I);

}  // namespace bettilab
