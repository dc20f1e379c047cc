#pragma once

#include "bettilab/diagram.hpp"

#include <optional>
#include <vector>

namespace bettilab {

// One summand of a cone decomposition: weight * pi(dseq).
struct DecompositionTerm {
  Rat weight;  // > 0
  DegreeSequence dseq;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;  // extraction order
  bool complete = false;
  // When incomplete: the column at which no valid strictly increasing
  // chain could continue (gap, non-increasing minimum, or chain shorter
  // than codim). The terms already extracted are kept for diagnosis.
  std::optional<int> offending_column;
};

// Greedy top-strand elimination. Repeatedly reads off the minimal degree
// sequence of the remaining diagram, subtracts the largest multiple of its
// pure diagram keeping all entries nonnegative (zeroing at least one entry
// on the strand), and records the term. For any honest Betti table this
// terminates with the exact decomposition; for non-tables it stops with
// complete = false.
//
// codim is caller-supplied: the height of the annihilator is not readable
// from the table, and terms shorter than codim prove the input is not a
// Betti table of a module of that codimension.
//
// Preconditions (throw std::invalid_argument): D integral, lower degree
// sequence strictly increasing, codim >= 1.
Decomposition decompose(const BettiDiagram& D, int codim);

// sum of weight * herzog_kuhl(dseq) as a rational diagram. The integral
// flag of the result reflects whether all accumulated values are integers.
BettiDiagram reconstruct(const std::vector<DecompositionTerm>& terms);

}  // namespace bettilab
