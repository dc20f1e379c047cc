#pragma once

#include "bettilab/diagram.hpp"
#include "bettilab/subadditivity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bettilab {

// Both tests below are necessary conditions only: a "consistent" verdict
// never claims a DG-algebra structure exists on the minimal resolution.

struct StrandObstruction {
  int i, j;            // offending entry beta_{i,j}
  std::string detail;  // why no admissible generation pattern exists
};

struct StrandVerdict {
  bool consistent = true;
  std::optional<StrandObstruction> obstruction;  // first one in (i, j) order
  std::vector<int> linear_strand_support;        // j with beta_{j,j+1} != 0
};

// Koszul-homology strand generation test. Under the caller-asserted
// hypothesis that the residue-field regularity over R vanishes up to m+1
// (e.g. R defined by a quadratic monomial ideal), every Koszul homology
// class in H_{i,tau} with i <= m must be an H_0-combination of products of
// linear-strand classes from H_{j,j+1}. A product of s such classes sits in
// homological degree sum(j_k) = i and internal degree >= sum(j_k + 1) = i+s,
// and H_0-multiplication only raises internal degree, so feasibility of
// beta_{i,tau} != 0 amounts to: some multiset of parts j with
// beta_{j,j+1} != 0 partitions i using at most tau - i parts. The singleton
// partition (s = 1, j = i) is allowed. Minimal part counts are found by a
// small memoized search per call.
StrandVerdict strand_generation_test(const BettiDiagram& D, int m);

struct SubaddObstructionVerdict {
  bool applicable = false;  // ht_ok supplied and at least one premise fired
  bool consistent = true;
  std::optional<int> witness_i;
  std::vector<BoundReport> checks;
};

// DG subadditivity obstruction: when the resolution carries a DG structure
// (and the ideal has height >= 2, asserted via ht_ok), any index i with
// tau_{i+1} < t_i must satisfy t_i <= max{t_j + t_{i-j} : 1 <= j <= i-1}.
// A failure is a proof that no DG structure exists. Indices where the
// premise cannot be evaluated or does not fire are skipped.
SubaddObstructionVerdict subadditivity_obstruction(const TSequence& t, const TauSequence& tau,
                                                   bool ht_ok);

}  // namespace bettilab
