#include "bettilab/decompose.hpp"

#include <climits>
#include <map>
#include <stdexcept>

namespace bettilab {

namespace {

// Minimal degree per column of a working entry map, in column order.
// Columns are dense 0..max by construction of the input diagram, but the
// working diagram loses entries as the greedy loop subtracts; a column can
// empty out from the right (shorter chain) or, for non-tables, in the middle.
struct Strand {
  std::vector<int> mins;   // minimal degrees of columns 0..last_nonempty
  bool broken = false;     // some nonempty column could not join the chain
  int break_column = -1;
};

Strand read_min_strand(const std::map<BettiDiagram::Key, Rat>& work) {
  Strand s;
  int last = -1;
  std::map<int, int> col_min;
  for (const auto& [key, val] : work) {
    (void)val;
    auto [i, j] = key;
    auto it = col_min.find(i);
    if (it == col_min.end() || j < it->second) col_min[i] = j;
    if (i > last) last = i;
  }
  int prev = INT_MIN;
  for (int i = 0; i <= last; ++i) {
    auto it = col_min.find(i);
    if (it == col_min.end() || it->second <= prev) {
      // Entries remain at or beyond column i but the chain cannot reach
      // them: minimal degrees only grow as mass is consumed, so this can
      // never repair itself later.
      s.broken = true;
      s.break_column = i;
      return s;
    }
    s.mins.push_back(it->second);
    prev = it->second;
  }
  return s;
}

}  // namespace

Decomposition decompose(const BettiDiagram& D, int codim) {
  if (!D.integral()) throw std::invalid_argument("decompose: diagram must be integral");
  if (codim < 1) throw std::invalid_argument("decompose: codim >= 1 required");
  auto lo = lower_degree_sequence(D);
  for (std::size_t i = 1; i < lo.size(); ++i)
    if (lo[i] <= lo[i - 1])
      throw std::invalid_argument("decompose: lower degree sequence not strictly increasing");

  Decomposition out;
  std::map<BettiDiagram::Key, Rat> work = D.entries();

  while (!work.empty()) {
    Strand s = read_min_strand(work);
    if (s.broken) {
      out.offending_column = s.break_column;
      return out;
    }
    int t = static_cast<int>(s.mins.size()) - 1;
    if (t < codim) {
      out.offending_column = t + 1;
      return out;
    }
    DegreeSequence dseq(s.mins);
    PureDiagram pure = herzog_kuhl(dseq);

    // Largest c keeping every strand entry nonnegative; the minimum ratio
    // is attained somewhere, so at least one entry is zeroed per round.
    Rat c;
    bool first = true;
    for (int i = 0; i <= t; ++i) {
      Rat ratio = work.at({i, dseq[i]}) / pure.betti[static_cast<std::size_t>(i)];
      if (first || ratio < c) {
        c = ratio;
        first = false;
      }
    }
    for (int i = 0; i <= t; ++i) {
      auto key = BettiDiagram::Key{i, dseq[i]};
      Rat left = work.at(key) - c * pure.betti[static_cast<std::size_t>(i)];
      if (left == 0)
        work.erase(key);
      else
        work[key] = left;
    }
    out.terms.push_back(DecompositionTerm{c, dseq});
  }
  out.complete = true;
  return out;
}

BettiDiagram reconstruct(const std::vector<DecompositionTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("reconstruct: no terms");
  BettiDiagram::EntryMap acc;
  for (const auto& term : terms) {
    if (term.weight <= 0) throw std::invalid_argument("reconstruct: nonpositive weight");
    PureDiagram pure = herzog_kuhl(term.dseq);
    for (const auto& [key, val] : pure.scaled_entries(term.weight)) acc[key] += val;
  }
  bool integral = true;
  for (const auto& [key, val] : acc) {
    (void)key;
    if (!is_integer(val)) {
      integral = false;
      break;
    }
  }
  return BettiDiagram::from_entries(std::move(acc), integral);
}

}  // namespace bettilab
