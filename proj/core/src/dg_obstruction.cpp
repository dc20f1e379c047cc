#include "bettilab/dg_obstruction.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bettilab {

namespace {

// Fewest parts needed to write each value 0..target as a sum of elements of
// parts (repetition allowed); INT_MAX marks "impossible".
std::vector<int> min_part_counts(int target, const std::vector<int>& parts) {
  std::vector<int> dp(static_cast<std::size_t>(target) + 1, INT_MAX);
  dp[0] = 0;
  for (int v = 1; v <= target; ++v)
    for (int part : parts) {
      if (part > v) break;  // parts ascending
      if (dp[static_cast<std::size_t>(v - part)] == INT_MAX) continue;
      dp[static_cast<std::size_t>(v)] =
          std::min(dp[static_cast<std::size_t>(v)], dp[static_cast<std::size_t>(v - part)] + 1);
    }
  return dp;
}

}  // namespace

StrandVerdict strand_generation_test(const BettiDiagram& D, int m) {
  if (m < 2) throw std::invalid_argument("strand test: m >= 2 required");
  StrandVerdict verdict;
  for (int j = 1; j <= D.pdim(); ++j)
    if (D.entry(j, j + 1) != 0) verdict.linear_strand_support.push_back(j);

  int top = std::min(m, D.pdim());
  std::vector<int> dp = min_part_counts(top, verdict.linear_strand_support);

  for (const auto& [key, val] : D.entries()) {
    (void)val;
    auto [i, tau] = key;
    if (i < 2 || i > top) continue;
    int budget = tau - i;  // s parts cost internal degree i + s
    int need = dp[static_cast<std::size_t>(i)];
    if (need != INT_MAX && need <= budget) continue;

    std::ostringstream why;
    if (need == INT_MAX)
      why << "no partition of " << i << " into linear-strand degrees exists";
    else
      why << "every partition of " << i << " into linear-strand degrees needs >= " << need
          << " parts, so generation degree >= " << i + need << " > " << tau;
    verdict.consistent = false;
    verdict.obstruction = StrandObstruction{i, tau, why.str()};
    break;  // entries() iterates in (i, j) order, so this is the first witness
  }
  return verdict;
}

SubaddObstructionVerdict subadditivity_obstruction(const TSequence& t, const TauSequence& tau,
                                                   bool ht_ok) {
  SubaddObstructionVerdict verdict;
  if (!ht_ok) return verdict;  // height hypothesis not asserted; nothing to test

  for (int i = 2; i < t.known(); ++i) {
    auto tau_next = tau.value(i + 1);
    if (!tau_next || *tau_next >= t.at(i)) continue;  // premise absent or does not fire
    verdict.applicable = true;
    int rhs = INT_MIN;
    for (int j = 1; j <= i - 1; ++j) rhs = std::max(rhs, t.at(j) + t.at(i - j));
    auto rep = make_report("dg_subadditivity[" + std::to_string(i) + "]", Rat(t.at(i)), Cmp::LE,
                           Rat(rhs), {{"i", std::to_string(i)}},
                           "premise tau_" + std::to_string(i + 1) + " = " +
                               std::to_string(*tau_next) + " < t_" + std::to_string(i));
    if (!rep.holds && verdict.consistent) {
      verdict.consistent = false;
      verdict.witness_i = i;
    }
    verdict.checks.push_back(std::move(rep));
  }
  return verdict;
}

}  // namespace bettilab
