#pragma once

#include "bettilab/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bettilab {

// Graded Betti diagram: sparse map (homological index i, internal degree j)
// -> positive multiplicity. Entries are exact rationals so that pure-diagram
// combinations with fractional weights live in the same type as honest
// integer tables; `integral` records which kind this is.
//
// Construction enforces: at least one entry, all keys have i >= 0, all
// multiplicities > 0, column 0 present, and no empty column below pdim
// (a minimal resolution has no gap). Integral diagrams must have integer
// values. Degree monotonicity is deliberately NOT enforced here; it is a
// reportable property, see check_monotonicity.
class BettiDiagram {
 public:
  using Key = std::pair<int, int>;
  using EntryMap = std::map<Key, Rat>;

  static BettiDiagram from_entries(EntryMap entries, bool integral);

  const EntryMap& entries() const { return entries_; }
  bool integral() const { return integral_; }
  int pdim() const { return pdim_; }

  // 0 when the entry is absent.
  Rat entry(int i, int j) const;

  // beta_i, the column total.
  Rat column_total(int i) const;

  // Degrees j with a nonzero entry in column i, ascending. Empty for i > pdim.
  std::vector<int> column_degrees(int i) const;

  int max_degree(int i) const;  // t_i; throws std::out_of_range for empty column
  int min_degree(int i) const;

  bool operator==(const BettiDiagram& o) const { return entries_ == o.entries_; }

 private:
  BettiDiagram(EntryMap entries, bool integral, int pdim)
      : entries_(std::move(entries)), integral_(integral), pdim_(pdim) {}

  EntryMap entries_;
  bool integral_;
  int pdim_;
};

// (t_0,...,t_p) with t_i = max degree in column i.
std::vector<int> upper_degree_sequence(const BettiDiagram& D);

// Min degree per column. For a diagram of an actual module this is strictly
// increasing; callers wanting the verdict use check_monotonicity.
std::vector<int> lower_degree_sequence(const BettiDiagram& D);

// max over i <= n (all i when n absent) of t_i - i.
int regularity(const BettiDiagram& D, std::optional<int> n = std::nullopt);

struct MonotonicityViolation {
  char sequence;  // 'l' lower, 'u' upper
  int i;          // first index with value <= previous
  int prev, cur;
};

struct MonotonicityReport {
  bool lower_strict = true;
  bool upper_strict = true;
  std::optional<MonotonicityViolation> first_violation;
};

MonotonicityReport check_monotonicity(const BettiDiagram& D);

// Strictly increasing tuple (d_0,...,d_t) labeling a pure diagram.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);  // throws unless strictly increasing, nonempty

  const std::vector<int>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  int top_index() const { return size() - 1; }  // t, the homological length
  int operator[](int k) const { return degrees_[static_cast<std::size_t>(k)]; }

  // First t+1 entries (the truncation tau_t).
  DegreeSequence truncate(int t) const;

  bool operator==(const DegreeSequence& o) const { return degrees_ == o.degrees_; }

  std::string str() const;

 private:
  std::vector<int> degrees_;
};

enum class DseqOrder { Equal, LessEqual, GreaterEqual, Incomparable };

// Componentwise partial order; requires equal lengths.
DseqOrder compare_dseq(const DegreeSequence& a, const DegreeSequence& b);

// Pure diagram pi(d): one entry per column, at degrees d, normalized to
// beta_0 = 1, values from the Herzog-Kuhl product formula.
struct PureDiagram {
  DegreeSequence dseq;
  std::vector<Rat> betti;  // betti[0] = 1

  // sum_i (-1)^i beta_i d_i^k = 0 for k = 0..t-1.
  bool satisfies_exactness() const;

  // The diagram w * pi(d) as a sparse entry map.
  BettiDiagram::EntryMap scaled_entries(const Rat& w) const;
};

PureDiagram herzog_kuhl(const DegreeSequence& dseq);  // length >= 2

struct NdqReport {
  bool holds = false;       // t_i = d+i-1 for all checked i
  int checked_up_to = 0;    // min(q, pdim)
  bool truncated = false;   // q exceeded pdim
};

// Green-Lazarsfeld style condition N_{d,q}: linear resolution up to step q.
NdqReport n_dq_satisfied(const BettiDiagram& D, int d, int q);

}  // namespace bettilab
