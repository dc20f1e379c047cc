#pragma once

#include "bettilab/bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bettilab {

// Known prefix of t_i (top syzygy degrees of R over the ambient ring).
// t_0 = 0 and t_i >= i+1 for i >= 1 (no linear forms in the ideal).
// When p (projective dimension) is set, the prefix is the whole sequence
// and must have exactly p+1 entries; absent p means the tail is unknown
// or infinite.
class TSequence {
 public:
  explicit TSequence(std::vector<int> values, std::optional<int> p = std::nullopt);

  int known() const { return static_cast<int>(values_.size()); }  // entries 0..known-1
  std::optional<int> p() const { return p_; }
  std::optional<int> value(int i) const;
  int at(int i) const;  // throws when unknown
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
  std::optional<int> p_;
};

// Known prefix of tau_i (top degrees of the residue-field resolution over R),
// or the Koszul flag meaning tau_i = i for every i in range. tau_0 = 0,
// tau_1 = 1 when present, tau_i >= i throughout.
class TauSequence {
 public:
  static TauSequence koszul();
  explicit TauSequence(std::vector<int> values);

  bool is_koszul() const { return koszul_; }
  std::optional<int> value(int i) const;  // always i when koszul
  int at(int i) const;
  int known() const;  // INT_MAX when koszul

 private:
  TauSequence() : koszul_(true) {}
  std::vector<int> values_;
  bool koszul_ = false;
};

// The two intertwined subadditivity inequalities, checked for every index
// the prefixes can reach:
//   (1) t_i      <= max_{j=1..i} { t_{i-j} + tau_{j+1} }
//   (2) tau_{i+1} <= max_{j=max{0,i-p}..i-1} { t_{i-j} + tau_j }
// (absent p means max{0, i-p} = 0). Indices beyond the verifiable prefix
// produce a trailing informational "truncation_notice" report instead of a
// silent skip.
std::vector<BoundReport> check_ptibi(const TSequence& t, const TauSequence& tau);

// Upper bounds for the first unknown entries t_{known(t)} and tau_{known(tau)}
// obtained from the right-hand sides above. A bound is conditional when some
// needed entry of the other sequence is unknown; the partial max over the
// known terms is still reported, with the missing indices listed.
struct PropagateBounds {
  std::optional<int> t_next;
  bool t_conditional = false;
  std::vector<int> t_missing_tau;  // tau indices the full max would need
  std::optional<int> tau_next;
  bool tau_conditional = false;
  std::vector<int> tau_missing_t;  // t indices the full max would need
};

PropagateBounds propagate(const TSequence& t, const TauSequence& tau);

// Trichotomy at index i, valid when t_j != tau_{j+1} for all j < i:
// either t_i = tau_{i+1}, or the smaller of the two obeys a slope bound:
//   t_i < tau_{i+1}  =>  tau_{i+1} <= (i-1)*t_1 + 1     ("below")
//   tau_{i+1} < t_i  =>  t_i <= i*t_1                   ("above")
struct LinearSlopeResult {
  enum class Kind { Inapplicable, Equal, Below, Above } kind = Kind::Inapplicable;
  bool bound_holds = true;  // false = slope bound violated
  std::optional<BoundReport> report;
  std::string detail;
};

LinearSlopeResult check_linear_slope(const TSequence& t, const TauSequence& tau, int i);

// Degree caps valid under a Koszul-type hypothesis asserted by the caller
// (vanishing residue-field regularity over R up to n+1):
//   t_i <= 2i for i <= n;
//   with q: after the linearity premise t_i = i+1 for i <= q,
//           t_i <= 2i-q+1 for q+1 <= i <= n;
//   with depth_gap: t_i <= t_{i-1} + 2 for i <= min{n, depth_gap}.
std::vector<BoundReport> koszul_bounds(const TSequence& t, int n, std::optional<int> q = {},
                                       std::optional<int> depth_gap = {});

// Partial-regularity intertwining. With reg_S(i) = max_{j<=i}(t_j - j) and
// reg_R(i) = max_{j<=i}(tau_j - j):
//   (1) t_i <= 2i + sum_{j=2}^{i+1} reg_R(j)
//   (2) reg_S(i) <= reg_S(i-1) + reg_R(i+1) + 1
//   (3) reg_R(i+1) <= reg_S(min{i,p}) + reg_R(i-1) - 1   (p-capped for i >= p)
//   (4) reg_S = 1 over the known range forces every reg_R partial to 0
//       (reported as an implication check, not an inequality).
std::vector<BoundReport> reg_intertwine(const TSequence& t, const TauSequence& tau,
                                        std::optional<int> p = std::nullopt);

}  // namespace bettilab
