#pragma once

#include "bettilab/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bettilab {

enum class Cmp { LE, GE, EQ };

// One verified inequality. holds is always recomputed from lhs/rhs/relation;
// note carries branch or conditionality information for the report reader.
struct BoundReport {
  std::string name;
  Rat lhs, rhs;
  Cmp relation = Cmp::LE;
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string note;
};

BoundReport make_report(std::string name, const Rat& lhs, Cmp rel, const Rat& rhs,
                        std::vector<std::pair<std::string, std::string>> inputs = {},
                        std::string note = {});

const char* cmp_symbol(Cmp c);

// Bounds on the minimal number of generators beta_1 for a d-equigenerated
// ideal of height codim >= 2:
//   prod_{j=2}^{c} dbar_j/(dbar_j - d)  <=  beta_1  <=  C(d+p-1, p-1).
// Returned as (lower report, upper report). Equigeneration is read off the
// diagram, never trusted; codim is caller knowledge.
std::pair<BoundReport, BoundReport> mu_bounds(const BettiDiagram& D, int d, int codim);

// Lower bound for the height-column Betti number:
//   d * dlow_2...dlow_{c-1} / [(dbar_c - d)(dbar_c - dlow_2)...(dbar_c - dlow_{c-1})] <= beta_c.
BoundReport beta_c_lower(const BettiDiagram& D, int d, int codim);

// Closed forms for d-linear resolutions:
//   C_t      = C(d+t-2, t-1) * C(d+p-1, p-t)   (upper bound, tight for CM)
//   lower    = C(d+t-2, t-1) * C(d+c-1, c-t)   (only for t <= c, else 0)
//   hk_lower = C(p, t)                          (linear-resolution floor)
struct LinearBounds {
  Int C_t;
  Int lower;
  Int hk_lower;
};

LinearBounds linear_bounds(int d, int p, int codim, int t);

// beta_t = C_t for one t iff for all t (extremality transfer). The report
// records which columns match; consistent = the iff is not contradicted.
struct ExtremalityReport {
  std::vector<bool> equal_at;  // index t-1 for t = 1..p
  bool any = false;
  bool all = true;
  bool consistent = true;
};

ExtremalityReport is_extremal(const BettiDiagram& D, int d, int codim);

// Polynomial upper bounds for beta_j at small projective dimension (3 or 4),
// with the p = 4 case split on thresholds in the top degrees dbar_j. Each
// returned report records the branch taken and, for p = 4, an additional
// informational report evaluating the far-right expression at the degree cap
// dbar_j <= (3d-2)d^2 + j (valid when Dim(S/I) <= 2, which is NOT checked).
// When a diagram is supplied the reports compare against its actual beta_j.
std::vector<BoundReport> betti_upper_small_p(int d, int p, const std::vector<int>& dbar,
                                             const BettiDiagram* D = nullptr);

// p >= 5 upper bound: beta_j <= d * max{ f(d+j-1), f(dbar_j) } where f is the
// hyperbolic-in-x expression below; the max over the admissible range is
// attained at an endpoint.
BoundReport betti_upper_general(int d, int p, int j, int dbar_j, const Rat* beta_j = nullptr);

// f(x) = d/(x-d) * [(x-j+2)...(x-1)/(j-2)!] * [(x+1)...(x+p-j)/(p-j)!],
// exposed for the endpoint-maximum property test. Requires x != d.
Rat eval_f(int d, int p, int j, const Rat& x);

// Three checks for a 3-generated d-equigenerated ideal of pdim 3, given the
// first-syzygy degrees d_1 >= ... >= d_r, the second-syzygy degrees
// D_1 >= ... >= D_{r-2} and the regularity:
//   (i) D_m >= d_m + 1 for all m, (ii) reg <= 3d-3, (iii) r <= 3d-2.
std::vector<BoundReport> ths_check(int d, const std::vector<int>& first_syzygy_degrees,
                                   const std::vector<int>& second_syzygy_degrees, int reg);

// max{reg_SI, n(d-2) - (n - ht_I)*beg_IJ}: a regularity bound whose depth
// hypotheses are outside this library's reach; reports are always labeled
// conditional.
Int sdall_bound(int n, int d, int reg_SI, int ht_I, int beg_IJ);
BoundReport sdall_report(int n, int d, int reg_SI, int ht_I, int beg_IJ);

}  // namespace bettilab
