#include "bettilab/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bettilab {

namespace {

bool rel_holds(const Rat& lhs, Cmp rel, const Rat& rhs) {
  switch (rel) {
    case Cmp::LE: return lhs <= rhs;
    case Cmp::GE: return lhs >= rhs;
    case Cmp::EQ: return lhs == rhs;
  }
  return false;
}

std::string istr(const Int& v) { return v.str(); }

void require_equigenerated(const BettiDiagram& D, int d) {
  auto degs = D.column_degrees(1);
  if (degs.size() != 1 || degs[0] != d)
    throw std::invalid_argument("bounds: column 1 not concentrated in degree d");
}

}  // namespace

BoundReport make_report(std::string name, const Rat& lhs, Cmp rel, const Rat& rhs,
                        std::vector<std::pair<std::string, std::string>> inputs,
                        std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = rel;
  r.holds = rel_holds(lhs, rel, rhs);
  r.inputs = std::move(inputs);
  r.note = std::move(note);
  return r;
}

const char* cmp_symbol(Cmp c) {
  switch (c) {
    case Cmp::LE: return "<=";
    case Cmp::GE: return ">=";
    case Cmp::EQ: return "==";
  }
  return "?";
}

std::pair<BoundReport, BoundReport> mu_bounds(const BettiDiagram& D, int d, int codim) {
  require_equigenerated(D, d);
  int p = D.pdim();
  if (codim < 2) throw std::invalid_argument("mu_bounds: codim >= 2 required");
  if (codim > p) throw std::invalid_argument("mu_bounds: codim exceeds pdim");

  Rat lower = 1;
  for (int j = 2; j <= codim; ++j) {
    int dj = D.max_degree(j);
    if (dj <= d) throw std::domain_error("mu_bounds: dbar_j <= d");
    lower *= Rat(dj, dj - d);
  }
  Rat upper = Rat(binomial(d + p - 1, p - 1));
  Rat beta1 = D.column_total(1);

  std::vector<std::pair<std::string, std::string>> in{
      {"d", std::to_string(d)}, {"codim", std::to_string(codim)}, {"pdim", std::to_string(p)}};
  return {make_report("mu_lower", lower, Cmp::LE, beta1, in),
          make_report("mu_upper", beta1, Cmp::LE, upper, in)};
}

BoundReport beta_c_lower(const BettiDiagram& D, int d, int codim) {
  require_equigenerated(D, d);
  int p = D.pdim();
  if (codim < 2) throw std::invalid_argument("beta_c_lower: codim >= 2 required");
  if (codim > p) throw std::invalid_argument("beta_c_lower: codim exceeds pdim");

  int dbar_c = D.max_degree(codim);
  if (dbar_c <= d) throw std::domain_error("beta_c_lower: dbar_c <= d");
  Rat numer = d, denom = Rat(dbar_c - d);
  for (int j = 2; j <= codim - 1; ++j) {
    int dlow_j = D.min_degree(j);
    if (dbar_c <= dlow_j) throw std::domain_error("beta_c_lower: dbar_c <= dlow_j");
    numer *= dlow_j;
    denom *= dbar_c - dlow_j;
  }
  Rat lower = numer / denom;
  Rat beta_c = D.column_total(codim);
  return make_report("beta_c_lower", lower, Cmp::LE, beta_c,
                     {{"d", std::to_string(d)},
                      {"codim", std::to_string(codim)},
                      {"dbar_c", std::to_string(dbar_c)}});
}

LinearBounds linear_bounds(int d, int p, int codim, int t) {
  if (t < 1 || t > p) throw std::invalid_argument("linear_bounds: t out of range");
  if (codim < 2 || codim > p) throw std::invalid_argument("linear_bounds: codim out of range");
  LinearBounds out;
  out.C_t = binomial(d + t - 2, t - 1) * binomial(d + p - 1, p - t);
  out.lower = t <= codim ? binomial(d + t - 2, t - 1) * binomial(d + codim - 1, codim - t) : Int(0);
  out.hk_lower = binomial(p, t);
  return out;
}

ExtremalityReport is_extremal(const BettiDiagram& D, int d, int codim) {
  int p = D.pdim();
  ExtremalityReport rep;
  for (int t = 1; t <= p; ++t) {
    bool eq = D.column_total(t) == Rat(linear_bounds(d, p, codim, t).C_t);
    rep.equal_at.push_back(eq);
    rep.any = rep.any || eq;
    rep.all = rep.all && eq;
  }
  rep.consistent = !rep.any || rep.all;
  return rep;
}

namespace {

// Far-right informational report for the p = 4 branches: the else-branch
// expression evaluated at the cap dbar_j = (3d-2)d^2 + j coming from
// reg(S/I) <= (3d-2)d^2 (a hypothesis on Dim(S/I), not checked here).
BoundReport far_right_report(const std::string& name, int d, int j, const Rat& value) {
  Int cap = Int(3 * d - 2) * d * d + j;
  return make_report(name, value, Cmp::EQ, value,
                     {{"d", std::to_string(d)}, {"dbar_cap", cap.str()}},
                     "else-branch expression at dbar_" + std::to_string(j) + " = (3d-2)d^2+" +
                         std::to_string(j) + "; assumes Dim(S/I) <= 2, which is not checked");
}

Rat beta_or_default(const BettiDiagram* D, int j, const Rat& dflt) {
  if (!D || j > D->pdim()) return dflt;
  return D->column_total(j);
}

}  // namespace

std::vector<BoundReport> betti_upper_small_p(int d, int p, const std::vector<int>& dbar,
                                             const BettiDiagram* D) {
  if (p != 3 && p != 4) throw std::invalid_argument("betti_upper_small_p: p must be 3 or 4");
  if (static_cast<int>(dbar.size()) < p + 1)
    throw std::invalid_argument("betti_upper_small_p: dbar too short");
  for (int j = 2; j <= p; ++j)
    if (dbar[static_cast<std::size_t>(j)] < d + j - 1)
      throw std::invalid_argument("betti_upper_small_p: dbar_j < d+j-1");

  std::vector<BoundReport> out;
  auto in = [&](int j) {
    return std::vector<std::pair<std::string, std::string>>{
        {"d", std::to_string(d)},
        {"p", std::to_string(p)},
        {"dbar_j", std::to_string(dbar[static_cast<std::size_t>(j)])}};
  };

  if (p == 3) {
    Rat b2 = Rat(Int(d) * (d + 2));
    Rat b3 = Rat(Int(d) * (d + 1), 2);
    out.push_back(make_report("beta2_upper_p3", beta_or_default(D, 2, b2), Cmp::LE, b2, in(2)));
    out.push_back(make_report("beta3_upper_p3", beta_or_default(D, 3, b3), Cmp::LE, b3, in(3)));
    return out;
  }

  // p = 4: threshold cases (a), (b), (c); thresholds may be half-integers
  // or thirds, so they are compared as exact rationals.
  {
    int d2 = dbar[2];
    Rat threshold = Rat(Int(d) * d + 4 * d + 2);
    Rat bound;
    std::string note;
    if (Rat(d2) <= threshold) {
      bound = Rat(Int(d) * (d + 2) * (d + 3), 2);
      note = "dbar_2 <= d^2+4d+2: constant-branch bound";
    } else {
      bound = Rat(Int(d) * (d2 + 1) * (d2 + 2), Int(2) * (d2 - d));
      note = "dbar_2 > d^2+4d+2: dbar-dependent branch";
    }
    out.push_back(make_report("beta2_upper_p4", beta_or_default(D, 2, bound), Cmp::LE, bound,
                              in(2), note));
    Int cap = Int(3 * d - 2) * d * d + 2;
    Rat capped = Rat(Int(d) * (cap + 1) * (cap + 2), Int(2) * (cap - d));
    out.push_back(far_right_report("beta2_far_right_p4", d, 2, capped));
  }
  {
    int d3 = dbar[3];
    Rat threshold = std::max(Rat(d + 2), Rat(Int(d) * d + 2 * d - 1, 2));
    Rat bound;
    std::string note;
    if (Rat(d3) <= threshold) {
      bound = Rat(Int(d) * (d + 1) * (d + 3), 2);
      note = "dbar_3 <= max{d+2,(d^2+2d-1)/2}: constant-branch bound";
    } else {
      bound = Rat(Int(d) * (d3 - 1) * (d3 + 1), Int(d3 - d));
      note = "dbar_3 above threshold: dbar-dependent branch";
    }
    out.push_back(make_report("beta3_upper_p4", beta_or_default(D, 3, bound), Cmp::LE, bound,
                              in(3), note));
    Int cap = Int(3 * d - 2) * d * d + 3;
    Rat capped = Rat(Int(d) * (cap - 1) * (cap + 1), cap - d);
    out.push_back(far_right_report("beta3_far_right_p4", d, 3, capped));
  }
  {
    int d4 = dbar[4];
    Rat threshold = std::max(Rat(d + 3), Rat(Int(d) * d + 2, 3));
    Rat bound;
    std::string note;
    if (Rat(d4) <= threshold) {
      bound = Rat(Int(d) * (d + 1) * (d + 2), 6);
      note = "dbar_4 <= max{d+3,(d^2+2)/3}: constant-branch bound";
    } else {
      bound = Rat(Int(d) * (d4 - 2) * (d4 - 1), Int(2) * (d4 - d));
      note = "dbar_4 above threshold: dbar-dependent branch";
    }
    out.push_back(make_report("beta4_upper_p4", beta_or_default(D, 4, bound), Cmp::LE, bound,
                              in(4), note));
    Int cap = Int(3 * d - 2) * d * d + 4;
    Rat capped = Rat(Int(d) * (cap - 2) * (cap - 1), Int(2) * (cap - d));
    out.push_back(far_right_report("beta4_far_right_p4", d, 4, capped));
  }
  return out;
}

Rat eval_f(int d, int p, int j, const Rat& x) {
  if (x == Rat(d)) throw std::domain_error("eval_f: pole at x = d");
  Rat v = Rat(d) / (x - d);
  Rat numer = 1;
  for (int k = 2; k <= j - 1; ++k) numer *= x - j + k;  // (x-j+2)...(x-1)
  Int fact = 1;
  for (int k = 2; k <= j - 2; ++k) fact *= k;
  v *= numer / Rat(fact);
  numer = 1;
  for (int k = 1; k <= p - j; ++k) numer *= x + k;  // (x+1)...(x+p-j)
  fact = 1;
  for (int k = 2; k <= p - j; ++k) fact *= k;
  v *= numer / Rat(fact);
  return v;
}

BoundReport betti_upper_general(int d, int p, int j, int dbar_j, const Rat* beta_j) {
  if (p < 5) throw std::invalid_argument("betti_upper_general: p >= 5 required");
  if (j < 2 || j > p) throw std::invalid_argument("betti_upper_general: j out of range");
  if (dbar_j < d + j - 1) throw std::invalid_argument("betti_upper_general: dbar_j < d+j-1");
  if (dbar_j <= d) throw std::domain_error("betti_upper_general: dbar_j <= d");

  Rat left = Rat(binomial(d + j - 2, j - 2) * binomial(d + p - 1, p - j), Int(j - 1));
  Rat right = Rat(binomial(dbar_j + p - j, p - j) * binomial(dbar_j - 1, j - 2), Int(dbar_j - d));
  Rat bound = Rat(d) * std::max(left, right);
  Rat lhs = beta_j ? *beta_j : bound;
  std::ostringstream note;
  note << "endpoint values d*f: left " << rat_to_string(Rat(d) * left) << ", right "
       << rat_to_string(Rat(d) * right);
  return make_report("beta_upper_general", lhs, Cmp::LE, bound,
                     {{"d", std::to_string(d)},
                      {"p", std::to_string(p)},
                      {"j", std::to_string(j)},
                      {"dbar_j", std::to_string(dbar_j)}},
                     note.str());
}

std::vector<BoundReport> ths_check(int d, const std::vector<int>& first_syzygy_degrees,
                                   const std::vector<int>& second_syzygy_degrees, int reg) {
  int r = static_cast<int>(first_syzygy_degrees.size());
  if (r < 3) throw std::invalid_argument("ths_check: need at least 3 first syzygies");
  if (static_cast<int>(second_syzygy_degrees.size()) != r - 2)
    throw std::invalid_argument("ths_check: need |second| = |first| - 2");
  for (std::size_t m = 1; m < first_syzygy_degrees.size(); ++m)
    if (first_syzygy_degrees[m - 1] < first_syzygy_degrees[m])
      throw std::invalid_argument("ths_check: first syzygy degrees not descending");
  for (std::size_t m = 1; m < second_syzygy_degrees.size(); ++m)
    if (second_syzygy_degrees[m - 1] < second_syzygy_degrees[m])
      throw std::invalid_argument("ths_check: second syzygy degrees not descending");

  std::vector<BoundReport> out;

  // (i): report the tightest pair; list all comparisons in the note.
  int best_m = 0;
  std::ostringstream all;
  for (int m = 0; m < r - 2; ++m) {
    int slack = second_syzygy_degrees[static_cast<std::size_t>(m)] -
                first_syzygy_degrees[static_cast<std::size_t>(m)] - 1;
    if (m) all << ", ";
    all << "D_" << (m + 1) << "=" << second_syzygy_degrees[static_cast<std::size_t>(m)]
        << " vs d_" << (m + 1) << "+1=" << first_syzygy_degrees[static_cast<std::size_t>(m)] + 1;
    int best_slack = second_syzygy_degrees[static_cast<std::size_t>(best_m)] -
                     first_syzygy_degrees[static_cast<std::size_t>(best_m)] - 1;
    if (slack < best_slack) best_m = m;
  }
  out.push_back(make_report(
      "second_vs_first_syzygy_degrees",
      Rat(second_syzygy_degrees[static_cast<std::size_t>(best_m)]), Cmp::GE,
      Rat(first_syzygy_degrees[static_cast<std::size_t>(best_m)] + 1),
      {{"d", std::to_string(d)}, {"r", std::to_string(r)}}, all.str()));
  out.push_back(make_report("regularity_cap", Rat(reg), Cmp::LE, Rat(3 * d - 3),
                            {{"d", std::to_string(d)}}));
  out.push_back(make_report("syzygy_count_cap", Rat(r), Cmp::LE, Rat(3 * d - 2),
                            {{"d", std::to_string(d)}}));
  return out;
}

Int sdall_bound(int n, int d, int reg_SI, int ht_I, int beg_IJ) {
  if (n < ht_I || ht_I < 2) throw std::invalid_argument("sdall_bound: need n >= ht_I >= 2");
  if (d < 2) throw std::invalid_argument("sdall_bound: d >= 2 required");
  if (beg_IJ < 0) throw std::invalid_argument("sdall_bound: beg >= 0 required");
  Int alt = Int(n) * (d - 2) - Int(n - ht_I) * beg_IJ;
  return std::max(Int(reg_SI), alt);
}

BoundReport sdall_report(int n, int d, int reg_SI, int ht_I, int beg_IJ) {
  Int v = sdall_bound(n, d, reg_SI, ht_I, beg_IJ);
  return make_report("sdall_bound", Rat(v), Cmp::EQ, Rat(v),
                     {{"n", std::to_string(n)},
                      {"d", std::to_string(d)},
                      {"reg_SI", std::to_string(reg_SI)},
                      {"ht_I", std::to_string(ht_I)},
                      {"beg_IJ", std::to_string(beg_IJ)}},
                     "conditional bound: the depth hypotheses behind it are not verified here");
}

}  // namespace bettilab
