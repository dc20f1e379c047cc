#include "bettilab/subadditivity.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bettilab {

TSequence::TSequence(std::vector<int> values, std::optional<int> p)
    : values_(std::move(values)), p_(p) {
  if (values_.empty() || values_[0] != 0)
    throw std::invalid_argument("t sequence: must start with t_0 = 0");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < static_cast<int>(i) + 1)
      throw std::invalid_argument("t sequence: t_i >= i+1 required for i >= 1");
  if (p_) {
    if (*p_ < 0) throw std::invalid_argument("t sequence: negative p");
    if (static_cast<int>(values_.size()) != *p_ + 1)
      throw std::invalid_argument("t sequence: with p set, need exactly p+1 values");
  }
}

std::optional<int> TSequence::value(int i) const {
  if (i < 0) throw std::invalid_argument("t sequence: negative index");
  if (p_ && i > *p_) return std::nullopt;  // Tor vanishes; no finite value to report
  if (i >= known()) return std::nullopt;
  return values_[static_cast<std::size_t>(i)];
}

int TSequence::at(int i) const {
  auto v = value(i);
  if (!v) throw std::out_of_range("t sequence: entry unknown");
  return *v;
}

TauSequence TauSequence::koszul() { return TauSequence(); }

TauSequence::TauSequence(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 0)
    throw std::invalid_argument("tau sequence: must start with tau_0 = 0");
  if (values_.size() >= 2 && values_[1] != 1)
    throw std::invalid_argument("tau sequence: tau_1 = 1 required");
  for (std::size_t i = 2; i < values_.size(); ++i)
    if (values_[i] < static_cast<int>(i))
      throw std::invalid_argument("tau sequence: tau_i >= i required");
}

std::optional<int> TauSequence::value(int i) const {
  if (i < 0) throw std::invalid_argument("tau sequence: negative index");
  if (koszul_) return i;
  if (i >= static_cast<int>(values_.size())) return std::nullopt;
  return values_[static_cast<std::size_t>(i)];
}

int TauSequence::at(int i) const {
  auto v = value(i);
  if (!v) throw std::out_of_range("tau sequence: entry unknown");
  return *v;
}

int TauSequence::known() const { return koszul_ ? INT_MAX : static_cast<int>(values_.size()); }

namespace {

BoundReport truncation_notice(const std::string& what) {
  return make_report("truncation_notice", Rat(0), Cmp::EQ, Rat(0), {}, what);
}

}  // namespace

std::vector<BoundReport> check_ptibi(const TSequence& t, const TauSequence& tau) {
  std::vector<BoundReport> out;
  bool truncated = false;
  std::ostringstream trunc;

  // (1): needs t_0..t_i and tau_2..tau_{i+1}.
  for (int i = 1; i < t.known(); ++i) {
    if (!tau.value(i + 1)) {
      truncated = true;
      trunc << "inequality (1) unverifiable from i = " << i << " (tau_" << i + 1
            << " unknown); ";
      break;
    }
    int rhs = INT_MIN;
    for (int j = 1; j <= i; ++j) rhs = std::max(rhs, t.at(i - j) + tau.at(j + 1));
    out.push_back(make_report("t_subadditive[" + std::to_string(i) + "]", Rat(t.at(i)), Cmp::LE,
                              Rat(rhs), {{"i", std::to_string(i)}}));
  }

  // (2): bounds tau_{i+1}; needs t_{i-j} for j in [lo, i-1], lo = max{0, i-p}.
  // Under the Koszul flag every tau value is available, so the range is
  // capped by the t prefix instead.
  int tau_top = tau.is_koszul() ? t.known() : tau.known() - 1;
  for (int i = 1; i + 1 <= tau_top; ++i) {
    int lo = t.p() ? std::max(0, i - *t.p()) : 0;
    bool ok = true;
    int rhs = INT_MIN;
    for (int j = lo; j <= i - 1; ++j) {
      auto tv = t.value(i - j);
      if (!tv) {
        ok = false;
        break;
      }
      rhs = std::max(rhs, *tv + tau.at(j));
    }
    if (!ok) {
      truncated = true;
      trunc << "inequality (2) unverifiable at i = " << i << " (t prefix too short); ";
      continue;
    }
    out.push_back(make_report("tau_subadditive[" + std::to_string(i + 1) + "]",
                              Rat(tau.at(i + 1)), Cmp::LE, Rat(rhs),
                              {{"i", std::to_string(i)}}));
  }

  if (truncated) out.push_back(truncation_notice(trunc.str()));
  return out;
}

PropagateBounds propagate(const TSequence& t, const TauSequence& tau) {
  PropagateBounds out;

  // Bound for t_i at i = first unknown index.
  {
    int i = t.known();
    if (t.p() && i > *t.p()) {
      // sequence already complete; nothing to propagate
    } else {
      int best = INT_MIN;
      bool any = false;
      for (int j = 1; j <= i; ++j) {
        auto tv = tau.value(j + 1);
        if (!tv) {
          out.t_conditional = true;
          out.t_missing_tau.push_back(j + 1);
          continue;
        }
        best = std::max(best, t.at(i - j) + *tv);
        any = true;
      }
      if (any) out.t_next = best;
    }
  }

  // Bound for tau_{i+1} at i+1 = first unknown index.
  if (!tau.is_koszul()) {
    int i = tau.known() - 1;
    if (i >= 1) {
      int lo = t.p() ? std::max(0, i - *t.p()) : 0;
      int best = INT_MIN;
      bool any = false;
      for (int j = lo; j <= i - 1; ++j) {
        auto tv = t.value(i - j);
        if (!tv) {
          out.tau_conditional = true;
          out.tau_missing_t.push_back(i - j);
          continue;
        }
        best = std::max(best, *tv + tau.at(j));
        any = true;
      }
      if (any) out.tau_next = best;
    }
  }
  return out;
}

LinearSlopeResult check_linear_slope(const TSequence& t, const TauSequence& tau, int i) {
  LinearSlopeResult res;
  if (i < 1) throw std::invalid_argument("linear_slope: i >= 1 required");
  if (t.p() && i > *t.p()) {
    res.detail = "i exceeds pdim";
    return res;
  }
  auto ti = t.value(i);
  auto taui1 = tau.value(i + 1);
  auto t1 = t.value(1);
  if (!ti || !taui1 || !t1) {
    res.detail = "sequence data missing at index " + std::to_string(i);
    return res;
  }
  for (int j = 1; j < i; ++j) {
    auto tj = t.value(j);
    auto tauj1 = tau.value(j + 1);
    if (!tj || !tauj1) {
      res.detail = "hypothesis data missing at j = " + std::to_string(j);
      return res;
    }
    if (*tj == *tauj1) {
      res.detail = "hypothesis fails: t_" + std::to_string(j) + " = tau_" + std::to_string(j + 1) +
                   " = " + std::to_string(*tj);
      return res;
    }
  }

  if (*ti == *taui1) {
    res.kind = LinearSlopeResult::Kind::Equal;
    res.detail = "t_i = tau_{i+1} = " + std::to_string(*ti);
    return res;
  }
  if (*ti < *taui1) {
    res.kind = LinearSlopeResult::Kind::Below;
    res.report = make_report("linear_slope_below[" + std::to_string(i) + "]", Rat(*taui1),
                             Cmp::LE, Rat((i - 1) * *t1 + 1), {{"i", std::to_string(i)}});
  } else {
    res.kind = LinearSlopeResult::Kind::Above;
    res.report = make_report("linear_slope_above[" + std::to_string(i) + "]", Rat(*ti), Cmp::LE,
                             Rat(i * *t1), {{"i", std::to_string(i)}});
  }
  res.bound_holds = res.report->holds;
  return res;
}

std::vector<BoundReport> koszul_bounds(const TSequence& t, int n, std::optional<int> q,
                                       std::optional<int> depth_gap) {
  if (n < 1) throw std::invalid_argument("koszul_bounds: n >= 1 required");
  std::vector<BoundReport> out;
  bool truncated = false;
  int reach = n;
  if (t.known() - 1 < reach && !(t.p() && *t.p() <= reach)) {
    reach = t.known() - 1;
    truncated = true;
  }
  int top = std::min(reach, t.p().value_or(reach));

  for (int i = 1; i <= top; ++i)
    out.push_back(make_report("t_le_2i[" + std::to_string(i) + "]", Rat(t.at(i)), Cmp::LE,
                              Rat(2 * i), {{"i", std::to_string(i)}}));

  if (q) {
    if (*q < 1) throw std::invalid_argument("koszul_bounds: q >= 1 required");
    bool premise = true;
    for (int i = 1; i <= std::min(*q, top); ++i) {
      auto rep = make_report("nq_premise[" + std::to_string(i) + "]", Rat(t.at(i)), Cmp::EQ,
                             Rat(i + 1), {{"i", std::to_string(i)}},
                             "linearity premise of the q-strengthened cap");
      premise = premise && rep.holds;
      out.push_back(std::move(rep));
    }
    if (premise) {
      for (int i = *q + 1; i <= top; ++i)
        out.push_back(make_report("t_le_2i_minus_q_plus_1[" + std::to_string(i) + "]",
                                  Rat(t.at(i)), Cmp::LE, Rat(2 * i - *q + 1),
                                  {{"i", std::to_string(i)}, {"q", std::to_string(*q)}}));
    } else {
      out.push_back(make_report("nq_conclusion_skipped", Rat(0), Cmp::EQ, Rat(0), {},
                                "linearity premise fails; the strengthened cap is not claimed"));
    }
  }

  if (depth_gap) {
    for (int i = 1; i <= std::min(top, *depth_gap); ++i)
      out.push_back(make_report("t_step_le_2[" + std::to_string(i) + "]", Rat(t.at(i)), Cmp::LE,
                                Rat(t.at(i - 1) + 2),
                                {{"i", std::to_string(i)},
                                 {"depth_gap", std::to_string(*depth_gap)}}));
  }

  if (truncated)
    out.push_back(make_report("truncation_notice", Rat(0), Cmp::EQ, Rat(0), {},
                              "t prefix shorter than requested range n = " + std::to_string(n)));
  return out;
}

namespace {

// reg over the prefix up to i; nullopt when entries are missing.
std::optional<int> partial_reg_t(const TSequence& t, int i) {
  int r = 0;  // j = 0 term is always 0
  for (int j = 1; j <= i; ++j) {
    auto v = t.value(j);
    if (!v) {
      if (t.p() && j > *t.p()) break;  // vanishing Tor contributes nothing
      return std::nullopt;
    }
    r = std::max(r, *v - j);
  }
  return r;
}

std::optional<int> partial_reg_tau(const TauSequence& tau, int i) {
  if (tau.is_koszul()) return 0;
  int r = 0;
  for (int j = 1; j <= i; ++j) {
    auto v = tau.value(j);
    if (!v) return std::nullopt;
    r = std::max(r, *v - j);
  }
  return r;
}

}  // namespace

std::vector<BoundReport> reg_intertwine(const TSequence& t, const TauSequence& tau,
                                        std::optional<int> p) {
  std::vector<BoundReport> out;
  if (!p) p = t.p();
  bool truncated = false;

  // (1)
  for (int i = 1; i < t.known(); ++i) {
    Int sum = 0;
    bool ok = true;
    for (int j = 2; j <= i + 1; ++j) {
      auto r = partial_reg_tau(tau, j);
      if (!r) {
        ok = false;
        break;
      }
      sum += *r;
    }
    if (!ok) {
      truncated = true;
      break;
    }
    out.push_back(make_report("t_le_2i_plus_regsum[" + std::to_string(i) + "]", Rat(t.at(i)),
                              Cmp::LE, Rat(Int(2 * i) + sum), {{"i", std::to_string(i)}}));
  }

  // (2)
  for (int i = 1; i < t.known(); ++i) {
    auto ri = partial_reg_t(t, i);
    auto rim1 = partial_reg_t(t, i - 1);
    auto rr = partial_reg_tau(tau, i + 1);
    if (!ri || !rim1 || !rr) {
      truncated = true;
      break;
    }
    out.push_back(make_report("reg_step[" + std::to_string(i) + "]", Rat(*ri), Cmp::LE,
                              Rat(*rim1 + *rr + 1), {{"i", std::to_string(i)}}));
  }

  // (3): the cap index is min{i, p} when p is finite. Under the Koszul flag
  // the checks are available for every i; cap the range by the t prefix.
  {
    int i_top = tau.is_koszul() ? t.known() - 1 : tau.known() - 2;
    for (int i = 1; i <= i_top; ++i) {
      int cap = p ? std::min(i, *p) : i;
      auto rs = partial_reg_t(t, cap);
      auto rr1 = partial_reg_tau(tau, i + 1);
      auto rrm1 = partial_reg_tau(tau, i - 1);
      if (!rs || !rr1 || !rrm1) {
        truncated = true;
        break;
      }
      out.push_back(make_report("reg_R_step[" + std::to_string(i) + "]", Rat(*rr1), Cmp::LE,
                                Rat(*rs + *rrm1 - 1), {{"i", std::to_string(i)}}));
    }
  }

  // (4): implication, reported as a check only when the hypothesis is visible.
  {
    auto full = partial_reg_t(t, t.known() - 1);
    if (full && *full == 1) {
      bool all_zero = true;
      int upto = tau.is_koszul() ? 0 : tau.known() - 1;
      for (int i = 0; i <= upto; ++i) {
        auto r = partial_reg_tau(tau, i);
        if (r && *r != 0) all_zero = false;
      }
      out.push_back(make_report("koszul_implication", Rat(all_zero ? 0 : 1), Cmp::EQ, Rat(0), {},
                                "reg over the known t range is 1, so every tau partial "
                                "regularity must vanish"));
    } else {
      out.push_back(make_report("koszul_implication", Rat(0), Cmp::EQ, Rat(0), {},
                                "hypothesis reg^S(R) = 1 not visible in the data; implication "
                                "not claimed"));
    }
  }

  if (truncated)
    out.push_back(make_report("truncation_notice", Rat(0), Cmp::EQ, Rat(0), {},
                              "some checks skipped: sequence prefixes too short"));
  return out;
}

}  // namespace bettilab
