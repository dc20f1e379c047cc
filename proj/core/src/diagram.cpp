#include "bettilab/diagram.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bettilab {

BettiDiagram BettiDiagram::from_entries(EntryMap entries, bool integral) {
  if (entries.empty()) throw std::invalid_argument("diagram: no entries");
  int pdim = 0;
  std::vector<char> seen;
  for (const auto& [key, val] : entries) {
    auto [i, j] = key;
    (void)j;
    if (i < 0) throw std::invalid_argument("diagram: negative homological index");
    if (val <= 0) throw std::invalid_argument("diagram: nonpositive multiplicity");
    if (integral && !is_integer(val))
      throw std::invalid_argument("diagram: non-integer entry in integral diagram");
    pdim = std::max(pdim, i);
    if (static_cast<int>(seen.size()) <= i) seen.resize(static_cast<std::size_t>(i) + 1, 0);
    seen[static_cast<std::size_t>(i)] = 1;
  }
  if (!seen[0]) throw std::invalid_argument("diagram: column 0 empty");
  for (int i = 0; i <= pdim; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("diagram: empty column " + std::to_string(i) +
                                  " inside range (gap)");
  return BettiDiagram(std::move(entries), integral, pdim);
}

Rat BettiDiagram::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rat(0) : it->second;
}

Rat BettiDiagram::column_total(int i) const {
  Rat s = 0;
  for (auto it = entries_.lower_bound({i, INT_MIN}); it != entries_.end() && it->first.first == i;
       ++it)
    s += it->second;
  return s;
}

std::vector<int> BettiDiagram::column_degrees(int i) const {
  std::vector<int> out;
  for (auto it = entries_.lower_bound({i, INT_MIN}); it != entries_.end() && it->first.first == i;
       ++it)
    out.push_back(it->first.second);
  return out;
}

int BettiDiagram::max_degree(int i) const {
  auto degs = column_degrees(i);
  if (degs.empty()) throw std::out_of_range("diagram: empty column " + std::to_string(i));
  return degs.back();
}

int BettiDiagram::min_degree(int i) const {
  auto degs = column_degrees(i);
  if (degs.empty()) throw std::out_of_range("diagram: empty column " + std::to_string(i));
  return degs.front();
}

std::vector<int> upper_degree_sequence(const BettiDiagram& D) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(D.pdim()) + 1);
  for (int i = 0; i <= D.pdim(); ++i) t.push_back(D.max_degree(i));
  return t;
}

std::vector<int> lower_degree_sequence(const BettiDiagram& D) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(D.pdim()) + 1);
  for (int i = 0; i <= D.pdim(); ++i) t.push_back(D.min_degree(i));
  return t;
}

int regularity(const BettiDiagram& D, std::optional<int> n) {
  int cap = n.value_or(D.pdim());
  if (cap > D.pdim()) throw std::invalid_argument("regularity: cap exceeds pdim");
  int r = INT_MIN;
  for (int i = 0; i <= cap; ++i) r = std::max(r, D.max_degree(i) - i);
  return r;
}

MonotonicityReport check_monotonicity(const BettiDiagram& D) {
  MonotonicityReport rep;
  auto lo = lower_degree_sequence(D);
  auto hi = upper_degree_sequence(D);
  for (std::size_t i = 1; i < lo.size(); ++i) {
    if (lo[i] <= lo[i - 1]) {
      rep.lower_strict = false;
      if (!rep.first_violation)
        rep.first_violation =
            MonotonicityViolation{'l', static_cast<int>(i), lo[i - 1], lo[i]};
      break;
    }
  }
  for (std::size_t i = 1; i < hi.size(); ++i) {
    if (hi[i] <= hi[i - 1]) {
      rep.upper_strict = false;
      if (!rep.first_violation)
        rep.first_violation =
            MonotonicityViolation{'u', static_cast<int>(i), hi[i - 1], hi[i]};
      break;
    }
  }
  return rep;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("degree sequence: empty");
  for (std::size_t k = 1; k < degrees_.size(); ++k)
    if (degrees_[k - 1] >= degrees_[k])
      throw std::invalid_argument("degree sequence: not strictly increasing");
}

DegreeSequence DegreeSequence::truncate(int t) const {
  if (t < 0 || t > top_index()) throw std::out_of_range("degree sequence: bad truncation");
  return DegreeSequence(
      std::vector<int>(degrees_.begin(), degrees_.begin() + t + 1));
}

std::string DegreeSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    if (k) os << ",";
    os << degrees_[k];
  }
  os << ")";
  return os.str();
}

DseqOrder compare_dseq(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compare_dseq: length mismatch");
  bool le = true, ge = true;
  for (int k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) le = false;
    if (a[k] < b[k]) ge = false;
  }
  if (le && ge) return DseqOrder::Equal;
  if (le) return DseqOrder::LessEqual;
  if (ge) return DseqOrder::GreaterEqual;
  return DseqOrder::Incomparable;
}

bool PureDiagram::satisfies_exactness() const {
  int t = dseq.top_index();
  for (int k = 0; k < t; ++k) {
    Rat s = 0;
    for (int i = 0; i <= t; ++i) {
      Rat term = betti[static_cast<std::size_t>(i)] * Rat(int_pow(Int(dseq[i]), static_cast<unsigned>(k)));
      s += (i % 2 == 0) ? term : -term;
    }
    if (s != 0) return false;
  }
  return true;
}

BettiDiagram::EntryMap PureDiagram::scaled_entries(const Rat& w) const {
  BettiDiagram::EntryMap m;
  for (int i = 0; i <= dseq.top_index(); ++i)
    m[{i, dseq[i]}] = w * betti[static_cast<std::size_t>(i)];
  return m;
}

PureDiagram herzog_kuhl(const DegreeSequence& dseq) {
  int t = dseq.top_index();
  if (t < 1) throw std::invalid_argument("herzog_kuhl: need length >= 2");
  std::vector<Rat> betti;
  betti.reserve(static_cast<std::size_t>(t) + 1);
  betti.emplace_back(1);
  for (int i = 1; i <= t; ++i) {
    Rat b = 1;
    for (int j = 1; j <= t; ++j) {
      if (j == i) continue;
      Int nu = Int(dseq[j]) - Int(dseq[0]);
      Int de = Int(dseq[j]) - Int(dseq[i]);
      if (nu < 0) nu = -nu;
      if (de < 0) de = -de;
      b *= Rat(nu, de);
    }
    betti.push_back(b);
  }
  return PureDiagram{dseq, std::move(betti)};
}

NdqReport n_dq_satisfied(const BettiDiagram& D, int d, int q) {
  if (q < 1) throw std::invalid_argument("n_dq: q >= 1 required");
  NdqReport rep;
  rep.truncated = q > D.pdim();
  rep.checked_up_to = std::min(q, D.pdim());
  rep.holds = true;
  for (int i = 1; i <= rep.checked_up_to; ++i) {
    if (D.max_degree(i) != d + i - 1) {
      rep.holds = false;
      break;
    }
  }
  return rep;
}

}  // namespace bettilab
