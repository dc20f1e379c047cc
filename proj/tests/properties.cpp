#include "doctest.h"

#include "bettilab/bounds.hpp"
#include "bettilab/decompose.hpp"
#include "bettilab/dg_obstruction.hpp"
#include "bettilab/io.hpp"
#include "bettilab/monomial.hpp"
#include "bettilab/polynomial.hpp"
#include "bettilab/subadditivity.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace bettilab;

namespace {

bool all_hold(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

DegreeSequence random_dseq(std::mt19937_64& eng, int max_len, int max_entry) {
  int len = 2 + static_cast<int>(eng() % static_cast<std::uint64_t>(max_len - 1));
  std::vector<int> pool(static_cast<std::size_t>(max_entry + 1));
  for (int i = 0; i <= max_entry; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = pool.size() - 1; i > 0; --i)
    std::swap(pool[i], pool[eng() % (i + 1)]);
  std::vector<int> take(pool.begin(), pool.begin() + len);
  std::sort(take.begin(), take.end());
  return DegreeSequence(take);
}

// deterministic corpus of random squarefree tables, seed-indexed
struct CorpusMember {
  MonomialIdeal ideal;
  BettiDiagram table;
  int codim;
};

std::vector<CorpusMember> corpus(int count) {
  std::vector<CorpusMember> out;
  std::uint64_t seed = 1;
  while (static_cast<int>(out.size()) < count) {
    int n = 3 + static_cast<int>(seed % 5);  // 3..7
    int r = 2 + static_cast<int>(seed % 6);  // 2..7
    MonomialIdeal I = random_squarefree(n, r, seed);
    ++seed;
    BettiDiagram D = betti_table(I);
    int c = height(I);
    out.push_back(CorpusMember{std::move(I), std::move(D), c});
  }
  return out;
}

const std::vector<CorpusMember>& shared_corpus() {
  static const std::vector<CorpusMember> c = corpus(200);
  return c;
}

}  // namespace

TEST_CASE("pure diagram exactness over a thousand random degree sequences") {
  std::mt19937_64 eng(20240901);
  for (int trial = 0; trial < 1000; ++trial) {
    DegreeSequence d = random_dseq(eng, 6, 12);
    PureDiagram p = herzog_kuhl(d);
    CHECK(p.satisfies_exactness());
    CHECK(p.betti[0] == Rat(1));
    for (const auto& b : p.betti) CHECK(b > 0);
  }
}

TEST_CASE("decomposition round trips over the squarefree corpus") {
  int chains_checked = 0;
  for (const auto& m : shared_corpus()) {
    Decomposition dec = decompose(m.table, m.codim);
    CHECK(dec.complete);
    if (!dec.complete) continue;
    CHECK(reconstruct(dec.terms) == m.table);

    Rat wsum = 0;
    for (const auto& t : dec.terms) {
      CHECK(t.weight > 0);
      wsum += t.weight;
    }
    CHECK(wsum == Rat(1));  // beta_0 = 1 for every cyclic quotient

    // extraction order is a chain: each sequence dominates the previous
    // one on the indices both still reach, and lengths never grow
    for (std::size_t k = 1; k < dec.terms.size(); ++k) {
      const DegreeSequence& a = dec.terms[k - 1].dseq;
      const DegreeSequence& b = dec.terms[k].dseq;
      CHECK(b.size() <= a.size());
      DseqOrder ord = compare_dseq(a.truncate(b.top_index()), b);
      bool chained = ord == DseqOrder::LessEqual || ord == DseqOrder::Equal;
      CHECK(chained);
      ++chains_checked;
    }
  }
  CHECK(chains_checked > 100);
}

TEST_CASE("componentwise order on degree sequences is a partial order") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 200; ++trial) {
    DegreeSequence a = random_dseq(eng, 5, 9);
    DegreeSequence b = random_dseq(eng, 5, 9);
    CHECK(compare_dseq(a, a) == DseqOrder::Equal);
    if (a.size() != b.size()) continue;
    DseqOrder ab = compare_dseq(a, b);
    DseqOrder ba = compare_dseq(b, a);
    switch (ab) {
      case DseqOrder::Equal: CHECK(ba == DseqOrder::Equal); break;
      case DseqOrder::LessEqual: CHECK(ba == DseqOrder::GreaterEqual); break;
      case DseqOrder::GreaterEqual: CHECK(ba == DseqOrder::LessEqual); break;
      case DseqOrder::Incomparable: CHECK(ba == DseqOrder::Incomparable); break;
    }
  }
}

TEST_CASE("pfaffian squared is the determinant") {
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 25; ++trial) {
    PolyMatrix b(4, 4, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        MultiPoly::Expo e = {static_cast<int>(eng() % 3), static_cast<int>(eng() % 3),
                             static_cast<int>(eng() % 3)};
        Rat c = Rat(static_cast<long long>(eng() % 7) - 3);
        MultiPoly p = MultiPoly::monomial(3, e, c == 0 ? Rat(1) : c);
        b.at(i, j) = p;
        b.at(j, i) = -p;
      }
    REQUIRE(b.is_alternating());
    MultiPoly pf = pfaffian4(b);
    CHECK(pf * pf == b.determinant());
  }
}

TEST_CASE("randomized rank never exceeds the shape and grows with trials") {
  std::mt19937_64 eng(13);
  for (int trial = 0; trial < 10; ++trial) {
    int rows = 1 + static_cast<int>(eng() % 4);
    int cols = 1 + static_cast<int>(eng() % 4);
    PolyMatrix m(rows, cols, 2);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        MultiPoly::Expo e = {static_cast<int>(eng() % 2), static_cast<int>(eng() % 2)};
        m.at(i, j) = MultiPoly::monomial(2, e, Rat(static_cast<long long>(eng() % 5)));
      }
    int r1 = rank_random(m, 32003, 1, 99);
    int r3 = rank_random(m, 32003, 3, 99);
    CHECK(r1 <= r3);
    CHECK(r3 <= std::min(rows, cols));
  }
}

TEST_CASE("endpoint evaluation dominates the integer range") {
  for (int d = 2; d <= 3; ++d)
    for (int p = 5; p <= 6; ++p)
      for (int j = 2; j <= p; ++j)
        for (int spread = 0; spread <= 5; ++spread) {
          int lo = d + j - 1, hi = lo + spread;
          Rat cap = std::max(eval_f(d, p, j, Rat(lo)), eval_f(d, p, j, Rat(hi)));
          for (int x = lo; x <= hi; ++x) CHECK(eval_f(d, p, j, Rat(x)) <= cap);
        }
}

TEST_CASE("bound suite holds across the equigenerated corpus") {
  int degree_checked = 0, small_p_checked = 0, general_checked = 0;
  for (const auto& m : shared_corpus()) {
    auto d = equigenerated_degree(m.ideal);
    if (!d) continue;
    const BettiDiagram& D = m.table;
    int p = D.pdim();
    if (p < 1) continue;

    if (m.codim >= 2) {
      auto [lo, hi] = mu_bounds(D, *d, m.codim);
      CHECK(lo.holds);
      CHECK(hi.holds);
      CHECK(beta_c_lower(D, *d, m.codim).holds);
      ++degree_checked;
    }

    auto dbar = upper_degree_sequence(D);
    if (p == 3 || p == 4) {
      for (const auto& r : betti_upper_small_p(*d, p, dbar, &D)) CHECK(r.holds);
      ++small_p_checked;
    }
    if (p >= 5) {
      for (int j = 2; j <= p; ++j) {
        Rat bj = D.column_total(j);
        CHECK(betti_upper_general(*d, p, j, dbar[static_cast<std::size_t>(j)], &bj).holds);
        ++general_checked;
      }
    }
  }
  CHECK(degree_checked > 20);
  CHECK(small_p_checked > 5);
  CHECK(general_checked > 5);
}

TEST_CASE("subadditivity suite holds for quadratic corpus members") {
  int checked = 0;
  for (const auto& m : shared_corpus()) {
    if (equigenerated_degree(m.ideal) != 2) continue;
    const BettiDiagram& D = m.table;
    if (D.pdim() < 1) continue;
    TSequence t(upper_degree_sequence(D), D.pdim());
    TauSequence tau = TauSequence::koszul();
    CHECK(all_hold(check_ptibi(t, tau)));
    CHECK(all_hold(koszul_bounds(t, D.pdim())));
    CHECK(all_hold(reg_intertwine(t, tau)));
    ++checked;
  }
  CHECK(checked > 20);
}

namespace {

// brute force: can `target` be written as a sum of at most `budget` parts
// drawn (with repetition) from `parts`?
bool partition_feasible(int target, int budget, const std::vector<int>& parts) {
  if (target == 0) return true;
  if (budget == 0) return false;
  for (int p : parts)
    if (p <= target && partition_feasible(target - p, budget - 1, parts)) return true;
  return false;
}

}  // namespace

TEST_CASE("strand verdicts agree with brute-force partition search") {
  int consistent_seen = 0, flagged_seen = 0;
  for (const auto& m : shared_corpus()) {
    if (equigenerated_degree(m.ideal) != 2) continue;
    const BettiDiagram& D = m.table;
    int top = std::max(2, D.pdim());
    StrandVerdict v = strand_generation_test(D, top);
    if (v.consistent) {
      // every checked entry admits an admissible generation pattern
      for (const auto& [key, val] : D.entries()) {
        (void)val;
        auto [i, j] = key;
        if (i < 2 || i > top) continue;
        CHECK(partition_feasible(i, j - i, v.linear_strand_support));
      }
      ++consistent_seen;
    } else {
      REQUIRE(v.obstruction);
      CHECK(!partition_feasible(v.obstruction->i, v.obstruction->j - v.obstruction->i,
                                v.linear_strand_support));
      ++flagged_seen;
    }
  }
  CHECK(consistent_seen + flagged_seen > 20);
}

TEST_CASE("prime field tables dominate the rational table") {
  int compared = 0;
  for (std::size_t idx = 0; idx < shared_corpus().size(); idx += 20) {
    const auto& m = shared_corpus()[idx];
    BettiDiagram mod2 = betti_table(m.ideal, 2);
    for (const auto& [key, val] : m.table.entries())
      CHECK(mod2.entry(key.first, key.second) >= val);
    ++compared;
  }
  CHECK(compared == 10);
}

TEST_CASE("taylor strand output is internally consistent") {
  for (std::size_t idx = 0; idx < shared_corpus().size(); idx += 10) {
    const auto& m = shared_corpus()[idx];
    const BettiDiagram& D = m.table;
    CHECK(D.entry(0, 0) == 1);
    CHECK(D.column_total(0) == 1);
    CHECK(D.column_total(1) == static_cast<int>(m.ideal.gens.size()));
    CHECK(D.pdim() <= static_cast<int>(m.ideal.gens.size()));
    CHECK(D.pdim() <= m.ideal.nvars);
    CHECK(D.pdim() >= m.codim);
    CHECK(check_monotonicity(D).lower_strict);
  }
}

TEST_CASE("serialization round trips across the corpus") {
  for (std::size_t idx = 0; idx < shared_corpus().size(); idx += 10) {
    const auto& m = shared_corpus()[idx];
    CHECK(parse_diagram_json(diagram_to_json(m.table)) == m.table);
  }
}
