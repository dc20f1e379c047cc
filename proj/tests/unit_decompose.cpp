#include "doctest.h"

#include "bettilab/decompose.hpp"

using namespace bettilab;

namespace {

BettiDiagram table(std::initializer_list<std::pair<BettiDiagram::Key, int>> kv,
                   bool integral = true) {
  BettiDiagram::EntryMap e;
  for (const auto& [k, v] : kv) e[k] = v;
  return BettiDiagram::from_entries(std::move(e), integral);
}

}  // namespace

TEST_CASE("a non-pure two-column table splits along its chain") {
  // resolution of S/(x^2, xy): not pure, the strand ends before beta_{1,2}
  // is used up, so a length-one tail sequence absorbs the rest
  BettiDiagram D = table({{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
  Decomposition dec = decompose(D, 1);
  CHECK(dec.complete);
  REQUIRE(dec.terms.size() == 2);
  CHECK(dec.terms[0].weight == Rat(1, 2));
  CHECK(dec.terms[0].dseq == DegreeSequence({0, 2, 3}));
  CHECK(dec.terms[1].weight == Rat(1, 2));
  CHECK(dec.terms[1].dseq == DegreeSequence({0, 2}));
  CHECK(reconstruct(dec.terms) == D);
}

TEST_CASE("a pure table is a single term with weight one") {
  // Koszul complex on (x, y)
  BettiDiagram D = table({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
  Decomposition dec = decompose(D, 2);
  CHECK(dec.complete);
  REQUIRE(dec.terms.size() == 1);
  CHECK(dec.terms[0].weight == Rat(1));
  CHECK(dec.terms[0].dseq == DegreeSequence({0, 1, 2}));
  CHECK(reconstruct(dec.terms) == D);
}

TEST_CASE("codim larger than every chain is reported, not decomposed") {
  BettiDiagram D = table({{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
  Decomposition dec = decompose(D, 3);
  CHECK(!dec.complete);
  REQUIRE(dec.offending_column);
  CHECK(*dec.offending_column == 3);
  CHECK(dec.terms.empty());
}

TEST_CASE("three-term chain with fractional weights") {
  // resolution of S/(x^2, xy, y^3)
  BettiDiagram D =
      table({{{0, 0}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 3}, 1}, {{2, 4}, 1}});
  Decomposition dec = decompose(D, 2);
  CHECK(dec.complete);
  REQUIRE(dec.terms.size() == 3);
  CHECK(dec.terms[0].weight == Rat(1, 2));
  CHECK(dec.terms[0].dseq == DegreeSequence({0, 2, 3}));
  CHECK(dec.terms[1].weight == Rat(1, 4));
  CHECK(dec.terms[1].dseq == DegreeSequence({0, 2, 4}));
  CHECK(dec.terms[2].weight == Rat(1, 4));
  CHECK(dec.terms[2].dseq == DegreeSequence({0, 3, 4}));
  CHECK(reconstruct(dec.terms) == D);

  Rat wsum = 0;
  for (const auto& t : dec.terms) wsum += t.weight;
  CHECK(wsum == Rat(1));
}

TEST_CASE("decompose rejects bad inputs") {
  BettiDiagram D = table({{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
  CHECK_THROWS(decompose(D, 0));

  BettiDiagram frac = table({{{0, 0}, 1}}, false);
  CHECK_THROWS(decompose(frac, 1));

  // lower degree sequence (0, 3, 3) is not strictly increasing
  BettiDiagram bad = table({{{0, 0}, 1}, {{1, 3}, 1}, {{2, 3}, 1}});
  CHECK_THROWS(decompose(bad, 1));
}

TEST_CASE("non-tables stop with the offending column recorded") {
  // pdim-2 shape whose middle strand runs dry: after removing the first
  // pure summand the leftover has a gap the chain cannot cross
  BettiDiagram D = table({{{0, 0}, 2}, {{1, 2}, 1}, {{2, 5}, 9}});
  Decomposition dec = decompose(D, 1);
  CHECK(!dec.complete);
  REQUIRE(dec.offending_column);
}

TEST_CASE("reconstruct validates terms") {
  CHECK_THROWS(reconstruct({}));
  CHECK_THROWS(reconstruct({DecompositionTerm{Rat(-1), DegreeSequence({0, 1, 2})}}));

  BettiDiagram sum = reconstruct({DecompositionTerm{Rat(1, 3), DegreeSequence({0, 1, 2})},
                                  DecompositionTerm{Rat(2, 3), DegreeSequence({0, 1, 2})}});
  CHECK(sum == table({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  CHECK(sum.integral());
}
