#include "doctest.h"

#include "bettilab/monomial.hpp"

using namespace bettilab;

namespace {

// edge ideal of the 7-cycle
MonomialIdeal cycle7_ideal() {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> e(7, 0);
    e[static_cast<std::size_t>(i)] = 1;
    e[static_cast<std::size_t>((i + 1) % 7)] = 1;
    gens.push_back(e);
  }
  return make_monomial_ideal(7, std::move(gens));
}

BettiDiagram cycle7_table() {
  BettiDiagram::EntryMap e;
  e[{0, 0}] = 1;
  e[{1, 2}] = 7;
  e[{2, 3}] = 7;
  e[{2, 4}] = 7;
  e[{3, 5}] = 14;
  e[{4, 6}] = 7;
  e[{5, 7}] = 1;
  return BettiDiagram::from_entries(std::move(e), true);
}

}  // namespace

TEST_CASE("generator list validation and minimalization") {
  bool was_minimal = true;
  MonomialIdeal I = make_monomial_ideal(2, {{2, 0}, {2, 1}, {2, 0}}, &was_minimal);
  CHECK(!was_minimal);  // x^2 y is redundant, and x^2 repeats
  CHECK(I.gens.size() == 1);
  CHECK(I.gens[0] == std::vector<int>{2, 0});

  bool minimal2 = false;
  make_monomial_ideal(2, {{2, 0}, {1, 1}}, &minimal2);
  CHECK(minimal2);

  CHECK_THROWS(make_monomial_ideal(0, {{1}}));
  CHECK_THROWS(make_monomial_ideal(2, {}));
  CHECK_THROWS(make_monomial_ideal(2, {{1}}));
  CHECK_THROWS(make_monomial_ideal(2, {{1, -1}}));
  CHECK_THROWS(make_monomial_ideal(2, {{0, 0}}));  // unit generator
}

TEST_CASE("betti table of the 7-cycle edge ideal") {
  BettiDiagram D = betti_table(cycle7_ideal());
  CHECK(D == cycle7_table());
  CHECK(D.integral());

  // the table of a monomial ideal with few generators is characteristic-free
  CHECK(betti_table(cycle7_ideal(), 2) == cycle7_table());
}

TEST_CASE("betti tables of small ideals") {
  // complete intersection (x^2, y^2): Koszul complex
  BettiDiagram ci = betti_table(make_monomial_ideal(2, {{2, 0}, {0, 2}}));
  BettiDiagram::EntryMap e;
  e[{0, 0}] = 1;
  e[{1, 2}] = 2;
  e[{2, 4}] = 1;
  CHECK(ci == BettiDiagram::from_entries(std::move(e), true));

  // (x^2, xy, y^3): one linear and one quadratic syzygy
  BettiDiagram m = betti_table(make_monomial_ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
  BettiDiagram::EntryMap f;
  f[{0, 0}] = 1;
  f[{1, 2}] = 2;
  f[{1, 3}] = 1;
  f[{2, 3}] = 1;
  f[{2, 4}] = 1;
  CHECK(m == BettiDiagram::from_entries(std::move(f), true));

  // principal ideal
  BettiDiagram p = betti_table(make_monomial_ideal(1, {{3}}));
  BettiDiagram::EntryMap g;
  g[{0, 0}] = 1;
  g[{1, 3}] = 1;
  CHECK(p == BettiDiagram::from_entries(std::move(g), true));
}

TEST_CASE("betti table preconditions") {
  MonomialIdeal I = make_monomial_ideal(2, {{2, 0}});
  CHECK_THROWS(betti_table(I, 4));  // characteristic must be prime
  CHECK_THROWS(betti_table(I, 1));

  std::vector<std::vector<int>> many;
  for (int i = 0; i < 21; ++i) {
    std::vector<int> e(21, 0);
    e[static_cast<std::size_t>(i)] = 1;
    e[static_cast<std::size_t>((i + 1) % 21)] = 1;
    many.push_back(e);
  }
  CHECK_THROWS(betti_table(make_monomial_ideal(21, std::move(many))));
}

TEST_CASE("random squarefree generator is deterministic and minimal") {
  MonomialIdeal a = random_squarefree(6, 5, 42);
  MonomialIdeal b = random_squarefree(6, 5, 42);
  CHECK(a.gens == b.gens);
  CHECK(is_squarefree(a));
  CHECK(!a.gens.empty());
  CHECK(a.gens.size() <= 5);

  bool minimal = false;
  make_monomial_ideal(a.nvars, a.gens, &minimal);
  CHECK(minimal);

  MonomialIdeal c = random_squarefree(6, 5, 43);
  CHECK(a.gens != c.gens);  // different seed, different draw

  CHECK_THROWS(random_squarefree(11, 5, 1));
  CHECK_THROWS(random_squarefree(6, 11, 1));
  CHECK_THROWS(random_squarefree(0, 1, 1));
}

TEST_CASE("squarefree detection") {
  CHECK(is_squarefree(cycle7_ideal()));
  CHECK(!is_squarefree(make_monomial_ideal(2, {{2, 0}})));
}

TEST_CASE("equigenerated degree") {
  CHECK(equigenerated_degree(cycle7_ideal()) == 2);
  CHECK(!equigenerated_degree(make_monomial_ideal(2, {{2, 0}, {0, 3}})));
}

TEST_CASE("height as a minimum cover of supports") {
  CHECK(height(cycle7_ideal()) == 4);  // vertex cover of the 7-cycle
  CHECK(height(make_monomial_ideal(2, {{2, 0}})) == 1);
  CHECK(height(make_monomial_ideal(3, {{1, 1, 0}, {0, 0, 2}})) == 2);
  CHECK(height(make_monomial_ideal(2, {{2, 0}, {0, 2}})) == 2);
}
