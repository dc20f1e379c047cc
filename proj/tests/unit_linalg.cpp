#include "doctest.h"

#include "bettilab/linalg.hpp"

using namespace bettilab;

TEST_CASE("rational matrix rank") {
  RatMat zero(3, 4);
  CHECK(zero.rank() == 0);

  RatMat id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(id.rank() == 3);

  // second row is twice the first
  RatMat dep(2, 3);
  dep.at(0, 0) = 1; dep.at(0, 1) = Rat(1, 2); dep.at(0, 2) = 3;
  dep.at(1, 0) = 2; dep.at(1, 1) = 1;         dep.at(1, 2) = 6;
  CHECK(dep.rank() == 1);

  RatMat m(2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = -1;
  CHECK(m.rank() == 2);
}

TEST_CASE("rational linear solve") {
  RatMat a(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 1;
  a.at(1, 0) = 1; a.at(1, 1) = 3;
  auto x = a.solve({Rat(5), Rat(10)});
  REQUIRE(x);
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(3));

  // inconsistent: duplicate row, different right-hand side
  RatMat b(2, 2);
  b.at(0, 0) = 1; b.at(0, 1) = 1;
  b.at(1, 0) = 1; b.at(1, 1) = 1;
  CHECK(!b.solve({Rat(1), Rat(2)}));

  // underdetermined but consistent: any returned solution must satisfy Ax = b
  RatMat c(1, 3);
  c.at(0, 0) = 1; c.at(0, 1) = 2; c.at(0, 2) = 3;
  auto y = c.solve({Rat(6)});
  REQUIRE(y);
  CHECK((*y)[0] + 2 * (*y)[1] + 3 * (*y)[2] == Rat(6));
}

TEST_CASE("prime field matrix rank can drop below the rational rank") {
  FpMat m(2, 2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = 1;  // [[1,1],[1,-1]] reduced mod 2
  CHECK(m.rank() == 1);

  FpMat big(3, 3, 2147483647ull);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) big.at(i, j) = static_cast<std::uint64_t>(i + j + 1);
  CHECK(big.rank() == 2);  // rows are arithmetic progressions
}

TEST_CASE("modular arithmetic helpers") {
  CHECK(mod_pow(2, 10, 1000003) == 1024);
  CHECK(mod_pow(5, 0, 7) == 1);
  CHECK(mod_inv(3, 7) == 5);
  CHECK(mod_inv(1, 2) == 1);
  for (std::uint64_t a = 1; a < 11; ++a) CHECK(a * mod_inv(a, 11) % 11 == 1);
}

TEST_CASE("primality below 2^32") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(3));
  CHECK(is_prime_u32(32003));
  CHECK(is_prime_u32(2147483647ull));
  CHECK(is_prime_u32(4294967291ull));
  CHECK(!is_prime_u32(0));
  CHECK(!is_prime_u32(1));
  CHECK(!is_prime_u32(4));
  CHECK(!is_prime_u32(561));  // Carmichael number
  CHECK(!is_prime_u32(4294967295ull));
}

TEST_CASE("rational reduction into a prime field") {
  CHECK(rat_mod(Rat(1, 2), 7) == 4);
  CHECK(rat_mod(Rat(-1), 7) == 6);
  CHECK(rat_mod(Rat(10, 3), 7) == 10 * mod_inv(3, 7) % 7);
  CHECK_THROWS(rat_mod(Rat(1, 7), 7));
}
