#include "doctest.h"

#include "bettilab/diagram.hpp"
#include "bettilab/jacobian.hpp"

#include <algorithm>
#include <string>

using namespace bettilab;

namespace {

MultiPoly P4(const std::string& s) { return MultiPoly::parse(s, 4); }

}  // namespace

TEST_CASE("generators, syzygy, and socle at d = 2") {
  JacobianResolution R = build_jacobian(2);
  REQUIRE(R.gens.size() == 4);
  CHECK(R.gens[0] == P4("x1*x2"));
  CHECK(R.gens[1] == P4("x1^2 + 2*x2*x3"));
  CHECK(R.gens[2] == P4("x2^2 + 2*x3*x4"));
  CHECK(R.gens[3] == P4("x3^2"));
  CHECK(R.ell_x == P4("x1"));
  CHECK(R.ell_y == P4("-x2"));
  CHECK(R.ell_z == P4("2*x3"));
  CHECK(R.ell_w == P4("-4*x4"));
  CHECK(R.socle == P4("x1*x3"));

  // the generators really are the partials of x^d y + y^d z + z^d w
  MultiPoly f = P4("x1^2*x2 + x2^2*x3 + x3^2*x4");
  CHECK(f.derivative(0) == Rat(2) * R.gens[0]);
  CHECK(f.derivative(1) == R.gens[1]);
  CHECK(f.derivative(2) == R.gens[2]);
  CHECK(f.derivative(3) == R.gens[3]);

  // and the syzygy annihilates them
  MultiPoly combo = R.ell_x * R.gens[0] + R.ell_y * R.gens[1] + R.ell_z * R.gens[2] +
                    R.ell_w * R.gens[3];
  CHECK(combo.is_zero());

  CHECK_THROWS(build_jacobian(1));
}

TEST_CASE("matrix shapes and twist ledger") {
  for (int d = 2; d <= 4; ++d) {
    JacobianResolution R = build_jacobian(d);
    CHECK(R.phi1.rows() == 1);
    CHECK(R.phi1.cols() == 4);
    CHECK(R.phi2.rows() == 4);
    CHECK(R.phi2.cols() == 7);
    CHECK(R.phi3.rows() == 7);
    CHECK(R.phi3.cols() == 5);
    CHECK(R.phi4.rows() == 5);
    CHECK(R.phi4.cols() == 1);
    CHECK(R.a_g.rows() == 5);
    CHECK(R.a_g.is_alternating());
  }

  DegreeLedger L = degree_ledger(3);
  CHECK(L.f1 == std::vector<int>{3, 3, 3, 3});
  CHECK(L.f2 == std::vector<int>{4, 6, 6, 6, 6, 6, 6});
  CHECK(L.f3 == std::vector<int>{7, 7, 7, 7, 8});
  CHECK(L.f4 == std::vector<int>{8});
}

TEST_CASE("composites vanish and a sign flip breaks them") {
  for (int d = 2; d <= 4; ++d) {
    ComplexCheck cc = verify_complex(build_jacobian(d));
    CHECK(cc.d12);
    CHECK(cc.d23);
    CHECK(cc.d34);
    CHECK(cc.all());
  }

  JacobianResolution bad = build_jacobian(2);
  bad.phi2.at(0, 0) = -bad.phi2.at(0, 0);
  ComplexCheck cc = verify_complex(bad);
  CHECK(!cc.d12);
  CHECK(!cc.all());
}

TEST_CASE("entries are homogeneous of the ledger degrees") {
  for (int d = 2; d <= 6; ++d) {
    GradingCheck gc = verify_grading(build_jacobian(d));
    CHECK(gc.phi1);
    CHECK(gc.phi2);
    CHECK(gc.phi3);
    CHECK(gc.phi4);
  }
}

TEST_CASE("generic ranks split the free modules exactly") {
  RankCheck rc = verify_ranks(build_jacobian(2), 2147483647ull, 5, 0);
  CHECK(rc.r1 == 1);
  CHECK(rc.r2 == 3);
  CHECK(rc.r3 == 4);
  CHECK(rc.r4 == 1);
  CHECK(rc.expected());

  // a smaller prime works as well
  CHECK(verify_ranks(build_jacobian(3), 32003, 5, 7).expected());
}

TEST_CASE("minor scan certifies height of the fitting ideals") {
  for (int d = 2; d <= 3; ++d) {
    FittingReport fr = verify_fitting_minors(build_jacobian(d));
    CHECK(fr.phi2_z3d.found);
    CHECK(fr.phi2_x3d3y3.found);
    CHECK(fr.phi3_zd2.found);
    CHECK(fr.phi3_xd1y3.found);
    CHECK(fr.phi3_mixed.found);
    CHECK(fr.case_xz_covered);
    CHECK(fr.case_yz_covered);
    CHECK(fr.phi2_height_ok());
    CHECK(fr.phi3_height_ok());
    CHECK(fr.ok());
    CHECK(std::find(fr.mixed_coefficients.begin(), fr.mixed_coefficients.end(), Rat(d)) !=
          fr.mixed_coefficients.end());
    CHECK(!fr.phi2_z3d.rows.empty());
    CHECK(!fr.phi2_z3d.value.empty());
  }
}

TEST_CASE("socle element and pfaffian structure") {
  for (int d = 2; d <= 3; ++d) {
    SocleReport sr = verify_socle(build_jacobian(d));
    CHECK(sr.socle_outside_ideal);
    CHECK(sr.x_multiple_inside);
    CHECK(sr.y_multiple_inside);
    CHECK(sr.z_multiple_inside);
    CHECK(sr.w_multiple_inside);
    CHECK(sr.pfaffians_match);
    CHECK(sr.socle_degree == 2 * d - 2);
    CHECK(sr.tail_shift == 2 * d + 2);
    CHECK(sr.degrees_ok);
    CHECK(sr.ok());
  }
}

TEST_CASE("implied diagrams and their degree monotonicity") {
  BettiDiagram d2 = implied_diagram(2);
  CHECK(d2.entry(0, 0) == 1);
  CHECK(d2.entry(1, 2) == 4);
  CHECK(d2.entry(2, 3) == 1);
  CHECK(d2.entry(2, 4) == 6);
  CHECK(d2.entry(3, 5) == 5);  // 2d+1 and 3d-1 coincide at d = 2
  CHECK(d2.entry(4, 6) == 1);
  CHECK(check_monotonicity(d2).upper_strict);

  BettiDiagram d3 = implied_diagram(3);
  CHECK(d3.entry(1, 3) == 4);
  CHECK(d3.entry(2, 4) == 1);
  CHECK(d3.entry(2, 6) == 6);
  CHECK(d3.entry(3, 7) == 4);
  CHECK(d3.entry(3, 8) == 1);
  CHECK(d3.entry(4, 8) == 1);
  auto rep3 = check_monotonicity(d3);
  CHECK(rep3.lower_strict);
  CHECK(!rep3.upper_strict);  // t_3 = t_4 = 8

  auto rep4 = check_monotonicity(implied_diagram(4));
  CHECK(rep4.lower_strict);
  CHECK(!rep4.upper_strict);  // t_4 = 10 below t_3 = 11
  REQUIRE(rep4.first_violation);
  CHECK(rep4.first_violation->sequence == 'u');
  CHECK(rep4.first_violation->i == 4);
  CHECK(rep4.first_violation->prev == 11);
  CHECK(rep4.first_violation->cur == 10);
}

TEST_CASE("tail comparison across the three regimes") {
  TailReport t2 = tail_monotonicity(2);
  CHECK(t2.verdict == TailVerdict::Increasing);
  CHECK(t2.dbar3 == 5);
  CHECK(t2.dbar4 == 6);
  CHECK(t2.matches_claim);

  TailReport t3 = tail_monotonicity(3);
  CHECK(t3.verdict == TailVerdict::Equal);
  CHECK(t3.dbar3 == 8);
  CHECK(t3.dbar4 == 8);
  CHECK(t3.matches_claim);

  TailReport t4 = tail_monotonicity(4);
  CHECK(t4.verdict == TailVerdict::StrictlyDecreasing);
  CHECK(t4.dbar3 == 11);
  CHECK(t4.dbar4 == 10);
  CHECK(t4.matches_claim);

  TailReport t6 = tail_monotonicity(6);
  CHECK(t6.verdict == TailVerdict::StrictlyDecreasing);
  CHECK(t6.matches_claim);
}
