#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bettilab/diagram.hpp"
#include "bettilab/polynomial.hpp"

namespace bettilab {

// Explicit graded free resolution of S/J for J the gradient ideal of
// f = x^d y + y^d z + z^d w in S = k[x,y,z,w], d >= 2.
// Shapes: phi1 1x4, phi2 4x7, phi3 7x5, phi4 5x1; a_g is the 5x5
// alternating matrix whose maximal Pfaffians generate (J, socle).
struct JacobianResolution {
  int d = 0;
  std::vector<MultiPoly> gens;  // x^{d-1}y, x^d+dy^{d-1}z, y^d+dz^{d-1}w, z^d
  // linear syzygy (x, -y, dz, -d^2 w)
  MultiPoly ell_x{4}, ell_y{4}, ell_z{4}, ell_w{4};
  MultiPoly socle{4};  // x^{d-1} z^{d-1}
  // shifts populated from the degree ledger
  PolyMatrix phi1{0, 0, 4}, phi2{0, 0, 4}, phi3{0, 0, 4}, phi4{0, 0, 4};
  PolyMatrix a_g{0, 0, 4};
};

JacobianResolution build_jacobian(int d);

// Free-module twists of the resolution, smallest to largest homological index.
struct DegreeLedger {
  int d;
  std::vector<int> f1;  // (d, d, d, d)
  std::vector<int> f2;  // (d+1, 2d x6)
  std::vector<int> f3;  // (2d+1 x4, 3d-1)
  std::vector<int> f4;  // (2d+2)
};
DegreeLedger degree_ledger(int d);

// Betti diagram of S/J read off the ledger.
BettiDiagram implied_diagram(int d);

struct ComplexCheck {
  bool d12 = false, d23 = false, d34 = false;
  bool all() const { return d12 && d23 && d34; }
};
// phi1*phi2 = 0, phi2*phi3 = 0, phi3*phi4 = 0 as symbolic identities.
ComplexCheck verify_complex(const JacobianResolution& R);

struct GradingCheck {
  bool phi1 = false, phi2 = false, phi3 = false, phi4 = false;
  bool all() const { return phi1 && phi2 && phi3 && phi4; }
};
// Every entry homogeneous of the degree the ledger dictates.
GradingCheck verify_grading(const JacobianResolution& R);

struct RankCheck {
  int r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  // 1+3 = 4, 3+4 = 7, 4+1 = 5: ranks add up to the free-module ranks
  bool expected() const { return r1 == 1 && r2 == 3 && r3 == 4 && r4 == 1; }
};
RankCheck verify_ranks(const JacobianResolution& R, std::uint64_t p, int trials,
                       std::uint64_t seed);

struct MinorWitness {
  bool found = false;
  std::vector<int> rows, cols;
  std::string value;  // the minor, as a polynomial string
};

struct FittingReport {
  // order-3 minors of phi2: coprime monomial pair gives height >= 2
  MinorWitness phi2_z3d;       // z^{3d} up to scalar
  MinorWitness phi2_x3d3y3;    // x^{3(d-1)} y^3 up to scalar
  // order-4 minors of phi3
  MinorWitness phi3_zd2;       // z^{d+2} up to scalar
  MinorWitness phi3_xd1y3;     // x^{d-1} y^3 up to scalar
  MinorWitness phi3_mixed;     // y^{d+2} + c y^2 z^{d-1} w up to scalar
  std::vector<Rat> mixed_coefficients;  // every c realized by some minor
  // any prime over the order-4 minors contains (x,z) or (y,z); each case is
  // killed by a minor with nonzero residue mod those two variables
  bool case_xz_covered = false;
  bool case_yz_covered = false;
  bool phi2_height_ok() const { return phi2_z3d.found && phi2_x3d3y3.found; }
  bool phi3_height_ok() const {
    return phi3_zd2.found && phi3_xd1y3.found && case_xz_covered && case_yz_covered;
  }
  bool ok() const { return phi2_height_ok() && phi3_height_ok(); }
};
FittingReport verify_fitting_minors(const JacobianResolution& R);

struct SocleReport {
  bool socle_outside_ideal = false;    // x^{d-1}z^{d-1} not in J
  bool x_multiple_inside = false;      // x * socle in J
  bool y_multiple_inside = false;
  bool z_multiple_inside = false;
  bool w_multiple_inside = false;
  bool pfaffians_match = false;  // maximal Pfaffians of a_g = gens + socle, up to scalars
  int socle_degree = 0;          // 2d-2
  int tail_shift = 0;            // 2d+2
  bool degrees_ok = false;
  bool ok() const {
    return socle_outside_ideal && x_multiple_inside && y_multiple_inside &&
           z_multiple_inside && w_multiple_inside && pfaffians_match && degrees_ok;
  }
};
SocleReport verify_socle(const JacobianResolution& R);

enum class TailVerdict { Increasing, Equal, StrictlyDecreasing };

struct TailReport {
  TailVerdict verdict;
  int dbar3 = 0, dbar4 = 0;
  // increasing at d=2, equal at d=3, strictly decreasing for d >= 4
  bool matches_claim = false;
};
TailReport tail_monotonicity(int d);

}  // namespace bettilab
