#pragma once

#include "bettilab/linalg.hpp"
#include "bettilab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bettilab {

// Sparse multivariate polynomial over Q with exponent-vector monomials.
// Prime-field values enter through eval_mod and the F_p linear algebra in
// linalg.hpp; coefficients themselves stay rational.
class MultiPoly {
 public:
  using Expo = std::vector<int>;
  using TermMap = std::map<Expo, Rat>;  // lex order on exponent vectors

  explicit MultiPoly(int nvars) : n_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int idx);  // 0-based
  static MultiPoly monomial(int nvars, Expo e, const Rat& c = Rat(1));

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly derivative(int var) const;

  int degree() const;  // max total degree; -1 for the zero polynomial
  bool is_homogeneous() const;

  // Scalar multiple of a single monomial? Returns (exponents, coefficient).
  std::optional<std::pair<Expo, Rat>> monomial_form() const;

  std::uint64_t eval_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

  // Text form `3*x1^2*x3 - 2*x4`; integer coefficients, variables x1..xn.
  static MultiPoly parse(const std::string& text, int nvars);
  std::string str() const;

  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void add_term(const Expo& e, const Rat& c);

  int n_;
  TermMap terms_;
  friend MultiPoly operator*(const Rat& c, const MultiPoly& p);
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// Dense matrix of polynomials with optional graded shift metadata
// (row_shifts = target degrees, col_shifts = source degrees).
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return n_; }
  MultiPoly& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const MultiPoly& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_zero() const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  MultiPoly determinant() const;  // cofactor expansion; intended for order <= 5
  bool is_alternating() const;    // square, zero diagonal, a_{ij} = -a_{ji}

  // Every entry zero or homogeneous of degree col_shift - row_shift.
  // Requires both shift vectors to be populated.
  bool graded_consistent() const;

  std::vector<int> row_shifts, col_shifts;

 private:
  int rows_, cols_, n_;
  std::vector<MultiPoly> a_;
};

// The five Pfaffians of the 4x4 alternating submatrices of a 5x5
// alternating matrix (row/col i removed, i = 0..4).
std::vector<MultiPoly> pfaffians_max(const PolyMatrix& A);

// pf of a 4x4 alternating matrix: a01*a23 - a02*a13 + a03*a12.
MultiPoly pfaffian4(const PolyMatrix& B);

// Homogeneous ideal membership in the exact degree of h: solves
// h = sum_i g_i q_i over all monomials of degree deg h - deg g_i.
// Sound and complete per degree; nullopt = not a member.
std::optional<std::vector<MultiPoly>> graded_membership(const MultiPoly& h,
                                                        const std::vector<MultiPoly>& gens);

// Max rank of M evaluated at `trials` pseudo-random points of F_p^n.
// A lower bound for rank over Q(x); deterministic for a given seed, and
// each trial derives its own generator so the aggregate is order-free.
int rank_random(const PolyMatrix& M, std::uint64_t p, int trials, std::uint64_t seed);

// All exponent vectors of total degree deg in nvars variables.
std::vector<MultiPoly::Expo> monomials_of_degree(int nvars, int deg);

}  // namespace bettilab
