#pragma once

#include "bettilab/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bettilab {

// Dense matrix over Q with exact Gaussian elimination.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  int rank() const;

  // One solution of A x = b, or nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Dense matrix over F_p, p prime and < 2^32 so products fit in 64 bits.
class FpMat {
 public:
  FpMat(int rows, int cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  int rank() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

// Deterministic primality test for moduli below 2^32.
bool is_prime_u32(std::uint64_t n);

// Reduces a rational into F_p. Throws if the denominator vanishes mod p.
std::uint64_t rat_mod(const Rat& r, std::uint64_t p);

}  // namespace bettilab
