#include "bettilab/linalg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <stdexcept>
#include <utility>

namespace bettilab {

int RatMat::rank() const {
  std::vector<Rat> w = a_;
  auto e = [&](int r, int c) -> Rat& { return w[static_cast<std::size_t>(r) * cols_ + c]; };
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (e(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int k = c; k < cols_; ++k) std::swap(e(piv, k), e(rank, k));
    Rat inv = Rat(1) / e(rank, c);
    for (int r = rank + 1; r < rows_; ++r) {
      if (e(r, c) == 0) continue;
      Rat f = e(r, c) * inv;
      for (int k = c; k < cols_; ++k) e(r, k) -= f * e(rank, k);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: size mismatch");
  // Eliminate on [A | b], then back-substitute with free variables at zero.
  int w = cols_ + 1;
  std::vector<Rat> m(static_cast<std::size_t>(rows_) * w);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m[static_cast<std::size_t>(r) * w + c] = at(r, c);
    m[static_cast<std::size_t>(r) * w + cols_] = b[static_cast<std::size_t>(r)];
  }
  auto e = [&](int r, int c) -> Rat& { return m[static_cast<std::size_t>(r) * w + c]; };

  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols_ && row < rows_; ++c) {
    int piv = -1;
    for (int r = row; r < rows_; ++r)
      if (e(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int k = c; k <= cols_; ++k) std::swap(e(piv, k), e(row, k));
    Rat inv = Rat(1) / e(row, c);
    for (int k = c; k <= cols_; ++k) e(row, k) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || e(r, c) == 0) continue;
      Rat f = e(r, c);
      for (int k = c; k <= cols_; ++k) e(r, k) -= f * e(row, k);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < rows_; ++r)
    if (e(r, cols_) != 0) return std::nullopt;

  std::vector<Rat> x(static_cast<std::size_t>(cols_), Rat(0));
  for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
    x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = e(r, cols_);
  return x;
}

int FpMat::rank() const {
  std::vector<std::uint64_t> w = a_;
  auto e = [&](int r, int c) -> std::uint64_t& { return w[static_cast<std::size_t>(r) * cols_ + c]; };
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (e(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int k = c; k < cols_; ++k) std::swap(e(piv, k), e(rank, k));
    std::uint64_t inv = mod_inv(e(rank, c), p_);
    for (int r = rank + 1; r < rows_; ++r) {
      if (e(r, c) == 0) continue;
      std::uint64_t f = e(r, c) * inv % p_;
      for (int k = c; k < cols_; ++k) {
        std::uint64_t sub = f * e(rank, k) % p_;
        e(r, k) = (e(r, k) + p_ - sub) % p_;
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inv: zero");
  return mod_pow(a, p - 2, p);
}

bool is_prime_u32(std::uint64_t n) {
  if (n >= (1ull << 32)) return false;
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(Int(n), 32);
}

std::uint64_t rat_mod(const Rat& r, std::uint64_t p) {
  Int n = num(r) % Int(p), d = den(r) % Int(p);
  if (n < 0) n += Int(p);
  std::uint64_t nu = n.convert_to<std::uint64_t>();
  std::uint64_t du = d.convert_to<std::uint64_t>();
  if (du == 0) throw std::domain_error("rat_mod: denominator divisible by p");
  return nu * mod_inv(du, p) % p;
}

}  // namespace bettilab
