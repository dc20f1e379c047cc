#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace bettilab {

// Arbitrary-precision integers and rationals. All arithmetic in this
// library is exact; nothing is ever rounded through a double.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Renders "p/q" in lowest terms, or just "p" when q == 1.
std::string rat_to_string(const Rat& r);

// Parses "p", "-p", "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rat> rat_from_string(const std::string& s);

// Exact binomial coefficient, zero when k < 0 or k > n.
Int binomial(long long n, long long k);

// Rounds down to the nearest integer (exact floor, also for negatives).
Int floor_rat(const Rat& r);

// Raises b to a nonnegative power.
Int int_pow(const Int& b, unsigned e);

}  // namespace bettilab
