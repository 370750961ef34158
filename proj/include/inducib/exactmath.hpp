#pragma once

// Exact integer/rational arithmetic, configurable-precision floats and the
// combinatorial primitives used throughout the library.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace inducib {

using ExactInt = boost::multiprecision::mpz_int;
using ExactRat = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

/// Run-wide float precision in significant decimal digits (default 64).
inline constexpr unsigned kDefaultPrecisionDigits = 64;
inline constexpr unsigned kMinPrecisionDigits = 50;

/// Sets the precision used for every BigFloat created afterwards. Call before
/// spawning worker threads. Values below kMinPrecisionDigits are raised.
void set_float_precision(unsigned digits10);
unsigned float_precision();

ExactInt factorial(int n);

/// (z)_k: zero when z <= k-1, otherwise z(z-1)...(z-k+1). (z)_0 = 1.
ExactInt falling_factorial(const ExactInt& z, int k);
ExactRat falling_factorial(const ExactRat& z, int k);

/// (z)_k / k!. Returns 1 for k == 0 and 0 for k < 0.
ExactInt binomial(const ExactInt& z, int k);
ExactRat binomial(const ExactRat& z, int k);
inline ExactInt binomial(long long z, int k) { return binomial(ExactInt(z), k); }

/// total! / prod(parts_i!). Throws std::invalid_argument unless the parts are
/// positive and sum to total.
ExactInt multinomial(int total, std::span<const int> parts);

/// Product of factorials of the multiplicities of the distinct values.
ExactInt sym_multiplicity(std::span<const int> sizes);

/// Lossless "p/q" (or "p" when q == 1).
std::string to_string(const ExactRat& q);
std::string to_string(const ExactInt& z);

/// Decimal approximation with the given number of significant digits.
std::string to_decimal(const ExactRat& q, int digits = 20);
std::string to_decimal(const BigFloat& x, int digits = 20);

ExactRat parse_rational(const std::string& text);

BigFloat to_bigfloat(const ExactRat& q);
inline double to_double(const ExactRat& q) { return q.convert_to<double>(); }

/// Integer power for exact rationals (exp >= 0).
ExactRat ipow(const ExactRat& base, unsigned exp);

}  // namespace inducib
