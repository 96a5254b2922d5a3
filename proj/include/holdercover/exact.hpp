#pragma once

// Exact exponent algebra. Rationals are GMP mpq values; the only irrational
// quantity that ever enters is log_4(n), which is handled as an MPFR interval
// whose precision is widened until a decision is unambiguous.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace holdercover {

using Rational = mpq_class;
using BigInt = mpz_class;

inline constexpr int kDefaultPrecisionBits = 4096;

// Accepts "p/q", integers and plain decimals such as "0.083333". No exponents.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& value);

BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);
Rational abs(const Rational& value);

// 4^{-e} rounded to nearest long double.
long double pow4_neg(const Rational& e);

// 4^{-a} - 4^{-b} computed at high precision, then rounded once.
long double pow4_neg_difference(const Rational& a, const Rational& b);

long double to_long_double(const Rational& value);
Rational from_long_double(long double value);

// True when log_4(n) is rational, i.e. n is a power of two.
bool log4_is_rational(std::uint64_t n);

// log_4(n) exactly; requires log4_is_rational(n).
Rational log4_exact(std::uint64_t n);

// ceil(offset + scale * log_4(n)). Throws PrecisionError when the interval
// still straddles an integer at max_bits.
BigInt ceil_offset_log4(const Rational& offset, const Rational& scale, std::uint64_t n,
                        int max_bits = kDefaultPrecisionBits);

// Sign (-1, 0, +1) of offset + scale * log_4(n), decided exactly.
int sign_offset_log4(const Rational& offset, const Rational& scale, std::uint64_t n,
                     int max_bits = kDefaultPrecisionBits);

// Dyadic rational near offset + scale * log_4(n) (midpoint of a bits-wide interval).
Rational approx_offset_log4(const Rational& offset, const Rational& scale, std::uint64_t n,
                            int bits = 128);

// Sign of log_4(n) + x - y, i.e. compares n * 4^x against 4^y.
inline int compare_log4(std::uint64_t n, const Rational& x, const Rational& y,
                        int max_bits = kDefaultPrecisionBits) {
    return sign_offset_log4(x - y, Rational(1), n, max_bits);
}

}  // namespace holdercover
