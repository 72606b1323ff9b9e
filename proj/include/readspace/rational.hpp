#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "readspace/errors.hpp"

namespace readspace {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p", "p/q" (decimal). The result is canonicalized; q = 0 is
// rejected.
Rational parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_str(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return abs(q); }

// floor/ceil as big integers
BigInt rat_floor(const Rational& q);
BigInt rat_ceil(const Rational& q);

// Checked narrowing; throws RangeError if out of range.
std::int64_t to_int64(const BigInt& z);

BigInt pow2_z(std::uint64_t e); // 2^e

} // namespace readspace
