#pragma once

#include <cstdint>
#include <string>

#include "readspace/rational.hpp"

namespace readspace {

// Exact number of the form mantissa * 2^exp2 with an arbitrary-precision
// rational mantissa and a signed 64-bit exponent. Carries quantities like
// r_n = 2^{-a_n^2} * ||u_n - e_{a_n}||_1 whose dyadic factor would blow up a
// plain big-integer denominator.
//
// Canonical form: zero is (0, 0); otherwise both the numerator and the
// denominator of the mantissa are odd (every factor of two lives in exp2).
// All arithmetic is exact; a RangeError signals exponent overflow, never
// rounding.
class ScaledRational {
  public:
    ScaledRational() : m_(0), e_(0) {}
    ScaledRational(Rational m, std::int64_t e);
    explicit ScaledRational(const Rational& q) : ScaledRational(q, 0) {}
    explicit ScaledRational(long v) : ScaledRational(Rational(v), 0) {}

    static ScaledRational pow2(std::int64_t e); // 2^e

    const Rational& mantissa() const { return m_; }
    std::int64_t exp2() const { return e_; }

    bool is_zero() const { return m_ == 0; }
    int sign() const { return sgn(m_); }

    // Lowers to a plain rational; refuses when |exp2| exceeds max_bits
    // (guards against multi-gigabyte numerators, not against inexactness).
    Rational to_rational(std::int64_t max_bits = kDefaultLowerBits) const;

    ScaledRational operator-() const;
    friend ScaledRational operator+(const ScaledRational& a, const ScaledRational& b);
    friend ScaledRational operator-(const ScaledRational& a, const ScaledRational& b);
    friend ScaledRational operator*(const ScaledRational& a, const ScaledRational& b);
    ScaledRational& operator+=(const ScaledRational& o) { return *this = *this + o; }
    ScaledRational& operator-=(const ScaledRational& o) { return *this = *this - o; }
    ScaledRational& operator*=(const ScaledRational& o) { return *this = *this * o; }

    friend ScaledRational div_exact(const ScaledRational& a, const ScaledRational& b);
    friend ScaledRational abs(const ScaledRational& a);

    // Exact three-way comparison of values.
    static int cmp(const ScaledRational& a, const ScaledRational& b);

    friend bool operator==(const ScaledRational& a, const ScaledRational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const ScaledRational& a, const ScaledRational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const ScaledRational& a, const ScaledRational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const ScaledRational& a, const ScaledRational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const ScaledRational& a, const ScaledRational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const ScaledRational& a, const ScaledRational& b) { return cmp(a, b) >= 0; }

    // "m" or "m*2^e" for diagnostics; the JSON form lives in serialize.hpp.
    std::string str() const;

    // Default ceiling for exponent lowering: 2^24 bits ~ 2 MiB numerators.
    static constexpr std::int64_t kDefaultLowerBits = std::int64_t(1) << 24;
    // Ceiling for exponent alignment inside add/cmp; beyond this the aligned
    // mantissa would not fit in memory.
    static constexpr std::int64_t kAlignBitLimit = std::int64_t(1) << 27;

  private:
    void normalize();

    Rational m_;
    std::int64_t e_;
};

ScaledRational abs(const ScaledRational& a);
ScaledRational div_exact(const ScaledRational& a, const ScaledRational& b);

} // namespace readspace
