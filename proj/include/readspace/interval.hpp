#pragma once

#include <cstdint>
#include <string>

#include "readspace/scaled_rational.hpp"

namespace readspace {

// Certified enclosure [lo, hi]. Every operation except sqrt is exact on the
// endpoints, so enclosure soundness is structural; sqrt rounds outward to
// dyadics.
class Interval {
  public:
    Interval() = default; // [0, 0]
    Interval(ScaledRational lo, ScaledRational hi);
    explicit Interval(const ScaledRational& point) : Interval(point, point) {}
    explicit Interval(const Rational& point) : Interval(ScaledRational(point)) {}

    const ScaledRational& lo() const { return lo_; }
    const ScaledRational& hi() const { return hi_; }
    ScaledRational width() const { return hi_ - lo_; }
    Rational midpoint_rational(std::int64_t max_bits = ScaledRational::kDefaultLowerBits) const;

    bool contains(const ScaledRational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Rational& v) const { return contains(ScaledRational(v)); }
    bool is_point() const { return lo_ == hi_; }

    Interval operator-() const { return Interval(-hi_, -lo_); }
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }

    // Requires 0 not in b.
    friend Interval div(const Interval& a, const Interval& b);

    friend Interval abs(const Interval& a);
    friend Interval max(const Interval& a, const Interval& b);
    friend Interval min(const Interval& a, const Interval& b);

    Interval widened(const ScaledRational& slack) const; // [lo - slack, hi + slack]

    std::string str() const;

  private:
    ScaledRational lo_, hi_;
};

Interval scale(const ScaledRational& c, const Interval& a);
Interval scale(const Rational& c, const Interval& a);

// Largest value <=, resp. smallest value >=, sqrt(x); dyadic with 2^-k
// absolute spacing at the chosen k. x must be >= 0.
ScaledRational sqrt_below(const ScaledRational& x, std::int64_t rel_bits);
ScaledRational sqrt_above(const ScaledRational& x, std::int64_t rel_bits);

// Enclosure of {sqrt(t) : t in a}, outward rounding, relative tolerance about
// 2^-rel_bits (spec default 40).
Interval interval_sqrt(const Interval& a, std::int64_t rel_bits = 40);

} // namespace readspace
