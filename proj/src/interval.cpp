#include "readspace/interval.hpp"

#include <algorithm>
#include <sstream>

namespace readspace {

Interval::Interval(ScaledRational lo, ScaledRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw PreconditionError("interval endpoints out of order");
}

Rational Interval::midpoint_rational(std::int64_t max_bits) const {
    ScaledRational mid = (lo_ + hi_) * ScaledRational::pow2(-1);
    return mid.to_rational(max_bits);
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
    const ScaledRational p1 = a.lo_ * b.lo_;
    const ScaledRational p2 = a.lo_ * b.hi_;
    const ScaledRational p3 = a.hi_ * b.lo_;
    const ScaledRational p4 = a.hi_ * b.hi_;
    ScaledRational lo = p1, hi = p1;
    for (const ScaledRational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return Interval(lo, hi);
}

Interval div(const Interval& a, const Interval& b) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
        throw PreconditionError("interval division by an interval containing zero");
    const ScaledRational p1 = div_exact(a.lo_, b.lo_);
    const ScaledRational p2 = div_exact(a.lo_, b.hi_);
    const ScaledRational p3 = div_exact(a.hi_, b.lo_);
    const ScaledRational p4 = div_exact(a.hi_, b.hi_);
    ScaledRational lo = p1, hi = p1;
    for (const ScaledRational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return Interval(lo, hi);
}

Interval abs(const Interval& a) {
    if (a.lo_.sign() >= 0) return a;
    if (a.hi_.sign() <= 0) return -a;
    const ScaledRational nlo = -a.lo_;
    return Interval(ScaledRational(), nlo > a.hi_ ? nlo : a.hi_);
}

Interval max(const Interval& a, const Interval& b) {
    return Interval(a.lo_ > b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_);
}

Interval min(const Interval& a, const Interval& b) {
    return Interval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ < b.hi_ ? a.hi_ : b.hi_);
}

Interval Interval::widened(const ScaledRational& slack) const {
    if (slack.sign() < 0) throw PreconditionError("negative widening slack");
    return Interval(lo_ - slack, hi_ + slack);
}

Interval scale(const ScaledRational& c, const Interval& a) {
    return Interval(c) * a;
}

Interval scale(const Rational& c, const Interval& a) {
    return scale(ScaledRational(c), a);
}

std::string Interval::str() const {
    std::ostringstream os;
    os << "[" << lo_.str() << ", " << hi_.str() << "]";
    return os.str();
}

namespace {

// floor(sqrt(num/den * 4^k)) with num, den > 0.
BigInt floor_sqrt_scaled(const BigInt& num, const BigInt& den, std::int64_t k) {
    BigInt t = num << static_cast<mp_bitcnt_t>(2 * k);
    t /= den;
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return s;
}

// Splits x = m' * 2^{2h} with m' = mantissa * 2^{0 or 1}; returns h and m' as
// a plain rational (mantissa is already free of powers of two).
Rational split_even_exponent(const ScaledRational& x, std::int64_t& h) {
    std::int64_t e = x.exp2();
    std::int64_t r = e % 2;
    if (r < 0) r += 2;
    h = (e - r) / 2;
    Rational m = x.mantissa();
    if (r == 1) m *= 2;
    return m;
}

} // namespace

ScaledRational sqrt_below(const ScaledRational& x, std::int64_t rel_bits) {
    if (x.sign() < 0) throw PreconditionError("sqrt of a negative value");
    if (x.is_zero()) return ScaledRational();
    std::int64_t h = 0;
    const Rational m = split_even_exponent(x, h);
    // sqrt(m) >= 2^{(p-q-1)/2 - 1}; choose k so 2^-k is relatively small.
    const std::int64_t p = static_cast<std::int64_t>(mpz_sizeinbase(m.get_num_mpz_t(), 2));
    const std::int64_t q = static_cast<std::int64_t>(mpz_sizeinbase(m.get_den_mpz_t(), 2));
    const std::int64_t mag = (p - q - 2) / 2; // sqrt(m) > 2^mag
    const std::int64_t k = std::max<std::int64_t>(1, rel_bits + 2 - mag);
    const BigInt s = floor_sqrt_scaled(m.get_num(), m.get_den(), k);
    return ScaledRational(Rational(s), -k) * ScaledRational::pow2(h);
}

ScaledRational sqrt_above(const ScaledRational& x, std::int64_t rel_bits) {
    if (x.sign() < 0) throw PreconditionError("sqrt of a negative value");
    if (x.is_zero()) return ScaledRational();
    std::int64_t h = 0;
    const Rational m = split_even_exponent(x, h);
    const std::int64_t p = static_cast<std::int64_t>(mpz_sizeinbase(m.get_num_mpz_t(), 2));
    const std::int64_t q = static_cast<std::int64_t>(mpz_sizeinbase(m.get_den_mpz_t(), 2));
    const std::int64_t mag = (p - q - 2) / 2;
    const std::int64_t k = std::max<std::int64_t>(1, rel_bits + 2 - mag);
    BigInt s = floor_sqrt_scaled(m.get_num(), m.get_den(), k);
    // (s+1)^2 > floor(m 4^k) + ... > m 4^k unless the sqrt is exact; keep the
    // exact endpoint when s^2 equals m 4^k.
    BigInt t = m.get_num() << static_cast<mp_bitcnt_t>(2 * k);
    if (s * s * m.get_den() != t) s += 1;
    return ScaledRational(Rational(s), -k) * ScaledRational::pow2(h);
}

Interval interval_sqrt(const Interval& a, std::int64_t rel_bits) {
    if (a.lo().sign() < 0) throw PreconditionError("interval_sqrt of an interval with negative lower end");
    return Interval(sqrt_below(a.lo(), rel_bits), sqrt_above(a.hi(), rel_bits));
}

} // namespace readspace
