#include "readspace/scaled_rational.hpp"

#include <sstream>

namespace readspace {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw RangeError("exp2 overflow in ScaledRational");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw RangeError("exp2 overflow in ScaledRational");
    return r;
}

// Bounds l <= log2|x| + 1 <= h for the mantissa m != 0, as exponent offsets.
// value magnitude lies in (2^{e+p-q-1}, 2^{e+p-q+1}) where p, q are the bit
// sizes of |num| and den.
void log2_window(const ScaledRational& x, __int128& lo, __int128& hi) {
    const mpz_srcptr num = x.mantissa().get_num_mpz_t();
    const mpz_srcptr den = x.mantissa().get_den_mpz_t();
    const __int128 p = static_cast<__int128>(mpz_sizeinbase(num, 2));
    const __int128 q = static_cast<__int128>(mpz_sizeinbase(den, 2));
    lo = static_cast<__int128>(x.exp2()) + p - q - 1;
    hi = static_cast<__int128>(x.exp2()) + p - q + 1;
}

// mantissa * 2^shift as a plain rational, shift >= 0.
Rational shifted(const Rational& m, std::int64_t shift) {
    if (shift > ScaledRational::kAlignBitLimit)
        throw RangeError("exponent alignment beyond bit limit in ScaledRational");
    Rational r;
    mpq_mul_2exp(r.get_mpq_t(), m.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    return r;
}

} // namespace

ScaledRational::ScaledRational(Rational m, std::int64_t e) : m_(std::move(m)), e_(e) {
    normalize();
}

void ScaledRational::normalize() {
    if (m_ == 0) {
        e_ = 0;
        m_ = 0;
        return;
    }
    mpz_ptr num = m_.get_num_mpz_t();
    mpz_ptr den = m_.get_den_mpz_t();
    const mp_bitcnt_t tn = mpz_scan1(num, 0);
    if (tn > 0) {
        mpz_fdiv_q_2exp(num, num, tn);
        e_ = checked_add(e_, static_cast<std::int64_t>(tn));
    }
    const mp_bitcnt_t td = mpz_scan1(den, 0);
    if (td > 0) {
        mpz_fdiv_q_2exp(den, den, td);
        e_ = checked_sub(e_, static_cast<std::int64_t>(td));
    }
}

ScaledRational ScaledRational::pow2(std::int64_t e) {
    return ScaledRational(Rational(1), e);
}

Rational ScaledRational::to_rational(std::int64_t max_bits) const {
    if (m_ == 0) return Rational(0);
    if (e_ > max_bits || e_ < -max_bits)
        throw RangeError("ScaledRational exponent too large to lower to a plain rational: 2^" +
                         std::to_string(e_));
    Rational r = m_;
    if (e_ >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e_));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e_));
    return r;
}

ScaledRational ScaledRational::operator-() const {
    ScaledRational r = *this;
    r.m_ = -r.m_;
    return r;
}

ScaledRational operator+(const ScaledRational& a, const ScaledRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.e_ >= b.e_) {
        return ScaledRational(shifted(a.m_, checked_sub(a.e_, b.e_)) + b.m_, b.e_);
    }
    return ScaledRational(a.m_ + shifted(b.m_, checked_sub(b.e_, a.e_)), a.e_);
}

ScaledRational operator-(const ScaledRational& a, const ScaledRational& b) {
    return a + (-b);
}

ScaledRational operator*(const ScaledRational& a, const ScaledRational& b) {
    if (a.is_zero() || b.is_zero()) return ScaledRational();
    return ScaledRational(a.m_ * b.m_, checked_add(a.e_, b.e_));
}

ScaledRational div_exact(const ScaledRational& a, const ScaledRational& b) {
    if (b.is_zero()) throw PreconditionError("division by zero ScaledRational");
    if (a.is_zero()) return ScaledRational();
    return ScaledRational(a.m_ / b.m_, checked_sub(a.e_, b.e_));
}

ScaledRational abs(const ScaledRational& a) {
    return a.sign() < 0 ? -a : a;
}

int ScaledRational::cmp(const ScaledRational& a, const ScaledRational& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // Same nonzero sign: try to separate by magnitude windows before paying
    // for an exponent alignment.
    __int128 alo, ahi, blo, bhi;
    log2_window(a, alo, ahi);
    log2_window(b, blo, bhi);
    if (ahi < blo) return -sa; // |a| < |b|
    if (bhi < alo) return sa;
    if (a.e_ >= b.e_) {
        const Rational am = shifted(a.m_, checked_sub(a.e_, b.e_));
        return mpq_cmp(am.get_mpq_t(), b.m_.get_mpq_t());
    }
    const Rational bm = shifted(b.m_, checked_sub(b.e_, a.e_));
    return mpq_cmp(a.m_.get_mpq_t(), bm.get_mpq_t());
}

std::string ScaledRational::str() const {
    std::ostringstream os;
    os << m_.get_str();
    if (e_ != 0) os << "*2^" << e_;
    return os.str();
}

} // namespace readspace
