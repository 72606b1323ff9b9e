#include "readspace/rational.hpp"

namespace readspace {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ConfigError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw ConfigError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str(10);
}

BigInt rat_floor(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt rat_ceil(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::int64_t to_int64(const BigInt& z) {
    if (!z.fits_slong_p()) throw RangeError("integer out of 64-bit range: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

BigInt pow2_z(std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

} // namespace readspace
