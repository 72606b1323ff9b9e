#include "readspace/enumeration.hpp"

#include <utility>

namespace readspace {

BigInt pair(const BigInt& x, const BigInt& y) {
    if (x < 0 || y < 0) throw PreconditionError("pairing arguments must be >= 0");
    BigInt w = x + y;
    return w * (w + 1) / 2 + y;
}

void unpair(const BigInt& z, BigInt& x, BigInt& y) {
    if (z < 0) throw PreconditionError("unpair argument must be >= 0");
    BigInt t = 8 * z + 1;
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    BigInt w = (s - 1) / 2;
    BigInt tri = w * (w + 1) / 2;
    y = z - tri;
    x = w - y;
}

namespace {

struct Run {
    bool one;
    BigInt len;
};

// Runs of identical bits of k below the leading 1, most significant first.
std::vector<Run> bit_runs(const BigInt& k) {
    std::vector<Run> runs;
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t pos = 1; pos < bits; ++pos) {
        const bool b = mpz_tstbit(k.get_mpz_t(), bits - 1 - pos) != 0;
        if (!runs.empty() && runs.back().one == b)
            runs.back().len += 1;
        else
            runs.push_back({b, BigInt(1)});
    }
    return runs;
}

} // namespace

Rational calkin_wilf(const BigInt& k) {
    if (k < 1) throw PreconditionError("Calkin-Wilf index must be >= 1");
    BigInt a(1), b(1);
    for (const Run& r : bit_runs(k)) {
        if (r.one)
            a += r.len * b; // run of right steps
        else
            b += r.len * a; // run of left steps
    }
    return Rational(a) / Rational(b);
}

BigInt calkin_wilf_index(const Rational& q) {
    if (q <= 0) throw PreconditionError("Calkin-Wilf index of a non-positive rational");
    BigInt p = q.get_num();
    BigInt d = q.get_den();
    // Walk towards the root, recording runs leaf-first.
    std::vector<Run> runs;
    while (p != 1 || d != 1) {
        if (p > d) {
            BigInt t = (d == 1) ? BigInt(p - 1) : BigInt(p / d);
            runs.push_back({true, t});
            p -= t * d;
        } else {
            BigInt t = (p == 1) ? BigInt(d - 1) : BigInt(d / p);
            runs.push_back({false, t});
            d -= t * p;
        }
    }
    BigInt k(1);
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        const unsigned long len = [&] {
            if (!it->len.fits_ulong_p()) throw RangeError("Calkin-Wilf index too large to materialize");
            return it->len.get_ui();
        }();
        mpz_mul_2exp(k.get_mpz_t(), k.get_mpz_t(), len);
        if (it->one) {
            BigInt ones = pow2_z(len) - 1;
            k += ones;
        }
    }
    return k;
}

Rational rational_decode(const BigInt& code) {
    if (code < 0) throw PreconditionError("rational code must be >= 0");
    if (code == 0) return Rational(0);
    BigInt k = (code + 1) / 2;
    Rational q = calkin_wilf(k);
    return mpz_odd_p(code.get_mpz_t()) ? q : Rational(-q);
}

BigInt rational_code(const Rational& q) {
    if (q == 0) return BigInt(0);
    if (q > 0) return 2 * calkin_wilf_index(q) - 1;
    return 2 * calkin_wilf_index(-q);
}

namespace {

// Cons-coded lists over N: 0 is the empty list, z >= 1 is
// cons(unpair(z-1)).
std::vector<BigInt> list_decode(BigInt z) {
    std::vector<BigInt> xs;
    while (z >= 1) {
        BigInt head, rest;
        unpair(z - 1, head, rest);
        xs.push_back(head);
        z = rest;
    }
    return xs;
}

BigInt list_encode(const std::vector<BigInt>& xs) {
    BigInt z(0);
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) z = pair(*it, z) + 1;
    return z;
}

} // namespace

SparseVec vector_decode(const BigInt& code) {
    if (code < 0) throw PreconditionError("vector code must be >= 0");
    SparseVec v;
    if (code == 0) return v;
    BigInt prefix_code, last_minus_1;
    unpair(code - 1, prefix_code, last_minus_1);
    const std::vector<BigInt> prefix = list_decode(prefix_code);
    std::int64_t i = 1;
    for (const BigInt& c : prefix) {
        v.set(i, rational_decode(c));
        ++i;
    }
    v.set(i, rational_decode(last_minus_1 + 1));
    return v;
}

BigInt vector_code(const SparseVec& v) {
    if (v.is_zero()) return BigInt(0);
    const std::int64_t len = v.max_support();
    std::vector<BigInt> prefix;
    prefix.reserve(static_cast<std::size_t>(len - 1));
    for (std::int64_t i = 1; i < len; ++i) prefix.push_back(rational_code(v.get(i)));
    const BigInt last = rational_code(v.get(len)); // >= 1: the last coordinate is nonzero
    return pair(list_encode(prefix), last - 1) + 1;
}

EnumerationScheme EnumerationScheme::front_loaded(std::vector<SparseVec> prefix, bool continue_canonical) {
    EnumerationScheme s;
    s.prefix_ = std::move(prefix);
    s.continue_ = continue_canonical;
    if (s.finite() && s.prefix_.empty())
        throw ConfigError("a finite scheme needs a non-empty prefix");
    return s;
}

SparseVec EnumerationScheme::enumerate(const BigInt& n) const {
    if (n < 1) throw PreconditionError("enumeration index must be >= 1");
    const BigInt m(static_cast<unsigned long>(prefix_.size()));
    if (n <= m) return prefix_[n.get_ui() - 1];
    if (!continue_)
        throw RangeError("index " + n.get_str() + " past the end of a finite scheme of " +
                         std::to_string(prefix_.size()) + " terms");
    BigInt occ0, code;
    unpair(n - m - 1, occ0, code);
    return vector_decode(code);
}

BigInt EnumerationScheme::locate(const SparseVec& u, const BigInt& occurrence) const {
    if (occurrence < 1) throw PreconditionError("occurrence must be >= 1");
    BigInt remaining = occurrence;
    BigInt idx(0);
    for (const SparseVec& p : prefix_) {
        idx += 1;
        if (p == u) {
            remaining -= 1;
            if (remaining == 0) return idx;
        }
    }
    if (!continue_) {
        const BigInt found = occurrence - remaining;
        throw RangeError("finite scheme: only " + found.get_str() +
                         " occurrence(s) of the requested vector");
    }
    const BigInt code = vector_code(u);
    return BigInt(static_cast<unsigned long>(prefix_.size())) + pair(remaining - 1, code) + 1;
}

} // namespace readspace
