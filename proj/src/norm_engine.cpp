#include "readspace/norm_engine.hpp"

#include <vector>

namespace readspace {

namespace {

// 2^{-a_n^2} |<x, u_n - e_{a_n}>| -- the series term without the v_n
// normalization, so the value stays exact in ScaledRational form.
template <class V>
ScaledRational series_term(const V& x, const TermData& t) {
    SparseVec diff = t.u;
    diff.set(t.a, diff.get(t.a) - 1);
    const Rational inner = dot(x, diff);
    if (inner == 0) return ScaledRational();
    return ScaledRational(abs(inner), -t.a * t.a);
}

template <class V>
ScaledRational partial_series(const ReadConstruction& cons, const V& x, std::size_t N) {
    ScaledRational sum;
    for (std::size_t n = 1; n <= N; ++n) sum += series_term(x, cons.term(n));
    return sum;
}

} // namespace

template <class V>
Rational norm_truncated(const ReadConstruction& cons, const V& x, std::size_t N) {
    const std::size_t limit = cons.clamp_terms(N);
    const ScaledRational total = ScaledRational(sup_norm(x)) + partial_series(cons, x, limit);
    return total.to_rational(lp::kLpMaxExpBits);
}

template <class V>
CertifiedNorm norm_certified_full(const ReadConstruction& cons, const V& x, const Rational& eps) {
    if (eps <= 0) throw PreconditionError("norm_certified requires eps > 0");
    const Rational M = sup_norm(x);
    const ScaledRational eps_s{eps};
    constexpr std::size_t kMaxTerms = std::size_t(1) << 20;
    std::size_t N = 1;
    for (;;) {
        const std::size_t limit = cons.clamp_terms(N);
        const ScaledRational tail = cons.tail_bound(limit == 0 ? 1 : limit, M);
        if (tail <= eps_s || (cons.finite() && limit == cons.term_count())) {
            const ScaledRational base = ScaledRational(M) + partial_series(cons, x, limit);
            CertifiedNorm out;
            out.interval = Interval(base, base + tail);
            out.terms_used = limit;
            return out;
        }
        if (N >= kMaxTerms) throw RangeError("norm_certified truncation exceeded the term cap");
        N *= 2;
    }
}

template <class V>
Interval norm_certified_at(const ReadConstruction& cons, const V& x, std::size_t N) {
    if (N < 1) throw PreconditionError("norm_certified_at requires N >= 1");
    const std::size_t limit = cons.clamp_terms(N);
    const Rational M = sup_norm(x);
    const ScaledRational base = ScaledRational(M) + partial_series(cons, x, limit);
    return Interval(base, base + cons.tail_bound(limit, M));
}

DualNormCert dual_norm_truncated(const ReadConstruction& cons, const SparseVec& f, std::size_t N) {
    DualNormCert cert;
    cert.pair = lp::solve_dual_pair(cons, f, N);
    cert.value = cert.pair.value;
    return cert;
}

Interval dual_norm_bounds(const ReadConstruction& cons, const SparseVec& f, const Rational& eps) {
    if (eps <= 0) throw PreconditionError("dual_norm_bounds requires eps > 0");
    if (f.is_zero()) return Interval();
    const ScaledRational eps_s{eps};
    constexpr std::size_t kMaxTerms = std::size_t(1) << 12;
    std::size_t N = 4;
    for (;;) {
        const std::size_t limit = cons.clamp_terms(N);
        const ScaledRational val{dual_norm_truncated(cons, f, limit).value};
        if (cons.finite() && limit == cons.term_count()) return Interval(val, val);
        const ScaledRational tail = cons.tail_bound(limit, Rational(1));
        const ScaledRational lo = div_exact(val, ScaledRational(Rational(1)) + tail);
        if (val - lo <= eps_s) return Interval(lo, val);
        if (N >= kMaxTerms)
            throw RangeError("dual_norm_bounds could not reach the requested width");
        N *= 2;
    }
}

namespace {

std::vector<std::int64_t> sup_argmax(const SparseVec& x) {
    const Rational M = sup_norm(x);
    std::vector<std::int64_t> idx;
    for (const auto& [i, q] : x)
        if (abs(q) == M) idx.push_back(i);
    return idx;
}

} // namespace

Rational directional_derivative(const ReadConstruction& cons, const SparseVec& x,
                                const SparseVec& h, std::size_t N) {
    if (x.is_zero()) throw PreconditionError("directional derivative at x = 0");
    bool first = true;
    Rational dsup(0);
    for (std::int64_t k : sup_argmax(x)) {
        const Rational cand = sgn(x.get(k)) * h.get(k);
        if (first || cand > dsup) dsup = cand;
        first = false;
    }
    Rational total = dsup;
    const std::size_t limit = cons.clamp_terms(N);
    for (std::size_t n = 1; n <= limit; ++n) {
        const TermData t = cons.term(n);
        const Rational rn = t.r.to_rational(lp::kLpMaxExpBits);
        const Rational tx = dot(x, t.v);
        const Rational th = dot(h, t.v);
        total += tx == 0 ? Rational(rn * abs(th)) : Rational(rn * sgn(tx) * th);
    }
    return total;
}

SmoothnessProbe smoothness_probe(const ReadConstruction& cons, const SparseVec& x, std::size_t N) {
    if (x.is_zero()) throw PreconditionError("smoothness probe at x = 0");
    SmoothnessProbe out;
    const std::vector<std::int64_t> A = sup_argmax(x);
    if (A.size() >= 2) {
        SparseVec h;
        h.set(A[0], Rational(sgn(x.get(A[0]))));
        h.set(A[1], Rational(-sgn(x.get(A[1]))));
        out.kink = true;
        out.witness = h;
    } else {
        const std::size_t limit = cons.clamp_terms(N);
        for (std::size_t n = 1; n <= limit && !out.kink; ++n) {
            const TermData t = cons.term(n);
            if (dot(x, t.v) == 0) {
                out.kink = true;
                out.witness = SparseVec::unit(t.v.begin()->first);
            }
        }
    }
    if (out.kink) {
        out.gap = directional_derivative(cons, x, out.witness, N) +
                  directional_derivative(cons, x, neg(out.witness), N);
        if (out.gap <= 0) throw InternalError("kink witness with non-positive convexity gap");
    }
    return out;
}

UnitVector normalize_to_unit(const ReadConstruction& cons, const SparseVec& x, const Rational& tol) {
    if (x.is_zero()) throw PreconditionError("cannot normalize the zero vector");
    if (tol <= 0 || tol >= 1) throw PreconditionError("unit tolerance must lie in (0, 1)");
    const Interval I = norm_certified(cons, x, tol / 4);
    const Rational c = Rational(1) / I.midpoint_rational();
    UnitVector out;
    out.vec = scale(c, x);
    out.norm = norm_certified(cons, out.vec, tol / 4);
    if (!(out.norm.lo() >= ScaledRational(1 - tol) && out.norm.hi() <= ScaledRational(1 + tol)))
        throw InternalError("normalization missed the unit tolerance window");
    return out;
}

template Rational norm_truncated<SparseVec>(const ReadConstruction&, const SparseVec&, std::size_t);
template Rational norm_truncated<TailVec>(const ReadConstruction&, const TailVec&, std::size_t);
template CertifiedNorm norm_certified_full<SparseVec>(const ReadConstruction&, const SparseVec&, const Rational&);
template CertifiedNorm norm_certified_full<TailVec>(const ReadConstruction&, const TailVec&, const Rational&);
template Interval norm_certified_at<SparseVec>(const ReadConstruction&, const SparseVec&, std::size_t);
template Interval norm_certified_at<TailVec>(const ReadConstruction&, const TailVec&, std::size_t);

} // namespace readspace
