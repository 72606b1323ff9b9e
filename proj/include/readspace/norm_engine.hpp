#pragma once

#include <memory>

#include "readspace/ball_programs.hpp"
#include "readspace/construction.hpp"
#include "readspace/interval.hpp"

namespace readspace {

struct CertifiedNorm {
    Interval interval;
    std::size_t terms_used = 0;
};

// ||x||_inf + sum_{n<=N} r_n |<x, v_n>| as an exact rational (the polyhedral
// truncations behind every LP). Throws RangeError when some a_n^2 exceeds the
// lowering limit.
template <class V>
Rational norm_truncated(const ReadConstruction& cons, const V& x, std::size_t N);

// Enclosure of |||x||| of width <= eps: exact partial sum plus [0, tail],
// doubling N until tail_bound(N, ||x||_inf) <= eps. Exact (width 0) on finite
// constructions.
template <class V>
CertifiedNorm norm_certified_full(const ReadConstruction& cons, const V& x, const Rational& eps);

template <class V>
Interval norm_certified(const ReadConstruction& cons, const V& x, const Rational& eps) {
    return norm_certified_full(cons, x, eps).interval;
}

// Enclosure at a fixed truncation N: exact partial sum plus [0, tail_bound].
// Used where the caller must control which v_n enter the evaluation.
template <class V>
Interval norm_certified_at(const ReadConstruction& cons, const V& x, std::size_t N);

struct DualNormCert {
    Rational value;
    lp::DualNormPair pair;
};

// Truncated dual norm via the exact LP pair; the certificate carries the
// Minkowski decomposition and the norming point x*.
DualNormCert dual_norm_truncated(const ReadConstruction& cons, const SparseVec& f, std::size_t N);

// Enclosure of the full-space dual norm from the sandwich
// dual_N / (1 + tail_N) <= |||f|||* <= dual_N, growing N until the width is
// below eps.
Interval dual_norm_bounds(const ReadConstruction& cons, const SparseVec& f, const Rational& eps);

// One-sided derivative of the truncated norm at x != 0 in direction h:
// max over sup-norm argmax indices of sign(x_k) h_k, plus per-term
// r_n sign(<x,v_n>) <h,v_n> (or r_n |<h,v_n>| at a kink of |.|).
// Ties scan lowest index first.
Rational directional_derivative(const ReadConstruction& cons, const SparseVec& x,
                                const SparseVec& h, std::size_t N);

struct SmoothnessProbe {
    bool kink = false;
    SparseVec witness;   // direction h with d(x;h) + d(x;-h) > 0 when kink
    Rational gap;        // that positive value
};

SmoothnessProbe smoothness_probe(const ReadConstruction& cons, const SparseVec& x, std::size_t N);

// Rational rescaling of x whose certified norm encloses 1 within tol.
struct UnitVector {
    SparseVec vec;
    Interval norm;
};
UnitVector normalize_to_unit(const ReadConstruction& cons, const SparseVec& x, const Rational& tol);

// The norm object of the lab: a construction together with default
// tolerances, fronting the certified evaluators above.
class PerturbedNorm {
  public:
    explicit PerturbedNorm(std::shared_ptr<const ReadConstruction> cons,
                           Rational default_eps = Rational(1, 1000000))
        : cons_(std::move(cons)), eps_(std::move(default_eps)) {}

    const ReadConstruction& construction() const { return *cons_; }
    const Rational& default_eps() const { return eps_; }

    template <class V>
    Interval certified(const V& x) const {
        return norm_certified(*cons_, x, eps_);
    }
    template <class V>
    Interval certified(const V& x, const Rational& eps) const {
        return norm_certified(*cons_, x, eps);
    }
    template <class V>
    Rational truncated(const V& x, std::size_t N) const {
        return norm_truncated(*cons_, x, N);
    }
    DualNormCert dual_truncated(const SparseVec& f, std::size_t N) const {
        return dual_norm_truncated(*cons_, f, N);
    }
    Interval dual_bounds(const SparseVec& f) const { return dual_norm_bounds(*cons_, f, eps_); }
    Interval dual_bounds(const SparseVec& f, const Rational& eps) const {
        return dual_norm_bounds(*cons_, f, eps);
    }

  private:
    std::shared_ptr<const ReadConstruction> cons_;
    Rational eps_;
};

} // namespace readspace
