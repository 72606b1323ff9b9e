#include "readspace/geometry_lab.hpp"

#include <algorithm>

namespace readspace::geometry {

namespace {

ScaledRational one() { return ScaledRational(Rational(1)); }

template <class V>
Interval require_unit(const ReadConstruction& cons, const V& x, const Rational& unit_tol,
                      const char* who) {
    const Interval I = norm_certified(cons, x, unit_tol);
    if (!(I.lo() >= ScaledRational(1 - unit_tol) && I.hi() <= ScaledRational(1 + unit_tol)))
        throw PreconditionError(std::string(who) + ": vector is not certified unit within tolerance");
    return I;
}

ScaledRational positive_part(const ScaledRational& v) {
    return v.sign() > 0 ? v : ScaledRational();
}

// Enclosure of {|||alpha x + w||| : alpha in a}: evaluate at the midpoint and
// widen by radius * (3 ||x||_inf), the Lipschitz constant in alpha.
Interval norm_of_affine(const ReadConstruction& cons, const Interval& a, const SparseVec& x,
                        const SparseVec& w, const Rational& eps) {
    const Rational mid = a.midpoint_rational();
    const Interval J = norm_certified(cons, add(scale(mid, x), w), eps);
    const ScaledRational radius = a.width() * ScaledRational(Rational(1, 2));
    const ScaledRational L{3 * sup_norm(x)};
    return J.widened(radius * L);
}

} // namespace

template <class V>
Interval midpoint_gap(const ReadConstruction& cons, const V& x, const V& y, const Rational& eps) {
    const Interval s = norm_certified(cons, add(x, y), eps);
    return Interval(ScaledRational(Rational(2))) - s;
}

template <class V>
std::optional<StrictConvexityCert> strict_convexity_certificate(
    const ReadConstruction& cons, const V& x, const V& y, std::size_t search_depth,
    const Rational& unit_tol) {
    const Interval Ix = require_unit(cons, x, unit_tol, "strict_convexity_certificate(x)");
    const Interval Iy = require_unit(cons, y, unit_tol, "strict_convexity_certificate(y)");

    const std::size_t depth = cons.clamp_terms(search_depth);
    for (std::size_t n = 1; n <= depth; ++n) {
        const TermData t = cons.term(n);
        const Rational sx = dot(x, t.v);
        const Rational sy = dot(y, t.v);
        if (sgn(sx) * sgn(sy) >= 0) continue;

        StrictConvexityCert cert;
        cert.k = n;
        cert.x_inner = sx;
        cert.y_inner = sy;
        const Rational m = std::min(abs(sx), abs(sy));
        cert.gap_lower_bound = ScaledRational(2 * m) * t.r;

        // Direct enclosure, sharp relative to the gap scale.
        Rational eps_dir = cert.gap_lower_bound.to_rational() / 65536;
        if (eps_dir > unit_tol) eps_dir = unit_tol;
        cert.direct_gap = midpoint_gap(cons, x, y, eps_dir);

        cert.slack = positive_part(Ix.hi() - one()) + positive_part(Iy.hi() - one()) +
                     cert.direct_gap.width();
        cert.verified = cert.direct_gap.lo() >= cert.gap_lower_bound - cert.slack;
        if (!cert.verified)
            throw CertificationError(
                "strict convexity: direct enclosure fell below the gap bound; "
                "unit tolerance too coarse for the gap scale at k = " +
                std::to_string(n));
        return cert;
    }
    return std::nullopt;
}

RoughnessWitness roughness_witness(const ReadConstruction& cons, const SparseVec& f,
                                   const Rational& lambda, const Rational& delta,
                                   std::size_t depth) {
    if (!(lambda > 0 && lambda < 1)) throw PreconditionError("roughness witness needs lambda in (0,1)");
    if (!(delta > 0 && delta < 1)) throw PreconditionError("roughness witness needs delta in (0,1)");
    const Rational ld = lambda * delta;
    if (!(ld < Rational(1, 3))) throw PreconditionError("roughness witness needs lambda*delta < 1/3");

    RoughnessWitness w;
    w.f = f;
    w.lambda = lambda;
    w.delta = delta;
    w.rho = Rational(1, 3) - ld;
    w.threshold = 1 - 3 * ld;
    w.separation = 2 * w.rho;

    const Rational eta = ld / 8;
    w.f_dual_norm = dual_norm_bounds(cons, f, eta);
    if (!w.f_dual_norm.contains(Rational(1)))
        throw PreconditionError("roughness witness requires |||f|||* to enclose 1");

    // Truncation with tail slack <= lambda*delta/8, within the depth budget.
    const ScaledRational budget{eta};
    std::size_t N = 1;
    while (true) {
        const std::size_t limit = cons.clamp_terms(N);
        if (cons.tail_bound(limit, Rational(1)) <= budget) {
            N = limit;
            break;
        }
        if (N >= depth)
            throw CertificationError("roughness witness: depth exhausted before the tail slack fit");
        N = std::min(depth, N * 2);
    }

    const DualNormCert dual = dual_norm_truncated(cons, f, N);
    const Rational c0 = 1 - ld - ld / 2;
    w.x0 = scale(c0 / dual.value, scale(dual.value, dual.pair.x_star)); // c0 * x_star
    w.x0 = scale(c0, dual.pair.x_star);
    w.x0_norm = norm_certified_at(cons, w.x0, N);

    const Rational f_x0 = dot(f, w.x0);
    if (sup_norm(w.x0) < w.rho)
        throw CertificationError("roughness witness: ||x0||_inf < rho, construction degenerate");

    std::int64_t basis = std::max<std::int64_t>(cons.term(N).a, f.max_support());
    basis = std::max(basis, w.x0.max_support()) + 1;
    w.basis_index = basis;

    SparseVec bump = SparseVec::unit(basis);
    w.p_plus = add(w.x0, scale(w.rho, bump));
    w.p_minus = sub(w.x0, scale(w.rho, bump));
    w.p_plus_norm = norm_certified_at(cons, w.p_plus, N);
    w.p_minus_norm = norm_certified_at(cons, w.p_minus, N);
    w.f_at_p_plus = dot(f, w.p_plus);
    w.f_at_p_minus = dot(f, w.p_minus);
    if (w.f_at_p_plus != f_x0 || w.f_at_p_minus != f_x0)
        throw InternalError("basis index collides with supp f");

    const bool ball_plus = w.p_plus_norm.hi() <= one();
    const bool ball_minus = w.p_minus_norm.hi() <= one();
    const bool slice_plus = w.f_at_p_plus > w.threshold;
    const bool slice_minus = w.f_at_p_minus > w.threshold;
    const bool sep = sup_norm(sub(w.p_plus, w.p_minus)) == w.separation;
    w.checks_pass = ball_plus && ball_minus && slice_plus && slice_minus && sep;
    return w;
}

ScaledRational slice_diameter_lower(const ReadConstruction& cons, const SparseVec& f,
                                    const Rational& lambda, const Rational& delta,
                                    std::size_t depth) {
    const RoughnessWitness w = roughness_witness(cons, f, lambda, delta, depth);
    if (!w.checks_pass)
        throw CertificationError("slice diameter bound: the generated witness failed its checks");
    return ScaledRational(w.separation);
}

ConormCheck conorm_check(const SparseVec& u, const Rational& rho, std::int64_t m) {
    if (rho < 0) throw PreconditionError("conorm_check needs rho >= 0");
    if (u.get(m) != 0) throw PreconditionError("conorm_check: m lies inside supp u");
    ConormCheck out;
    out.lhs = sup_norm(add(u, scale(rho, SparseVec::unit(m))));
    out.rhs = std::max(sup_norm(u), rho);
    out.pass = out.lhs == out.rhs;
    return out;
}

LurFailureReport lur_failure_report(const ReadConstruction& cons, const SparseVec& x,
                                    const Rational& rho, const std::vector<std::int64_t>& m_list,
                                    const Rational& eps, const Rational& unit_tol) {
    LurFailureReport rep;
    rep.x = x;
    rep.rho = rho;
    rep.x_norm = require_unit(cons, x, unit_tol, "lur_failure_report");
    if (!(rho > 0 && rho <= sup_norm(x)))
        throw PreconditionError("lur_failure_report needs 0 < rho <= ||x||_inf");

    for (std::int64_t m : m_list) {
        if (m <= x.max_support())
            throw PreconditionError("lur_failure_report: every m must lie beyond supp x");
        LurRow row;
        row.m = m;
        const SparseVec bump = scale(rho, SparseVec::unit(m));
        row.scale = norm_certified(cons, add(x, bump), eps);
        // |||x + y_m||| = |||(1 + nu) x + rho e_m||| / nu,
        // |||y_m - x||| = |||(1 - nu) x + rho e_m||| / nu.
        const Interval nu = row.scale;
        row.sum_norm = div(norm_of_affine(cons, Interval(one()) + nu, x, bump, eps), nu);
        row.diff_norm = div(norm_of_affine(cons, Interval(one()) - nu, x, bump, eps), nu);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

WlurProbeReport wlur_finish(const ReadConstruction& cons, const SparseVec& x,
                            std::vector<WlurRow> rows, const Interval& ybar_scale_inv,
                            const SparseVec* ybar_explicit, std::size_t n_report) {
    WlurProbeReport rep;
    rep.x = x;
    rep.rows = std::move(rows);
    if (rep.rows.empty()) throw PreconditionError("wlur probe needs a non-empty family");
    const WlurRow& last = rep.rows.back();
    const ScaledRational xsup{sup_norm(x)};

    rep.eq22_residual = abs(last.xy_sup - Interval(xsup) - last.y_sup);
    rep.recovered_a = div(last.y_sup, Interval(xsup));
    rep.norming_defect = abs(Interval(ScaledRational(Rational(2))) - last.sum_norm);

    const std::size_t limit = cons.clamp_terms(n_report);
    for (std::size_t n = 1; n <= limit; ++n) {
        const TermData t = cons.term(n);
        const Rational tx = dot(x, t.v);
        Interval lhs, ybar_part;
        if (ybar_explicit) {
            const Rational ty = dot(*ybar_explicit, t.v);
            lhs = Interval(ScaledRational(abs(tx + ty)));
            ybar_part = Interval(ScaledRational(abs(ty)));
        } else {
            // ybar = x / nu coordinatewise, so everything is a multiple of <x, v_n>.
            const Interval txI{ScaledRational(tx)};
            lhs = abs(txI + txI * ybar_scale_inv);
            ybar_part = abs(txI * ybar_scale_inv);
        }
        rep.eq23_residuals.push_back(abs(lhs - Interval(ScaledRational(abs(tx))) - ybar_part));
    }
    return rep;
}

} // namespace

WlurProbeReport wlur_probe(const ReadConstruction& cons, const SparseVec& x, const Rational& rho,
                           const std::vector<std::int64_t>& m_list, const Rational& eps,
                           const Rational& unit_tol, std::size_t n_report) {
    require_unit(cons, x, unit_tol, "wlur_probe");
    if (!(rho > 0 && rho <= sup_norm(x)))
        throw PreconditionError("wlur_probe needs 0 < rho <= ||x||_inf");
    const ScaledRational xsup{sup_norm(x)};

    std::vector<WlurRow> rows;
    Interval nu_last;
    for (std::int64_t m : m_list) {
        if (m <= x.max_support())
            throw PreconditionError("wlur_probe: every m must lie beyond supp x");
        const SparseVec bump = scale(rho, SparseVec::unit(m));
        const Interval nu = norm_certified(cons, add(x, bump), eps);
        WlurRow row;
        row.m = m;
        // ||y_m||_inf = max(||x||_inf, rho)/nu = ||x||_inf / nu.
        row.y_sup = div(Interval(xsup), nu);
        // ||x + y_m||_inf = max((1 + 1/nu) ||x||_inf, rho/nu).
        const Interval inv = div(Interval(one()), nu);
        row.xy_sup = max((Interval(one()) + inv) * Interval(xsup), inv * Interval(ScaledRational(rho)));
        row.sum_norm = div(norm_of_affine(cons, Interval(one()) + nu, x, bump, eps), nu);
        nu_last = nu;
        rows.push_back(std::move(row));
    }
    return wlur_finish(cons, x, std::move(rows), div(Interval(one()), nu_last), nullptr, n_report);
}

WlurProbeReport wlur_probe_family(const ReadConstruction& cons, const SparseVec& x,
                                  const std::vector<SparseVec>& family, const Rational& eps,
                                  const Rational& unit_tol, std::size_t n_report) {
    require_unit(cons, x, unit_tol, "wlur_probe_family");
    std::vector<WlurRow> rows;
    for (std::size_t i = 0; i < family.size(); ++i) {
        WlurRow row;
        row.m = static_cast<std::int64_t>(i + 1);
        row.y_sup = Interval(ScaledRational(sup_norm(family[i])));
        row.xy_sup = Interval(ScaledRational(sup_norm(add(x, family[i]))));
        row.sum_norm = norm_certified(cons, add(x, family[i]), eps);
        rows.push_back(std::move(row));
    }
    if (family.empty()) throw PreconditionError("wlur probe needs a non-empty family");
    return wlur_finish(cons, x, std::move(rows), Interval(), &family.back(), n_report);
}

GoldstineApproximant goldstine_approximants(const ReadConstruction& cons, const TailVec& xbar,
                                            std::int64_t m, const Rational& slack,
                                            const Rational& eps) {
    if (m < 0) throw PreconditionError("goldstine_approximants needs m >= 0");
    GoldstineApproximant out;
    out.xbar_norm = norm_certified(cons, xbar, eps);
    const SparseVec S = xbar.truncate(m);
    if (S.is_zero()) {
        // S_m xbar = 0: the proof's scaling degenerates, return the zero vector.
        out.scale_c = 0;
        out.x_m_norm = Interval();
        out.agree_count = 0;
        out.within_slack = xbar.is_zero();
        return out;
    }
    const Interval part = norm_certified(cons, S, eps);
    out.scale_c = out.xbar_norm.midpoint_rational() / part.midpoint_rational();
    out.x_m = scale(out.scale_c, S);
    out.x_m_norm = norm_certified(cons, out.x_m, eps);
    for (std::int64_t k = 1; k <= m; ++k) {
        if (out.x_m.get(k) != out.scale_c * xbar.get(k)) break;
        out.agree_count = k;
    }
    const Interval window = out.xbar_norm * Interval(ScaledRational(1 - slack), ScaledRational(1 + slack));
    out.within_slack = out.x_m_norm.lo() >= window.lo() && out.x_m_norm.hi() <= window.hi();
    return out;
}

NormConvergenceProbe norm_convergence_probe(const ReadConstruction& cons, const TailVec& xbar,
                                            const std::vector<std::int64_t>& m_list,
                                            const Rational& eps) {
    NormConvergenceProbe out;
    out.full_norm = norm_certified(cons, xbar, eps);
    out.full_sup = sup_norm(xbar);
    for (std::int64_t m : m_list) {
        ConvergenceRow row;
        row.m = m;
        const SparseVec S = xbar.truncate(m);
        row.norm = norm_certified(cons, S, eps);
        row.sup = sup_norm(S);
        out.rows.push_back(std::move(row));
    }
    return out;
}

template Interval midpoint_gap<SparseVec>(const ReadConstruction&, const SparseVec&,
                                          const SparseVec&, const Rational&);
template Interval midpoint_gap<TailVec>(const ReadConstruction&, const TailVec&, const TailVec&,
                                        const Rational&);
template std::optional<StrictConvexityCert> strict_convexity_certificate<SparseVec>(
    const ReadConstruction&, const SparseVec&, const SparseVec&, std::size_t, const Rational&);
template std::optional<StrictConvexityCert> strict_convexity_certificate<TailVec>(
    const ReadConstruction&, const TailVec&, const TailVec&, std::size_t, const Rational&);

} // namespace readspace::geometry
