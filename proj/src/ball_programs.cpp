#include "readspace/ball_programs.hpp"

#include <algorithm>

#include "readspace/norm_engine.hpp"

namespace readspace::lp {

std::int64_t working_dimension(const ReadConstruction& cons, const SparseVec& f, std::size_t N) {
    std::int64_t d = std::max<std::int64_t>(1, f.max_support());
    if (N >= 1) d = std::max(d, cons.term(N).a);
    return d;
}

namespace {

Rational lowered_r(const TermData& t) { return t.r.to_rational(kLpMaxExpBits); }

std::vector<Rational> zero_row(std::size_t n) { return std::vector<Rational>(n, Rational(0)); }

} // namespace

DualNormPair solve_dual_pair(const ReadConstruction& cons, const SparseVec& f, std::size_t N) {
    DualNormPair out;
    out.terms = cons.clamp_terms(N);
    const std::size_t Nn = out.terms;
    const std::int64_t d = working_dimension(cons, f, Nn);
    for (const auto& [i, q] : f)
        if (i > d) throw InternalError("working dimension misses the functional support");

    std::vector<TermData> terms;
    terms.reserve(Nn);
    for (std::size_t n = 1; n <= Nn; ++n) terms.push_back(cons.term(n));

    // Decomposition LP: min t, f = g+ - g- + sum c_n r_n v_n,
    // sum(g+ + g-) <= t, -t <= c_n <= t.
    {
        LinProgram p;
        p.sense = Sense::Min;
        const std::size_t gp = 0, gm = gp + d, cvar = gm + d, tvar = cvar + Nn;
        for (std::int64_t k = 0; k < 2 * d; ++k) p.add_var(Rational(0), Rational(0));
        for (std::size_t n = 0; n < Nn; ++n) p.add_var(Rational(0));
        p.add_var(Rational(1), Rational(0)); // t
        const std::size_t nv = p.num_vars();
        for (std::int64_t k = 1; k <= d; ++k) {
            auto row = zero_row(nv);
            row[gp + k - 1] = 1;
            row[gm + k - 1] = -1;
            for (std::size_t n = 0; n < Nn; ++n) {
                const Rational vk = terms[n].v.get(k);
                if (vk != 0) row[cvar + n] = lowered_r(terms[n]) * vk;
            }
            p.add_row(RowSense::EQ, std::move(row), f.get(k));
        }
        {
            auto row = zero_row(nv);
            for (std::int64_t k = 0; k < 2 * d; ++k) row[k] = 1;
            row[tvar] = -1;
            p.add_row(RowSense::LE, std::move(row), Rational(0));
        }
        for (std::size_t n = 0; n < Nn; ++n) {
            auto row1 = zero_row(nv);
            row1[cvar + n] = 1;
            row1[tvar] = -1;
            p.add_row(RowSense::LE, std::move(row1), Rational(0));
            auto row2 = zero_row(nv);
            row2[cvar + n] = -1;
            row2[tvar] = -1;
            p.add_row(RowSense::LE, std::move(row2), Rational(0));
        }
        LpResult res = solve_lp(p);
        if (res.status != LpStatus::Optimal)
            throw InternalError("dual decomposition LP must be solvable (g = f is feasible)");
        out.decomposition_cert = *res.optimal;
        for (std::int64_t k = 1; k <= d; ++k) {
            const Rational gk = out.decomposition_cert.primal[gp + k - 1] -
                                out.decomposition_cert.primal[gm + k - 1];
            if (gk != 0) out.g.set(k, gk);
        }
        out.coefficients.assign(Nn, Rational(0));
        for (std::size_t n = 0; n < Nn; ++n)
            out.coefficients[n] = out.decomposition_cert.primal[cvar + n];
        out.value = out.decomposition_cert.value;
        out.decomposition_program = std::move(p);
    }

    // Ball LP: max <f, x> s.t. t + sum r_n s_n <= 1, |x_k| <= t, |<v_n, x>| <= s_n.
    {
        LinProgram p;
        p.sense = Sense::Max;
        const std::size_t xvar = 0, tvar = xvar + d, svar = tvar + 1;
        for (std::int64_t k = 1; k <= d; ++k) p.add_var(f.get(k));
        p.add_var(Rational(0), Rational(0)); // t
        for (std::size_t n = 0; n < Nn; ++n) p.add_var(Rational(0), Rational(0)); // s_n
        const std::size_t nv = p.num_vars();
        {
            auto row = zero_row(nv);
            row[tvar] = 1;
            for (std::size_t n = 0; n < Nn; ++n) row[svar + n] = lowered_r(terms[n]);
            p.add_row(RowSense::LE, std::move(row), Rational(1));
        }
        for (std::int64_t k = 1; k <= d; ++k) {
            auto row1 = zero_row(nv);
            row1[xvar + k - 1] = 1;
            row1[tvar] = -1;
            p.add_row(RowSense::LE, std::move(row1), Rational(0));
            auto row2 = zero_row(nv);
            row2[xvar + k - 1] = -1;
            row2[tvar] = -1;
            p.add_row(RowSense::LE, std::move(row2), Rational(0));
        }
        for (std::size_t n = 0; n < Nn; ++n) {
            auto row1 = zero_row(nv);
            auto row2 = zero_row(nv);
            for (const auto& [k, vk] : terms[n].v) {
                row1[xvar + k - 1] = vk;
                row2[xvar + k - 1] = -vk;
            }
            row1[svar + n] = -1;
            row2[svar + n] = -1;
            p.add_row(RowSense::LE, std::move(row1), Rational(0));
            p.add_row(RowSense::LE, std::move(row2), Rational(0));
        }
        LpResult res = solve_lp(p);
        if (res.status != LpStatus::Optimal)
            throw InternalError("ball LP must be solvable (the ball is compact)");
        out.ball_cert = *res.optimal;
        for (std::int64_t k = 1; k <= d; ++k) {
            const Rational xk = out.ball_cert.primal[xvar + k - 1];
            if (xk != 0) out.x_star.set(k, xk);
        }
        out.ball_program = std::move(p);
    }

    if (out.ball_cert.value != out.value)
        throw InternalError("zero duality gap violated between the ball and decomposition LPs");
    out.x_star_norm = norm_truncated(cons, out.x_star, Nn);
    if (dot(f, out.x_star) != out.value * out.x_star_norm)
        throw InternalError("norming identity <f,x*> = value * |||x*|||_N failed");
    return out;
}

BallMax max_on_ball(const ReadConstruction& cons, const SparseVec& f, std::size_t N) {
    DualNormPair pair = solve_dual_pair(cons, f, N);
    BallMax out;
    out.x_star = std::move(pair.x_star);
    out.value = std::move(pair.value);
    out.program = std::move(pair.ball_program);
    out.cert = std::move(pair.ball_cert);
    return out;
}

std::size_t exact_rank(const std::vector<SparseVec>& vecs) {
    // Dense Gaussian elimination over the joint support.
    std::vector<std::int64_t> cols;
    for (const auto& v : vecs)
        for (const auto& [i, q] : v) cols.push_back(i);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<std::vector<Rational>> m;
    for (const auto& v : vecs) {
        std::vector<Rational> row;
        row.reserve(cols.size());
        for (std::int64_t c : cols) row.push_back(v.get(c));
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const Rational fac = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols.size(); ++j) m[i][j] -= fac * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

BestApprox best_approximation(const ReadConstruction& cons, const SparseVec& x,
                              const std::vector<SparseVec>& Y, std::size_t N) {
    if (exact_rank(Y) != Y.size())
        throw PreconditionError("best_approximation requires linearly independent Y");
    const std::size_t Nn = cons.clamp_terms(N);
    std::int64_t d = working_dimension(cons, x, Nn);
    for (const auto& y : Y) d = std::max(d, y.max_support());
    const std::size_t m = Y.size();

    std::vector<TermData> terms;
    for (std::size_t n = 1; n <= Nn; ++n) terms.push_back(cons.term(n));

    BestApprox out;

    // Primal: min t + sum r_n s_n over beta (free), t >= 0, s >= 0 with
    // |x_k - (Y beta)_k| <= t and |<v_n, x - Y beta>| <= s_n.
    {
        LinProgram p;
        p.sense = Sense::Min;
        const std::size_t bvar = 0, tvar = m, svar = tvar + 1;
        for (std::size_t i = 0; i < m; ++i) p.add_var(Rational(0));
        p.add_var(Rational(1), Rational(0));
        for (std::size_t n = 0; n < Nn; ++n) p.add_var(lowered_r(terms[n]), Rational(0));
        const std::size_t nv = p.num_vars();
        for (std::int64_t k = 1; k <= d; ++k) {
            auto row1 = zero_row(nv);
            auto row2 = zero_row(nv);
            for (std::size_t i = 0; i < m; ++i) {
                const Rational yk = Y[i].get(k);
                row1[bvar + i] = -yk;
                row2[bvar + i] = yk;
            }
            row1[tvar] = -1;
            row2[tvar] = -1;
            p.add_row(RowSense::LE, std::move(row1), -x.get(k));
            p.add_row(RowSense::LE, std::move(row2), x.get(k));
        }
        for (std::size_t n = 0; n < Nn; ++n) {
            auto row1 = zero_row(nv);
            auto row2 = zero_row(nv);
            for (std::size_t i = 0; i < m; ++i) {
                const Rational vy = dot(terms[n].v, Y[i]);
                row1[bvar + i] = -vy;
                row2[bvar + i] = vy;
            }
            row1[svar + n] = -1;
            row2[svar + n] = -1;
            const Rational vx = dot(terms[n].v, x);
            p.add_row(RowSense::LE, std::move(row1), -vx);
            p.add_row(RowSense::LE, std::move(row2), vx);
        }
        LpResult res = solve_lp(p);
        if (res.status != LpStatus::Optimal)
            throw InternalError("best-approximation primal LP must be solvable");
        out.primal_cert = *res.optimal;
        out.coeffs.assign(m, Rational(0));
        SparseVec y0;
        for (std::size_t i = 0; i < m; ++i) {
            out.coeffs[i] = out.primal_cert.primal[bvar + i];
            y0 = add(y0, scale(out.coeffs[i], Y[i]));
        }
        out.y0 = std::move(y0);
        out.dist = out.primal_cert.value;
        out.primal_program = std::move(p);
    }

    // Dual: max <f, x> over f in Y^perp with a unit dual-ball decomposition
    // f = g+ - g- + sum c_n r_n v_n, sum(g+ + g-) <= 1, |c_n| <= 1.
    {
        LinProgram p;
        p.sense = Sense::Max;
        const std::size_t fvar = 0, gp = fvar + d, gm = gp + d, cvar = gm + d;
        for (std::int64_t k = 1; k <= d; ++k) p.add_var(x.get(k));
        for (std::int64_t k = 0; k < 2 * d; ++k) p.add_var(Rational(0), Rational(0));
        for (std::size_t n = 0; n < Nn; ++n) p.add_var(Rational(0), Rational(-1), Rational(1));
        const std::size_t nv = p.num_vars();
        for (std::size_t i = 0; i < m; ++i) {
            auto row = zero_row(nv);
            for (const auto& [k, q] : Y[i]) row[fvar + k - 1] = q;
            p.add_row(RowSense::EQ, std::move(row), Rational(0));
        }
        for (std::int64_t k = 1; k <= d; ++k) {
            auto row = zero_row(nv);
            row[fvar + k - 1] = 1;
            row[gp + k - 1] = -1;
            row[gm + k - 1] = 1;
            for (std::size_t n = 0; n < Nn; ++n) {
                const Rational vk = terms[n].v.get(k);
                if (vk != 0) row[cvar + n] = -lowered_r(terms[n]) * vk;
            }
            p.add_row(RowSense::EQ, std::move(row), Rational(0));
        }
        {
            auto row = zero_row(nv);
            for (std::int64_t k = 0; k < 2 * d; ++k) row[gp + k] = 1;
            p.add_row(RowSense::LE, std::move(row), Rational(1));
        }
        LpResult res = solve_lp(p);
        if (res.status != LpStatus::Optimal)
            throw InternalError("best-approximation dual LP must be solvable (f = 0 is feasible)");
        out.dual_cert = *res.optimal;
        for (std::int64_t k = 1; k <= d; ++k) {
            const Rational fk = out.dual_cert.primal[fvar + k - 1];
            if (fk != 0) out.dual_functional.set(k, fk);
        }
        out.dual_program = std::move(p);
    }

    if (out.dual_cert.value != out.dist)
        throw InternalError("distance duality violated between the approximation LPs");
    return out;
}

Rational quotient_norm(const ReadConstruction& cons, const SparseVec& x,
                       const std::vector<SparseVec>& Y, std::size_t N) {
    return best_approximation(cons, x, Y, N).dist;
}

} // namespace readspace::lp
