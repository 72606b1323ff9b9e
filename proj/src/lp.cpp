#include "readspace/lp.hpp"

#include <algorithm>

#include "readspace/errors.hpp"

namespace readspace::lp {

std::size_t LinProgram::add_var(const Rational& obj, std::optional<Rational> lo,
                                std::optional<Rational> hi) {
    objective.push_back(obj);
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    for (auto& row : rows) row.emplace_back(0);
    return objective.size() - 1;
}

void LinProgram::add_row(RowSense s, std::vector<Rational> coeffs, Rational b) {
    if (coeffs.size() != num_vars()) throw PreconditionError("row width mismatch");
    rows.push_back(std::move(coeffs));
    row_sense.push_back(s);
    rhs.push_back(std::move(b));
}

void LinProgram::check_shape() const {
    const std::size_t n = num_vars();
    if (lower.size() != n || upper.size() != n) throw PreconditionError("bound vector size mismatch");
    if (rows.size() != row_sense.size() || rows.size() != rhs.size())
        throw PreconditionError("row bookkeeping size mismatch");
    for (const auto& row : rows)
        if (row.size() != n) throw PreconditionError("row width mismatch");
}

namespace {

Rational dot_vec(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

} // namespace

bool verify_optimal(const LinProgram& p, const LpCertificate& c, std::string* why) {
    p.check_shape();
    const std::size_t n = p.num_vars();
    const std::size_t m = p.num_rows();
    if (c.primal.size() != n || c.reduced_costs.size() != n || c.row_duals.size() != m)
        return fail(why, "certificate size mismatch");
    // Primal feasibility.
    for (std::size_t j = 0; j < n; ++j) {
        if (p.lower[j] && c.primal[j] < *p.lower[j]) return fail(why, "primal below lower bound");
        if (p.upper[j] && c.primal[j] > *p.upper[j]) return fail(why, "primal above upper bound");
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Rational ax = dot_vec(p.rows[i], c.primal);
        switch (p.row_sense[i]) {
            case RowSense::LE:
                if (ax > p.rhs[i]) return fail(why, "row " + std::to_string(i) + " violated");
                break;
            case RowSense::GE:
                if (ax < p.rhs[i]) return fail(why, "row " + std::to_string(i) + " violated");
                break;
            case RowSense::EQ:
                if (ax != p.rhs[i]) return fail(why, "row " + std::to_string(i) + " violated");
                break;
        }
    }
    // Dual sign table.
    const bool maxim = p.sense == Sense::Max;
    for (std::size_t i = 0; i < m; ++i) {
        const int s = sgn(c.row_duals[i]);
        if (p.row_sense[i] == RowSense::LE && (maxim ? s < 0 : s > 0))
            return fail(why, "dual sign on LE row " + std::to_string(i));
        if (p.row_sense[i] == RowSense::GE && (maxim ? s > 0 : s < 0))
            return fail(why, "dual sign on GE row " + std::to_string(i));
    }
    // Reduced-cost identity and bound compatibility.
    Rational dual_value(0);
    for (std::size_t i = 0; i < m; ++i) dual_value += c.row_duals[i] * p.rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
        Rational r = p.objective[j];
        for (std::size_t i = 0; i < m; ++i) r -= c.row_duals[i] * p.rows[i][j];
        if (r != c.reduced_costs[j]) return fail(why, "reduced cost identity fails at var " + std::to_string(j));
        if (r == 0) continue;
        // A nonzero leftover must press against a finite bound in the
        // direction dictated by the sense.
        const bool up = maxim ? r > 0 : r < 0;
        if (up) {
            if (!p.upper[j]) return fail(why, "positive pressure on unbounded-above var " + std::to_string(j));
            dual_value += r * *p.upper[j];
        } else {
            if (!p.lower[j]) return fail(why, "negative pressure on unbounded-below var " + std::to_string(j));
            dual_value += r * *p.lower[j];
        }
    }
    const Rational primal_value = dot_vec(p.objective, c.primal);
    if (primal_value != c.value) return fail(why, "stated value differs from c^T x");
    if (primal_value != dual_value) return fail(why, "duality gap is nonzero");
    return true;
}

bool verify_infeasible(const LinProgram& p, const FarkasCertificate& c, std::string* why) {
    p.check_shape();
    const std::size_t n = p.num_vars();
    const std::size_t m = p.num_rows();
    if (c.row_duals.size() != m || c.upper_duals.size() != n || c.lower_duals.size() != n)
        return fail(why, "certificate size mismatch");
    for (std::size_t i = 0; i < m; ++i) {
        const int s = sgn(c.row_duals[i]);
        if (p.row_sense[i] == RowSense::LE && s < 0) return fail(why, "Farkas sign on LE row");
        if (p.row_sense[i] == RowSense::GE && s > 0) return fail(why, "Farkas sign on GE row");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (c.upper_duals[j] < 0 || c.lower_duals[j] < 0) return fail(why, "negative bound dual");
        if (c.upper_duals[j] > 0 && !p.upper[j]) return fail(why, "upper dual without a finite upper bound");
        if (c.lower_duals[j] > 0 && !p.lower[j]) return fail(why, "lower dual without a finite lower bound");
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational lhs(0);
        for (std::size_t i = 0; i < m; ++i) lhs += c.row_duals[i] * p.rows[i][j];
        lhs += c.upper_duals[j] - c.lower_duals[j];
        if (lhs != 0) return fail(why, "Farkas combination is not identically zero at var " + std::to_string(j));
    }
    Rational value(0);
    for (std::size_t i = 0; i < m; ++i) value += c.row_duals[i] * p.rhs[i];
    for (std::size_t j = 0; j < n; ++j) {
        if (c.upper_duals[j] > 0) value += c.upper_duals[j] * *p.upper[j];
        if (c.lower_duals[j] > 0) value -= c.lower_duals[j] * *p.lower[j];
    }
    if (value >= 0) return fail(why, "Farkas value is not negative");
    return true;
}

bool verify_unbounded(const LinProgram& p, const RayCertificate& c, std::string* why) {
    p.check_shape();
    const std::size_t n = p.num_vars();
    if (c.point.size() != n || c.ray.size() != n) return fail(why, "certificate size mismatch");
    // The point must be feasible.
    LpCertificate probe{Rational(0), c.point, std::vector<Rational>(p.num_rows(), Rational(0)),
                        std::vector<Rational>(n, Rational(0))};
    // Reuse the feasibility part only: run the checks manually.
    for (std::size_t j = 0; j < n; ++j) {
        if (p.lower[j] && c.point[j] < *p.lower[j]) return fail(why, "ray base below lower bound");
        if (p.upper[j] && c.point[j] > *p.upper[j]) return fail(why, "ray base above upper bound");
    }
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
        const Rational ax = dot_vec(p.rows[i], c.point);
        const Rational ad = dot_vec(p.rows[i], c.ray);
        switch (p.row_sense[i]) {
            case RowSense::LE:
                if (ax > p.rhs[i] || ad > 0) return fail(why, "ray violates LE row " + std::to_string(i));
                break;
            case RowSense::GE:
                if (ax < p.rhs[i] || ad < 0) return fail(why, "ray violates GE row " + std::to_string(i));
                break;
            case RowSense::EQ:
                if (ax != p.rhs[i] || ad != 0) return fail(why, "ray violates EQ row " + std::to_string(i));
                break;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (c.ray[j] > 0 && p.upper[j]) return fail(why, "ray increases a bounded-above var");
        if (c.ray[j] < 0 && p.lower[j]) return fail(why, "ray decreases a bounded-below var");
    }
    const Rational cd = dot_vec(p.objective, c.ray);
    if (p.sense == Sense::Max ? cd <= 0 : cd >= 0) return fail(why, "ray does not improve the objective");
    (void)probe;
    return true;
}

namespace {

// Variable transform into the nonnegative standard form.
struct VarMap {
    enum Kind { Shift, Flip, Split } kind = Shift;
    Rational offset;      // l for Shift, u for Flip
    std::size_t col = 0;  // primary column
    std::size_t col2 = 0; // negative part for Split
};

struct Standardizer {
    const LinProgram& p;
    std::vector<VarMap> vars;
    std::size_t ncols = 0; // structural columns
    // transformed rows: original rows first, then bound rows (var of bound row)
    std::vector<std::vector<Rational>> trows;
    std::vector<RowSense> tsense;
    std::vector<Rational> trhs;
    std::vector<std::optional<std::size_t>> bound_row_var;

    explicit Standardizer(const LinProgram& prog) : p(prog) {
        const std::size_t n = p.num_vars();
        vars.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            VarMap& v = vars[j];
            if (p.lower[j]) {
                v.kind = VarMap::Shift;
                v.offset = *p.lower[j];
                v.col = ncols++;
            } else if (p.upper[j]) {
                v.kind = VarMap::Flip;
                v.offset = *p.upper[j];
                v.col = ncols++;
            } else {
                v.kind = VarMap::Split;
                v.col = ncols++;
                v.col2 = ncols++;
            }
        }
        for (std::size_t i = 0; i < p.num_rows(); ++i) {
            trows.push_back(transform_row(p.rows[i]));
            tsense.push_back(p.row_sense[i]);
            trhs.push_back(p.rhs[i] - row_offset(p.rows[i]));
            bound_row_var.push_back(std::nullopt);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (p.lower[j] && p.upper[j]) {
                std::vector<Rational> row(ncols, Rational(0));
                row[vars[j].col] = 1;
                trows.push_back(std::move(row));
                tsense.push_back(RowSense::LE);
                trhs.push_back(*p.upper[j] - *p.lower[j]);
                bound_row_var.push_back(j);
            }
        }
    }

    std::vector<Rational> transform_row(const std::vector<Rational>& row) const {
        std::vector<Rational> out(ncols, Rational(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            const VarMap& v = vars[j];
            switch (v.kind) {
                case VarMap::Shift: out[v.col] += row[j]; break;
                case VarMap::Flip: out[v.col] -= row[j]; break;
                case VarMap::Split:
                    out[v.col] += row[j];
                    out[v.col2] -= row[j];
                    break;
            }
        }
        return out;
    }

    Rational row_offset(const std::vector<Rational>& row) const {
        Rational s(0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            const VarMap& v = vars[j];
            if (v.kind != VarMap::Split) s += row[j] * v.offset;
        }
        return s;
    }

    std::vector<Rational> untransform(const std::vector<Rational>& xprime) const {
        std::vector<Rational> x(p.num_vars(), Rational(0));
        for (std::size_t j = 0; j < x.size(); ++j) {
            const VarMap& v = vars[j];
            switch (v.kind) {
                case VarMap::Shift: x[j] = v.offset + xprime[v.col]; break;
                case VarMap::Flip: x[j] = v.offset - xprime[v.col]; break;
                case VarMap::Split: x[j] = xprime[v.col] - xprime[v.col2]; break;
            }
        }
        return x;
    }

    std::vector<Rational> untransform_ray(const std::vector<Rational>& dprime) const {
        std::vector<Rational> d(p.num_vars(), Rational(0));
        for (std::size_t j = 0; j < d.size(); ++j) {
            const VarMap& v = vars[j];
            switch (v.kind) {
                case VarMap::Shift: d[j] = dprime[v.col]; break;
                case VarMap::Flip: d[j] = -dprime[v.col]; break;
                case VarMap::Split: d[j] = dprime[v.col] - dprime[v.col2]; break;
            }
        }
        return d;
    }

    std::vector<Rational> transform_objective(const std::vector<Rational>& c) const {
        std::vector<Rational> out(ncols, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            const VarMap& v = vars[j];
            switch (v.kind) {
                case VarMap::Shift: out[v.col] += c[j]; break;
                case VarMap::Flip: out[v.col] -= c[j]; break;
                case VarMap::Split:
                    out[v.col] += c[j];
                    out[v.col2] -= c[j];
                    break;
            }
        }
        return out;
    }
};

// Dense tableau with an explicit cost row; Bland's rule throughout.
class Simplex {
  public:
    Simplex(const Standardizer& std_form, std::vector<Rational> min_objective)
        : s_(std_form), c2_(std::move(min_objective)) {
        build();
    }

    enum class Outcome { Optimal, Infeasible, Unbounded };

    Outcome run() {
        if (need_phase1_) {
            set_costs_phase1();
            pivot_loop(/*phase1=*/true);
            if (objective_value() > 0) return Outcome::Infeasible;
            evacuate_artificials();
        }
        set_costs_phase2();
        if (!pivot_loop(/*phase1=*/false)) return Outcome::Unbounded;
        return Outcome::Optimal;
    }

    // Value of the phase objective at the current basis.
    Rational objective_value() const { return -cost_[total_cols_]; }

    std::vector<Rational> structural_solution() const {
        std::vector<Rational> x(s_.ncols, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < s_.ncols) x[basis_[i]] = tab_[i][total_cols_];
        return x;
    }

    // Equality-form multipliers per transformed row (flips undone), current
    // phase costs.
    std::vector<Rational> row_multipliers(bool phase1) const {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational cid = phase1 && identity_is_artificial_[i] ? Rational(1) : Rational(0);
            Rational yi = cid - cost_[identity_col_[i]];
            y[i] = flipped_[i] ? Rational(-yi) : yi;
        }
        return y;
    }

    std::size_t unbounded_col() const { return unbounded_col_; }

    std::vector<Rational> ray_structural() const {
        std::vector<Rational> d(s_.ncols, Rational(0));
        if (unbounded_col_ < s_.ncols) d[unbounded_col_] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < s_.ncols) d[basis_[i]] = -tab_[i][unbounded_col_];
        return d;
    }

  private:
    void build() {
        m_ = s_.trows.size();
        nslack_ = 0;
        for (RowSense rs : s_.tsense)
            if (rs != RowSense::EQ) ++nslack_;
        slack_col_.assign(m_, SIZE_MAX);
        art_col_.assign(m_, SIZE_MAX);
        identity_col_.assign(m_, SIZE_MAX);
        identity_is_artificial_.assign(m_, false);
        flipped_.assign(m_, false);

        std::size_t next = s_.ncols;
        for (std::size_t i = 0; i < m_; ++i)
            if (s_.tsense[i] != RowSense::EQ) slack_col_[i] = next++;
        nart_ = 0;
        // Decide flips and artificial needs first.
        std::vector<Rational> rhs(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            rhs[i] = s_.trhs[i];
            flipped_[i] = rhs[i] < 0;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const RowSense rs = s_.tsense[i];
            const bool slack_is_basis = rs == RowSense::LE ? !flipped_[i] : (rs == RowSense::GE && flipped_[i]);
            if (!slack_is_basis) {
                art_col_[i] = next++;
                ++nart_;
            }
        }
        need_phase1_ = nart_ > 0;
        total_cols_ = next;

        tab_.assign(m_, std::vector<Rational>(total_cols_ + 1, Rational(0)));
        basis_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            const int f = flipped_[i] ? -1 : 1;
            for (std::size_t j = 0; j < s_.ncols; ++j) tab_[i][j] = f * s_.trows[i][j];
            if (slack_col_[i] != SIZE_MAX)
                tab_[i][slack_col_[i]] = Rational(f * (s_.tsense[i] == RowSense::LE ? 1 : -1));
            tab_[i][total_cols_] = f * rhs[i];
            if (art_col_[i] != SIZE_MAX) {
                tab_[i][art_col_[i]] = 1;
                basis_[i] = art_col_[i];
                identity_col_[i] = art_col_[i];
                identity_is_artificial_[i] = true;
            } else {
                basis_[i] = slack_col_[i];
                identity_col_[i] = slack_col_[i];
            }
        }
    }

    void set_costs_phase1() {
        cost_.assign(total_cols_ + 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (art_col_[i] != SIZE_MAX) cost_[art_col_[i]] = 1;
        reduce_cost_row();
        phase1_ = true;
    }

    void set_costs_phase2() {
        cost_.assign(total_cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < s_.ncols; ++j) cost_[j] = c2_[j];
        reduce_cost_row();
        phase1_ = false;
    }

    void reduce_cost_row() {
        // cost row := c - c_B B^{-1} A, computed from the current tableau.
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= total_cols_; ++j) cost_[j] -= cb * tab_[i][j];
        }
    }

    bool allowed_entering(std::size_t j) const {
        if (j >= total_cols_) return false;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == j) return false;
        if (!phase1_ && art_col_for(j)) return false;
        return true;
    }

    bool art_col_for(std::size_t j) const { return j >= s_.ncols + nslack_; }

    // Returns false when the phase-2 objective is unbounded.
    bool pivot_loop(bool phase1) {
        for (;;) {
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < total_cols_; ++j) {
                if (cost_[j] < 0 && allowed_entering(j)) {
                    enter = j;
                    break; // Bland: lowest index
                }
            }
            if (enter == SIZE_MAX) return true;
            std::size_t leave = SIZE_MAX;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                const Rational ratio = tab_[i][total_cols_] / tab_[i][enter];
                if (leave == SIZE_MAX || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == SIZE_MAX) {
                if (phase1) throw InternalError("phase-1 objective unbounded");
                unbounded_col_ = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& r = tab_[row];
        const Rational piv = r[col];
        for (auto& v : r) v /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            const Rational f = tab_[i][col];
            if (f == 0) continue;
            auto& t = tab_[i];
            for (std::size_t j = 0; j <= total_cols_; ++j)
                if (r[j] != 0) t[j] -= f * r[j];
        }
        const Rational fc = cost_[col];
        if (fc != 0)
            for (std::size_t j = 0; j <= total_cols_; ++j)
                if (r[j] != 0) cost_[j] -= fc * r[j];
        basis_[row] = col;
    }

    void evacuate_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!art_col_for(basis_[i])) continue;
            // Basic artificial at level zero: swap in any structural or slack
            // column with a nonzero entry; if none, the row is redundant and
            // stays inert.
            for (std::size_t j = 0; j < s_.ncols + nslack_; ++j) {
                if (tab_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    const Standardizer& s_;
    std::vector<Rational> c2_;
    std::size_t m_ = 0, nslack_ = 0, nart_ = 0, total_cols_ = 0;
    bool need_phase1_ = false, phase1_ = false;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_, slack_col_, art_col_, identity_col_;
    std::vector<bool> identity_is_artificial_, flipped_;
    std::size_t unbounded_col_ = SIZE_MAX;
};

FarkasCertificate farkas_from_multipliers(const LinProgram& p, const Standardizer& s,
                                          const std::vector<Rational>& mu) {
    // mu are equality-form multipliers with mu^T A' <= 0 (componentwise over
    // transformed columns) and mu^T b' > 0. Original-row duals are -mu; bound
    // rows and variable transforms land in the bound duals.
    const std::size_t n = p.num_vars();
    FarkasCertificate c;
    c.row_duals.assign(p.num_rows(), Rational(0));
    c.upper_duals.assign(n, Rational(0));
    c.lower_duals.assign(n, Rational(0));
    for (std::size_t i = 0; i < p.num_rows(); ++i) c.row_duals[i] = -mu[i];
    for (std::size_t k = p.num_rows(); k < mu.size(); ++k) {
        if (!s.bound_row_var[k]) continue;
        const std::size_t j = *s.bound_row_var[k];
        c.upper_duals[j] += -mu[k]; // bound row is x'_j <= u_j - l_j
    }
    // Close the combination exactly: A^T y + s - t = 0.
    for (std::size_t j = 0; j < n; ++j) {
        Rational g(0);
        for (std::size_t i = 0; i < p.num_rows(); ++i) g += c.row_duals[i] * p.rows[i][j];
        g += c.upper_duals[j];
        // remaining slack goes to whichever side has a finite bound
        if (g > 0) {
            c.lower_duals[j] += g;
        } else if (g < 0) {
            c.upper_duals[j] += -g;
        }
    }
    return c;
}

} // namespace

LpResult solve_lp(const LinProgram& p) {
    p.check_shape();
    LpResult out;

    // Crossed bounds are infeasible before any simplex work.
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
        if (p.lower[j] && p.upper[j] && *p.lower[j] > *p.upper[j]) {
            FarkasCertificate c;
            c.row_duals.assign(p.num_rows(), Rational(0));
            c.upper_duals.assign(p.num_vars(), Rational(0));
            c.lower_duals.assign(p.num_vars(), Rational(0));
            c.upper_duals[j] = 1;
            c.lower_duals[j] = 1;
            std::string why;
            if (!verify_infeasible(p, c, &why)) throw InternalError("bound Farkas failed: " + why);
            out.status = LpStatus::Infeasible;
            out.infeasible = std::move(c);
            return out;
        }
    }

    Standardizer s(p);
    std::vector<Rational> cmin = s.transform_objective(p.objective);
    if (p.sense == Sense::Max)
        for (auto& v : cmin) v = -v;

    Simplex splx(s, std::move(cmin));
    const Simplex::Outcome res = splx.run();

    if (res == Simplex::Outcome::Infeasible) {
        const std::vector<Rational> mu = splx.row_multipliers(/*phase1=*/true);
        FarkasCertificate c = farkas_from_multipliers(p, s, mu);
        std::string why;
        if (!verify_infeasible(p, c, &why)) throw InternalError("Farkas certificate failed: " + why);
        out.status = LpStatus::Infeasible;
        out.infeasible = std::move(c);
        return out;
    }

    if (res == Simplex::Outcome::Unbounded) {
        RayCertificate c;
        c.point = s.untransform(splx.structural_solution());
        c.ray = s.untransform_ray(splx.ray_structural());
        std::string why;
        if (!verify_unbounded(p, c, &why)) throw InternalError("ray certificate failed: " + why);
        out.status = LpStatus::Unbounded;
        out.unbounded = std::move(c);
        return out;
    }

    LpCertificate c;
    c.primal = s.untransform(splx.structural_solution());
    const std::vector<Rational> yhat = splx.row_multipliers(/*phase1=*/false);
    c.row_duals.resize(p.num_rows());
    for (std::size_t i = 0; i < p.num_rows(); ++i)
        c.row_duals[i] = p.sense == Sense::Max ? Rational(-yhat[i]) : yhat[i];
    c.reduced_costs.resize(p.num_vars());
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
        Rational r = p.objective[j];
        for (std::size_t i = 0; i < p.num_rows(); ++i) r -= c.row_duals[i] * p.rows[i][j];
        c.reduced_costs[j] = r;
    }
    c.value = dot_vec(p.objective, c.primal);
    std::string why;
    if (!verify_optimal(p, c, &why)) throw InternalError("optimal certificate failed: " + why);
    out.status = LpStatus::Optimal;
    out.optimal = std::move(c);
    return out;
}

} // namespace readspace::lp
