#pragma once

#include <optional>
#include <vector>

#include "readspace/norm_engine.hpp"

namespace readspace::geometry {

// A sign-separated direction v_k certifies 2 - |||x+y||| >= 2 r_k min(|<x,v_k>|, |<y,v_k>|)
// for unit x, y; the slack field absorbs the unit tolerance and the width of
// the direct enclosure.
struct StrictConvexityCert {
    std::size_t k = 0;
    Rational x_inner; // <x, v_k>
    Rational y_inner; // <y, v_k>, opposite sign
    ScaledRational gap_lower_bound;
    Interval direct_gap; // enclosure of 2 - |||x+y|||
    ScaledRational slack;
    bool verified = false; // direct_gap.lo >= gap_lower_bound - slack
};

// not_found is the honest outcome when no separating v_k exists within the
// scan depth (on polyhedral toy instances it genuinely may not).
template <class V>
std::optional<StrictConvexityCert> strict_convexity_certificate(
    const ReadConstruction& cons, const V& x, const V& y, std::size_t search_depth,
    const Rational& unit_tol);

// Enclosure of the convexity defect 2 - |||x + y||| of width <= eps.
template <class V>
Interval midpoint_gap(const ReadConstruction& cons, const V& x, const V& y, const Rational& eps);

// Witness of the proof of 2/3-roughness: p_pm = x0 +- rho e_N with
// |||p_pm||| <= 1 certified, f(p_pm) > 1 - 3 lambda delta exact, and
// separation ||p_+ - p_-||_inf = 2 rho = 2/3 - 2 lambda delta.
struct RoughnessWitness {
    SparseVec f;
    Rational lambda, delta, rho;
    Interval f_dual_norm;
    SparseVec x0;
    Interval x0_norm;
    std::int64_t basis_index = 0; // index of the e_N direction
    SparseVec p_plus, p_minus;
    Interval p_plus_norm, p_minus_norm;
    Rational f_at_p_plus, f_at_p_minus;
    Rational threshold;  // 1 - 3 lambda delta
    Rational separation; // 2 rho
    bool checks_pass = false;
};

RoughnessWitness roughness_witness(const ReadConstruction& cons, const SparseVec& f,
                                   const Rational& lambda, const Rational& delta,
                                   std::size_t depth);

// 2 rho from a generated witness: a certified lower bound for the diameter of
// the slice {x in B : f(x) > 1 - 3 lambda delta}.
ScaledRational slice_diameter_lower(const ReadConstruction& cons, const SparseVec& f,
                                    const Rational& lambda, const Rational& delta,
                                    std::size_t depth);

struct ConormCheck {
    Rational lhs; // ||u + rho e_m||_inf
    Rational rhs; // max(||u||_inf, rho)
    bool pass = false;
};

// Exact at finite m thanks to disjoint supports; m inside supp u is an error.
ConormCheck conorm_check(const SparseVec& u, const Rational& rho, std::int64_t m);

struct LurRow {
    std::int64_t m = 0;
    Interval scale;     // nu_m = |||x + rho e_m|||
    Interval sum_norm;  // |||x + y_m|||, y_m = (x + rho e_m)/nu_m
    Interval diff_norm; // |||y_m - x|||
};

struct LurFailureReport {
    SparseVec x;
    Rational rho;
    Interval x_norm;
    std::vector<LurRow> rows;
};

LurFailureReport lur_failure_report(const ReadConstruction& cons, const SparseVec& x,
                                    const Rational& rho, const std::vector<std::int64_t>& m_list,
                                    const Rational& eps, const Rational& unit_tol);

struct WlurRow {
    std::int64_t m = 0; // index position for custom families
    Interval y_sup;     // ||y_m||_inf
    Interval xy_sup;    // ||x + y_m||_inf
    Interval sum_norm;  // |||x + y_m|||
};

struct WlurProbeReport {
    SparseVec x;
    std::vector<WlurRow> rows;
    // Limits read off the stabilized end of the family.
    Interval eq22_residual;               // | lim ||x+y||_inf - ||x||_inf - lim ||y||_inf |
    std::vector<Interval> eq23_residuals; // | |<x+ybar,v_n>| - |<x,v_n>| - |<ybar,v_n>| |
    Interval recovered_a;                 // lim ||y_m||_inf / ||x||_inf
    Interval norming_defect;              // | 2 - lim |||x + y_m||| |
};

// Natural family y_m = (x + rho e_m)/|||x + rho e_m|||.
WlurProbeReport wlur_probe(const ReadConstruction& cons, const SparseVec& x, const Rational& rho,
                           const std::vector<std::int64_t>& m_list, const Rational& eps,
                           const Rational& unit_tol, std::size_t n_report);

// Explicit family (negative controls and custom probes); no unit requirement
// on the family members, the report shows whatever defect they carry.
WlurProbeReport wlur_probe_family(const ReadConstruction& cons, const SparseVec& x,
                                  const std::vector<SparseVec>& family, const Rational& eps,
                                  const Rational& unit_tol, std::size_t n_report);

struct GoldstineApproximant {
    SparseVec x_m;
    Rational scale_c; // |||xbar||| / |||S_m xbar||| up to certification mid-points
    Interval x_m_norm;
    Interval xbar_norm;
    std::int64_t agree_count = 0; // leading coordinates with x_m(k) = c xbar(k)
    bool within_slack = false;
};

GoldstineApproximant goldstine_approximants(const ReadConstruction& cons, const TailVec& xbar,
                                            std::int64_t m, const Rational& slack,
                                            const Rational& eps);

struct ConvergenceRow {
    std::int64_t m = 0;
    Interval norm; // |||S_m xbar|||
    Rational sup;  // ||S_m xbar||_inf
};

struct NormConvergenceProbe {
    std::vector<ConvergenceRow> rows;
    Interval full_norm;
    Rational full_sup;
};

NormConvergenceProbe norm_convergence_probe(const ReadConstruction& cons, const TailVec& xbar,
                                            const std::vector<std::int64_t>& m_list,
                                            const Rational& eps);

} // namespace readspace::geometry
