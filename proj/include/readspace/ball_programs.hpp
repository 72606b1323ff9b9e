#pragma once

#include "readspace/construction.hpp"
#include "readspace/lp.hpp"

namespace readspace::lp {

// Exponent ceiling for lowering r_n into LP tableaus; a_n beyond sqrt of this
// is rejected with a RangeError (front-loaded schemes keep experiment LPs
// small, the canonical scheme crosses this only past a_n = 255).
constexpr std::int64_t kLpMaxExpBits = 65536;

// Columns used by the truncated-norm programs: everything outside
// max(supp f, supp v_1..v_N) = max(supp f, a_N) cannot change any objective.
std::int64_t working_dimension(const ReadConstruction& cons, const SparseVec& f, std::size_t N);

// The two formulations of the truncated dual norm, solved together:
//   decomposition  min t s.t. f = g + sum_n c_n r_n v_n, ||g||_1 <= t, |c_n| <= t
//   ball           max <f, x> over the truncated unit ball (epigraph form)
// Strong duality makes the two values one rational; solve_dual_pair checks
// that and the norming identity <f, x*> = value * norm_truncated(x*, N).
struct DualNormPair {
    Rational value;
    std::size_t terms = 0; // truncation actually used (clamped for finite constructions)
    // decomposition side
    SparseVec g;
    std::vector<Rational> coefficients; // c_n
    LinProgram decomposition_program;
    LpCertificate decomposition_cert;
    // ball side
    SparseVec x_star;
    Rational x_star_norm; // norm_truncated(x_star, terms)
    LinProgram ball_program;
    LpCertificate ball_cert;
};

DualNormPair solve_dual_pair(const ReadConstruction& cons, const SparseVec& f, std::size_t N);

struct BallMax {
    SparseVec x_star;
    Rational value;
    LinProgram program;
    LpCertificate cert;
};

// Maximizer of f over the truncated unit ball; value equals the truncated
// dual norm (consistency enforced against the decomposition LP).
BallMax max_on_ball(const ReadConstruction& cons, const SparseVec& f, std::size_t N);

struct BestApprox {
    SparseVec y0;                  // nearest point in span Y
    std::vector<Rational> coeffs;  // y0 = sum coeffs_i Y_i
    Rational dist;                 // norm_truncated(x - y0, N)
    SparseVec dual_functional;     // f in Y^perp, truncated dual norm <= 1, <f, x> = dist
    LinProgram primal_program;
    LpCertificate primal_cert;
    LinProgram dual_program;
    LpCertificate dual_cert;
};

// Nearest point of span Y in the truncated norm plus the optimality
// certificate from the dual LP max{<f,x> : f in Y^perp, |||f|||* <= 1}.
// Y must be linearly independent.
BestApprox best_approximation(const ReadConstruction& cons, const SparseVec& x,
                              const std::vector<SparseVec>& Y, std::size_t N);

Rational quotient_norm(const ReadConstruction& cons, const SparseVec& x,
                       const std::vector<SparseVec>& Y, std::size_t N);

// Exact rank of a list of sparse vectors (Gaussian elimination over Q).
std::size_t exact_rank(const std::vector<SparseVec>& vecs);

} // namespace readspace::lp
