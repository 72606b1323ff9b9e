#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "readspace/enumeration.hpp"
#include "readspace/scaled_rational.hpp"

namespace readspace {

// Rule assigning the admissible exponents a_n. The minimal rule takes the
// smallest value satisfying all three strict constraints (with a_0 = 1, so
// a_1 >= 2); an explicit rule is validated against the same constraints.
struct ARule {
    bool minimal = true;
    std::vector<std::int64_t> explicit_a;

    static ARule minimal_admissible() { return ARule{}; }
    static ARule explicit_list(std::vector<std::int64_t> a) { return ARule{false, std::move(a)}; }
};

struct TermData {
    SparseVec u;
    std::int64_t a = 0;
    SparseVec v;        // (u - e_a) / ||u - e_a||_1, so ||v||_1 = 1 exactly
    ScaledRational r;   // 2^{-a^2} ||u - e_a||_1
    Rational weight_l1; // ||u - e_a||_1 = ||u||_1 + 1
};

struct DensityWitness {
    BigInt index;
    Rational discrepancy; // exact ||v_k - w||_1
    bool materialized = false;
    std::optional<SparseVec> v;
    std::string note;
};

struct ValidationCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    bool pass = true;
    std::vector<ValidationCheck> checks;
    ScaledRational r_sum; // sum of r_n over the checked range
    std::size_t terms_checked = 0;
};

// The data of Read's norm: the enumeration (u_n), exponents (a_n), directions
// (v_n) and weights (r_n), with memoized term streams and the rigorous series
// tail bound. Term materialization is sequential (a_n depends on a_{n-1});
// the cache is append-only behind a mutex, so concurrent readers are safe.
class ReadConstruction {
  public:
    ReadConstruction(EnumerationScheme scheme, ARule rule);

    const EnumerationScheme& scheme() const { return scheme_; }
    const ARule& a_rule() const { return rule_; }

    bool finite() const { return scheme_.finite(); }
    // Number of terms of a finite construction; throws for infinite ones.
    std::size_t term_count() const;
    // min(N, term_count) for finite constructions, N otherwise.
    std::size_t clamp_terms(std::size_t N) const;

    TermData term(std::size_t n) const; // 1-based
    std::int64_t a_of(std::size_t n) const { return term(n).a; }
    ScaledRational partial_r_sum(std::size_t n) const; // sum_{k<=n} r_k, 0 for n = 0

    // Proven upper bound for sum_{n>N} r_n |<x, v_n>| over every x with
    // ||x||_inf <= M, namely M * (8/3) * (A+1) * 2^{-(A+1)^2} with A = a_N.
    // Justified by r_n <= 2 a_n 2^{-a_n^2}, a_n >= A + (n - N), and a
    // termwise ratio <= 1/4.
    ScaledRational tail_bound(std::size_t N, const Rational& M) const;

    // Index k with ||v_k - w||_1 <= eps for l1-normalized w; the index may be
    // astronomically large, in which case the exact discrepancy 2/(K+1) is
    // justified by admissibility (a_k falls outside supp w) rather than by
    // materializing the term.
    DensityWitness density_witness(const SparseVec& w, const Rational& eps) const;

    // Re-derives terms 1..N without the strict admissibility gate and reports
    // every violated constraint instead of throwing.
    ValidationReport validate(std::size_t N) const;

  private:
    void ensure(std::size_t n) const;

    EnumerationScheme scheme_;
    ARule rule_;

    mutable std::mutex mu_;
    mutable std::vector<TermData> terms_;
    mutable std::vector<ScaledRational> r_prefix_;
};

// TOY1: the single-term finite instance (u_1 = e_1, a_1 = 2, v_1 =
// (1/2, -1/2), r_1 = 1/8) used across the test corpus.
ReadConstruction make_toy1();

} // namespace readspace
