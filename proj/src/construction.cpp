#include "readspace/construction.hpp"

#include <algorithm>
#include <sstream>

namespace readspace {

namespace {

constexpr std::int64_t kMaxA = 3037000499; // floor(sqrt(2^63 - 1))

std::int64_t square_checked(std::int64_t a) {
    if (a > kMaxA) throw RangeError("a_n = " + std::to_string(a) + " puts a_n^2 beyond the exp2 range");
    return a * a;
}

std::int64_t minimal_a(std::int64_t prev, const SparseVec& u) {
    const std::int64_t supp_floor = u.max_support();
    const BigInt l1_floor = rat_floor(l1_norm(u));
    std::int64_t a = prev + 1;
    a = std::max(a, supp_floor + 1);
    if (l1_floor + 1 > a) a = to_int64(l1_floor + 1);
    return a;
}

// The three strict admissibility constraints; returns the name of the first
// violated one, empty when admissible.
std::string admissibility_issue(std::int64_t a, std::int64_t prev, std::size_t n, const SparseVec& u) {
    if (a < 1) return "a_n must be a positive integer";
    if (n > 1 && a <= prev)
        return "monotonicity: a_" + std::to_string(n) + " = " + std::to_string(a) +
               " must exceed a_" + std::to_string(n - 1) + " = " + std::to_string(prev);
    if (a <= u.max_support())
        return "support: a_" + std::to_string(n) + " = " + std::to_string(a) +
               " must exceed max supp u_n = " + std::to_string(u.max_support());
    if (Rational(static_cast<long>(a)) <= l1_norm(u))
        return "l1: a_" + std::to_string(n) + " = " + std::to_string(a) +
               " must exceed ||u_n||_1 = " + rational_str(l1_norm(u));
    return "";
}

TermData finish_term(SparseVec u, std::int64_t a) {
    TermData t;
    t.u = std::move(u);
    t.a = a;
    SparseVec diff = t.u;
    diff.set(a, diff.get(a) - 1);
    t.weight_l1 = l1_norm(diff);
    t.v = scale(Rational(1) / t.weight_l1, diff);
    t.r = ScaledRational(t.weight_l1, -square_checked(a));
    return t;
}

} // namespace

ReadConstruction::ReadConstruction(EnumerationScheme scheme, ARule rule)
    : scheme_(std::move(scheme)), rule_(std::move(rule)) {}

std::size_t ReadConstruction::term_count() const {
    if (!finite()) throw PreconditionError("term_count only applies to finite constructions");
    return scheme_.prefix_size();
}

std::size_t ReadConstruction::clamp_terms(std::size_t N) const {
    return finite() ? std::min(N, term_count()) : N;
}

void ReadConstruction::ensure(std::size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (terms_.size() < n) {
        const std::size_t k = terms_.size() + 1;
        SparseVec u = scheme_.enumerate(BigInt(static_cast<unsigned long>(k)));
        const std::int64_t prev = k == 1 ? 1 : terms_[k - 2].a;
        std::int64_t a = 0;
        if (rule_.minimal) {
            a = minimal_a(prev, u);
        } else {
            if (k > rule_.explicit_a.size())
                throw AdmissibilityError("explicit a-rule exhausted at term " + std::to_string(k));
            a = rule_.explicit_a[k - 1];
        }
        const std::string issue = admissibility_issue(a, prev, k, u);
        if (!issue.empty()) throw AdmissibilityError(issue);
        TermData t = finish_term(std::move(u), a);
        r_prefix_.push_back(r_prefix_.empty() ? t.r : r_prefix_.back() + t.r);
        terms_.push_back(std::move(t));
    }
}

TermData ReadConstruction::term(std::size_t n) const {
    if (n < 1) throw PreconditionError("term index must be >= 1");
    if (finite() && n > term_count())
        throw RangeError("term " + std::to_string(n) + " past the end of a finite construction");
    ensure(n);
    std::lock_guard<std::mutex> lock(mu_);
    return terms_[n - 1];
}

ScaledRational ReadConstruction::partial_r_sum(std::size_t n) const {
    if (n == 0) return ScaledRational();
    ensure(n);
    std::lock_guard<std::mutex> lock(mu_);
    return r_prefix_[n - 1];
}

ScaledRational ReadConstruction::tail_bound(std::size_t N, const Rational& M) const {
    if (N < 1) throw PreconditionError("tail_bound requires N >= 1");
    if (M < 0) throw PreconditionError("tail_bound requires M >= 0");
    if (M == 0) return ScaledRational();
    if (finite() && N >= term_count()) return ScaledRational();
    const std::int64_t A = term(N).a;
    if (A >= kMaxA) throw RangeError("tail bound exponent out of range");
    const std::int64_t e = square_checked(A + 1);
    const Rational mantissa = M * Rational(8, 3) * Rational(static_cast<long>(A + 1));
    return ScaledRational(mantissa, -e);
}

DensityWitness ReadConstruction::density_witness(const SparseVec& w, const Rational& eps) const {
    if (l1_norm(w) != 1) throw PreconditionError("density_witness requires ||w||_1 = 1");
    if (eps <= 0) throw PreconditionError("density_witness requires eps > 0");

    DensityWitness out;

    // Any unit direction is within the sphere's diameter.
    if (eps >= 2) {
        const TermData t = term(1);
        out.index = 1;
        out.v = t.v;
        out.discrepancy = l1_norm(sub(t.v, w));
        out.materialized = true;
        out.note = "eps >= 2: any unit v_k qualifies";
        return out;
    }

    // Exact hit: w = -e_j arises as v_n whenever u_n = 0 and a_n = j.
    if (w.support_size() == 1 && w.begin()->second == -1) {
        const std::int64_t j = w.begin()->first;
        const SparseVec zero;
        for (BigInt occ(1);; ++occ) {
            BigInt idx;
            try {
                idx = scheme_.locate(zero, occ);
            } catch (const RangeError&) {
                break; // finite scheme ran out of zero terms
            }
            if (idx > j) break; // a_n >= n+1 > j from here on
            const std::size_t n = static_cast<std::size_t>(to_int64(idx));
            const TermData t = term(n);
            if (t.a == j) {
                out.index = idx;
                out.v = t.v;
                out.discrepancy = 0;
                out.materialized = true;
                out.note = "exact hit: u_n = 0 with a_n = " + std::to_string(j);
                return out;
            }
            if (t.a > j) break;
        }
    }

    // General witness: u = K*w with K >= 2/eps makes ||v_k - w||_1 = 2/(K+1).
    const BigInt K = rat_ceil(Rational(2) / eps);
    SparseVec u;
    for (const auto& [i, q] : w) u.set(i, Rational(K) * q);
    out.index = scheme_.locate(u, 1);
    out.discrepancy = Rational(2) / Rational(K + 1);
    out.note = "||v_k - w||_1 = (||w||_1 + 1)/(K+1) exactly since a_k > max supp u_k";
    if (out.index.fits_ulong_p() && out.index.get_ui() <= 100000) {
        const TermData t = term(static_cast<std::size_t>(out.index.get_ui()));
        out.v = t.v;
        const Rational exact = l1_norm(sub(t.v, w));
        if (exact != out.discrepancy)
            throw InternalError("density witness discrepancy mismatch against materialized term");
        out.materialized = true;
    }
    return out;
}

ValidationReport ReadConstruction::validate(std::size_t N) const {
    ValidationReport rep;
    const std::size_t limit = clamp_terms(N);

    ValidationCheck mono{"a strictly increasing", true, ""};
    ValidationCheck supp{"a_n > max supp u_n", true, ""};
    ValidationCheck l1c{"a_n > ||u_n||_1", true, ""};
    ValidationCheck vnorm{"||v_n||_1 = 1", true, ""};
    ValidationCheck rsum{"partial sums of r_n <= 2", true, ""};

    std::int64_t prev = 1;
    ScaledRational sum;
    const ScaledRational two{Rational(2)};
    for (std::size_t n = 1; n <= limit; ++n) {
        SparseVec u = scheme_.enumerate(BigInt(static_cast<unsigned long>(n)));
        std::int64_t a = 0;
        bool have_a = true;
        if (rule_.minimal) {
            a = minimal_a(prev, u);
        } else if (n <= rule_.explicit_a.size()) {
            a = rule_.explicit_a[n - 1];
        } else {
            have_a = false;
        }
        if (!have_a) {
            mono.pass = false;
            if (mono.detail.empty()) mono.detail = "explicit a-rule exhausted at n = " + std::to_string(n);
            break;
        }
        auto note = [&](ValidationCheck& c, const std::string& d) {
            c.pass = false;
            if (c.detail.empty()) c.detail = d;
        };
        if (a < 1 || (n > 1 && a <= prev))
            note(mono, "fail at n = " + std::to_string(n) + " (a = " + std::to_string(a) + ")");
        if (a <= u.max_support())
            note(supp, "fail at n = " + std::to_string(n));
        if (Rational(static_cast<long>(a)) <= l1_norm(u))
            note(l1c, "fail at n = " + std::to_string(n));
        // Best-effort term data even for inadmissible a (degenerate when u = e_a).
        SparseVec diff = u;
        if (a >= 1) diff.set(a, diff.get(a) - 1);
        const Rational weight = l1_norm(diff);
        if (weight == 0) {
            note(vnorm, "degenerate term (u_n = e_{a_n}) at n = " + std::to_string(n));
        } else {
            if (l1_norm(scale(Rational(1) / weight, diff)) != 1)
                note(vnorm, "fail at n = " + std::to_string(n));
            if (a >= 1 && a <= kMaxA) {
                sum += ScaledRational(weight, -a * a);
                if (sum > two) note(rsum, "fail at n = " + std::to_string(n));
            }
        }
        prev = a;
        rep.terms_checked = n;
    }

    rep.r_sum = sum;
    rep.checks = {mono, supp, l1c, vnorm, rsum};
    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

ReadConstruction make_toy1() {
    return ReadConstruction(EnumerationScheme::front_loaded({SparseVec::unit(1)}, false),
                            ARule::minimal_admissible());
}

} // namespace readspace
