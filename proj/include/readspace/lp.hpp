#pragma once

#include <optional>
#include <string>
#include <vector>

#include "readspace/rational.hpp"

namespace readspace::lp {

enum class Sense { Min, Max };
enum class RowSense { LE, EQ, GE };

// Dense exact-rational linear program. Bounds are optional on both sides;
// rows carry their own sense.
struct LinProgram {
    Sense sense = Sense::Max;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<RowSense> row_sense;
    std::vector<Rational> rhs;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }

    // free variable by default
    std::size_t add_var(const Rational& obj,
                        std::optional<Rational> lo = std::nullopt,
                        std::optional<Rational> hi = std::nullopt);
    void add_row(RowSense s, std::vector<Rational> coeffs, Rational b);
    void check_shape() const;
};

// Primal point, row duals and reduced costs with exactly equal primal and
// dual objective values: a self-contained strong-duality certificate.
// Dual sign convention: for Max, y_i >= 0 on LE rows and <= 0 on GE rows
// (flipped for Min); r = c - A^T y must push every variable onto a finite
// bound, and the dual value counts those bound terms.
struct LpCertificate {
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> row_duals;
    std::vector<Rational> reduced_costs;
};

// Farkas certificate: A^T y + s - t = 0 with the sign table of
// verify_infeasible, and b^T y + u^T s - l^T t < 0.
struct FarkasCertificate {
    std::vector<Rational> row_duals;
    std::vector<Rational> upper_duals; // s >= 0, only where upper is finite
    std::vector<Rational> lower_duals; // t >= 0, only where lower is finite
};

// Feasible point plus an improving recession direction.
struct RayCertificate {
    std::vector<Rational> point;
    std::vector<Rational> ray;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Optimal;
    std::optional<LpCertificate> optimal;
    std::optional<FarkasCertificate> infeasible;
    std::optional<RayCertificate> unbounded;
};

// Exact two-phase primal simplex with Bland's rule on a dense rational
// tableau. Deterministic; every returned certificate has already passed the
// matching verifier (an InternalError otherwise).
LpResult solve_lp(const LinProgram& p);

// Independent re-checks by exact substitution.
bool verify_optimal(const LinProgram& p, const LpCertificate& c, std::string* why = nullptr);
bool verify_infeasible(const LinProgram& p, const FarkasCertificate& c, std::string* why = nullptr);
bool verify_unbounded(const LinProgram& p, const RayCertificate& c, std::string* why = nullptr);

} // namespace readspace::lp
