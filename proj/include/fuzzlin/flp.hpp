#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzlin/errors.hpp"
#include "fuzzlin/fuzzy_number.hpp"
#include "fuzzlin/simplex.hpp"

namespace fuzzlin {

struct FuzzyConstraint {
    std::vector<FuzzyNumber> coeffs;
    Relation rel = Relation::less_equal;
    FuzzyNumber rhs = TriangularFuzzyNumber(0.0, 0.5, 1.0);
};

// Linear program whose coefficients are fuzzy numbers, all of one kind.
// Mixing kinds is rejected because the two ranking formulas disagree on a
// triangle embedded as a degenerate trapezoid.
struct FuzzyLinearProgram {
    Sense sense = Sense::maximize;
    std::vector<FuzzyNumber> objective;
    std::vector<FuzzyConstraint> constraints;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_constraints() const { return constraints.size(); }

    void validate() const {
        if (objective.empty()) throw DomainError("FuzzyLinearProgram: no variables");
        if (constraints.empty()) {
            throw DomainError("FuzzyLinearProgram: no constraints");
        }
        const FuzzyKind k = kind(objective.front());
        auto check_kind = [k](const FuzzyNumber& f) {
            if (kind(f) != k) {
                throw KindMismatchError(
                    "FuzzyLinearProgram: all coefficients must be of one kind");
            }
        };
        for (const auto& f : objective) check_kind(f);
        for (const auto& c : constraints) {
            if (c.coeffs.size() != objective.size()) {
                throw DomainError(
                    "FuzzyLinearProgram: constraint width does not match the "
                    "number of variables");
            }
            for (const auto& f : c.coeffs) check_kind(f);
            check_kind(c.rhs);
        }
    }

    FuzzyKind coefficient_kind() const {
        validate();
        return kind(objective.front());
    }
};

// How to rebuild fuzzy decision variables around the crisp optimum.
struct RefuzzSpec {
    FuzzyKind kind = FuzzyKind::triangular;
    double dof = 1.0;
    std::map<std::size_t, double> alpha;  // per-variable left endpoint, optional
    std::map<std::size_t, double> b;      // per-variable core start, trapezoids only
};

// ---------------------------------------------------------------------------
// Step 1: crispify by ranking every coefficient.
// ---------------------------------------------------------------------------

inline LinearProgram crispify(const FuzzyLinearProgram& flp) {
    flp.validate();
    LinearProgram lp;
    lp.sense = flp.sense;
    lp.objective.reserve(flp.objective.size());
    for (const auto& f : flp.objective) lp.objective.push_back(rank(f));
    lp.constraints.reserve(flp.constraints.size());
    for (const auto& fc : flp.constraints) {
        Constraint c;
        c.rel = fc.rel;
        c.rhs = rank(fc.rhs);
        c.coeffs.reserve(fc.coeffs.size());
        for (const auto& f : fc.coeffs) c.coeffs.push_back(rank(f));
        lp.constraints.push_back(std::move(c));
    }
    return lp;
}

// ---------------------------------------------------------------------------
// Step 3: refuzzify a crisp value R to a fuzzy number of prescribed rank R
// and support width D.
// ---------------------------------------------------------------------------

namespace detail {
inline void check_dof(double d) {
    if (!(d > 0.0)) {
        std::ostringstream os;
        os << "refuzzify: dof must be positive, got " << d;
        throw DomainError(os.str());
    }
}
}  // namespace detail

// Every triangle with rank R and support width D has the form
// (alpha, 3R - 2 alpha - D, alpha + D) with alpha in the open interval
// (R - 2D/3, R - D/3). The default alpha is the interval midpoint R - D/2.
inline TriangularFuzzyNumber refuzzify_tfn(double R, double D,
                                           std::optional<double> alpha = {}) {
    detail::check_dof(D);
    const double lo = R - 2.0 * D / 3.0;
    const double hi = R - D / 3.0;
    const double a = alpha.value_or(R - D / 2.0);
    if (!(lo < a && a < hi)) {
        std::ostringstream os;
        os << "refuzzify_tfn: alpha = " << a
           << " is outside the admissible open interval (" << lo << ", " << hi
           << ") for rank " << R << " and dof " << D;
        throw AdmissibilityError(os.str(), lo, hi);
    }
    return {a, 3.0 * R - 2.0 * a - D, a + D};
}

// Trapezoids with rank R and support width D have the form
// (alpha, b, c, alpha + D) with b + c = (18R - 4 alpha - 2D) / 7 and
// alpha < b <= c < alpha + D. Defaults take alpha = R - D/2 and b at the
// midpoint of its induced admissible interval, which yields the symmetric
// (R - D/2, R - D/4, R + D/4, R + D/2).
inline TrapezoidalFuzzyNumber refuzzify_tpfn(double R, double D,
                                             std::optional<double> alpha = {},
                                             std::optional<double> b = {}) {
    detail::check_dof(D);
    const double a = alpha.value_or(R - D / 2.0);
    const double sum_bc = (18.0 * R - 4.0 * a - 2.0 * D) / 7.0;
    const double b_lo = std::max(a, sum_bc - a - D);  // exclusive
    const double b_hi = sum_bc / 2.0;                 // inclusive (b == c)
    if (!(b_lo < b_hi)) {
        std::ostringstream os;
        os << "refuzzify_tpfn: no admissible b exists for alpha = " << a
           << " with rank " << R << " and dof " << D
           << " (the interval (" << b_lo << ", " << b_hi << "] is empty); "
           << "alpha must lie in (" << R - 8.0 * D / 9.0 << ", "
           << R - D / 9.0 << ")";
        throw AdmissibilityError(os.str(), R - 8.0 * D / 9.0, R - D / 9.0);
    }
    const double bb = b.value_or((b_lo + b_hi) / 2.0);
    const double cc = sum_bc - bb;
    if (!(a < bb)) {
        std::ostringstream os;
        os << "refuzzify_tpfn: alpha < b violated (alpha = " << a
           << ", b = " << bb << ")";
        throw AdmissibilityError(os.str(), b_lo, b_hi);
    }
    if (!(bb <= cc)) {
        std::ostringstream os;
        os << "refuzzify_tpfn: b <= c violated (b = " << bb << ", c = " << cc
           << "); b may be at most " << b_hi;
        throw AdmissibilityError(os.str(), b_lo, b_hi);
    }
    if (!(cc < a + D)) {
        std::ostringstream os;
        os << "refuzzify_tpfn: c < alpha + dof violated (c = " << cc
           << ", alpha + dof = " << a + D << "); b must exceed " << b_lo;
        throw AdmissibilityError(os.str(), b_lo, b_hi);
    }
    return {a, bb, cc, a + D};
}

// ---------------------------------------------------------------------------
// Nonnegativity clamp and feasibility audit
// ---------------------------------------------------------------------------

// A refuzzified decision variable: either a fuzzy number, or the crisp
// zero marker for variables whose fuzzy expression is not feasible.
struct ClampedVar {
    std::optional<FuzzyNumber> value;
    std::optional<std::string> note;

    bool is_crisp_zero() const { return !value.has_value(); }

    ClosedInterval support_or_zero() const {
        return value ? support(*value) : ClosedInterval{0.0, 0.0};
    }
};

// Zero-rank variables and variables whose whole core is nonpositive are
// replaced by crisp zero; a support that merely dips below zero is kept
// but noted for the audit.
inline ClampedVar clamp_nonnegative(const FuzzyNumber& f) {
    constexpr double tol = 1e-9;
    if (std::abs(rank(f)) <= tol || core(f).hi <= tol) {
        return {std::nullopt, std::string("replaced by crisp 0")};
    }
    if (support(f).lo < -tol) {
        return {f, std::string("support crosses zero")};
    }
    return {f, std::nullopt};
}

struct ConstraintAudit {
    double worst_lhs = 0.0;
    double rhs = 0.0;
    bool violated = false;
};

struct FeasibilityAudit {
    std::vector<ConstraintAudit> constraints;

    bool any_violated() const {
        for (const auto& c : constraints) {
            if (c.violated) return true;
        }
        return false;
    }
};

// Evaluates each crisp constraint at the adversarial corner of the fuzzy
// supports: every variable sits at whichever support endpoint pushes the
// left-hand side toward violation. Comparison is against the crisp
// (ranked) right-hand side.
inline FeasibilityAudit audit_feasibility(const LinearProgram& crisp_lp,
                                          std::span<const ClampedVar> fuzzy_vars,
                                          double tol = 1e-7) {
    crisp_lp.validate();
    if (fuzzy_vars.size() != crisp_lp.num_vars()) {
        throw DomainError(
            "audit_feasibility: variable count does not match the program");
    }
    FeasibilityAudit audit;
    audit.constraints.reserve(crisp_lp.num_constraints());
    for (const auto& c : crisp_lp.constraints) {
        ConstraintAudit entry;
        entry.rhs = c.rhs;
        const bool upper = (c.rel == Relation::less_equal);
        double lhs = 0.0;
        for (std::size_t j = 0; j < fuzzy_vars.size(); ++j) {
            const ClosedInterval s = fuzzy_vars[j].support_or_zero();
            const double coef = c.coeffs[j];
            // pick the endpoint that worsens the constraint
            const bool take_hi = upper ? (coef >= 0.0) : (coef < 0.0);
            lhs += coef * (take_hi ? s.hi : s.lo);
        }
        entry.worst_lhs = lhs;
        entry.violated = upper ? (lhs > c.rhs + tol) : (lhs < c.rhs - tol);
        audit.constraints.push_back(entry);
    }
    return audit;
}

inline FeasibilityAudit audit_feasibility(const LinearProgram& crisp_lp,
                                          const std::vector<ClampedVar>& vars,
                                          double tol = 1e-7) {
    return audit_feasibility(crisp_lp, std::span<const ClampedVar>(vars), tol);
}

// ---------------------------------------------------------------------------
// Full pipeline: rank, solve, optionally refuzzify and audit.
// ---------------------------------------------------------------------------

struct FuzzySolution {
    LpSolution crisp;
    std::optional<std::vector<ClampedVar>> fuzzy_vars;
    std::optional<FeasibilityAudit> audit;
    std::vector<std::string> notes;  // clamp events, one line per variable
};

inline FuzzySolution solve_fuzzy(const FuzzyLinearProgram& flp,
                                 const std::optional<RefuzzSpec>& spec = {},
                                 bool trace = false, double audit_tol = 1e-7) {
    flp.validate();
    const LinearProgram crisp = crispify(flp);
    FuzzySolution out;
    out.crisp = solve(crisp, trace);
    if (!spec || out.crisp.status != LpStatus::optimal) {
        return out;
    }

    detail::check_dof(spec->dof);
    std::vector<ClampedVar> vars;
    vars.reserve(out.crisp.x.size());
    for (std::size_t i = 0; i < out.crisp.x.size(); ++i) {
        const double R = out.crisp.x[i];
        auto lookup = [](const std::map<std::size_t, double>& m,
                         std::size_t key) -> std::optional<double> {
            auto it = m.find(key);
            if (it == m.end()) return std::nullopt;
            return it->second;
        };
        FuzzyNumber f =
            (spec->kind == FuzzyKind::triangular)
                ? FuzzyNumber(refuzzify_tfn(R, spec->dof, lookup(spec->alpha, i)))
                : FuzzyNumber(refuzzify_tpfn(R, spec->dof, lookup(spec->alpha, i),
                                             lookup(spec->b, i)));
        ClampedVar cv = clamp_nonnegative(f);
        if (cv.note) {
            out.notes.push_back("x" + std::to_string(i + 1) + ": " + *cv.note);
        }
        vars.push_back(std::move(cv));
    }
    out.audit = audit_feasibility(crisp, vars, audit_tol);
    out.fuzzy_vars = std::move(vars);
    return out;
}

}  // namespace fuzzlin
