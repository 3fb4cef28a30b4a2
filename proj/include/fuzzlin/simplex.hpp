#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzlin/errors.hpp"

namespace fuzzlin {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal };

struct Constraint {
    std::vector<double> coeffs;
    Relation rel = Relation::less_equal;
    double rhs = 0.0;
};

// Crisp linear program over nonnegative decision variables.
struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_constraints() const { return constraints.size(); }

    void validate() const {
        if (objective.empty()) throw DomainError("LinearProgram: no variables");
        if (constraints.empty()) throw DomainError("LinearProgram: no constraints");
        for (const auto& c : constraints) {
            if (c.coeffs.size() != objective.size()) {
                throw DomainError(
                    "LinearProgram: constraint width does not match the "
                    "number of variables");
            }
        }
    }

    bool rhs_nonnegative() const {
        for (const auto& c : constraints) {
            if (c.rhs < 0.0) return false;
        }
        return true;
    }

    // maximize, all constraints <=, all right-hand sides >= 0
    bool is_canonical_max() const {
        if (sense != Sense::maximize) return false;
        for (const auto& c : constraints) {
            if (c.rel != Relation::less_equal) return false;
        }
        return rhs_nonnegative();
    }

    // minimize, all constraints >=, all right-hand sides >= 0
    bool is_canonical_min() const {
        if (sense != Sense::minimize) return false;
        for (const auto& c : constraints) {
            if (c.rel != Relation::greater_equal) return false;
        }
        return rhs_nonnegative();
    }
};

// Dense simplex tableau: one row per constraint plus the net evaluation
// row, columns for decision variables, slack variables, and the constants.
struct Tableau {
    std::size_t num_decision = 0;
    std::size_t num_slack = 0;
    std::vector<std::vector<double>> rows;  // num_slack + 1 rows, last = net evaluation
    std::vector<std::size_t> basis;         // column index of each row's basic variable

    std::size_t num_columns() const { return num_decision + num_slack + 1; }
    std::size_t constant_column() const { return num_decision + num_slack; }

    const std::vector<double>& net_evaluation() const { return rows.back(); }

    double constant(std::size_t row) const { return rows[row][constant_column()]; }

    std::string column_label(std::size_t col) const {
        if (col < num_decision) return "x" + std::to_string(col + 1);
        if (col < num_decision + num_slack) {
            return "s" + std::to_string(col - num_decision + 1);
        }
        return "const";
    }

    std::string basis_label(std::size_t row) const {
        return column_label(basis[row]);
    }
};

// The basic columns must form an identity submatrix.
inline bool basis_columns_identity(const Tableau& t, double tol = 1e-9) {
    for (std::size_t i = 0; i < t.num_slack; ++i) {
        const std::size_t col = t.basis[i];
        for (std::size_t r = 0; r < t.num_slack; ++r) {
            const double expect = (r == i) ? 1.0 : 0.0;
            if (std::abs(t.rows[r][col] - expect) > tol) return false;
        }
    }
    return true;
}

inline bool constants_nonnegative(const Tableau& t, double tol = 1e-9) {
    for (std::size_t i = 0; i < t.num_slack; ++i) {
        if (t.constant(i) < -tol) return false;
    }
    return true;
}

enum class LpStatus { optimal, unbounded, infeasible, unsupported_form };

inline const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::unbounded: return "unbounded";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unsupported_form: return "unsupported_form";
    }
    return "unknown";
}

struct LpSolution {
    LpStatus status = LpStatus::unsupported_form;
    std::vector<double> x;
    double objective = 0.0;
    bool unique = false;
    std::size_t pivots = 0;
    Tableau final_tableau;        // the dual's tableau when solved via the dual
    std::vector<Tableau> trace;   // filled only when tracing was requested
    std::vector<double> dual_x;   // dual optimum, for programs solved via the dual
    std::string detail;           // explanation for non-optimal statuses
};

namespace detail {

inline constexpr double kPivotTol = 1e-9;
inline constexpr double kFeasTol = 1e-7;

inline Tableau initial_tableau(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.num_constraints();
    Tableau t;
    t.num_decision = n;
    t.num_slack = m;
    t.rows.assign(m + 1, std::vector<double>(n + m + 1, 0.0));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = lp.constraints[i].coeffs[j];
        t.rows[i][n + i] = 1.0;
        t.rows[i][n + m] = lp.constraints[i].rhs;
        t.basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t.rows[m][j] = -lp.objective[j];
    return t;
}

inline void pivot(Tableau& t, std::size_t prow, std::size_t pcol) {
    const std::size_t cols = t.num_columns();
    std::vector<double>& pr = t.rows[prow];
    const double inv = 1.0 / pr[pcol];
    for (std::size_t j = 0; j < cols; ++j) pr[j] *= inv;
    pr[pcol] = 1.0;  // kill roundoff on the pivot itself
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r == prow) continue;
        const double factor = t.rows[r][pcol];
        if (std::abs(factor) < kPivotTol) {
            t.rows[r][pcol] = 0.0;
            continue;
        }
        for (std::size_t j = 0; j < cols; ++j) t.rows[r][j] -= factor * pr[j];
        t.rows[r][pcol] = 0.0;
    }
    t.basis[prow] = pcol;
}

// Entering column under the classic rule: the most negative net evaluation
// entry, lowest index on ties. Bland's rule takes the lowest negative
// index outright.
inline std::optional<std::size_t> entering_column(const Tableau& t, bool bland) {
    const std::vector<double>& net = t.net_evaluation();
    const std::size_t ncols = t.constant_column();
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (net[j] < -kPivotTol) {
            if (bland) return j;
            if (!best || net[j] < net[*best]) best = j;
        }
    }
    return best;
}

// Minimum-ratio row. Classic ties break on the lowest row index; Bland
// ties break on the smallest basic column index.
inline std::optional<std::size_t> leaving_row(const Tableau& t, std::size_t pcol,
                                              bool bland) {
    std::optional<std::size_t> best;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.num_slack; ++i) {
        const double a = t.rows[i][pcol];
        if (a <= kPivotTol) continue;
        const double ratio = t.constant(i) / a;
        if (!best || ratio < best_ratio - kPivotTol) {
            best = i;
            best_ratio = ratio;
        } else if (bland && ratio <= best_ratio + kPivotTol &&
                   t.basis[i] < t.basis[*best]) {
            best = i;
        }
    }
    return best;
}

inline void verify_max_solution(const LinearProgram& lp, const LpSolution& s) {
    double obj = 0.0;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        if (s.x[j] < -kFeasTol) {
            throw std::logic_error("simplex: negative variable in optimum");
        }
        obj += lp.objective[j] * s.x[j];
    }
    if (std::abs(obj - s.objective) > kFeasTol) {
        throw std::logic_error("simplex: objective mismatch at optimum");
    }
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * s.x[j];
        if (lhs > c.rhs + kFeasTol) {
            throw std::logic_error("simplex: constraint violated at optimum");
        }
    }
}

}  // namespace detail

// Primal simplex over the standard dense tableau. Requires canonical-max
// form; the all-slack basis is then immediately feasible. Switches to
// Bland's rule after 2(m + n) pivots so degenerate problems cannot cycle.
inline LpSolution solve_canonical_max(const LinearProgram& lp, bool trace = false) {
    lp.validate();
    if (!lp.is_canonical_max()) {
        throw UnsupportedFormError(
            "solve_canonical_max: program is not in canonical maximization "
            "form (maximize, all <=, right-hand sides >= 0)");
    }
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.num_constraints();
    const std::size_t bland_threshold = 2 * (m + n);

    Tableau t = detail::initial_tableau(lp);
    LpSolution sol;
    if (trace) sol.trace.push_back(t);

    for (;;) {
        const bool bland = sol.pivots >= bland_threshold;
        const auto pcol = detail::entering_column(t, bland);
        if (!pcol) break;  // no negative net evaluation entry: optimal
        const auto prow = detail::leaving_row(t, *pcol, bland);
        if (!prow) {
            sol.status = LpStatus::unbounded;
            sol.detail = "column " + t.column_label(*pcol) +
                         " can grow without bound";
            sol.final_tableau = std::move(t);
            return sol;
        }
        detail::pivot(t, *prow, *pcol);
        ++sol.pivots;
        if (trace) sol.trace.push_back(t);
    }

    sol.status = LpStatus::optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.constant(i);
    }
    sol.objective = t.net_evaluation()[t.constant_column()];

    // Unique iff every decision variable outside the basis has strictly
    // positive reduced cost; a zero there admits an alternative optimum.
    sol.unique = true;
    for (std::size_t j = 0; j < n; ++j) {
        bool basic = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] == j) {
                basic = true;
                break;
            }
        }
        if (!basic && t.net_evaluation()[j] <= detail::kPivotTol) {
            sol.unique = false;
        }
    }

    sol.final_tableau = std::move(t);
    detail::verify_max_solution(lp, sol);
    return sol;
}

// Dual of a canonical minimization program: transpose the matrix, swap
// objective and right-hand sides, flip the sense.
inline LinearProgram dual(const LinearProgram& lp) {
    lp.validate();
    if (!lp.is_canonical_min()) {
        throw UnsupportedFormError(
            "dual: program is not in canonical minimization form (minimize, "
            "all >=, right-hand sides >= 0)");
    }
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.num_constraints();
    LinearProgram d;
    d.sense = Sense::maximize;
    d.objective.resize(m);
    for (std::size_t i = 0; i < m; ++i) d.objective[i] = lp.constraints[i].rhs;
    d.constraints.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Constraint& c = d.constraints[j];
        c.coeffs.resize(m);
        for (std::size_t i = 0; i < m; ++i) c.coeffs[i] = lp.constraints[i].coeffs[j];
        c.rel = Relation::less_equal;
        c.rhs = lp.objective[j];
    }
    return d;
}

// Reads the minimization optimum off a solved dual: primal variable i is
// the net evaluation entry under the dual's slack column i, and the
// objectives coincide.
inline LpSolution recover_primal_from_dual(const LpSolution& dual_solution,
                                           const LinearProgram& primal) {
    primal.validate();
    if (!primal.is_canonical_min()) {
        throw UnsupportedFormError(
            "recover_primal_from_dual: primal is not in canonical "
            "minimization form");
    }
    LpSolution sol;
    sol.pivots = dual_solution.pivots;
    if (dual_solution.status == LpStatus::unbounded) {
        sol.status = LpStatus::infeasible;
        sol.detail = "dual is unbounded, so the primal has no feasible point";
        return sol;
    }
    if (dual_solution.status != LpStatus::optimal) {
        sol.status = dual_solution.status;
        sol.detail = dual_solution.detail;
        return sol;
    }

    const Tableau& t = dual_solution.final_tableau;
    const std::size_t n = primal.num_vars();
    if (t.num_slack != n) {
        throw DomainError(
            "recover_primal_from_dual: dual tableau does not match the "
            "primal's variable count");
    }
    sol.status = LpStatus::optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        sol.x[i] = t.net_evaluation()[t.num_decision + i];
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += primal.objective[j] * sol.x[j];
    if (std::abs(sol.objective - dual_solution.objective) > detail::kFeasTol) {
        throw std::logic_error(
            "recover_primal_from_dual: primal and dual objectives disagree");
    }
    for (const auto& c : primal.constraints) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * sol.x[j];
        if (lhs < c.rhs - detail::kFeasTol) {
            throw std::logic_error(
                "recover_primal_from_dual: recovered point is infeasible");
        }
    }

    // A nondegenerate dual optimum (all basic values strictly positive)
    // certifies that the primal optimum is unique; degeneracy leaves the
    // question open, so report non-unique conservatively.
    sol.unique = true;
    for (std::size_t i = 0; i < t.num_slack; ++i) {
        if (t.constant(i) <= detail::kPivotTol) sol.unique = false;
    }

    sol.dual_x = dual_solution.x;
    sol.final_tableau = dual_solution.final_tableau;
    sol.trace = dual_solution.trace;
    return sol;
}

// Front door: canonical-max programs are solved directly, canonical-min
// ones through their dual. Anything else is reported, not guessed at.
inline LpSolution solve(const LinearProgram& lp, bool trace = false) {
    lp.validate();
    if (lp.is_canonical_max()) {
        return solve_canonical_max(lp, trace);
    }
    if (lp.is_canonical_min()) {
        const LinearProgram d = dual(lp);
        if (!d.is_canonical_max()) {
            LpSolution sol;
            sol.status = LpStatus::unsupported_form;
            sol.detail =
                "dual has negative right-hand sides (negative objective "
                "coefficients in the minimization)";
            return sol;
        }
        return recover_primal_from_dual(solve_canonical_max(d, trace), lp);
    }
    LpSolution sol;
    sol.status = LpStatus::unsupported_form;
    if (!lp.rhs_nonnegative()) {
        sol.detail = "negative right-hand side";
    } else {
        sol.detail =
            "only canonical forms are supported: maximize with all <= or "
            "minimize with all >=";
    }
    return sol;
}

}  // namespace fuzzlin
