// Full fuzzy-LP pipeline on a small production-planning program: rank the
// fuzzy coefficients, solve the crisp program, refuzzify the optimum and
// audit the support corners for feasibility.

#include <iostream>

#include "fuzzlin/flp.hpp"

using namespace fuzzlin;

int main() {
    auto t = [](double a, double b, double c) {
        return FuzzyNumber(TriangularFuzzyNumber(a, b, c));
    };

    FuzzyLinearProgram flp;
    flp.sense = Sense::maximize;
    flp.objective = {t(2.7, 3, 3.3), t(3.8, 4, 4.2)};
    flp.constraints = {
        {{t(2, 2.5, 3), t(0.8, 1, 1.2)}, Relation::less_equal, t(19, 20, 21)},
        {{t(2.5, 3, 3.5), t(2, 3, 4)}, Relation::less_equal, t(29, 30, 31)},
        {{t(0.75, 1, 1.25), t(1.5, 2, 2.5)}, Relation::less_equal, t(15, 16, 17)},
    };

    RefuzzSpec spec;
    spec.kind = FuzzyKind::triangular;
    spec.dof = 1.0;

    const FuzzySolution sol = solve_fuzzy(flp, spec);
    std::cout << "crisp objective: " << sol.crisp.objective << "\n";
    for (std::size_t i = 0; i < sol.fuzzy_vars->size(); ++i) {
        const ClampedVar& v = (*sol.fuzzy_vars)[i];
        std::cout << "x" << i + 1 << " = "
                  << (v.is_crisp_zero() ? "0 (crisp)" : to_string(*v.value))
                  << "\n";
    }
    for (std::size_t i = 0; i < sol.audit->constraints.size(); ++i) {
        const ConstraintAudit& a = sol.audit->constraints[i];
        std::cout << "constraint " << i + 1 << ": worst lhs " << a.worst_lhs
                  << " vs rhs " << a.rhs << (a.violated ? " VIOLATED" : " ok")
                  << "\n";
    }
    return 0;
}
