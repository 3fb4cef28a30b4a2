// Rates a small squad from multi-rater scores: grade point average,
// triangular mean performance, and per-member trapezoids.

#include <iostream>

#include "fuzzlin/assessment.hpp"

using namespace fuzzlin;

int main() {
    const GradeScale scale = GradeScale::standard();
    const ScoreSheet sheet{{
        {"P1", {43, 48, 49, 49, 50, 52}},
        {"P2", {81, 83, 85, 88, 91, 95}},
        {"P3", {76, 82, 89, 95, 95, 98}},
        {"P4", {86, 86, 87, 87, 87, 88}},
        {"P5", {35, 40, 44, 52, 59, 62}},
    }};

    const GradeDistribution dist = distribution_of_sheet(scale, sheet);
    std::cout << "gpa: " << gpa(dist) << "\n";

    const TfnAssessment tfn = mean_performance_tfn(scale, dist);
    std::cout << "tfn mean x: " << tfn.x << " -> grade "
              << grade_letter(classify_mean(scale, tfn.x)) << "\n";

    std::vector<TrapezoidalFuzzyNumber> members;
    for (const auto& m : sheet.members) {
        members.push_back(member_tpfn(scale, m.scores));
    }
    const TpfnAssessment tpfn = group_mean_tpfn(members);
    std::cout << "tpfn mean x: " << tpfn.x << " -> grade "
              << grade_letter(classify_mean(scale, tpfn.x)) << "\n";
    return 0;
}
