#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "fuzzlin/assessment.hpp"

using namespace fuzzlin;
using Catch::Approx;

namespace {

const ScoreSheet kPlayersSheet{{
    {"P1", {43, 48, 49, 49, 50, 52}},
    {"P2", {81, 83, 85, 88, 91, 95}},
    {"P3", {76, 82, 89, 95, 95, 98}},
    {"P4", {86, 86, 87, 87, 87, 88}},
    {"P5", {35, 40, 44, 52, 59, 62}},
}};

GradeDistribution random_distribution(std::mt19937& rng) {
    std::uniform_int_distribution<long> count(0, 40);
    for (;;) {
        const long a = count(rng), b = count(rng), c = count(rng), d = count(rng),
                   f = count(rng);
        if (a + b + c + d + f > 0) return {a, b, c, d, f};
    }
}

}  // namespace

TEST_CASE("standard scale bands and grade triangles") {
    const GradeScale s = GradeScale::standard();
    REQUIRE(s.tfn(LinguisticGrade::A) == TriangularFuzzyNumber(85, 92.5, 100));
    REQUIRE(s.tfn(LinguisticGrade::B) == TriangularFuzzyNumber(75, 79.5, 84));
    REQUIRE(s.tfn(LinguisticGrade::C) == TriangularFuzzyNumber(60, 67, 74));
    REQUIRE(s.tfn(LinguisticGrade::D) == TriangularFuzzyNumber(50, 54.5, 59));
    REQUIRE(s.tfn(LinguisticGrade::F) == TriangularFuzzyNumber(0, 24.5, 49));

    for (const GradeScale& scale : {GradeScale::standard(), GradeScale::rigorous()}) {
        for (LinguisticGrade g : all_grades) {
            const TriangularFuzzyNumber t = scale.tfn(g);
            REQUIRE(t.b() == Approx((t.a() + t.c()) / 2.0));
        }
    }
}

TEST_CASE("malformed scales are rejected") {
    // gap between D and C
    REQUIRE_THROWS_AS(
        GradeScale({{{85, 100}, {75, 84}, {61, 74}, {50, 59}, {0, 49}}}),
        DomainError);
    // overlap
    REQUIRE_THROWS_AS(
        GradeScale({{{85, 100}, {74, 84}, {60, 74}, {50, 59}, {0, 49}}}),
        DomainError);
    // does not reach 100
    REQUIRE_THROWS_AS(
        GradeScale({{{85, 99}, {75, 84}, {60, 74}, {50, 59}, {0, 49}}}),
        DomainError);
    // does not start at 0
    REQUIRE_THROWS_AS(
        GradeScale({{{85, 100}, {75, 84}, {60, 74}, {50, 59}, {1, 49}}}),
        DomainError);
    // empty band
    REQUIRE_THROWS_AS(
        GradeScale({{{100, 100}, {75, 99}, {60, 74}, {50, 59}, {0, 49}}}),
        DomainError);
}

TEST_CASE("grade point average") {
    const GradeDistribution d1(60, 40, 20, 30, 20);
    REQUIRE(gpa(d1) == Approx(43.0 / 17.0).margin(1e-12));
    const GradeDistribution d2(60, 90, 45, 45, 15);
    REQUIRE(gpa(d2) == Approx(43.0 / 17.0).margin(1e-12));

    const GradeDistribution players(14, 4, 1, 4, 7);
    REQUIRE(gpa(players) == Approx(74.0 / 30.0).margin(1e-12));

    REQUIRE(gpa(GradeDistribution(12, 0, 0, 0, 0)) == 4.0);
    REQUIRE(gpa(GradeDistribution(0, 0, 0, 0, 9)) == 0.0);

    REQUIRE_THROWS_AS(GradeDistribution(0, 0, 0, 0, 0), DomainError);
    REQUIRE_THROWS_AS(GradeDistribution(-1, 1, 0, 0, 0), DomainError);
}

TEST_CASE("raising one member by one grade adds exactly 1/n") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 200; ++i) {
        const GradeDistribution d = random_distribution(rng);
        const double base = gpa(d);
        REQUIRE(base >= 0.0);
        REQUIRE(base <= 4.0);
        if (d.count(LinguisticGrade::D) > 0) {
            const GradeDistribution up(
                d.count(LinguisticGrade::A), d.count(LinguisticGrade::B),
                d.count(LinguisticGrade::C) + 1, d.count(LinguisticGrade::D) - 1,
                d.count(LinguisticGrade::F));
            REQUIRE(gpa(up) ==
                    Approx(base + 1.0 / static_cast<double>(d.total())).margin(1e-12));
        }
    }
}

TEST_CASE("grade of score") {
    const GradeScale s = GradeScale::standard();
    REQUIRE(grade_of_score(s, 43) == LinguisticGrade::F);
    REQUIRE(grade_of_score(s, 85) == LinguisticGrade::A);
    REQUIRE(grade_of_score(s, 62) == LinguisticGrade::C);
    REQUIRE(grade_of_score(s, 0) == LinguisticGrade::F);
    REQUIRE(grade_of_score(s, 49) == LinguisticGrade::F);
    REQUIRE(grade_of_score(s, 50) == LinguisticGrade::D);
    REQUIRE(grade_of_score(s, 59) == LinguisticGrade::D);
    REQUIRE(grade_of_score(s, 60) == LinguisticGrade::C);
    REQUIRE(grade_of_score(s, 74) == LinguisticGrade::C);
    REQUIRE(grade_of_score(s, 75) == LinguisticGrade::B);
    REQUIRE(grade_of_score(s, 84) == LinguisticGrade::B);
    REQUIRE(grade_of_score(s, 100) == LinguisticGrade::A);
    REQUIRE_THROWS_AS(grade_of_score(s, -1), DomainError);
    REQUIRE_THROWS_AS(grade_of_score(s, 101), DomainError);

    REQUIRE(grade_of_score(GradeScale::rigorous(), 85) == LinguisticGrade::B);
}

TEST_CASE("distribution of a score sheet") {
    const GradeScale s = GradeScale::standard();
    const GradeDistribution d = distribution_of_sheet(s, kPlayersSheet);
    REQUIRE(d.count(LinguisticGrade::A) == 14);
    REQUIRE(d.count(LinguisticGrade::B) == 4);
    REQUIRE(d.count(LinguisticGrade::C) == 1);
    REQUIRE(d.count(LinguisticGrade::D) == 4);
    REQUIRE(d.count(LinguisticGrade::F) == 7);

    const ScoreSheet one{{{"solo", {90}}}};
    const GradeDistribution ds = distribution_of_sheet(s, one);
    REQUIRE(ds.count(LinguisticGrade::A) == 1);
    REQUIRE(ds.total() == 1);

    REQUIRE_THROWS_AS(distribution_of_sheet(s, ScoreSheet{}), DomainError);
    REQUIRE_THROWS_AS(distribution_of_sheet(s, ScoreSheet{{{"empty", {}}}}),
                      DomainError);
}

TEST_CASE("triangular mean performance") {
    const GradeScale s = GradeScale::standard();

    const TfnAssessment players = mean_performance_tfn(s, {14, 4, 1, 4, 7});
    REQUIRE(players.mean.a() == Approx(58.33).margin(0.01));
    REQUIRE(players.mean.b() == Approx(68.98).margin(0.01));
    REQUIRE(players.mean.c() == Approx(79.63).margin(0.01));
    REQUIRE(players.x == Approx(68.98).margin(0.01));

    const TfnAssessment d2 = mean_performance_tfn(s, {60, 90, 45, 45, 15});
    REQUIRE(d2.mean.a() == Approx(65.88).margin(0.01));
    REQUIRE(d2.mean.b() == Approx(72.71).margin(0.01));
    REQUIRE(d2.mean.c() == Approx(79.53).margin(0.01));
    REQUIRE(d2.x == Approx(72.71).margin(0.01));

    // recomputed by the weighted sum; a published account of this dataset
    // prints (63.53, 73.5, 83.47) instead, which does not match the sum
    const TfnAssessment d1 = mean_performance_tfn(s, {60, 40, 20, 30, 20});
    REQUIRE(d1.mean.a() == Approx(63.53).margin(0.01));
    REQUIRE(d1.mean.b() == Approx(71.74).margin(0.01));
    REQUIRE(d1.mean.c() == Approx(79.94).margin(0.01));
    REQUIRE(d1.x == Approx(71.74).margin(0.01));
}

TEST_CASE("mean performance satisfies the midpoint identity and the expansion oracle") {
    std::mt19937 rng(20240612);
    for (const GradeScale& scale : {GradeScale::standard(), GradeScale::rigorous()}) {
        for (int i = 0; i < 200; ++i) {
            const GradeDistribution d = random_distribution(rng);
            const TfnAssessment m = mean_performance_tfn(scale, d);
            REQUIRE(m.x == Approx(m.mean.b()).margin(1e-9));
            REQUIRE(m.x == Approx((m.mean.a() + m.mean.c()) / 2.0).margin(1e-9));

            // expand the distribution into one triangle per member and
            // average the middle entries directly
            double sum_b = 0.0;
            for (LinguisticGrade g : all_grades) {
                sum_b += static_cast<double>(d.count(g)) * scale.tfn(g).b();
            }
            REQUIRE(m.x ==
                    Approx(sum_b / static_cast<double>(d.total())).margin(1e-9));
        }
    }
}

TEST_CASE("member trapezoids from rater scores") {
    const GradeScale s = GradeScale::standard();
    REQUIRE(member_tpfn(s, {43, 48, 49, 49, 50, 52}) ==
            TrapezoidalFuzzyNumber(0, 43, 52, 59));
    REQUIRE(member_tpfn(s, {81, 83, 85, 88, 91, 95}) ==
            TrapezoidalFuzzyNumber(75, 81, 95, 100));
    REQUIRE(member_tpfn(s, {76, 82, 89, 95, 95, 98}) ==
            TrapezoidalFuzzyNumber(75, 76, 98, 100));
    REQUIRE(member_tpfn(s, {86, 86, 87, 87, 87, 88}) ==
            TrapezoidalFuzzyNumber(85, 86, 88, 100));
    REQUIRE(member_tpfn(s, {35, 40, 44, 52, 59, 62}) ==
            TrapezoidalFuzzyNumber(0, 35, 62, 74));

    REQUIRE_THROWS_AS(member_tpfn(s, std::vector<int>{}), DomainError);
    REQUIRE_THROWS_AS(member_tpfn(s, {50, 101}), DomainError);
}

TEST_CASE("member trapezoids on band edges widen by half a point") {
    const GradeScale s = GradeScale::standard();
    // the lowest score sits exactly on its band's lower edge
    REQUIRE(member_tpfn(s, {85, 85, 85}) ==
            TrapezoidalFuzzyNumber(84.5, 85, 85, 100));
    // the highest score sits on the top of the scale
    REQUIRE(member_tpfn(s, {100, 100}) ==
            TrapezoidalFuzzyNumber(85, 100, 100, 100.5));
    REQUIRE(member_tpfn(s, {0}) == TrapezoidalFuzzyNumber(-0.5, 0, 0, 49));
    REQUIRE(member_tpfn(s, {50, 52}) == TrapezoidalFuzzyNumber(49.5, 50, 52, 59));
}

TEST_CASE("member trapezoid cores cover the observed scores") {
    const GradeScale s = GradeScale::standard();
    std::mt19937 rng(20240613);
    std::uniform_int_distribution<int> score(1, 99);
    std::uniform_int_distribution<int> raters(1, 8);
    for (int i = 0; i < 300; ++i) {
        std::vector<int> scores;
        int lo = 100, hi = 0;
        for (int r = 0, n = raters(rng); r < n; ++r) {
            scores.push_back(score(rng));
            lo = std::min(lo, scores.back());
            hi = std::max(hi, scores.back());
        }
        const TrapezoidalFuzzyNumber t = member_tpfn(s, scores);
        REQUIRE(t.b() == Approx(lo));
        REQUIRE(t.c() == Approx(hi));
        REQUIRE(t.a() >= 0.0);
        REQUIRE(t.d() <= 100.0);
        REQUIRE(rank(t) > t.a());
        REQUIRE(rank(t) < t.d());
    }
}

TEST_CASE("trapezoidal group mean") {
    std::vector<TrapezoidalFuzzyNumber> members;
    const GradeScale s = GradeScale::standard();
    for (const auto& m : kPlayersSheet.members) {
        members.push_back(member_tpfn(s, m.scores));
    }
    const TpfnAssessment g = group_mean_tpfn(members);
    REQUIRE(g.mean.a() == Approx(47.0));
    REQUIRE(g.mean.b() == Approx(64.2));
    REQUIRE(g.mean.c() == Approx(79.0));
    REQUIRE(g.mean.d() == Approx(86.6));
    REQUIRE(g.x == Approx(70.53).margin(0.01));

    double lo = 1e9, hi = -1e9;
    for (const auto& m : members) {
        lo = std::min(lo, rank(m));
        hi = std::max(hi, rank(m));
    }
    REQUIRE(g.x > lo);
    REQUIRE(g.x < hi);

    const std::vector<TrapezoidalFuzzyNumber> one = {members.front()};
    const TpfnAssessment solo = group_mean_tpfn(one);
    REQUIRE(solo.mean == members.front());
    REQUIRE(solo.x == Approx(rank(members.front())));

    const std::vector<TrapezoidalFuzzyNumber> same(5, members[1]);
    const TpfnAssessment equal = group_mean_tpfn(same);
    REQUIRE(equal.mean == members[1]);
    REQUIRE(equal.x == Approx(rank(members[1])));

    REQUIRE_THROWS_AS(group_mean_tpfn(std::vector<TrapezoidalFuzzyNumber>{}),
                      DomainError);
}

TEST_CASE("classifying defuzzified means") {
    const GradeScale s = GradeScale::standard();
    REQUIRE(classify_mean(s, 70.53) == LinguisticGrade::C);
    REQUIRE(classify_mean(s, 72.71) == LinguisticGrade::C);
    REQUIRE(classify_mean(s, 100.0) == LinguisticGrade::A);
    REQUIRE(classify_mean(s, 0.0) == LinguisticGrade::F);
    // the unit gap between bands belongs to the band below
    REQUIRE(classify_mean(s, 74.5) == LinguisticGrade::C);
    REQUIRE(classify_mean(s, 75.0) == LinguisticGrade::B);
    REQUIRE(classify_mean(s, 49.999) == LinguisticGrade::F);
    REQUIRE_THROWS_AS(classify_mean(s, -0.1), DomainError);
    REQUIRE_THROWS_AS(classify_mean(s, 100.1), DomainError);
}

TEST_CASE("uniform single-score sheets collapse to the grade values") {
    const GradeScale s = GradeScale::standard();
    std::mt19937 rng(20240614);
    std::uniform_int_distribution<int> score(0, 100);
    for (int i = 0; i < 100; ++i) {
        const int v = score(rng);
        ScoreSheet sheet;
        for (int m = 0; m < 6; ++m) sheet.members.push_back({"m", {v}});
        const GradeDistribution d = distribution_of_sheet(s, sheet);
        const LinguisticGrade g = grade_of_score(s, v);
        REQUIRE(gpa(d) == Approx(static_cast<double>(grade_weight(g))));
        REQUIRE(mean_performance_tfn(s, d).x == Approx(s.tfn(g).b()));
    }
}
