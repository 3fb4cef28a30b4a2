#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzlin/errors.hpp"
#include "fuzzlin/fuzzy_number.hpp"

namespace fuzzlin {

// Five-point linguistic grade ladder, best first.
enum class LinguisticGrade { A, B, C, D, F };

inline constexpr std::array<LinguisticGrade, 5> all_grades = {
    LinguisticGrade::A, LinguisticGrade::B, LinguisticGrade::C,
    LinguisticGrade::D, LinguisticGrade::F};

inline char grade_letter(LinguisticGrade g) {
    switch (g) {
        case LinguisticGrade::A: return 'A';
        case LinguisticGrade::B: return 'B';
        case LinguisticGrade::C: return 'C';
        case LinguisticGrade::D: return 'D';
        case LinguisticGrade::F: return 'F';
    }
    throw DomainError("grade_letter: invalid grade");
}

// Weight used by the grade point average: A=4 ... F=0.
inline int grade_weight(LinguisticGrade g) {
    switch (g) {
        case LinguisticGrade::A: return 4;
        case LinguisticGrade::B: return 3;
        case LinguisticGrade::C: return 2;
        case LinguisticGrade::D: return 1;
        case LinguisticGrade::F: return 0;
    }
    throw DomainError("grade_weight: invalid grade");
}

// Integer score band [lo, hi] on the 0-100 scale.
struct ScoreBand {
    int lo = 0;
    int hi = 0;
};

// Maps each linguistic grade to a score band and to the triangular number
// (lo, (lo+hi)/2, hi) used when averaging grades. Bands must be disjoint,
// cover 0-100, and be ordered F < D < C < B < A.
class GradeScale {
public:
    // A 85-100, B 75-84, C 60-74, D 50-59, F 0-49.
    static GradeScale standard() {
        return GradeScale({{{85, 100}, {75, 84}, {60, 74}, {50, 59}, {0, 49}}});
    }

    // A stricter variant: A 90-100, B 80-89, C 70-79, D 60-69, F 0-59.
    static GradeScale rigorous() {
        return GradeScale({{{90, 100}, {80, 89}, {70, 79}, {60, 69}, {0, 59}}});
    }

    // Bands in grade order A, B, C, D, F.
    explicit GradeScale(const std::array<ScoreBand, 5>& bands) : bands_(bands) {
        for (const auto& band : bands_) {
            if (band.lo >= band.hi) {
                throw DomainError("GradeScale: each band needs lo < hi");
            }
        }
        if (bands_[4].lo != 0 || bands_[0].hi != 100) {
            throw DomainError("GradeScale: bands must cover 0-100");
        }
        for (std::size_t i = 4; i > 0; --i) {
            // walking upward: F ends exactly where D begins, and so on
            if (bands_[i].hi + 1 != bands_[i - 1].lo) {
                throw DomainError(
                    "GradeScale: bands must be disjoint, adjacent, and ordered "
                    "F < D < C < B < A");
            }
        }
    }

    ScoreBand band(LinguisticGrade g) const { return bands_[index(g)]; }

    TriangularFuzzyNumber tfn(LinguisticGrade g) const {
        const ScoreBand b = band(g);
        return {static_cast<double>(b.lo), (b.lo + b.hi) / 2.0,
                static_cast<double>(b.hi)};
    }

    bool operator==(const GradeScale& other) const {
        for (std::size_t i = 0; i < 5; ++i) {
            if (bands_[i].lo != other.bands_[i].lo ||
                bands_[i].hi != other.bands_[i].hi) {
                return false;
            }
        }
        return true;
    }

private:
    static std::size_t index(LinguisticGrade g) {
        return static_cast<std::size_t>(g);
    }

    std::array<ScoreBand, 5> bands_;  // A, B, C, D, F
};

// Head counts per grade for one assessed group.
class GradeDistribution {
public:
    GradeDistribution(long n_a, long n_b, long n_c, long n_d, long n_f)
        : counts_{n_a, n_b, n_c, n_d, n_f} {
        for (long c : counts_) {
            if (c < 0) throw DomainError("GradeDistribution: negative count");
        }
        if (total() < 1) {
            throw DomainError("GradeDistribution: at least one member required");
        }
    }

    long count(LinguisticGrade g) const {
        return counts_[static_cast<std::size_t>(g)];
    }

    long total() const {
        long n = 0;
        for (long c : counts_) n += c;
        return n;
    }

private:
    std::array<long, 5> counts_;  // A, B, C, D, F
};

// One row of scores per member, one score per rater, each in [0, 100].
struct ScoreSheet {
    struct Member {
        std::string name;
        std::vector<int> scores;
    };

    std::vector<Member> members;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Grade point average (0*nF + 1*nD + 2*nC + 3*nB + 4*nA) / n, in [0, 4].
// Weighs higher grades more, so it measures quality rather than mean
// performance.
inline double gpa(const GradeDistribution& d) {
    double sum = 0.0;
    for (LinguisticGrade g : all_grades) {
        sum += static_cast<double>(grade_weight(g)) *
               static_cast<double>(d.count(g));
    }
    return sum / static_cast<double>(d.total());
}

inline LinguisticGrade grade_of_score(const GradeScale& scale, int score) {
    if (score < 0 || score > 100) {
        std::ostringstream os;
        os << "grade_of_score: score " << score << " outside [0, 100]";
        throw DomainError(os.str());
    }
    for (LinguisticGrade g : all_grades) {
        const ScoreBand b = scale.band(g);
        if (score >= b.lo && score <= b.hi) return g;
    }
    throw DomainError("grade_of_score: no band contains score");
}

inline GradeDistribution distribution_of_sheet(const GradeScale& scale,
                                               const ScoreSheet& sheet) {
    if (sheet.members.empty()) {
        throw DomainError("distribution_of_sheet: no members");
    }
    std::array<long, 5> counts{0, 0, 0, 0, 0};
    for (const auto& member : sheet.members) {
        if (member.scores.empty()) {
            throw DomainError("distribution_of_sheet: member '" + member.name +
                              "' has no scores");
        }
        for (int s : member.scores) {
            counts[static_cast<std::size_t>(grade_of_score(scale, s))]++;
        }
    }
    return {counts[0], counts[1], counts[2], counts[3], counts[4]};
}

struct TfnAssessment {
    TriangularFuzzyNumber mean;
    double x;  // defuzzified mean performance, equal to mean.b()
};

// Mean of the per-member grade triangles, weighted by head count. The
// middle entries of the grade triangles are band midpoints, so the result
// satisfies x == b == (a + c) / 2.
inline TfnAssessment mean_performance_tfn(const GradeScale& scale,
                                          const GradeDistribution& d) {
    double a = 0.0, b = 0.0, c = 0.0;
    for (LinguisticGrade g : all_grades) {
        const TriangularFuzzyNumber t = scale.tfn(g);
        const double w = static_cast<double>(d.count(g));
        a += w * t.a();
        b += w * t.b();
        c += w * t.c();
    }
    const double n = static_cast<double>(d.total());
    TriangularFuzzyNumber m{a / n, b / n, c / n};
    return {m, rank(m)};
}

// Builds a member's trapezoid from multi-rater scores: the core [b, c]
// spans the observed scores, the support [a, d] widens to the full bands
// of the lowest and highest grade received. When a score sits exactly on
// its band edge the support is widened by half a point so the ordering
// survives; the widening stays inside [0, 100] unless the score itself is
// 0 or 100, where no in-range support exists.
inline TrapezoidalFuzzyNumber member_tpfn(const GradeScale& scale,
                                          std::span<const int> scores) {
    if (scores.empty()) throw DomainError("member_tpfn: no scores");
    int lo = scores.front(), hi = scores.front();
    for (int s : scores) {
        if (s < 0 || s > 100) {
            throw DomainError("member_tpfn: score outside [0, 100]");
        }
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    const double b = lo, c = hi;
    double a = scale.band(grade_of_score(scale, lo)).lo;
    double d = scale.band(grade_of_score(scale, hi)).hi;
    if (a >= b) {
        a = std::max(b - 0.5, 0.0);
        if (a >= b) a = b - 0.5;  // score 0: nothing in range is left of it
    }
    if (d <= c) {
        d = std::min(c + 0.5, 100.0);
        if (d <= c) d = c + 0.5;  // score 100
    }
    return {a, b, c, d};
}

inline TrapezoidalFuzzyNumber member_tpfn(const GradeScale& scale,
                                          const std::vector<int>& scores) {
    return member_tpfn(scale, std::span<const int>(scores));
}

struct TpfnAssessment {
    TrapezoidalFuzzyNumber mean;
    double x;  // defuzzified via the centroid-of-centroids
};

inline TpfnAssessment group_mean_tpfn(
    std::span<const TrapezoidalFuzzyNumber> members) {
    if (members.empty()) throw DomainError("group_mean_tpfn: no members");
    const TrapezoidalFuzzyNumber m = mean(members);
    return {m, rank(m)};
}

inline TpfnAssessment group_mean_tpfn(
    const std::vector<TrapezoidalFuzzyNumber>& members) {
    return group_mean_tpfn(std::span<const TrapezoidalFuzzyNumber>(members));
}

// Classifies a defuzzified mean on the 0-100 scale. Integer bands extend
// to half-open real bins [lo, hi + 1) so the unit gaps between bands are
// covered; the top band closes at 100.
inline LinguisticGrade classify_mean(const GradeScale& scale, double x) {
    if (!(x >= 0.0 && x <= 100.0)) {
        std::ostringstream os;
        os << "classify_mean: value " << x << " outside [0, 100]";
        throw DomainError(os.str());
    }
    for (LinguisticGrade g : all_grades) {
        const ScoreBand b = scale.band(g);
        const double upper = (g == LinguisticGrade::A) ? 100.0 : b.hi + 1.0;
        if (x >= b.lo && (x < upper || (g == LinguisticGrade::A && x <= upper))) {
            return g;
        }
    }
    throw DomainError("classify_mean: no band contains value");
}

}  // namespace fuzzlin
