#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fuzzlin/errors.hpp"

namespace fuzzlin {

// A point of the plane; produced here as the center of gravity of a
// membership graph, in which case y is in [0, 1].
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Closed real interval [lo, hi].
struct ClosedInterval {
    double lo = 0.0;
    double hi = 0.0;

    ClosedInterval() = default;
    ClosedInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo <= hi)) {
            throw DomainError("ClosedInterval: lo > hi");
        }
    }

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

namespace detail {
inline void require_finite(double v, const char* who) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(who) + ": entries must be finite");
    }
}
}  // namespace detail

// Triangular fuzzy number (a, b, c) with a < b < c: membership rises
// linearly from (a, 0) to the peak (b, 1) and falls back to (c, 0).
class TriangularFuzzyNumber {
public:
    TriangularFuzzyNumber(double a, double b, double c) : a_(a), b_(b), c_(c) {
        detail::require_finite(a, "TriangularFuzzyNumber");
        detail::require_finite(b, "TriangularFuzzyNumber");
        detail::require_finite(c, "TriangularFuzzyNumber");
        if (!(a < b && b < c)) {
            std::ostringstream os;
            os << "TriangularFuzzyNumber(" << a << ", " << b << ", " << c
               << "): entries must satisfy a < b < c";
            throw OrderingError(os.str());
        }
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }

    ClosedInterval support() const { return {a_, c_}; }
    ClosedInterval core() const { return {b_, b_}; }

    bool operator==(const TriangularFuzzyNumber&) const = default;

private:
    double a_, b_, c_;
};

// Trapezoidal fuzzy number (a, b, c, d) with a < b <= c < d: membership is
// 1 on the whole plateau [b, c]. b == c is the degenerate (triangular)
// case and is admitted.
class TrapezoidalFuzzyNumber {
public:
    TrapezoidalFuzzyNumber(double a, double b, double c, double d)
        : a_(a), b_(b), c_(c), d_(d) {
        detail::require_finite(a, "TrapezoidalFuzzyNumber");
        detail::require_finite(b, "TrapezoidalFuzzyNumber");
        detail::require_finite(c, "TrapezoidalFuzzyNumber");
        detail::require_finite(d, "TrapezoidalFuzzyNumber");
        if (!(a < b && b <= c && c < d)) {
            std::ostringstream os;
            os << "TrapezoidalFuzzyNumber(" << a << ", " << b << ", " << c << ", "
               << d << "): entries must satisfy a < b <= c < d";
            throw OrderingError(os.str());
        }
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    ClosedInterval support() const { return {a_, d_}; }
    ClosedInterval core() const { return {b_, c_}; }

    bool operator==(const TrapezoidalFuzzyNumber&) const = default;

private:
    double a_, b_, c_, d_;
};

using Tfn = TriangularFuzzyNumber;
using Tpfn = TrapezoidalFuzzyNumber;

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

inline double membership(const TriangularFuzzyNumber& f, double x) {
    if (x < f.a() || x > f.c()) return 0.0;
    if (x <= f.b()) return (x - f.a()) / (f.b() - f.a());
    return (f.c() - x) / (f.c() - f.b());
}

inline double membership(const TrapezoidalFuzzyNumber& f, double x) {
    if (x < f.a() || x > f.d()) return 0.0;
    if (x < f.b()) return (x - f.a()) / (f.b() - f.a());
    if (x <= f.c()) return 1.0;
    return (f.d() - x) / (f.d() - f.c());
}

// ---------------------------------------------------------------------------
// Alpha-cuts: the crisp set of points with membership >= alpha. For these
// shapes it is always a nonempty closed interval.
// ---------------------------------------------------------------------------

namespace detail {
inline void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        std::ostringstream os;
        os << "alpha_cut: alpha must lie in (0, 1], got " << alpha;
        throw DomainError(os.str());
    }
}
}  // namespace detail

inline ClosedInterval alpha_cut(const TriangularFuzzyNumber& f, double alpha) {
    detail::check_alpha(alpha);
    return {f.a() + alpha * (f.b() - f.a()), f.c() - alpha * (f.c() - f.b())};
}

inline ClosedInterval alpha_cut(const TrapezoidalFuzzyNumber& f, double alpha) {
    detail::check_alpha(alpha);
    return {f.a() + alpha * (f.b() - f.a()), f.d() - alpha * (f.d() - f.c())};
}

// ---------------------------------------------------------------------------
// Arithmetic. Sums and differences are entrywise / reversed-entrywise and
// stay within the kind. Products and quotients are deliberately absent:
// they do not stay triangular/trapezoidal.
// ---------------------------------------------------------------------------

inline TriangularFuzzyNumber operator+(const TriangularFuzzyNumber& f,
                                       const TriangularFuzzyNumber& g) {
    return {f.a() + g.a(), f.b() + g.b(), f.c() + g.c()};
}

inline TrapezoidalFuzzyNumber operator+(const TrapezoidalFuzzyNumber& f,
                                        const TrapezoidalFuzzyNumber& g) {
    return {f.a() + g.a(), f.b() + g.b(), f.c() + g.c(), f.d() + g.d()};
}

// Opposite: entries reversed and negated.
inline TriangularFuzzyNumber operator-(const TriangularFuzzyNumber& f) {
    return {-f.c(), -f.b(), -f.a()};
}

inline TrapezoidalFuzzyNumber operator-(const TrapezoidalFuzzyNumber& f) {
    return {-f.d(), -f.c(), -f.b(), -f.a()};
}

inline TriangularFuzzyNumber operator-(const TriangularFuzzyNumber& f,
                                       const TriangularFuzzyNumber& g) {
    return f + (-g);
}

inline TrapezoidalFuzzyNumber operator-(const TrapezoidalFuzzyNumber& f,
                                        const TrapezoidalFuzzyNumber& g) {
    return f + (-g);
}

// k + F shifts the support; defined for any real k.
inline TriangularFuzzyNumber operator+(double k, const TriangularFuzzyNumber& f) {
    return {k + f.a(), k + f.b(), k + f.c()};
}

inline TrapezoidalFuzzyNumber operator+(double k, const TrapezoidalFuzzyNumber& f) {
    return {k + f.a(), k + f.b(), k + f.c(), k + f.d()};
}

inline TriangularFuzzyNumber operator+(const TriangularFuzzyNumber& f, double k) {
    return k + f;
}

inline TrapezoidalFuzzyNumber operator+(const TrapezoidalFuzzyNumber& f, double k) {
    return k + f;
}

// k * F scales the support, reversing the entries when k < 0. k == 0 would
// collapse the ordering and is rejected.
inline TriangularFuzzyNumber operator*(double k, const TriangularFuzzyNumber& f) {
    if (k == 0.0) {
        throw DomainError("scalar_mul: k = 0 collapses the ordering");
    }
    if (k > 0.0) return {k * f.a(), k * f.b(), k * f.c()};
    return {k * f.c(), k * f.b(), k * f.a()};
}

inline TrapezoidalFuzzyNumber operator*(double k, const TrapezoidalFuzzyNumber& f) {
    if (k == 0.0) {
        throw DomainError("scalar_mul: k = 0 collapses the ordering");
    }
    if (k > 0.0) return {k * f.a(), k * f.b(), k * f.c(), k * f.d()};
    return {k * f.d(), k * f.c(), k * f.b(), k * f.a()};
}

inline TriangularFuzzyNumber operator*(const TriangularFuzzyNumber& f, double k) {
    return k * f;
}

inline TrapezoidalFuzzyNumber operator*(const TrapezoidalFuzzyNumber& f, double k) {
    return k * f;
}

// ---------------------------------------------------------------------------
// Defuzzification
// ---------------------------------------------------------------------------

// Center of gravity of the triangular membership graph.
inline Point2 cog(const TriangularFuzzyNumber& f) {
    return {(f.a() + f.b() + f.c()) / 3.0, 1.0 / 3.0};
}

// Center of gravity of the trapezoidal membership graph.
inline Point2 cog(const TrapezoidalFuzzyNumber& f) {
    const double a = f.a(), b = f.b(), c = f.c(), d = f.d();
    const double den = 3.0 * (c + d - a - b);
    const double x = (c * c + d * d - a * a - b * b + d * c - b * a) / den;
    const double y = (2.0 * c + d - a - 2.0 * b) / den;
    return {x, y};
}

// Center of gravity of the triangle formed by the centroids of the two leg
// triangles and the plateau rectangle of a trapezoid. A simpler defuzzifier
// than the trapezoid's own centroid. With b == c the rectangle degenerates
// to a segment whose midpoint still has y = 1/2, and the closed form below
// remains valid.
inline Point2 cog_of_cogs(const TrapezoidalFuzzyNumber& f) {
    const double x = (2.0 * (f.a() + f.d()) + 7.0 * (f.b() + f.c())) / 18.0;
    return {x, 7.0 / 18.0};
}

// ---------------------------------------------------------------------------
// Ranking and degree of fuzziness
// ---------------------------------------------------------------------------

// Ranking function: the defuzzified X-coordinate. Triangular numbers rank
// by their own centroid, trapezoidal ones by the centroid of the centroids.
// The two formulas disagree on a triangle embedded as a degenerate
// trapezoid, so dispatch is strictly on the representation kind.
inline double rank(const TriangularFuzzyNumber& f) { return cog(f).x; }
inline double rank(const TrapezoidalFuzzyNumber& f) { return cog_of_cogs(f).x; }

// Degree of fuzziness: the width of the support.
inline double dof(const TriangularFuzzyNumber& f) { return f.c() - f.a(); }
inline double dof(const TrapezoidalFuzzyNumber& f) { return f.d() - f.a(); }

// ---------------------------------------------------------------------------
// Means
// ---------------------------------------------------------------------------

inline TriangularFuzzyNumber mean(std::span<const TriangularFuzzyNumber> fs) {
    if (fs.empty()) throw DomainError("mean: empty list");
    double a = 0.0, b = 0.0, c = 0.0;
    for (const auto& f : fs) {
        a += f.a();
        b += f.b();
        c += f.c();
    }
    const double n = static_cast<double>(fs.size());
    return {a / n, b / n, c / n};
}

inline TrapezoidalFuzzyNumber mean(std::span<const TrapezoidalFuzzyNumber> fs) {
    if (fs.empty()) throw DomainError("mean: empty list");
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    for (const auto& f : fs) {
        a += f.a();
        b += f.b();
        c += f.c();
        d += f.d();
    }
    const double n = static_cast<double>(fs.size());
    return {a / n, b / n, c / n, d / n};
}

inline TriangularFuzzyNumber mean(const std::vector<TriangularFuzzyNumber>& fs) {
    return mean(std::span<const TriangularFuzzyNumber>(fs));
}

inline TrapezoidalFuzzyNumber mean(const std::vector<TrapezoidalFuzzyNumber>& fs) {
    return mean(std::span<const TrapezoidalFuzzyNumber>(fs));
}

// ---------------------------------------------------------------------------
// Runtime-kinded fuzzy numbers. Documents parsed from JSON carry either
// kind; operations reject mixed operands instead of promoting, since the
// two ranking formulas disagree on the embedding.
// ---------------------------------------------------------------------------

enum class FuzzyKind { triangular, trapezoidal };

using FuzzyNumber = std::variant<TriangularFuzzyNumber, TrapezoidalFuzzyNumber>;

inline FuzzyKind kind(const FuzzyNumber& f) {
    return std::holds_alternative<TriangularFuzzyNumber>(f)
               ? FuzzyKind::triangular
               : FuzzyKind::trapezoidal;
}

namespace detail {
[[noreturn]] inline void throw_kind_mismatch(const char* op) {
    throw KindMismatchError(
        std::string(op) +
        ": operands must be of the same kind; convert (a, b, c) to "
        "(a, b, b, c) explicitly if a trapezoidal view is intended");
}
}  // namespace detail

inline double membership(const FuzzyNumber& f, double x) {
    return std::visit([x](const auto& g) { return membership(g, x); }, f);
}

inline ClosedInterval alpha_cut(const FuzzyNumber& f, double alpha) {
    return std::visit([alpha](const auto& g) { return alpha_cut(g, alpha); }, f);
}

inline ClosedInterval support(const FuzzyNumber& f) {
    return std::visit([](const auto& g) { return g.support(); }, f);
}

inline ClosedInterval core(const FuzzyNumber& f) {
    return std::visit([](const auto& g) { return g.core(); }, f);
}

inline double rank(const FuzzyNumber& f) {
    return std::visit([](const auto& g) { return rank(g); }, f);
}

inline double dof(const FuzzyNumber& f) {
    return std::visit([](const auto& g) { return dof(g); }, f);
}

inline Point2 cog(const FuzzyNumber& f) {
    return std::visit([](const auto& g) { return cog(g); }, f);
}

inline FuzzyNumber add(const FuzzyNumber& f, const FuzzyNumber& g) {
    if (kind(f) != kind(g)) detail::throw_kind_mismatch("add");
    if (auto* t = std::get_if<TriangularFuzzyNumber>(&f)) {
        return *t + std::get<TriangularFuzzyNumber>(g);
    }
    return std::get<TrapezoidalFuzzyNumber>(f) + std::get<TrapezoidalFuzzyNumber>(g);
}

inline FuzzyNumber sub(const FuzzyNumber& f, const FuzzyNumber& g) {
    if (kind(f) != kind(g)) detail::throw_kind_mismatch("sub");
    if (auto* t = std::get_if<TriangularFuzzyNumber>(&f)) {
        return *t - std::get<TriangularFuzzyNumber>(g);
    }
    return std::get<TrapezoidalFuzzyNumber>(f) - std::get<TrapezoidalFuzzyNumber>(g);
}

inline FuzzyNumber neg(const FuzzyNumber& f) {
    return std::visit([](const auto& g) { return FuzzyNumber(-g); }, f);
}

inline FuzzyNumber scalar_add(double k, const FuzzyNumber& f) {
    return std::visit([k](const auto& g) { return FuzzyNumber(k + g); }, f);
}

inline FuzzyNumber scalar_mul(double k, const FuzzyNumber& f) {
    return std::visit([k](const auto& g) { return FuzzyNumber(k * g); }, f);
}

inline FuzzyNumber mean(std::span<const FuzzyNumber> fs) {
    if (fs.empty()) throw DomainError("mean: empty list");
    const FuzzyKind k = kind(fs.front());
    FuzzyNumber acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (kind(fs[i]) != k) detail::throw_kind_mismatch("mean");
        acc = add(acc, fs[i]);
    }
    return scalar_mul(1.0 / static_cast<double>(fs.size()), acc);
}

inline FuzzyNumber mean(const std::vector<FuzzyNumber>& fs) {
    return mean(std::span<const FuzzyNumber>(fs));
}

inline std::string to_string(const FuzzyNumber& f) {
    std::ostringstream os;
    if (auto* t = std::get_if<TriangularFuzzyNumber>(&f)) {
        os << "(" << t->a() << ", " << t->b() << ", " << t->c() << ")";
    } else {
        const auto& p = std::get<TrapezoidalFuzzyNumber>(f);
        os << "(" << p.a() << ", " << p.b() << ", " << p.c() << ", " << p.d() << ")";
    }
    return os.str();
}

}  // namespace fuzzlin
