#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzlin/assessment.hpp"
#include "fuzzlin/errors.hpp"
#include "fuzzlin/flp.hpp"
#include "fuzzlin/fuzzy_number.hpp"
#include "fuzzlin/json_io.hpp"
#include "fuzzlin/simplex.hpp"

namespace fuzzlin::cli {

enum class Command { rank, defuzzify, assess, lp, flp };
enum class OutputFormat { text, json };

inline const char* to_string(Command c) {
    switch (c) {
        case Command::rank: return "rank";
        case Command::defuzzify: return "defuzzify";
        case Command::assess: return "assess";
        case Command::lp: return "lp";
        case Command::flp: return "flp";
    }
    return "unknown";
}

struct CliConfig {
    Command command = Command::rank;
    OutputFormat format = OutputFormat::text;
    std::string input_path;              // empty = standard input
    double tolerance = 1e-7;             // audit tolerance override
    bool trace = false;                  // lp/flp: emit every tableau
    std::string assess_aspect;           // "", "gpa", "tfn", "tpfn"
    std::string defuzzify_method = "cog";  // "cog" | "cog-of-cogs"
    // flp refuzzification, overriding the document's own refuzz block
    std::optional<std::string> refuzz_kind;  // "tfn" | "tpfn"
    std::optional<double> refuzz_dof;
    std::map<std::size_t, double> alpha;
    std::map<std::size_t, double> b;
};

struct Warning {
    std::string code;
    std::string message;
};

// Stable warning codes, matched by tests.
inline constexpr const char* kWarnAuditViolation = "AUDIT_VIOLATION";
inline constexpr const char* kWarnClampedVar = "CLAMPED_VAR";
inline constexpr const char* kWarnNegativeSupport = "NEGATIVE_SUPPORT";
inline constexpr const char* kWarnPaperErratum = "PAPER_ERRATUM";

struct Report {
    std::string command;
    Json payload;
    std::vector<Warning> warnings;
    int exit_status = 0;
    std::string error;  // set when exit_status != 0
    std::string text;   // rendered text-mode output

    Json to_json() const {
        Json j;
        j["command"] = command;
        for (auto it = payload.begin(); it != payload.end(); ++it) {
            j[it.key()] = it.value();
        }
        Json warns = Json::array();
        for (const auto& w : warnings) {
            Json wj;
            wj["code"] = w.code;
            wj["message"] = w.message;
            warns.push_back(std::move(wj));
        }
        j["warnings"] = std::move(warns);
        j["exit_status"] = exit_status;
        if (!error.empty()) j["error"] = error;
        return j;
    }

    std::string render(OutputFormat f) const {
        if (f == OutputFormat::json) return to_json().dump(2) + "\n";
        return text;
    }
};

namespace detail {

inline std::string fmt(double v, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

inline std::string fmt_vector(const std::vector<double>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += fmt(xs[i]);
    }
    return out + ")";
}

inline std::string gpa_label(double g) {
    if (g > 2.0) return "more than satisfactory";
    if (g == 2.0) return "satisfactory";
    return "below satisfactory";
}

inline std::string render_tableau(const Tableau& t) {
    std::ostringstream os;
    auto cell = [](const std::string& s) {
        std::string out = s;
        while (out.size() < 10) out.insert(out.begin(), ' ');
        return out;
    };
    for (std::size_t c = 0; c < t.num_columns(); ++c) {
        if (c == t.constant_column()) os << " |";
        os << cell(t.column_label(c));
    }
    os << "\n";
    for (std::size_t i = 0; i < t.num_slack; ++i) {
        for (std::size_t c = 0; c < t.num_columns(); ++c) {
            if (c == t.constant_column()) os << " |";
            os << cell(fmt(t.rows[i][c]));
        }
        os << "  = " << t.basis_label(i) << "\n";
    }
    for (std::size_t c = 0; c < t.num_columns(); ++c) {
        if (c == t.constant_column()) os << " |";
        os << cell(fmt(t.net_evaluation()[c]));
    }
    os << "  (net evaluation)\n";
    return os.str();
}

}  // namespace detail

// Ordered list of every tableau produced by a traced solve, first to
// final, in the printed matrix layout.
inline Json emit_tableau_trace(const LpSolution& solution) {
    if (solution.trace.empty()) {
        throw DomainError(
            "emit_tableau_trace: the solve was not run with tracing enabled");
    }
    Json arr = Json::array();
    for (const Tableau& t : solution.trace) arr.push_back(tableau_to_json(t));
    return arr;
}

namespace detail {

// Known published errata for shipped datasets: keyed on the exact grade
// counts under the standard scale.
inline std::optional<std::string> published_erratum(const GradeScale& scale,
                                                    const GradeDistribution& d) {
    if (!(scale == GradeScale::standard())) return std::nullopt;
    if (d.count(LinguisticGrade::A) == 60 && d.count(LinguisticGrade::B) == 40 &&
        d.count(LinguisticGrade::C) == 20 && d.count(LinguisticGrade::D) == 30 &&
        d.count(LinguisticGrade::F) == 20) {
        return "the published study of this dataset prints the mean triangle "
               "(63.53, 73.5, 83.47); the weighted mean recomputes to "
               "(63.53, 71.74, 79.94), which this report uses";
    }
    return std::nullopt;
}

inline Json run_rank(const Json& input, Report& report) {
    const FuzzyNumber f = fuzzy_from_json(input);
    Json payload;
    payload["input"] = fuzzy_to_json(f);
    payload["rank"] = json_round(rank(f));
    payload["dof"] = json_round(dof(f));
    std::ostringstream os;
    os << "rank of " << to_string(f) << " = " << fmt(rank(f)) << "\n"
       << "dof  of " << to_string(f) << " = " << fmt(dof(f)) << "\n";
    report.text = os.str();
    return payload;
}

inline Json run_defuzzify(const CliConfig& config, const Json& input,
                          Report& report) {
    const FuzzyNumber f = fuzzy_from_json(input);
    Point2 p;
    if (config.defuzzify_method == "cog") {
        p = cog(f);
    } else if (config.defuzzify_method == "cog-of-cogs") {
        const auto* tp = std::get_if<TrapezoidalFuzzyNumber>(&f);
        if (!tp) {
            throw DomainError(
                "defuzzify: the cog-of-cogs method applies to trapezoidal "
                "numbers only");
        }
        p = cog_of_cogs(*tp);
    } else {
        throw DomainError("defuzzify: unknown method '" +
                          config.defuzzify_method + "'");
    }
    Json payload;
    payload["input"] = fuzzy_to_json(f);
    payload["method"] = config.defuzzify_method;
    payload["x"] = json_round(p.x);
    payload["y"] = json_round(p.y);
    std::ostringstream os;
    os << config.defuzzify_method << " of " << to_string(f) << " = ("
       << fmt(p.x) << ", " << fmt(p.y) << ")\n";
    report.text = os.str();
    return payload;
}

inline Json run_assess(const CliConfig& config, const Json& input,
                       Report& report) {
    const AssessDocument doc = assess_from_json(input);
    const std::string& aspect = config.assess_aspect;
    Json groups = Json::array();
    std::ostringstream os;

    for (const AssessGroup& g : doc.groups) {
        Json gj;
        gj["name"] = g.name;
        os << "group " << g.name << "\n";

        std::optional<GradeDistribution> dist = g.counts;
        if (!dist && g.sheet) {
            dist = distribution_of_sheet(doc.scale, *g.sheet);
        }

        if (g.sheet && (aspect.empty())) {
            double sum = 0.0;
            long count = 0;
            for (const auto& m : g.sheet->members) {
                for (int s : m.scores) {
                    sum += s;
                    ++count;
                }
            }
            const double score_mean = sum / static_cast<double>(count);
            gj["score_mean"] = json_round(score_mean);
            os << "  score mean: " << fmt(score_mean) << "\n";
        }

        if (aspect.empty() || aspect == "gpa") {
            const double g_value = gpa(*dist);
            gj["gpa"] = json_round(g_value);
            gj["gpa_label"] = gpa_label(g_value);
            os << "  gpa: " << fmt(g_value) << " (" << gpa_label(g_value) << ")\n";
        }

        if (aspect.empty() || aspect == "tfn") {
            const TfnAssessment m = mean_performance_tfn(doc.scale, *dist);
            const LinguisticGrade grade = classify_mean(doc.scale, m.x);
            Json tj;
            tj["a"] = json_round(m.mean.a());
            tj["b"] = json_round(m.mean.b());
            tj["c"] = json_round(m.mean.c());
            tj["x"] = json_round(m.x);
            tj["grade"] = std::string(1, grade_letter(grade));
            gj["tfn_mean"] = std::move(tj);
            os << "  tfn mean: (" << fmt(m.mean.a()) << ", " << fmt(m.mean.b())
               << ", " << fmt(m.mean.c()) << "), x = " << fmt(m.x) << ", grade "
               << grade_letter(grade) << "\n";
            if (auto erratum = published_erratum(doc.scale, *dist)) {
                report.warnings.push_back({kWarnPaperErratum, *erratum});
            }
        }

        if (aspect == "tpfn" || (aspect.empty() && g.sheet)) {
            if (!g.sheet) {
                throw DomainError("assess: group '" + g.name +
                                  "' has no per-member scores, which the "
                                  "trapezoidal assessment requires");
            }
            std::vector<TrapezoidalFuzzyNumber> members;
            Json mj = Json::array();
            for (const auto& m : g.sheet->members) {
                const TrapezoidalFuzzyNumber t = member_tpfn(doc.scale, m.scores);
                members.push_back(t);
                Json one;
                one["name"] = m.name;
                one["tpfn"] = fuzzy_to_json(FuzzyNumber(t));
                one["rank"] = json_round(rank(t));
                mj.push_back(std::move(one));
                os << "  member " << m.name << ": (" << fmt(t.a()) << ", "
                   << fmt(t.b()) << ", " << fmt(t.c()) << ", " << fmt(t.d())
                   << "), rank " << fmt(rank(t)) << "\n";
            }
            gj["members"] = std::move(mj);
            const TpfnAssessment pm = group_mean_tpfn(members);
            const LinguisticGrade grade = classify_mean(doc.scale, pm.x);
            Json tj;
            tj["a"] = json_round(pm.mean.a());
            tj["b"] = json_round(pm.mean.b());
            tj["c"] = json_round(pm.mean.c());
            tj["d"] = json_round(pm.mean.d());
            tj["x"] = json_round(pm.x);
            tj["grade"] = std::string(1, grade_letter(grade));
            gj["tpfn_mean"] = std::move(tj);
            os << "  tpfn mean: (" << fmt(pm.mean.a()) << ", " << fmt(pm.mean.b())
               << ", " << fmt(pm.mean.c()) << ", " << fmt(pm.mean.d())
               << "), x = " << fmt(pm.x) << ", grade " << grade_letter(grade)
               << "\n";
        }

        groups.push_back(std::move(gj));
    }

    Json payload;
    payload["groups"] = std::move(groups);
    report.text = os.str();
    return payload;
}

inline Json lp_solution_to_json(const LpSolution& s, bool with_trace) {
    Json j;
    j["status"] = fuzzlin::to_string(s.status);
    if (s.status == LpStatus::optimal) {
        Json xs = Json::array();
        for (double v : s.x) xs.push_back(json_round(v));
        j["x"] = std::move(xs);
        j["objective"] = json_round(s.objective);
        j["unique"] = s.unique;
    }
    j["pivots"] = s.pivots;
    if (!s.dual_x.empty()) {
        Json ds = Json::array();
        for (double v : s.dual_x) ds.push_back(json_round(v));
        j["dual_x"] = std::move(ds);
    }
    if (!s.detail.empty()) j["detail"] = s.detail;
    if (with_trace && !s.trace.empty()) j["trace"] = emit_tableau_trace(s);
    return j;
}

inline void render_lp_solution_text(const LpSolution& s, bool with_trace,
                                    std::ostringstream& os) {
    os << "status: " << fuzzlin::to_string(s.status) << "\n";
    if (s.status == LpStatus::optimal) {
        os << "x = " << fmt_vector(s.x) << "\n"
           << "objective = " << fmt(s.objective) << "\n"
           << "unique: " << (s.unique ? "yes" : "no") << "\n";
    }
    os << "pivots: " << s.pivots << "\n";
    if (!s.dual_x.empty()) os << "dual = " << fmt_vector(s.dual_x) << "\n";
    if (!s.detail.empty()) os << "note: " << s.detail << "\n";
    if (with_trace) {
        for (std::size_t i = 0; i < s.trace.size(); ++i) {
            os << "tableau " << i + 1 << ":\n" << render_tableau(s.trace[i]);
        }
    }
}

inline Json run_lp(const CliConfig& config, const Json& input, Report& report) {
    const LinearProgram lp = lp_from_json(input);
    const LpSolution s = solve(lp, config.trace);
    if (s.status != LpStatus::optimal) {
        report.exit_status = 1;
        report.error = std::string(fuzzlin::to_string(s.status)) +
                       (s.detail.empty() ? "" : ": " + s.detail);
    }
    std::ostringstream os;
    render_lp_solution_text(s, config.trace, os);
    report.text = os.str();
    return lp_solution_to_json(s, config.trace);
}

inline Json run_flp(const CliConfig& config, const Json& input, Report& report) {
    FlpDocument doc = flp_from_json(input);

    // command-line refuzz settings override the document's block
    std::optional<RefuzzSpec> spec = doc.refuzz;
    if (config.refuzz_kind) {
        RefuzzSpec s;
        s.kind = (*config.refuzz_kind == "tpfn") ? FuzzyKind::trapezoidal
                                                 : FuzzyKind::triangular;
        if (spec) {
            s.alpha = spec->alpha;
            s.b = spec->b;
            s.dof = spec->dof;
        }
        spec = s;
    }
    if (config.refuzz_dof) {
        if (!spec) spec = RefuzzSpec{};
        spec->dof = *config.refuzz_dof;
    }
    if (spec) {
        for (const auto& [idx, v] : config.alpha) spec->alpha[idx] = v;
        for (const auto& [idx, v] : config.b) spec->b[idx] = v;
    }

    const FuzzySolution fs =
        solve_fuzzy(doc.program, spec, config.trace, config.tolerance);

    if (fs.crisp.status != LpStatus::optimal) {
        report.exit_status = 1;
        report.error = std::string(fuzzlin::to_string(fs.crisp.status)) +
                       (fs.crisp.detail.empty() ? "" : ": " + fs.crisp.detail);
    }

    std::ostringstream os;
    os << "crisp solution\n";
    render_lp_solution_text(fs.crisp, config.trace, os);

    Json payload;
    payload["crisp"] = lp_solution_to_json(fs.crisp, config.trace);

    if (fs.fuzzy_vars) {
        Json fuzzy = Json::array();
        os << "fuzzy variables\n";
        for (std::size_t i = 0; i < fs.fuzzy_vars->size(); ++i) {
            const ClampedVar& cv = (*fs.fuzzy_vars)[i];
            const std::string name = "x" + std::to_string(i + 1);
            Json vj;
            vj["var"] = name;
            if (cv.is_crisp_zero()) {
                vj["crisp_zero"] = true;
                os << "  " << name << " = 0 (crisp)\n";
                report.warnings.push_back(
                    {kWarnClampedVar, name + " replaced by crisp 0: its fuzzy "
                                             "expression is not feasible"});
            } else {
                vj["value"] = fuzzy_to_json(*cv.value);
                vj["rank"] = json_round(rank(*cv.value));
                vj["dof"] = json_round(dof(*cv.value));
                os << "  " << name << " = " << to_string(*cv.value) << "\n";
                if (cv.note) {
                    report.warnings.push_back({kWarnNegativeSupport,
                                               name + ": " + *cv.note});
                }
            }
            fuzzy.push_back(std::move(vj));
        }
        payload["fuzzy"] = std::move(fuzzy);
    }

    if (fs.audit) {
        Json audit = Json::array();
        os << "feasibility audit (support corners vs crisp rhs)\n";
        for (std::size_t i = 0; i < fs.audit->constraints.size(); ++i) {
            const ConstraintAudit& ca = fs.audit->constraints[i];
            Json aj;
            aj["constraint"] = i + 1;
            aj["worst_lhs"] = json_round(ca.worst_lhs);
            aj["rhs"] = json_round(ca.rhs);
            aj["violated"] = ca.violated;
            audit.push_back(std::move(aj));
            os << "  constraint " << i + 1 << ": worst lhs " << fmt(ca.worst_lhs)
               << " vs rhs " << fmt(ca.rhs)
               << (ca.violated ? "  VIOLATED" : "  ok") << "\n";
            if (ca.violated) {
                report.warnings.push_back(
                    {kWarnAuditViolation,
                     "constraint " + std::to_string(i + 1) + ": worst-case lhs " +
                         fmt(ca.worst_lhs) + " breaches rhs " + fmt(ca.rhs)});
            }
        }
        payload["audit"] = std::move(audit);
    }

    report.text = os.str();
    return payload;
}

}  // namespace detail

// Runs one command over a parsed input document. Domain failures are
// reported through the exit status, never thrown.
inline Report run(const CliConfig& config, const Json& input) {
    Report report;
    report.command = to_string(config.command);
    if (!(config.tolerance > 0.0)) {
        report.exit_status = 1;
        report.error = "tolerance must be positive";
        return report;
    }
    try {
        switch (config.command) {
            case Command::rank:
                report.payload = detail::run_rank(input, report);
                break;
            case Command::defuzzify:
                report.payload = detail::run_defuzzify(config, input, report);
                break;
            case Command::assess:
                report.payload = detail::run_assess(config, input, report);
                break;
            case Command::lp:
                report.payload = detail::run_lp(config, input, report);
                break;
            case Command::flp:
                report.payload = detail::run_flp(config, input, report);
                break;
        }
    } catch (const ParseError& e) {
        report.exit_status = 2;
        report.error = e.what();
    } catch (const Error& e) {
        report.exit_status = 1;
        report.error = e.what();
    }
    if (report.exit_status != 0 && report.text.empty()) {
        report.text = "error: " + report.error + "\n";
    }
    if (!report.warnings.empty()) {
        std::string w = "warnings:\n";
        for (const auto& warning : report.warnings) {
            w += "  " + warning.code + ": " + warning.message + "\n";
        }
        report.text += w;
    }
    return report;
}

// Convenience entry point over raw document text.
inline Report run_on_text(const CliConfig& config, const std::string& text) {
    Json input;
    try {
        input = jio::parse_text(text);
    } catch (const ParseError& e) {
        Report report;
        report.command = to_string(config.command);
        report.exit_status = 2;
        report.error = e.what();
        report.text = "error: " + report.error + "\n";
        return report;
    }
    return run(config, input);
}

}  // namespace fuzzlin::cli
