#pragma once

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzlin/assessment.hpp"
#include "fuzzlin/errors.hpp"
#include "fuzzlin/flp.hpp"
#include "fuzzlin/fuzzy_number.hpp"
#include "fuzzlin/simplex.hpp"

namespace fuzzlin {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits before serialization so repeated runs
// emit byte-identical documents.
inline double json_round(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

namespace jio {

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline const Json& require_field(const Json& j, const char* key,
                                 const char* where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    }
    return *it;
}

inline double require_number(const Json& j, const char* key, const char* where) {
    const Json& v = require_field(j, key, where);
    if (!v.is_number()) {
        throw ParseError(std::string(where) + ": field '" + key +
                         "' must be a number");
    }
    return v.get<double>();
}

inline double as_number(const Json& j, const char* where) {
    if (!j.is_number()) {
        throw ParseError(std::string(where) + ": expected a number");
    }
    return j.get<double>();
}

}  // namespace jio

// ---------------------------------------------------------------------------
// Fuzzy numbers: {"kind":"tfn","a":..,"b":..,"c":..} and
//                {"kind":"tpfn","a":..,"b":..,"c":..,"d":..}
// ---------------------------------------------------------------------------

inline FuzzyNumber fuzzy_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("fuzzy number: expected an object with a 'kind' field");
    }
    const Json& kind_field = jio::require_field(j, "kind", "fuzzy number");
    if (!kind_field.is_string()) {
        throw ParseError("fuzzy number: 'kind' must be \"tfn\" or \"tpfn\"");
    }
    const std::string k = kind_field.get<std::string>();
    if (k == "tfn") {
        return TriangularFuzzyNumber(jio::require_number(j, "a", "tfn"),
                                     jio::require_number(j, "b", "tfn"),
                                     jio::require_number(j, "c", "tfn"));
    }
    if (k == "tpfn") {
        return TrapezoidalFuzzyNumber(jio::require_number(j, "a", "tpfn"),
                                      jio::require_number(j, "b", "tpfn"),
                                      jio::require_number(j, "c", "tpfn"),
                                      jio::require_number(j, "d", "tpfn"));
    }
    throw ParseError("fuzzy number: unknown kind '" + k + "'");
}

inline Json fuzzy_to_json(const FuzzyNumber& f) {
    Json j;
    if (auto* t = std::get_if<TriangularFuzzyNumber>(&f)) {
        j["kind"] = "tfn";
        j["a"] = json_round(t->a());
        j["b"] = json_round(t->b());
        j["c"] = json_round(t->c());
    } else {
        const auto& p = std::get<TrapezoidalFuzzyNumber>(f);
        j["kind"] = "tpfn";
        j["a"] = json_round(p.a());
        j["b"] = json_round(p.b());
        j["c"] = json_round(p.c());
        j["d"] = json_round(p.d());
    }
    return j;
}

// ---------------------------------------------------------------------------
// Linear programs:
// {"sense":"max","objective":[3,4],
//  "constraints":[{"coeffs":[2.5,1],"rel":"<=","rhs":20}, ...]}
// Fuzzy programs use fuzzy-number objects for every coefficient and may
// carry a "refuzz" block.
// ---------------------------------------------------------------------------

inline Sense sense_from_json(const Json& j) {
    const Json& s = jio::require_field(j, "sense", "program");
    if (s.is_string()) {
        const std::string v = s.get<std::string>();
        if (v == "max" || v == "maximize") return Sense::maximize;
        if (v == "min" || v == "minimize") return Sense::minimize;
    }
    throw ParseError("program: 'sense' must be \"max\" or \"min\"");
}

inline Relation relation_from_json(const Json& j, const char* where) {
    const Json& r = jio::require_field(j, "rel", where);
    if (r.is_string()) {
        const std::string v = r.get<std::string>();
        if (v == "<=") return Relation::less_equal;
        if (v == ">=") return Relation::greater_equal;
        if (v == "=" || v == "==") {
            throw UnsupportedFormError(
                std::string(where) + ": equality constraints are not supported");
        }
    }
    throw ParseError(std::string(where) + ": 'rel' must be \"<=\" or \">=\"");
}

inline LinearProgram lp_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("program: expected an object");
    LinearProgram lp;
    lp.sense = sense_from_json(j);
    const Json& obj = jio::require_field(j, "objective", "program");
    if (!obj.is_array() || obj.empty()) {
        throw ParseError("program: 'objective' must be a nonempty array");
    }
    for (const Json& v : obj) lp.objective.push_back(jio::as_number(v, "objective"));
    const Json& cons = jio::require_field(j, "constraints", "program");
    if (!cons.is_array() || cons.empty()) {
        throw ParseError("program: 'constraints' must be a nonempty array");
    }
    std::size_t idx = 0;
    for (const Json& cj : cons) {
        const std::string where = "constraints[" + std::to_string(idx++) + "]";
        Constraint c;
        const Json& coeffs = jio::require_field(cj, "coeffs", where.c_str());
        if (!coeffs.is_array()) {
            throw ParseError(where + ": 'coeffs' must be an array");
        }
        for (const Json& v : coeffs) c.coeffs.push_back(jio::as_number(v, where.c_str()));
        c.rel = relation_from_json(cj, where.c_str());
        c.rhs = jio::require_number(cj, "rhs", where.c_str());
        lp.constraints.push_back(std::move(c));
    }
    lp.validate();
    return lp;
}

// Parses per-variable parameter maps of the form {"x1":3.5,"x2":5.5}.
inline std::map<std::size_t, double> var_map_from_json(const Json& j,
                                                       const char* where) {
    std::map<std::size_t, double> out;
    if (!j.is_object()) {
        throw ParseError(std::string(where) +
                         ": expected an object keyed by variable names");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.size() < 2 || key[0] != 'x') {
            throw ParseError(std::string(where) + ": bad variable name '" + key +
                             "', expected x1, x2, ...");
        }
        char* end = nullptr;
        const long idx = std::strtol(key.c_str() + 1, &end, 10);
        if (*end != '\0' || idx < 1) {
            throw ParseError(std::string(where) + ": bad variable name '" + key + "'");
        }
        out[static_cast<std::size_t>(idx - 1)] = jio::as_number(*it, where);
    }
    return out;
}

inline RefuzzSpec refuzz_spec_from_json(const Json& j) {
    RefuzzSpec spec;
    const Json& kind_field = jio::require_field(j, "kind", "refuzz");
    const std::string k = kind_field.is_string() ? kind_field.get<std::string>() : "";
    if (k == "tfn") {
        spec.kind = FuzzyKind::triangular;
    } else if (k == "tpfn") {
        spec.kind = FuzzyKind::trapezoidal;
    } else {
        throw ParseError("refuzz: 'kind' must be \"tfn\" or \"tpfn\"");
    }
    spec.dof = jio::require_number(j, "dof", "refuzz");
    if (auto it = j.find("alpha"); it != j.end()) {
        spec.alpha = var_map_from_json(*it, "refuzz.alpha");
    }
    if (auto it = j.find("b"); it != j.end()) {
        spec.b = var_map_from_json(*it, "refuzz.b");
    }
    return spec;
}

struct FlpDocument {
    FuzzyLinearProgram program;
    std::optional<RefuzzSpec> refuzz;
};

inline FlpDocument flp_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("program: expected an object");
    FlpDocument doc;
    doc.program.sense = sense_from_json(j);
    const Json& obj = jio::require_field(j, "objective", "program");
    if (!obj.is_array() || obj.empty()) {
        throw ParseError("program: 'objective' must be a nonempty array");
    }
    for (const Json& v : obj) doc.program.objective.push_back(fuzzy_from_json(v));
    const Json& cons = jio::require_field(j, "constraints", "program");
    if (!cons.is_array() || cons.empty()) {
        throw ParseError("program: 'constraints' must be a nonempty array");
    }
    std::size_t idx = 0;
    for (const Json& cj : cons) {
        const std::string where = "constraints[" + std::to_string(idx++) + "]";
        FuzzyConstraint c;
        const Json& coeffs = jio::require_field(cj, "coeffs", where.c_str());
        if (!coeffs.is_array()) {
            throw ParseError(where + ": 'coeffs' must be an array");
        }
        for (const Json& v : coeffs) c.coeffs.push_back(fuzzy_from_json(v));
        c.rel = relation_from_json(cj, where.c_str());
        c.rhs = fuzzy_from_json(jio::require_field(cj, "rhs", where.c_str()));
        doc.program.constraints.push_back(std::move(c));
    }
    doc.program.validate();
    if (auto it = j.find("refuzz"); it != j.end()) {
        doc.refuzz = refuzz_spec_from_json(*it);
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Assessment documents. Either a single group,
//   {"counts":{"A":60,"B":40,"C":20,"D":30,"F":20}}
//   {"members":[{"name":"P1","scores":[43,48,49,49,50,52]}, ...]}
// or several,
//   {"groups":[{"name":"D1","counts":{...}}, ...]}
// with an optional scale override, either named
//   {"scale":{"preset":"rigorous"}}
// or explicit {"scale":{"A":[85,100],"B":[75,84],...}}.
// ---------------------------------------------------------------------------

inline GradeScale scale_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("scale: expected an object");
    if (auto it = j.find("preset"); it != j.end()) {
        const std::string p = it->is_string() ? it->get<std::string>() : "";
        if (p == "standard") return GradeScale::standard();
        if (p == "rigorous") return GradeScale::rigorous();
        throw ParseError("scale: unknown preset '" + p + "'");
    }
    std::array<ScoreBand, 5> bands{};
    const char* names[5] = {"A", "B", "C", "D", "F"};
    for (std::size_t i = 0; i < 5; ++i) {
        const Json& band = jio::require_field(j, names[i], "scale");
        if (!band.is_array() || band.size() != 2 || !band[0].is_number_integer() ||
            !band[1].is_number_integer()) {
            throw ParseError(std::string("scale: '") + names[i] +
                             "' must be an integer pair [lo, hi]");
        }
        bands[i] = ScoreBand{band[0].get<int>(), band[1].get<int>()};
    }
    return GradeScale(bands);
}

struct AssessGroup {
    std::string name;
    std::optional<GradeDistribution> counts;
    std::optional<ScoreSheet> sheet;
};

struct AssessDocument {
    GradeScale scale = GradeScale::standard();
    std::vector<AssessGroup> groups;
};

namespace jio {

inline GradeDistribution counts_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("counts: expected an object");
    const char* names[5] = {"A", "B", "C", "D", "F"};
    std::array<long, 5> n{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (auto it = j.find(names[i]); it != j.end()) {
            if (!it->is_number_integer()) {
                throw ParseError(std::string("counts: '") + names[i] +
                                 "' must be an integer");
            }
            n[i] = it->get<long>();
        }
    }
    try {
        return {n[0], n[1], n[2], n[3], n[4]};
    } catch (const DomainError& e) {
        throw ParseError(std::string("counts: ") + e.what());
    }
}

inline ScoreSheet sheet_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("members: expected a nonempty array");
    }
    ScoreSheet sheet;
    std::size_t idx = 0;
    for (const Json& mj : j) {
        ScoreSheet::Member m;
        m.name = mj.contains("name") && mj["name"].is_string()
                     ? mj["name"].get<std::string>()
                     : "P" + std::to_string(idx + 1);
        const std::string where = "members[" + std::to_string(idx++) + "]";
        const Json& scores = require_field(mj, "scores", where.c_str());
        if (!scores.is_array() || scores.empty()) {
            throw ParseError(where + ": 'scores' must be a nonempty array");
        }
        for (const Json& s : scores) {
            if (!s.is_number_integer()) {
                throw ParseError(where + ": scores must be integers");
            }
            m.scores.push_back(s.get<int>());
        }
        sheet.members.push_back(std::move(m));
    }
    return sheet;
}

inline AssessGroup group_from_json(const Json& j, const std::string& fallback) {
    AssessGroup g;
    g.name = j.contains("name") && j["name"].is_string()
                 ? j["name"].get<std::string>()
                 : fallback;
    const bool has_counts = j.contains("counts");
    const bool has_members = j.contains("members");
    if (has_counts == has_members) {
        throw ParseError("group '" + g.name +
                         "': exactly one of 'counts' or 'members' is required");
    }
    if (has_counts) {
        g.counts = counts_from_json(j["counts"]);
    } else {
        g.sheet = sheet_from_json(j["members"]);
    }
    return g;
}

}  // namespace jio

inline AssessDocument assess_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("assessment: expected an object");
    AssessDocument doc;
    if (auto it = j.find("scale"); it != j.end()) {
        try {
            doc.scale = scale_from_json(*it);
        } catch (const DomainError& e) {
            throw ParseError(std::string("scale: ") + e.what());
        }
    }
    if (auto it = j.find("groups"); it != j.end()) {
        if (!it->is_array() || it->empty()) {
            throw ParseError("assessment: 'groups' must be a nonempty array");
        }
        std::size_t idx = 0;
        for (const Json& gj : *it) {
            doc.groups.push_back(
                jio::group_from_json(gj, "group" + std::to_string(++idx)));
        }
    } else {
        doc.groups.push_back(jio::group_from_json(j, "group"));
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Tableau serialization, matching the printed matrix layout: decision
// columns, slack columns, constants, plus basis labels and the net
// evaluation row.
// ---------------------------------------------------------------------------

inline Json tableau_to_json(const Tableau& t) {
    Json j;
    Json columns = Json::array();
    for (std::size_t c = 0; c < t.num_columns(); ++c) columns.push_back(t.column_label(c));
    j["columns"] = std::move(columns);
    Json basis = Json::array();
    for (std::size_t i = 0; i < t.num_slack; ++i) basis.push_back(t.basis_label(i));
    j["basis"] = std::move(basis);
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.num_slack; ++i) {
        Json row = Json::array();
        for (double v : t.rows[i]) row.push_back(json_round(v));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    Json net = Json::array();
    for (double v : t.net_evaluation()) net.push_back(json_round(v));
    j["net_evaluation"] = std::move(net);
    return j;
}

}  // namespace fuzzlin
