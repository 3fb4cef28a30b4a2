// fuzzlin: batch front end for fuzzy-number assessment and fuzzy linear
// programming. Reads a JSON problem document from --input or standard
// input and writes a text or JSON report to standard output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fuzzlin/fuzzlin.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --alpha x1=3.5 style pairs
void parse_var_assignments(const std::vector<std::string>& raw,
                           std::map<std::size_t, double>& out,
                           const std::string& flag) {
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || item.size() < 4 || item[0] != 'x') {
            throw CLI::ValidationError(flag, "expected x<k>=<value>, got '" +
                                                 item + "'");
        }
        char* end = nullptr;
        const long idx = std::strtol(item.c_str() + 1, &end, 10);
        if (idx < 1 || end != item.c_str() + eq) {
            throw CLI::ValidationError(flag, "bad variable name in '" + item + "'");
        }
        const double value = std::strtod(item.c_str() + eq + 1, &end);
        if (end != item.c_str() + item.size()) {
            throw CLI::ValidationError(flag, "bad value in '" + item + "'");
        }
        out[static_cast<std::size_t>(idx - 1)] = value;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using fuzzlin::cli::CliConfig;
    using fuzzlin::cli::Command;
    using fuzzlin::cli::OutputFormat;

    CLI::App app{"fuzzy-number toolkit and fuzzy linear-programming solver"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string input_path;
    std::string format = "text";
    std::vector<std::string> alpha_raw, b_raw;
    std::string refuzz_kind;
    double dof = 0.0;

    app.add_option("--input,-i", input_path,
                   "input JSON document (default: standard input)");
    app.add_option("--format,-f", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tolerance", config.tolerance,
                   "feasibility-audit tolerance (default 1e-7)");

    auto* rank_cmd = app.add_subcommand("rank", "rank a fuzzy number");
    auto* defuzz_cmd =
        app.add_subcommand("defuzzify", "defuzzify a fuzzy number");
    defuzz_cmd->add_option("--method", config.defuzzify_method,
                           "cog or cog-of-cogs")
        ->check(CLI::IsMember({"cog", "cog-of-cogs"}));
    auto* assess_cmd = app.add_subcommand(
        "assess", "grade-based group assessment (gpa, tfn and tpfn means)");
    assess_cmd->add_subcommand("gpa", "grade point average only");
    assess_cmd->add_subcommand("tfn", "triangular mean performance only");
    assess_cmd->add_subcommand("tpfn", "trapezoidal per-member assessment only");
    auto* lp_cmd = app.add_subcommand("lp", "solve a crisp linear program");
    lp_cmd->add_flag("--trace", config.trace, "emit every simplex tableau");
    auto* flp_cmd = app.add_subcommand("flp", "solve a fuzzy linear program");
    flp_cmd->add_flag("--trace", config.trace, "emit every simplex tableau");
    flp_cmd->add_option("--refuzz", refuzz_kind,
                        "refuzzify the optimum as tfn or tpfn")
        ->check(CLI::IsMember({"tfn", "tpfn"}));
    auto* dof_opt = flp_cmd->add_option(
        "--dof", dof, "desired degree of fuzziness for refuzzification");
    flp_cmd->add_option("--alpha", alpha_raw,
                        "per-variable left endpoint, e.g. --alpha x1=3.5");
    flp_cmd->add_option("--b", b_raw,
                        "per-variable core start (tpfn), e.g. --b x1=0.238");

    CLI11_PARSE(app, argc, argv);

    if (rank_cmd->parsed()) config.command = Command::rank;
    if (defuzz_cmd->parsed()) config.command = Command::defuzzify;
    if (assess_cmd->parsed()) {
        config.command = Command::assess;
        for (const char* aspect : {"gpa", "tfn", "tpfn"}) {
            if (assess_cmd->get_subcommand(aspect)->parsed()) {
                config.assess_aspect = aspect;
            }
        }
    }
    if (lp_cmd->parsed()) config.command = Command::lp;
    if (flp_cmd->parsed()) {
        config.command = Command::flp;
        if (!refuzz_kind.empty()) config.refuzz_kind = refuzz_kind;
        if (dof_opt->count() > 0) config.refuzz_dof = dof;
        try {
            parse_var_assignments(alpha_raw, config.alpha, "--alpha");
            parse_var_assignments(b_raw, config.b, "--b");
        } catch (const CLI::ValidationError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    config.format = (format == "json") ? OutputFormat::json : OutputFormat::text;
    config.input_path = input_path;

    std::string text;
    try {
        text = read_input(input_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const fuzzlin::cli::Report report = fuzzlin::cli::run_on_text(config, text);
    if (report.exit_status == 0) {
        std::cout << report.render(config.format);
    } else {
        std::cerr << "error: " << report.error << "\n";
        if (config.format == OutputFormat::json) {
            std::cout << report.render(config.format);
        }
    }
    return report.exit_status;
}
