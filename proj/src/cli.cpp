#include "evfuse/cli.hpp"

#include "evfuse/error.hpp"
#include "evfuse/problem_io.hpp"
#include "evfuse/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>

namespace evfuse {

namespace {

std::string count(std::size_t n, const char* one, const char* many) {
    return std::to_string(n) + " " + (n == 1 ? one : many);
}

struct SolveArgs {
    std::string input;
    std::string output;
    std::string format = "table";
    bool trace = false;
    double alpha = 0.0;
    std::string normalization = "pooled";
};

int solve(const DecisionProblem& problem, const SolveArgs& a, std::ostream& out, std::ostream& err) {
    PipelineOptions options;
    options.criterion_normalization =
        a.normalization == "per-dm" ? CriterionNormalization::per_dm : CriterionNormalization::pooled;
    const RankingReport report = rank_alternatives(problem, options);
    const ReportMode mode = a.trace ? ReportMode::full_trace : ReportMode::summary;
    const ReportFormat format = a.format == "json" ? ReportFormat::json : ReportFormat::table;
    if (a.output.empty()) {
        emit_report(out, report, mode, format);
        return kExitOk;
    }
    std::ofstream file(a.output, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << a.output << "'\n";
        return kExitFailure;
    }
    emit_report(file, report, mode, format);
    return file ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Evidential multi-criteria ranking with interval weights", "evfuse"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Rank the alternatives of a problem file");
    solve_cmd->add_option("--input", solve_args.input, "Problem document (JSON)")->required();
    solve_cmd->add_option("--output", solve_args.output, "Write the report here instead of standard output");
    solve_cmd->add_option("--format", solve_args.format, "Report format")
        ->check(CLI::IsMember({"table", "json"}));
    solve_cmd->add_flag("--trace", solve_args.trace, "Include every intermediate fusion table");
    solve_cmd->add_option("--alpha", solve_args.alpha, "Alpha-cut level for fuzzy-number weights")
        ->check(CLI::Range(0.0, 1.0));
    solve_cmd->add_option("--criterion-normalization", solve_args.normalization,
                          "Normalize criterion weights across all decision makers or per decision maker")
        ->check(CLI::IsMember({"pooled", "per-dm"}));

    std::string validate_input;
    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a problem file");
    validate_cmd->add_option("--input", validate_input, "Problem document (JSON)")->required();

    auto* demo_cmd = app.add_subcommand("demo", "Trace the bundled supplier-selection example");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*solve_cmd) {
            LoadOptions load;
            load.alpha = solve_args.alpha;
            return solve(load_problem_file(solve_args.input, load), solve_args, out, err);
        }
        if (*validate_cmd) {
            const DecisionProblem p = load_problem_file(validate_input);
            out << "ok: " << count(p.decision_makers.size(), "decision maker", "decision makers") << ", "
                << count(p.criteria.size(), "criterion", "criteria") << ", "
                << count(p.alternatives.size(), "alternative", "alternatives") << "\n";
            return kExitOk;
        }
        if (*demo_cmd) {
            SolveArgs demo;
            demo.trace = true;
            return solve(load_problem(bundled_supplier_selection()), demo, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace evfuse
