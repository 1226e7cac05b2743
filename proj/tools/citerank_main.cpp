#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "citerank/report.hpp"

namespace {

constexpr const char* kLeagueHelp =
    "League mode reads lines as winner,loser[,count]: the WINNER is the CITED "
    "party, so 'tigers,lions,2' (tigers beat lions twice) becomes the citation "
    "edge lions -> tigers and weight flows to tigers. Citations mode reads "
    "lines as citer,cited[,count] verbatim.";

struct CommonOptions {
    citerank::RankRequest request;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", request.input_path, "edge list file (CSV or TSV)")
            ->required();
        std::map<std::string, citerank::InputMode> modes{
            {"citations", citerank::InputMode::Citations},
            {"league", citerank::InputMode::League}};
        cmd->add_option("--mode", request.mode, kLeagueHelp)
            ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
            ->default_str("citations");
        cmd->add_option("--tol", request.tolerance,
                        "stopping tolerance on the residual ||Cx - lambda x||_inf")
            ->check(CLI::PositiveNumber)
            ->default_val(citerank::kDefaultTolerance);
        cmd->add_option("--max-iter", request.max_iterations, "iteration cap")
            ->check(CLI::PositiveNumber)
            ->default_val(citerank::kDefaultMaxIterations);
        std::map<std::string, citerank::OutputFormat> formats{
            {"text", citerank::OutputFormat::Text},
            {"json", citerank::OutputFormat::Json}};
        cmd->add_option("--format", request.format, "output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->default_str("text");
        cmd->add_flag("--per-class", request.per_class,
                      "when the eigenvector is not unique, emit per-class rankings "
                      "(each class normalized to max 1 on its own scale)");
    }
};

int emit(const citerank::RankReport& report, const citerank::RankRequest& request) {
    if (request.format == citerank::OutputFormat::Json) {
        std::cout << citerank::render_json(report);
    } else {
        citerank::render_text(report, request, std::cout, std::cerr);
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "citerank: eigenvector influence scores for weighted endorsement graphs\n"
        "(authors cited by authors, journals citing journals, teams beating teams)"};
    app.require_subcommand(1);

    CommonOptions rank_opts;
    CLI::App* rank = app.add_subcommand(
        "rank", "compute the score vector and print a ranking");
    rank_opts.attach(rank);

    CommonOptions analyze_opts;
    CLI::App* analyze = app.add_subcommand(
        "analyze",
        "rank plus full structural detail: components, condensation, block "
        "permutation, and the reducible-case verification");
    analyze_opts.attach(analyze);

    CommonOptions validate_opts;
    CLI::App* validate = app.add_subcommand(
        "validate",
        "structure analysis and column checks only (no eigen-solve), for data triage");
    validate_opts.attach(validate);

    CLI11_PARSE(app, argc, argv);

    if (rank->parsed()) {
        return emit(citerank::run_rank(rank_opts.request), rank_opts.request);
    }
    if (analyze->parsed()) {
        return emit(citerank::run_analyze(analyze_opts.request), analyze_opts.request);
    }
    return emit(citerank::run_validate(validate_opts.request), validate_opts.request);
}
