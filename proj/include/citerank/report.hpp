#ifndef CITERANK_REPORT_HPP
#define CITERANK_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "citerank/edge_io.hpp"
#include "citerank/solver.hpp"

namespace citerank {

enum class OutputFormat { Text, Json };

/// One ranking run: input file, column semantics, solver knobs, rendering.
struct RankRequest {
    std::string input_path;
    InputMode mode = InputMode::Citations;
    double tolerance = kDefaultTolerance;
    long max_iterations = kDefaultMaxIterations;
    OutputFormat format = OutputFormat::Text;
    bool per_class = false;  ///< emit per-class rankings when non-unique
};

/// Coded message; `code` is machine-readable and stable, `message` is prose.
struct Diagnostic {
    std::string code;
    std::string message;
};

struct ScoreRow {
    std::string label;
    double score = 0.0;
    Support support = Support::Dead;
    int class_index = -1;  ///< recurrent component the node belongs to, -1 = none
};

struct ComponentDetail {
    int index = -1;
    std::vector<std::string> labels;
    std::string kind;  // "recurrent" | "transient" | "dead_sink"
};

struct VerificationDetail {
    double omega_deviation = 0.0;  // ||omega - ones||_inf
    double solvability = 0.0;      // omega^T B y
    double transient_residual = 0.0;
    double recurrent_residual = 0.0;
};

/// Everything a run produces. Fields are empty/nullopt when the pipeline
/// stopped before computing them (parse failure, refusal, validate-only).
/// `scores` is sorted by score descending, ties by label ascending; it lists
/// every node exactly once whenever a ranking is emitted, and is empty on a
/// non-unique refusal without per-class output and on errors.
struct RankReport {
    std::vector<ScoreRow> scores;
    std::optional<double> lambda;
    std::optional<std::string> classification;
    std::optional<bool> unique;
    std::vector<std::vector<std::string>> recurrent_classes;
    std::vector<Diagnostic> diagnostics;
    std::optional<double> residual;
    std::optional<long> iterations;

    // analyze-only structural detail
    std::vector<ComponentDetail> components;
    std::vector<std::pair<int, int>> condensation_edges;
    std::vector<int> block_permutation;
    std::optional<VerificationDetail> verification;

    int exit_code = 0;  ///< 0 unique ranking, 2 non-unique, 1 error
};

/// parse -> build -> normalize -> scc -> classify -> solve -> verify.
/// Never throws; failures become diagnostics with exit code 1.
RankReport run_rank(const RankRequest& request);

/// Structure analysis and column checks only, no eigen-solve.
RankReport run_validate(const RankRequest& request);

/// run_rank plus the full structural detail and reducible verification data.
RankReport run_analyze(const RankRequest& request);

/// Text rendering: report to `out`, diagnostics to `err`.
void render_text(const RankReport& report, const RankRequest& request,
                 std::ostream& out, std::ostream& err);

/// Canonical JSON document (diagnostics embedded), newline-terminated.
/// Identical inputs produce byte-identical output.
std::string render_json(const RankReport& report);

/// Score formatting used by the text renderer: 12 significant digits.
std::string format_score(double value);

}  // namespace citerank

#endif
