#include "citerank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "citerank/errors.hpp"

namespace citerank {

std::string format_score(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ", ";
        out += labels[i];
    }
    return out;
}

std::vector<std::string> sorted_labels(const NodeTable& nodes, const std::vector<int>& ids) {
    std::vector<std::string> labels;
    labels.reserve(ids.size());
    for (int id : ids) {
        labels.push_back(nodes.label(id));
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

void sort_rows(std::vector<ScoreRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.label < b.label;
    });
}

enum class Command { Rank, Validate, Analyze };

RankReport run_pipeline(const RankRequest& request, Command command) {
    RankReport report;
    try {
        const std::vector<Edge> edges =
            parse_edges_file(request.input_path, request.mode);
        const GraphBuild build = build_raw(edges);
        const NormalizedCitationMatrix c = normalize(build.raw);
        const SccPartition partition = scc_decompose(c);
        const StructureReport structure = classify(c, partition);

        report.classification = to_string(structure.classification);
        for (int k : structure.recurrent_classes) {
            report.recurrent_classes.push_back(sorted_labels(
                build.nodes, partition.components[static_cast<std::size_t>(k)]));
        }
        if (!structure.recurrent_classes.empty()) {
            report.unique = structure.recurrent_classes.size() == 1;
        }

        if (build.dropped_self_citations > 0) {
            report.diagnostics.push_back(
                {"self-citations-dropped",
                 "dropped " + std::to_string(build.dropped_self_citations) +
                     " self-citation(s); diagonal entries are defined to be zero"});
        }
        const ColumnSumCheck columns = check_column_sum_lambda(c);
        if (!columns.all_columns_nonzero) {
            report.diagnostics.push_back(
                {"zero-columns",
                 std::to_string(columns.zero_column_nodes.size()) +
                     " node(s) cite no one and cannot carry score (" +
                     join_labels(sorted_labels(build.nodes, columns.zero_column_nodes)) +
                     "); with a zero column the unit-eigenvalue argument does not apply "
                     "and the dominant eigenvalue may be below 1"});
        }

        if (command == Command::Analyze) {
            for (int k = 0; k < partition.size(); ++k) {
                ComponentDetail detail;
                detail.index = k;
                detail.labels = sorted_labels(
                    build.nodes, partition.components[static_cast<std::size_t>(k)]);
                if (std::binary_search(structure.recurrent_classes.begin(),
                                       structure.recurrent_classes.end(), k)) {
                    detail.kind = "recurrent";
                } else if (std::binary_search(structure.dead_sinks.begin(),
                                              structure.dead_sinks.end(), k)) {
                    detail.kind = "dead_sink";
                } else {
                    detail.kind = "transient";
                }
                report.components.push_back(std::move(detail));
            }
            report.condensation_edges.assign(partition.condensation_edges.begin(),
                                             partition.condensation_edges.end());
            report.block_permutation = structure.block_permutation;
        }

        if (structure.recurrent_classes.empty()) {
            report.diagnostics.push_back(
                {"no-rankable-structure",
                 "no rankable structure: every class either cites no one or drains all "
                 "of its weight toward nodes that cite no one; no score vector exists"});
            report.exit_code = 1;
            return report;
        }

        if (command == Command::Validate) {
            report.exit_code = *report.unique ? 0 : 2;
            if (!*report.unique) {
                report.diagnostics.push_back(
                    {"non-unique",
                     "non-unique eigenvector: two distinct sets of authors (" +
                         std::to_string(structure.recurrent_classes.size()) +
                         " recurrent classes); scores from different classes share no scale"});
            }
            return report;
        }

        const ScoreResult result =
            solve_scores(c, structure, {request.tolerance, request.max_iterations});

        if (structure.classification == Classification::ChainedReducible &&
            structure.recurrent_classes.size() == 1) {
            const ReducibleDecomposition dec = verify_reducible(c, structure, result);
            if (command == Command::Analyze) {
                VerificationDetail detail;
                detail.omega_deviation =
                    (dec.omega - Eigen::VectorXd::Ones(dec.omega.size()))
                        .lpNorm<Eigen::Infinity>();
                detail.solvability = dec.solvability;
                detail.transient_residual = dec.transient_residual;
                detail.recurrent_residual = dec.recurrent_residual;
                report.verification = detail;
            }
        }

        report.lambda = result.lambda;
        report.residual = result.residual;
        report.iterations = result.iterations;
        report.unique = result.unique;

        int dead_nodes = 0;
        for (int k : structure.dead_sinks) {
            dead_nodes +=
                static_cast<int>(partition.components[static_cast<std::size_t>(k)].size());
        }
        const int forced_zero = structure.num_transient_nodes() - dead_nodes;
        if (result.unique && forced_zero > 0) {
            report.diagnostics.push_back(
                {"reducible-forced-zero",
                 "reducible citation graph: " + std::to_string(forced_zero) +
                     " node(s) outside the recurrent class are forced to score zero; "
                     "this outcome is unsatisfactory and the reducible case should be "
                     "treated differently, but no correction is applied here"});
        }
        if (!result.unique) {
            report.diagnostics.push_back(
                {"non-unique",
                 "non-unique eigenvector: two distinct sets of authors (" +
                     std::to_string(structure.recurrent_classes.size()) +
                     " recurrent classes); scores from different classes share no scale"});
            report.exit_code = 2;
        }

        if (result.unique || request.per_class) {
            for (int v = 0; v < c.n; ++v) {
                ScoreRow row;
                row.label = build.nodes.label(v);
                row.score = result.scores[v];
                row.support = result.support[static_cast<std::size_t>(v)];
                row.class_index = row.support == Support::Positive
                                      ? partition.component_of[static_cast<std::size_t>(v)]
                                      : -1;
                report.scores.push_back(std::move(row));
            }
            sort_rows(report.scores);
        }
        return report;
    } catch (const ParseError& e) {
        report.diagnostics.push_back({"parse-error", e.what()});
    } catch (const NoRankableStructure& e) {
        report.diagnostics.push_back({"no-rankable-structure", e.what()});
    } catch (const ConvergenceError& e) {
        report.diagnostics.push_back({"convergence-failure", e.what()});
    } catch (const InputError& e) {
        report.diagnostics.push_back({"input-error", e.what()});
    } catch (const InternalError& e) {
        report.diagnostics.push_back({"internal-error", e.what()});
    }
    report.exit_code = 1;
    return report;
}

}  // namespace

RankReport run_rank(const RankRequest& request) {
    return run_pipeline(request, Command::Rank);
}

RankReport run_validate(const RankRequest& request) {
    return run_pipeline(request, Command::Validate);
}

RankReport run_analyze(const RankRequest& request) {
    return run_pipeline(request, Command::Analyze);
}

void render_text(const RankReport& report, const RankRequest& request,
                 std::ostream& out, std::ostream& err) {
    if (report.classification) {
        out << "classification: " << *report.classification << "\n";
    }
    if (report.unique) {
        out << "unique ranking: " << (*report.unique ? "yes" : "no") << "\n";
    }
    if (report.lambda) {
        out << "lambda: " << format_score(*report.lambda) << "\n";
    }

    if (!report.recurrent_classes.empty()) {
        for (std::size_t k = 0; k < report.recurrent_classes.size(); ++k) {
            out << "recurrent class " << k << ": "
                << join_labels(report.recurrent_classes[k]) << "\n";
        }
    }

    if (!report.components.empty()) {
        out << "components:\n";
        for (const ComponentDetail& comp : report.components) {
            out << "  [" << comp.index << "] " << comp.kind << ": "
                << join_labels(comp.labels) << "\n";
        }
        out << "condensation edges:";
        if (report.condensation_edges.empty()) {
            out << " (none)";
        }
        for (const auto& [p, q] : report.condensation_edges) {
            out << " " << p << "->" << q;
        }
        out << "\n";
        out << "block permutation:";
        for (int p : report.block_permutation) {
            out << " " << p;
        }
        out << "\n";
    }
    if (report.verification) {
        out << "reducible verification: solvability "
            << format_score(report.verification->solvability) << ", omega deviation "
            << format_score(report.verification->omega_deviation) << ", |Ay-y| "
            << format_score(report.verification->transient_residual) << ", |By+Dz-z| "
            << format_score(report.verification->recurrent_residual) << "\n";
    }

    if (!report.scores.empty()) {
        if (report.unique && !*report.unique) {
            // Per-class request on a non-unique graph: group tables by class.
            std::vector<int> classes;
            for (const ScoreRow& row : report.scores) {
                if (row.class_index >= 0 &&
                    std::find(classes.begin(), classes.end(), row.class_index) ==
                        classes.end()) {
                    classes.push_back(row.class_index);
                }
            }
            std::sort(classes.begin(), classes.end());
            for (int cls : classes) {
                out << "scores (class " << cls << ", max-normalized within class):\n";
                for (const ScoreRow& row : report.scores) {
                    if (row.class_index == cls) {
                        out << "  " << row.label << "\t" << format_score(row.score) << "\t"
                            << to_string(row.support) << "\n";
                    }
                }
            }
            bool header = false;
            for (const ScoreRow& row : report.scores) {
                if (row.class_index < 0) {
                    if (!header) {
                        out << "unranked nodes (score 0):\n";
                        header = true;
                    }
                    out << "  " << row.label << "\t" << format_score(row.score) << "\t"
                        << to_string(row.support) << "\n";
                }
            }
        } else {
            out << "scores:\n";
            for (const ScoreRow& row : report.scores) {
                out << "  " << row.label << "\t" << format_score(row.score) << "\t"
                    << to_string(row.support) << "\n";
            }
        }
    } else if (report.unique && !*report.unique && report.exit_code == 2) {
        out << "no merged ranking: the eigenvector is not unique "
               "(rerun with --per-class for per-class rankings)\n";
    }

    if (report.residual) {
        out << "residual: " << format_score(*report.residual);
        if (report.iterations) {
            out << " after " << *report.iterations << " iteration(s)";
        }
        out << "\n";
    }
    (void)request;
    for (const Diagnostic& d : report.diagnostics) {
        err << (report.exit_code == 1 ? "error" : "warning") << ": [" << d.code << "] "
            << d.message << "\n";
    }
}

std::string render_json(const RankReport& report) {
    nlohmann::ordered_json doc;
    doc["scores"] = nlohmann::ordered_json::array();
    for (const ScoreRow& row : report.scores) {
        nlohmann::ordered_json entry;
        entry["label"] = row.label;
        entry["score"] = row.score;
        entry["support"] = to_string(row.support);
        if (row.class_index >= 0) {
            entry["class"] = row.class_index;
        } else {
            entry["class"] = nullptr;
        }
        doc["scores"].push_back(std::move(entry));
    }
    doc["lambda"] = report.lambda ? nlohmann::ordered_json(*report.lambda)
                                  : nlohmann::ordered_json(nullptr);
    doc["classification"] = report.classification
                                ? nlohmann::ordered_json(*report.classification)
                                : nlohmann::ordered_json(nullptr);
    doc["unique"] = report.unique ? nlohmann::ordered_json(*report.unique)
                                  : nlohmann::ordered_json(nullptr);
    doc["recurrent_classes"] = report.recurrent_classes;
    doc["diagnostics"] = nlohmann::ordered_json::array();
    for (const Diagnostic& d : report.diagnostics) {
        doc["diagnostics"].push_back({{"code", d.code}, {"message", d.message}});
    }
    doc["residual"] = report.residual ? nlohmann::ordered_json(*report.residual)
                                      : nlohmann::ordered_json(nullptr);
    doc["iterations"] = report.iterations ? nlohmann::ordered_json(*report.iterations)
                                          : nlohmann::ordered_json(nullptr);

    if (!report.components.empty()) {
        nlohmann::ordered_json structure;
        structure["components"] = nlohmann::ordered_json::array();
        for (const ComponentDetail& comp : report.components) {
            structure["components"].push_back(
                {{"index", comp.index}, {"kind", comp.kind}, {"labels", comp.labels}});
        }
        structure["condensation_edges"] = nlohmann::ordered_json::array();
        for (const auto& [p, q] : report.condensation_edges) {
            structure["condensation_edges"].push_back({p, q});
        }
        structure["block_permutation"] = report.block_permutation;
        doc["structure"] = std::move(structure);
    }
    if (report.verification) {
        doc["verification"] = {
            {"omega_deviation", report.verification->omega_deviation},
            {"solvability", report.verification->solvability},
            {"transient_residual", report.verification->transient_residual},
            {"recurrent_residual", report.verification->recurrent_residual},
        };
    }
    return doc.dump(2) + "\n";
}

}  // namespace citerank
