#include "citerank/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "citerank/errors.hpp"

namespace citerank {

const char* to_string(Support s) {
    switch (s) {
        case Support::Positive: return "positive";
        case Support::ForcedZero: return "forced_zero";
        case Support::Dead: return "dead";
    }
    return "unknown";
}

ColumnSumCheck check_column_sum_lambda(const NormalizedCitationMatrix& c) {
    return ColumnSumCheck{c.zero_columns.empty(), c.zero_columns};
}

EigenPair dominant_eigenpair(const Eigen::MatrixXd& a,
                             double tolerance,
                             long max_iterations) {
    const Eigen::Index n = a.rows();
    if (n < 1 || a.cols() != n) {
        throw InputError("eigen-solve needs a non-empty square matrix");
    }
    if (tolerance <= 0.0) {
        throw InputError("tolerance must be positive");
    }
    if (max_iterations < 1) {
        throw InputError("max iteration count must be at least 1");
    }

    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    Eigen::VectorXd av(n);
    double residual = 0.0;
    double lambda = 0.0;

    for (long iter = 1; iter <= max_iterations; ++iter) {
        v /= v.maxCoeff();  // v stays positive: the shifted step keeps v_i >= v_i / 2
        av.noalias() = a * v;
        lambda = v.dot(av) / v.squaredNorm();
        residual = (av - lambda * v).lpNorm<Eigen::Infinity>();
        if (residual <= tolerance) {
            return EigenPair{lambda, v, residual, iter};
        }
        v = 0.5 * (v + av);
    }
    throw ConvergenceError("eigen-solve did not reach residual " + std::to_string(tolerance) +
                               " within " + std::to_string(max_iterations) +
                               " iterations (last residual " + std::to_string(residual) + ")",
                           residual, max_iterations);
}

EigenPair dominant_eigenpair(const NormalizedCitationMatrix& c,
                             double tolerance,
                             long max_iterations) {
    return dominant_eigenpair(c.weights, tolerance, max_iterations);
}

namespace {

// The unit-eigenvalue assertion is armed whenever the solved matrix has no
// zero column. The window widens with a loose user tolerance, since the
// Rayleigh estimate is only as accurate as the residual it stopped at.
void require_unit_lambda(double lambda, double tolerance, const char* where) {
    const double window = std::max(kLambdaUnitTol, 10.0 * tolerance);
    if (std::abs(lambda - 1.0) > window) {
        throw InternalError(std::string(where) + ": dominant eigenvalue " +
                            std::to_string(lambda) +
                            " is not 1 although every column sums to 1");
    }
}

std::vector<int> nodes_of_classes(const StructureReport& report, const std::vector<int>& comps) {
    std::vector<int> nodes;
    for (int k : comps) {
        const auto& comp = report.partition.components[static_cast<std::size_t>(k)];
        nodes.insert(nodes.end(), comp.begin(), comp.end());
    }
    return nodes;
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m,
                          const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    Eigen::MatrixXd out(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(rows[i], cols[j]);
        }
    }
    return out;
}

std::vector<Support> assign_support(const NormalizedCitationMatrix& c,
                                    const StructureReport& report,
                                    const Eigen::VectorXd& scores) {
    std::vector<Support> support(static_cast<std::size_t>(c.n), Support::ForcedZero);
    for (int v = 0; v < c.n; ++v) {
        if (scores[v] > 0.0) {
            support[static_cast<std::size_t>(v)] = Support::Positive;
        } else if (report.is_dead_sink_node(v)) {
            support[static_cast<std::size_t>(v)] = Support::Dead;
        }
    }
    return support;
}

}  // namespace

ScoreResult solve_scores(const NormalizedCitationMatrix& c,
                         const StructureReport& report,
                         const SolveOptions& options) {
    if (static_cast<int>(report.partition.component_of.size()) != c.n) {
        throw InputError("structure report does not match the matrix dimension");
    }
    if (report.recurrent_classes.empty()) {
        std::string msg = "no rankable structure: no strongly connected class retains weight";
        if (report.classification == Classification::Degenerate) {
            msg = "no rankable structure: a single node carries no weight";
        }
        throw NoRankableStructure(msg);
    }

    ScoreResult result;

    if (report.classification == Classification::Irreducible) {
        EigenPair pair =
            dominant_eigenpair(c.weights, options.tolerance, options.max_iterations);
        // Irreducible matrices cannot have a zero column, so lambda must be 1.
        require_unit_lambda(pair.lambda, options.tolerance, "irreducible solve");
        result.lambda = pair.lambda;
        result.scores = pair.vector / pair.vector.maxCoeff();
        result.iterations = pair.iterations;
        result.unique = true;
        result.support.assign(static_cast<std::size_t>(c.n), Support::Positive);
        if (result.scores.minCoeff() <= 0.0) {
            throw InternalError(
                "irreducible solve produced a non-positive component, "
                "contradicting Frobenius positivity");
        }
        ClassScores cls;
        cls.component = report.recurrent_classes.front();
        cls.nodes = report.partition.components.front();
        cls.scores = result.scores;
        cls.lambda = pair.lambda;
        cls.residual = pair.residual;
        cls.iterations = pair.iterations;
        result.per_class.push_back(std::move(cls));
    } else {
        // Reducible: every transient score is forced to exactly zero, and each
        // recurrent class carries its own Perron vector. With a single
        // recurrent class the embedding is the unique normalized score vector;
        // with several there is no common scale and no merged ranking.
        result.scores = Eigen::VectorXd::Zero(c.n);
        result.unique = report.recurrent_classes.size() == 1;
        double lambda = 0.0;
        for (int k : report.recurrent_classes) {
            ClassScores cls;
            cls.component = k;
            cls.nodes = report.partition.components[static_cast<std::size_t>(k)];
            const Eigen::MatrixXd block = submatrix(c.weights, cls.nodes, cls.nodes);
            EigenPair pair =
                dominant_eigenpair(block, options.tolerance, options.max_iterations);
            // A recurrent class keeps all of its weight, so the block has unit
            // column sums and lambda must be 1.
            require_unit_lambda(pair.lambda, options.tolerance, "recurrent class solve");
            cls.scores = pair.vector / pair.vector.maxCoeff();
            if (cls.scores.minCoeff() <= 0.0) {
                throw InternalError(
                    "recurrent class solve produced a non-positive component, "
                    "contradicting Frobenius positivity");
            }
            cls.lambda = pair.lambda;
            cls.residual = pair.residual;
            cls.iterations = pair.iterations;
            for (std::size_t i = 0; i < cls.nodes.size(); ++i) {
                result.scores[cls.nodes[i]] = cls.scores[static_cast<Eigen::Index>(i)];
            }
            lambda = std::max(lambda, pair.lambda);
            result.iterations += pair.iterations;
            result.per_class.push_back(std::move(cls));
        }
        result.lambda = lambda;
        result.support = assign_support(c, report, result.scores);
    }

    // Fresh post-hoc residual over the full matrix. Rows inside a recurrent
    // class are checked against that class's eigenvalue estimate; every other
    // row has score zero on both sides, so any nonzero C x there counts fully.
    Eigen::VectorXd node_lambda = Eigen::VectorXd::Constant(c.n, result.lambda);
    for (const ClassScores& cls : result.per_class) {
        for (int v : cls.nodes) {
            node_lambda[v] = cls.lambda;
        }
    }
    const Eigen::VectorXd cx = c.weights * result.scores;
    result.residual =
        (cx - node_lambda.cwiseProduct(result.scores)).lpNorm<Eigen::Infinity>();
    if (result.residual > options.tolerance) {
        throw InternalError("post-hoc residual " + std::to_string(result.residual) +
                            " exceeds the stopping tolerance");
    }
    return result;
}

ReducibleDecomposition verify_reducible(const NormalizedCitationMatrix& c,
                                        const StructureReport& report,
                                        const ScoreResult& result) {
    if (report.classification != Classification::ChainedReducible) {
        throw InputError("verify_reducible expects a chained-reducible classification");
    }
    if (report.recurrent_classes.size() != 1) {
        throw InputError("verify_reducible expects exactly one recurrent class");
    }
    if (report.partition.condensation_edges.empty()) {
        throw InternalError(
            "classification says chained-reducible but the condensation has no edge");
    }
    if (result.scores.size() != c.n) {
        throw InputError("score vector does not match the matrix dimension");
    }

    const std::vector<int> transient = nodes_of_classes(report, report.transient_classes);
    const std::vector<int> recurrent = nodes_of_classes(report, report.recurrent_classes);
    const int recurrent_comp = report.recurrent_classes.front();

    ReducibleDecomposition dec;
    dec.transient_block = submatrix(c.weights, transient, transient);
    dec.coupling_block = submatrix(c.weights, recurrent, transient);
    dec.recurrent_block = submatrix(c.weights, recurrent, recurrent);

    // Block shape check: a recurrent class never cites outside itself, so the
    // transient-rows x recurrent-columns block must be identically zero.
    const Eigen::MatrixXd top_right = submatrix(c.weights, transient, recurrent);
    if (top_right.size() > 0 && top_right.maxCoeff() > 0.0) {
        throw InternalError("recurrent class emits weight: block permutation is wrong");
    }

    // The coupling block must agree with the condensation: weight flows into
    // the recurrent class iff some condensation edge ends there. A zero B
    // under a report that claims such an edge contradicts the classification.
    const bool has_coupling = dec.coupling_block.size() > 0 && dec.coupling_block.maxCoeff() > 0.0;
    bool condensation_feeds_recurrent = false;
    for (const auto& [p, q] : report.partition.condensation_edges) {
        (void)p;
        if (q == recurrent_comp) {
            condensation_feeds_recurrent = true;
            break;
        }
    }
    if (has_coupling != condensation_feeds_recurrent) {
        throw InternalError(
            has_coupling
                ? "coupling block is nonzero but the condensation has no edge into "
                  "the recurrent class"
                : "coupling block is zero although the condensation claims an edge into "
                  "the recurrent class, contradicting the classification");
    }

    dec.transient_scores.resize(static_cast<Eigen::Index>(transient.size()));
    for (std::size_t i = 0; i < transient.size(); ++i) {
        dec.transient_scores[static_cast<Eigen::Index>(i)] = result.scores[transient[i]];
    }
    dec.recurrent_scores.resize(static_cast<Eigen::Index>(recurrent.size()));
    for (std::size_t i = 0; i < recurrent.size(); ++i) {
        dec.recurrent_scores[static_cast<Eigen::Index>(i)] = result.scores[recurrent[i]];
    }

    for (Eigen::Index i = 0; i < dec.transient_scores.size(); ++i) {
        if (dec.transient_scores[i] != 0.0) {
            throw InternalError("transient score is not exactly zero");
        }
    }

    // Left unit eigenvector of D. The start vector of the iteration is
    // already uniform, which for a column-sum-1 block is the answer.
    EigenPair left = dominant_eigenpair(dec.recurrent_block.transpose(), 1e-13, 100000);
    dec.omega = left.vector / left.vector.maxCoeff();
    if (dec.omega.minCoeff() <= 0.0) {
        throw InternalError("left eigenvector of the recurrent block is not positive");
    }
    if ((dec.omega - Eigen::VectorXd::Ones(dec.omega.size())).lpNorm<Eigen::Infinity>() >
        kOmegaOnesTol) {
        throw InternalError(
            "left eigenvector of a column-sum-1 recurrent block deviates from all-ones");
    }

    dec.transient_residual =
        (dec.transient_block * dec.transient_scores - dec.transient_scores)
            .lpNorm<Eigen::Infinity>();
    dec.recurrent_residual = (dec.coupling_block * dec.transient_scores +
                              dec.recurrent_block * dec.recurrent_scores - dec.recurrent_scores)
                                 .lpNorm<Eigen::Infinity>();
    if (dec.transient_residual > kVerifyTol) {
        throw InternalError("transient block equation A y = y fails");
    }
    if (dec.recurrent_residual > kVerifyTol) {
        throw InternalError("recurrent block equation B y + D z = z fails");
    }

    dec.solvability = dec.omega.dot(dec.coupling_block * dec.transient_scores);
    if (std::abs(dec.solvability) > kVerifyTol) {
        throw InternalError("solvability condition omega^T B y = 0 fails");
    }
    return dec;
}

}  // namespace citerank
