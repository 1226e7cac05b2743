#ifndef CITERANK_SOLVER_HPP
#define CITERANK_SOLVER_HPP

#include <Eigen/Core>
#include <vector>

#include "citerank/structure.hpp"

namespace citerank {

/// Default stopping tolerance on the infinity-norm residual ||Cx - lambda*x||.
inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kDefaultMaxIterations = 100000;

/// Window around 1 inside which the dominant eigenvalue of a matrix with
/// unit column sums must land (the column-sum argument pins lambda = 1).
inline constexpr double kLambdaUnitTol = 1e-10;

/// Tolerances for the reducible-case consistency checks.
inline constexpr double kOmegaOnesTol = 1e-12;
inline constexpr double kVerifyTol = 1e-10;

struct SolveOptions {
    double tolerance = kDefaultTolerance;
    long max_iterations = kDefaultMaxIterations;
};

/// Dominant eigenpair of a non-negative square matrix.
/// `vector` is non-negative with its largest component scaled to exactly 1,
/// and `residual` is a freshly recomputed ||A v - lambda v||_inf <= tol.
struct EigenPair {
    double lambda = 0.0;
    Eigen::VectorXd vector;
    double residual = 0.0;
    long iterations = 0;
};

/// How a node participates in the score vector.
enum class Support {
    Positive,    ///< inside a recurrent class; score strictly positive
    ForcedZero,  ///< transient: all weight drains away, score is exactly 0
    Dead,        ///< dead sink (cites no one): no eigen-contribution at all
};

const char* to_string(Support s);

/// Scores of one recurrent class, normalized to max 1 within the class.
struct ClassScores {
    int component = -1;          ///< component index in the partition
    std::vector<int> nodes;      ///< node ids, ascending
    Eigen::VectorXd scores;      ///< aligned with `nodes`
    double lambda = 0.0;
    double residual = 0.0;
    long iterations = 0;
};

/// Score vector for the whole graph.
///
/// When `unique` is true, `scores` is the one non-negative eigenvector for
/// the dominant eigenvalue, scaled so its largest component is exactly 1.
/// When `unique` is false (two or more recurrent classes), the per-class
/// Perron vectors in `per_class` are each scaled to max 1 *within their
/// class* and `scores` holds their embedding; values from different classes
/// share no common scale and must not be merged into one ranking.
struct ScoreResult {
    double lambda = 0.0;
    Eigen::VectorXd scores;
    std::vector<Support> support;
    double residual = 0.0;   ///< fresh ||C x - lambda x||_inf over the full matrix
    long iterations = 0;     ///< summed over all eigen-solves
    bool unique = false;
    std::vector<ClassScores> per_class;  ///< one entry per recurrent class
};

/// The reducible case in block form after the block permutation:
///   [ A  0 ]   A over transient nodes, D over recurrent ones,
///   [ B  D ]   B the recurrent-rows x transient-columns coupling.
/// `omega` is the left unit eigenvector of D (all ones for a column-sum-1
/// block), and `solvability` is omega^T B y, which a consistent solution
/// forces to zero along with y itself.
struct ReducibleDecomposition {
    Eigen::MatrixXd transient_block;   // A
    Eigen::MatrixXd coupling_block;    // B
    Eigen::MatrixXd recurrent_block;   // D
    Eigen::VectorXd transient_scores;  // y, in block order
    Eigen::VectorXd recurrent_scores;  // z, in block order
    Eigen::VectorXd omega;
    double solvability = 0.0;
    double transient_residual = 0.0;   // ||A y - y||_inf
    double recurrent_residual = 0.0;   // ||B y + D z - z||_inf
};

/// Whether the lambda = 1 argument is armed: it needs every column sum to
/// be 1, i.e. no zero columns. When disarmed the dominant eigenvalue can be
/// less than 1 and no unit assertion is made downstream.
struct ColumnSumCheck {
    bool all_columns_nonzero = false;
    std::vector<int> zero_column_nodes;
};

ColumnSumCheck check_column_sum_lambda(const NormalizedCitationMatrix& c);

/// Power iteration on the shifted operator M = (I + A) / 2, which shares
/// A's unit eigenvectors and, having a positive diagonal, is aperiodic:
/// it converges on periodic matrices (2-cycles, 3-cycles) where plain power
/// iteration oscillates. lambda is recovered as the Rayleigh ratio of A
/// itself against the iterate, and the stopping test is the fresh residual
/// ||A v - lambda v||_inf <= tol with v scaled to max 1. The start vector
/// is uniform. Throws ConvergenceError when max_iterations is exhausted.
EigenPair dominant_eigenpair(const Eigen::MatrixXd& a,
                             double tolerance = kDefaultTolerance,
                             long max_iterations = kDefaultMaxIterations);

EigenPair dominant_eigenpair(const NormalizedCitationMatrix& c,
                             double tolerance = kDefaultTolerance,
                             long max_iterations = kDefaultMaxIterations);

/// Full score solve driven by the structural classification:
///  - Irreducible: one eigen-solve on the whole matrix; unique, all positive.
///  - One recurrent class: transient scores forced to exactly 0, Perron
///    solve on the recurrent block, embedded; unique.
///  - Two or more recurrent classes: per-class Perron vectors, no common
///    scale; `unique` is false.
/// Throws NoRankableStructure when no recurrent class exists.
ScoreResult solve_scores(const NormalizedCitationMatrix& c,
                         const StructureReport& report,
                         const SolveOptions& options = {});

/// Re-derives the block decomposition of a chained-reducible solve and
/// checks it: the top-right block is zero, the coupling block agrees with
/// the condensation, omega is the all-ones vector within 1e-12, y = 0,
/// ||A y - y|| and ||B y + D z - z|| are within 1e-10, and omega^T B y = 0.
/// Throws InternalError when any check fails (a solver bug or a forged
/// report, not bad input) and InputError when called on the wrong shape.
ReducibleDecomposition verify_reducible(const NormalizedCitationMatrix& c,
                                        const StructureReport& report,
                                        const ScoreResult& result);

}  // namespace citerank

#endif
