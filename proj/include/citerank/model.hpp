#ifndef CITERANK_MODEL_HPP
#define CITERANK_MODEL_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace citerank {

/// One endorsement record: `citer` cited `cited` `count` times.
struct Edge {
    std::string citer;
    std::string cited;
    std::int64_t count = 1;
};

/// Bidirectional mapping between node labels and dense ids in [0, N).
/// Ids are assigned in first-appearance order; reports sort by score and
/// label, so the internal order never shows up in results.
class NodeTable {
public:
    int intern(const std::string& label);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int id) const { return labels_.at(static_cast<std::size_t>(id)); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Returns the id for `label`, or -1 if unknown.
    int find(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer citation counts. Entry (i, j) is the number of times j cited i.
/// The diagonal is identically zero: self-citations are stripped on build.
struct RawCitationMatrix {
    int n = 0;
    CountMatrix counts;
};

/// Raw counts with each nonzero column divided by its column sum. Columns
/// therefore sum to exactly 1 (within 1e-12) or are identically zero; the
/// zero ones are listed in `zero_columns` (nodes that cite no one).
struct NormalizedCitationMatrix {
    int n = 0;
    Eigen::MatrixXd weights;
    std::vector<int> zero_columns;  // sorted ascending

    bool is_zero_column(int j) const;

    /// Validates the invariants above on an arbitrary weight matrix and
    /// wraps it. Throws InputError if they do not hold.
    static NormalizedCitationMatrix from_weights(Eigen::MatrixXd w);
};

/// Result of assembling the raw matrix from an edge list.
struct GraphBuild {
    NodeTable nodes;
    RawCitationMatrix raw;
    std::int64_t dropped_self_citations = 0;
};

/// Accumulates an edge list into (NodeTable, RawCitationMatrix).
/// Repeated (citer, cited) pairs sum; edges with citer == cited are dropped,
/// one tick of `dropped_self_citations` per dropped record (the node is
/// still interned). Throws InputError on an empty list, empty labels, or
/// counts < 1.
GraphBuild build_raw(const std::vector<Edge>& edges);

/// Divides every nonzero column by its sum.
NormalizedCitationMatrix normalize(const RawCitationMatrix& raw);

/// Column-normalization core over real weights; also used to re-normalize.
/// Returns the scaled matrix and the indices of all-zero columns.
std::pair<Eigen::MatrixXd, std::vector<int>> normalize_columns(const Eigen::MatrixXd& m);

}  // namespace citerank

#endif
