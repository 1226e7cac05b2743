#ifndef CITERANK_STRUCTURE_HPP
#define CITERANK_STRUCTURE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "citerank/model.hpp"

namespace citerank {

// Edge direction convention, fixed once for the whole project:
// the graph has a directed edge j -> i exactly when weights(i, j) > 0,
// i.e. an edge runs from the citer to the node it cites. Under this
// convention weight flows along edges, condensation sinks are the classes
// that receive weight without emitting any, and those sinks are the only
// possible support of a positive score. Flipping the convention silently
// inverts the ranking.

/// Partition of the nodes into strongly connected components, plus the
/// condensation DAG. Components are numbered in a topological order of the
/// condensation (every condensation edge (p, q) has p < q); ties broken by
/// smallest contained node id. Node lists inside a component are ascending.
struct SccPartition {
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;
    std::set<std::pair<int, int>> condensation_edges;

    int size() const noexcept { return static_cast<int>(components.size()); }
};

enum class Classification {
    Irreducible,       ///< one strongly connected component, N >= 2
    BlockDiagonal,     ///< several components, no cross-component weight
    ChainedReducible,  ///< several components coupled by cross weight
    Degenerate,        ///< N == 1: no weight at all (diagonal is zero)
};

const char* to_string(Classification c);

/// Structural analysis of a normalized citation matrix.
///
/// A component is *recurrent* when it has no outgoing condensation edge and
/// holds at least one positive internal weight; recurrent classes are the
/// only support of a positive score. A *dead sink* is a sink without
/// internal weight, necessarily a singleton whose node cites no one (a zero
/// column); it cannot carry score. Everything else is *transient* and is
/// forced to score zero. Dead sinks are listed both among the transient
/// classes and separately in `dead_sinks`.
struct StructureReport {
    SccPartition partition;
    Classification classification = Classification::Degenerate;
    std::vector<int> recurrent_classes;  // component indices, ascending
    std::vector<int> transient_classes;  // the rest, ascending (includes dead sinks)
    std::vector<int> dead_sinks;         // component indices, ascending

    /// Node permutation sigma with transient nodes first and recurrent
    /// nodes last: permuting by it puts the matrix into block
    /// lower-triangular form with the top-right block identically zero.
    std::vector<int> block_permutation;

    int num_transient_nodes() const;
    bool is_dead_sink_node(int node) const;
};

/// Strongly-connected-component decomposition of the j -> i graph.
SccPartition scc_decompose(const NormalizedCitationMatrix& c);

/// Classifies the matrix and derives recurrence and the block permutation.
StructureReport classify(const NormalizedCitationMatrix& c, const SccPartition& partition);

/// Applies a node permutation: output(perm[i], perm[j]) = input(i, j).
/// Throws InputError when perm is not a bijection on [0, N).
NormalizedCitationMatrix permute(const NormalizedCitationMatrix& c,
                                 const std::vector<int>& perm);

}  // namespace citerank

#endif
