#include "citerank/structure.hpp"

#include <algorithm>
#include <queue>

#include "citerank/errors.hpp"

namespace citerank {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Irreducible: return "irreducible";
        case Classification::BlockDiagonal: return "block_diagonal";
        case Classification::ChainedReducible: return "chained_reducible";
        case Classification::Degenerate: return "degenerate";
    }
    return "unknown";
}

int StructureReport::num_transient_nodes() const {
    int count = 0;
    for (int t : transient_classes) {
        count += static_cast<int>(partition.components[static_cast<std::size_t>(t)].size());
    }
    return count;
}

bool StructureReport::is_dead_sink_node(int node) const {
    const int comp = partition.component_of[static_cast<std::size_t>(node)];
    return std::binary_search(dead_sinks.begin(), dead_sinks.end(), comp);
}

namespace {

std::vector<std::vector<int>> adjacency(const NormalizedCitationMatrix& c) {
    // Edge j -> i iff weights(i, j) > 0.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(c.n));
    for (int j = 0; j < c.n; ++j) {
        for (int i = 0; i < c.n; ++i) {
            if (c.weights(i, j) > 0.0) {
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    return adj;
}

// Iterative Tarjan. Emits components sinks-first; callers renumber.
struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, lowlink, on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& a)
        : adj(a),
          index(a.size(), -1),
          lowlink(a.size(), 0),
          on_stack(a.size(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t edge = 0;
        };
        std::vector<Frame> frames{{root}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const int v = f.v;
            if (f.edge < adj[static_cast<std::size_t>(v)].size()) {
                const int w = adj[static_cast<std::size_t>(v)][f.edge++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    components.push_back(std::move(comp));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    const int parent = frames.back().v;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
                }
            }
        }
    }
};

}  // namespace

SccPartition scc_decompose(const NormalizedCitationMatrix& c) {
    const auto adj = adjacency(c);
    TarjanState tarjan(adj);
    for (int v = 0; v < c.n; ++v) {
        if (tarjan.index[v] < 0) {
            tarjan.run(v);
        }
    }

    const int ncomp = static_cast<int>(tarjan.components.size());
    std::vector<int> comp_of(static_cast<std::size_t>(c.n), -1);
    for (int k = 0; k < ncomp; ++k) {
        for (int v : tarjan.components[static_cast<std::size_t>(k)]) {
            comp_of[static_cast<std::size_t>(v)] = k;
        }
    }

    // Condensation over Tarjan's numbering.
    std::set<std::pair<int, int>> raw_edges;
    for (int j = 0; j < c.n; ++j) {
        for (int i : adj[static_cast<std::size_t>(j)]) {
            const int p = comp_of[static_cast<std::size_t>(j)];
            const int q = comp_of[static_cast<std::size_t>(i)];
            if (p != q) {
                raw_edges.emplace(p, q);
            }
        }
    }

    // Canonical numbering: Kahn's topological order over the condensation,
    // ties resolved by smallest contained node id. This makes the component
    // order a function of the partition alone, and every condensation edge
    // points from a lower index to a higher one.
    std::vector<int> min_node(static_cast<std::size_t>(ncomp));
    for (int k = 0; k < ncomp; ++k) {
        const auto& comp = tarjan.components[static_cast<std::size_t>(k)];
        min_node[static_cast<std::size_t>(k)] = *std::min_element(comp.begin(), comp.end());
    }
    std::vector<int> indegree(static_cast<std::size_t>(ncomp), 0);
    std::vector<std::vector<int>> cond_out(static_cast<std::size_t>(ncomp));
    for (const auto& [p, q] : raw_edges) {
        ++indegree[static_cast<std::size_t>(q)];
        cond_out[static_cast<std::size_t>(p)].push_back(q);
    }
    using HeapItem = std::pair<int, int>;  // (min node id, component)
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> ready;
    for (int k = 0; k < ncomp; ++k) {
        if (indegree[static_cast<std::size_t>(k)] == 0) {
            ready.emplace(min_node[static_cast<std::size_t>(k)], k);
        }
    }
    std::vector<int> renumber(static_cast<std::size_t>(ncomp), -1);  // old -> new
    int next = 0;
    while (!ready.empty()) {
        const int k = ready.top().second;
        ready.pop();
        renumber[static_cast<std::size_t>(k)] = next++;
        for (int q : cond_out[static_cast<std::size_t>(k)]) {
            if (--indegree[static_cast<std::size_t>(q)] == 0) {
                ready.emplace(min_node[static_cast<std::size_t>(q)], q);
            }
        }
    }

    SccPartition out;
    out.components.resize(static_cast<std::size_t>(ncomp));
    out.component_of.assign(static_cast<std::size_t>(c.n), -1);
    for (int k = 0; k < ncomp; ++k) {
        auto comp = tarjan.components[static_cast<std::size_t>(k)];
        std::sort(comp.begin(), comp.end());
        const int nk = renumber[static_cast<std::size_t>(k)];
        for (int v : comp) {
            out.component_of[static_cast<std::size_t>(v)] = nk;
        }
        out.components[static_cast<std::size_t>(nk)] = std::move(comp);
    }
    for (const auto& [p, q] : raw_edges) {
        out.condensation_edges.emplace(renumber[static_cast<std::size_t>(p)],
                                       renumber[static_cast<std::size_t>(q)]);
    }
    return out;
}

StructureReport classify(const NormalizedCitationMatrix& c, const SccPartition& partition) {
    StructureReport report;
    report.partition = partition;

    const int ncomp = partition.size();
    std::vector<char> has_out(static_cast<std::size_t>(ncomp), 0);
    for (const auto& [p, q] : partition.condensation_edges) {
        (void)q;
        has_out[static_cast<std::size_t>(p)] = 1;
    }

    for (int k = 0; k < ncomp; ++k) {
        const auto& comp = partition.components[static_cast<std::size_t>(k)];
        bool internal_weight = false;
        for (int j : comp) {
            for (int i : comp) {
                if (c.weights(i, j) > 0.0) {
                    internal_weight = true;
                    break;
                }
            }
            if (internal_weight) break;
        }
        const bool sink = !has_out[static_cast<std::size_t>(k)];
        if (sink && internal_weight) {
            report.recurrent_classes.push_back(k);
        } else {
            report.transient_classes.push_back(k);
            if (sink) {
                report.dead_sinks.push_back(k);
            }
        }
    }

    if (c.n == 1) {
        report.classification = Classification::Degenerate;
    } else if (ncomp == 1) {
        report.classification = Classification::Irreducible;
    } else if (partition.condensation_edges.empty()) {
        report.classification = Classification::BlockDiagonal;
    } else {
        report.classification = Classification::ChainedReducible;
    }

    // Transient nodes first (components in partition order), recurrent last.
    report.block_permutation.assign(static_cast<std::size_t>(c.n), -1);
    int pos = 0;
    for (int t : report.transient_classes) {
        for (int v : partition.components[static_cast<std::size_t>(t)]) {
            report.block_permutation[static_cast<std::size_t>(v)] = pos++;
        }
    }
    for (int r : report.recurrent_classes) {
        for (int v : partition.components[static_cast<std::size_t>(r)]) {
            report.block_permutation[static_cast<std::size_t>(v)] = pos++;
        }
    }
    return report;
}

NormalizedCitationMatrix permute(const NormalizedCitationMatrix& c,
                                 const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.n) {
        throw InputError("permutation size does not match matrix dimension");
    }
    std::vector<char> seen(static_cast<std::size_t>(c.n), 0);
    for (int p : perm) {
        if (p < 0 || p >= c.n || seen[static_cast<std::size_t>(p)]) {
            throw InputError("permutation is not a bijection on [0, N)");
        }
        seen[static_cast<std::size_t>(p)] = 1;
    }

    NormalizedCitationMatrix out;
    out.n = c.n;
    out.weights.resize(c.n, c.n);
    for (int j = 0; j < c.n; ++j) {
        for (int i = 0; i < c.n; ++i) {
            out.weights(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) =
                c.weights(i, j);
        }
    }
    out.zero_columns.reserve(c.zero_columns.size());
    for (int z : c.zero_columns) {
        out.zero_columns.push_back(perm[static_cast<std::size_t>(z)]);
    }
    std::sort(out.zero_columns.begin(), out.zero_columns.end());
    return out;
}

}  // namespace citerank
