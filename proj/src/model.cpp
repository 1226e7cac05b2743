#include "citerank/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "citerank/errors.hpp"

namespace citerank {

namespace {
constexpr double kColumnSumTol = 1e-12;
}

int NodeTable::intern(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<int>(labels_.size()));
    if (inserted) {
        labels_.push_back(label);
    }
    return it->second;
}

int NodeTable::find(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

bool NormalizedCitationMatrix::is_zero_column(int j) const {
    return std::binary_search(zero_columns.begin(), zero_columns.end(), j);
}

NormalizedCitationMatrix NormalizedCitationMatrix::from_weights(Eigen::MatrixXd w) {
    if (w.rows() != w.cols() || w.rows() < 1) {
        throw InputError("normalized matrix must be square and non-empty");
    }
    const int n = static_cast<int>(w.rows());
    std::vector<int> zeros;
    for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = w(i, j);
            if (v < 0.0 || v > 1.0) {
                throw InputError("normalized weights must lie in [0, 1]");
            }
            sum += v;
        }
        if (sum == 0.0) {
            zeros.push_back(j);
        } else if (std::abs(sum - 1.0) > kColumnSumTol) {
            throw InputError("column " + std::to_string(j) +
                             " sums to " + std::to_string(sum) + ", expected 1 or 0");
        }
        if (w(j, j) != 0.0) {
            throw InputError("diagonal entry " + std::to_string(j) + " is nonzero");
        }
    }
    return NormalizedCitationMatrix{n, std::move(w), std::move(zeros)};
}

GraphBuild build_raw(const std::vector<Edge>& edges) {
    if (edges.empty()) {
        throw InputError("no graph: the edge list is empty");
    }

    GraphBuild out;
    struct Entry {
        int cited;
        int citer;
        std::int64_t count;
    };
    std::vector<Entry> kept;
    kept.reserve(edges.size());

    for (const Edge& e : edges) {
        if (e.citer.empty() || e.cited.empty()) {
            throw InputError("node labels must be non-empty strings");
        }
        if (e.count < 1) {
            throw InputError("citation count must be a positive integer, got " +
                             std::to_string(e.count));
        }
        const int citer = out.nodes.intern(e.citer);
        const int cited = out.nodes.intern(e.cited);
        if (citer == cited) {
            ++out.dropped_self_citations;
            continue;
        }
        kept.push_back({cited, citer, e.count});
    }

    const int n = out.nodes.size();
    out.raw.n = n;
    out.raw.counts = CountMatrix::Zero(n, n);
    for (const Entry& e : kept) {
        out.raw.counts(e.cited, e.citer) += e.count;
    }
    return out;
}

std::pair<Eigen::MatrixXd, std::vector<int>> normalize_columns(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.cols());
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m.rows(), n);
    std::vector<int> zeros;
    for (int j = 0; j < n; ++j) {
        const double sum = m.col(j).sum();
        if (sum > 0.0) {
            w.col(j) = m.col(j) / sum;
        } else {
            zeros.push_back(j);
        }
    }
    return {std::move(w), std::move(zeros)};
}

NormalizedCitationMatrix normalize(const RawCitationMatrix& raw) {
    auto [w, zeros] = normalize_columns(raw.counts.cast<double>());
    return NormalizedCitationMatrix{raw.n, std::move(w), std::move(zeros)};
}

}  // namespace citerank
