#ifndef CITERANK_TEST_ORACLES_HPP
#define CITERANK_TEST_ORACLES_HPP

// Test-only machinery. The eigenvector oracle here goes through dense
// full-pivot LU elimination, an algebraic route that never touches the
// power iteration it is used to check. The generators are deterministic
// given their RNG.

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "citerank/model.hpp"
#include "citerank/structure.hpp"

namespace citerank::testing {

/// Unit-eigenvalue eigenvector as the kernel of (C - I), computed by
/// elimination. Demands a one-dimensional kernel, flips the sign so the
/// vector is non-negative, and scales the largest component to 1.
inline Eigen::VectorXd unit_eigenvector_oracle(const Eigen::MatrixXd& c) {
    const Eigen::Index n = c.rows();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(c - Eigen::MatrixXd::Identity(n, n));
    lu.setThreshold(1e-9);
    if (lu.dimensionOfKernel() != 1) {
        throw std::runtime_error("oracle: kernel of (C - I) has dimension " +
                                 std::to_string(lu.dimensionOfKernel()) + ", expected 1");
    }
    Eigen::VectorXd v = lu.kernel().col(0);
    if (v.sum() < 0.0) {
        v = -v;
    }
    if (v.minCoeff() < -1e-8 * v.cwiseAbs().maxCoeff()) {
        throw std::runtime_error("oracle: kernel vector is not sign-consistent");
    }
    return v / v.maxCoeff();
}

/// Literal reducibility test: true iff some index permutation followed by
/// some split places the matrix in block lower-triangular form (top-right
/// block of the permuted matrix identically zero). Exponential; N <= 8.
inline bool brute_force_reducible(const Eigen::MatrixXd& c) {
    const int n = static_cast<int>(c.rows());
    if (n < 2) {
        return true;  // a 1x1 zero-diagonal matrix cannot be irreducible
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        for (int split = 1; split < n; ++split) {
            bool zero_block = true;
            for (int bi = 0; bi < split && zero_block; ++bi) {
                for (int bj = split; bj < n; ++bj) {
                    if (c(order[static_cast<std::size_t>(bi)],
                          order[static_cast<std::size_t>(bj)]) != 0.0) {
                        zero_block = false;
                        break;
                    }
                }
            }
            if (zero_block) {
                return true;
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Random integer count matrix with zero diagonal. Every off-diagonal entry
/// is positive with probability `density`, drawing counts from [1, 9].
inline RawCitationMatrix random_raw(std::mt19937_64& rng, int n, double density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> count(1, 9);
    RawCitationMatrix raw;
    raw.n = n;
    raw.counts = CountMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i != j && coin(rng) < density) {
                raw.counts(i, j) = count(rng);
            }
        }
    }
    return raw;
}

/// Rejection-samples a raw matrix whose normalization is irreducible.
inline RawCitationMatrix random_irreducible_raw(std::mt19937_64& rng, int n,
                                                double density = 0.55) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        RawCitationMatrix raw = random_raw(rng, n, density);
        const NormalizedCitationMatrix c = normalize(raw);
        if (scc_decompose(c).size() == 1 && n >= 2) {
            return raw;
        }
    }
    throw std::runtime_error("generator: could not hit an irreducible instance");
}

/// Random matrix with no zero column (unit column sums after normalization);
/// the component structure is left unconstrained.
inline RawCitationMatrix random_stochastic_raw(std::mt19937_64& rng, int n,
                                               double density = 0.4) {
    RawCitationMatrix raw = random_raw(rng, n, density);
    std::uniform_int_distribution<int> pick(0, n - 2);
    std::uniform_int_distribution<std::int64_t> count(1, 9);
    for (int j = 0; j < n; ++j) {
        if (raw.counts.col(j).sum() == 0) {
            int i = pick(rng);
            if (i >= j) ++i;  // stay off the diagonal
            raw.counts(i, j) = count(rng);
        }
    }
    return raw;
}

/// A generated chained-reducible instance with exactly one recurrent class.
struct ChainedInstance {
    RawCitationMatrix raw;
    std::vector<int> transient_nodes;  // includes the dead sink, if any
    std::vector<int> recurrent_nodes;
    int dead_sink = -1;                // node id, -1 when absent
};

/// Builds a chained-reducible instance: transient nodes 0..t-1 each cite
/// forward (a later transient node or the recurrent block, the last one
/// always into the block), the recurrent nodes form a cycle plus random
/// internal extras, and optionally one dead sink hangs off a transient
/// node. Occasional backward edges merge transient nodes into larger
/// transient components, exercising the many-block generalization.
inline ChainedInstance random_chained_single_recurrent(std::mt19937_64& rng,
                                                       bool allow_dead_sink = true) {
    std::uniform_int_distribution<int> t_size(1, 4);
    std::uniform_int_distribution<int> r_size(2, 4);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> count(1, 9);

    ChainedInstance inst;
    const int t = t_size(rng);
    const int r = r_size(rng);
    const bool dead = allow_dead_sink && coin(rng) < 0.3;
    const int n = t + r + (dead ? 1 : 0);

    inst.raw.n = n;
    inst.raw.counts = CountMatrix::Zero(n, n);
    auto cite = [&](int citer, int cited) { inst.raw.counts(cited, citer) = count(rng); };

    for (int k = 0; k < r; ++k) {
        inst.recurrent_nodes.push_back(t + k);
        cite(t + k, t + (k + 1) % r);
    }
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            if (a != b && coin(rng) < 0.3) {
                cite(t + a, t + b);
            }
        }
    }

    std::uniform_int_distribution<int> r_pick(t, t + r - 1);
    for (int i = 0; i < t; ++i) {
        inst.transient_nodes.push_back(i);
        if (i + 1 < t && coin(rng) < 0.5) {
            cite(i, i + 1);
            if (coin(rng) < 0.4) {
                // Backward edge merges {i, i+1} into one transient class; an
                // escape edge into the recurrent block keeps it from turning
                // into a second sink.
                cite(i + 1, i);
                cite(i, r_pick(rng));
            }
        }
        if (i + 1 == t || coin(rng) < 0.7) {
            cite(i, r_pick(rng));
        }
    }
    // Every planned transient node must cite someone; orphans go straight
    // into the recurrent block.
    for (int i = 0; i < t; ++i) {
        if (inst.raw.counts.col(i).sum() == 0) {
            cite(i, r_pick(rng));
        }
    }

    if (dead) {
        inst.dead_sink = n - 1;
        inst.transient_nodes.push_back(inst.dead_sink);
        std::uniform_int_distribution<int> t_pick(0, t - 1);
        cite(t_pick(rng), inst.dead_sink);
    }
    return inst;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace citerank::testing

#endif
