// Acceptance suite: every release-gating property in one binary, one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// The eigenvector oracle is dense full-pivot LU elimination (oracles.hpp),
// an algebraic route independent of the power iteration under test.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "citerank/edge_io.hpp"
#include "citerank/report.hpp"
#include "citerank/solver.hpp"
#include "oracles.hpp"

using namespace citerank;
using citerank::testing::random_chained_single_recurrent;
using citerank::testing::random_irreducible_raw;
using citerank::testing::random_permutation;
using citerank::testing::random_stochastic_raw;
using citerank::testing::unit_eigenvector_oracle;
using nlohmann::json;

namespace {

struct Checker {
    int failures = 0;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (failures <= 8) {
                detail << "    " << what << "\n";
            }
        }
    }
};

int g_failed_criteria = 0;

void criterion(int number, const std::string& name,
               const std::function<void(Checker&)>& body) {
    Checker check;
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    if (check.failures == 0) {
        std::cout << "PASS  criterion " << number << ": " << name << "\n";
    } else {
        ++g_failed_criteria;
        std::cout << "FAIL  criterion " << number << ": " << name << " ("
                  << check.failures << " violation(s))\n"
                  << check.detail.str();
    }
}

ScoreResult solve(const NormalizedCitationMatrix& c, const SolveOptions& options = {}) {
    return solve_scores(c, classify(c, scc_decompose(c)), options);
}

std::string fixture(const std::string& name) {
    return std::string(CITERANK_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(CITERANK_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        return {};
    }
    RunResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool conforms_to_schema(const std::string& text) {
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) return false;
    for (const char* key : {"scores", "lambda", "classification", "unique",
                            "recurrent_classes", "diagnostics", "residual", "iterations"}) {
        if (!doc.contains(key)) return false;
    }
    if (!doc["scores"].is_array() || !doc["diagnostics"].is_array() ||
        !doc["recurrent_classes"].is_array()) {
        return false;
    }
    for (const auto& row : doc["scores"]) {
        if (!row.contains("label") || !row.contains("score") || !row.contains("support")) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    // 1. Oracle equivalence on random irreducible matrices.
    criterion(1, "solver matches the elimination oracle on >=200 irreducible matrices",
              [](Checker& check) {
                  const auto start = std::chrono::steady_clock::now();
                  std::mt19937_64 rng(101);
                  for (int trial = 0; trial < 200; ++trial) {
                      const int n = 2 + static_cast<int>(rng() % 7);  // N in [2, 8]
                      const NormalizedCitationMatrix c =
                          normalize(random_irreducible_raw(rng, n));
                      const ScoreResult result = solve(c);
                      const Eigen::VectorXd oracle = unit_eigenvector_oracle(c.weights);
                      const double diff =
                          (result.scores - oracle).lpNorm<Eigen::Infinity>();
                      check.require(diff <= 1e-8,
                                    "trial " + std::to_string(trial) + ": |solver - oracle| = " +
                                        std::to_string(diff));
                  }
                  const double seconds =
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
                  check.require(seconds < 10.0,
                                "runtime " + std::to_string(seconds) + "s exceeds 10s");
              });

    // 2. lambda = 1 whenever every column sums to 1.
    criterion(2, "lambda lands in [1 - 1e-10, 1 + 1e-10] for unit-column-sum matrices",
              [](Checker& check) {
                  std::mt19937_64 rng(202);
                  for (int trial = 0; trial < 200; ++trial) {
                      const int n = 2 + static_cast<int>(rng() % 7);
                      const NormalizedCitationMatrix c =
                          normalize(random_stochastic_raw(rng, n));
                      const ScoreResult result = solve(c);
                      check.require(std::abs(result.lambda - 1.0) <= 1e-10,
                                    "trial " + std::to_string(trial) + ": lambda = " +
                                        std::to_string(result.lambda));
                      for (const ClassScores& cls : result.per_class) {
                          check.require(std::abs(cls.lambda - 1.0) <= 1e-10,
                                        "trial " + std::to_string(trial) +
                                            ": class lambda = " + std::to_string(cls.lambda));
                      }
                  }
              });

    // 3. The worked three-author fixture, oracle recomputed here.
    criterion(3, "worked fixture scores (1, 0.75, 0.5) within 1e-9", [](Checker& check) {
        Eigen::MatrixXd w(3, 3);
        w << 0.0, 1.0, 0.5,
             0.5, 0.0, 0.5,
             0.5, 0.0, 0.0;
        const auto c = NormalizedCitationMatrix::from_weights(w);
        const Eigen::VectorXd oracle = unit_eigenvector_oracle(c.weights);
        const Eigen::Vector3d expected(1.0, 0.75, 0.5);
        check.require((oracle - expected).lpNorm<Eigen::Infinity>() <= 1e-12,
                      "oracle disagrees with the hand elimination");
        const ScoreResult result = solve(c);
        check.require(std::abs(result.lambda - 1.0) <= 1e-10, "lambda is not 1");
        check.require((result.scores - expected).lpNorm<Eigen::Infinity>() <= 1e-9,
                      "solver scores deviate from (1, 0.75, 0.5)");
    });

    // 4. Reducible law on generated chained instances.
    criterion(4, "transient scores are exactly 0 and verification passes on >=100 "
                 "chained instances",
              [](Checker& check) {
                  std::mt19937_64 rng(404);
                  for (int trial = 0; trial < 100; ++trial) {
                      const auto inst = random_chained_single_recurrent(rng);
                      const NormalizedCitationMatrix c = normalize(inst.raw);
                      const StructureReport report = classify(c, scc_decompose(c));
                      check.require(report.classification ==
                                            Classification::ChainedReducible &&
                                        report.recurrent_classes.size() == 1,
                                    "trial " + std::to_string(trial) +
                                        ": generator produced the wrong shape");
                      const ScoreResult result = solve_scores(c, report, {});
                      for (int v : inst.transient_nodes) {
                          check.require(result.scores(v) == 0.0,
                                        "trial " + std::to_string(trial) +
                                            ": transient score not exactly 0");
                      }
                      for (int v : inst.recurrent_nodes) {
                          check.require(result.scores(v) > 0.0,
                                        "trial " + std::to_string(trial) +
                                            ": recurrent score not positive");
                      }
                      try {
                          const ReducibleDecomposition dec =
                              verify_reducible(c, report, result);
                          check.require(dec.omega.minCoeff() > 0.0, "omega not positive");
                          check.require(std::abs(dec.solvability) <= 1e-10,
                                        "solvability violated");
                          check.require(dec.recurrent_residual <= 1e-10,
                                        "recurrent block residual too large");
                      } catch (const std::exception& e) {
                          check.require(false, std::string("verification threw: ") + e.what());
                      }
                  }
              });

    // 5. Block-diagonal refusal through the CLI.
    criterion(5, "disjoint components exit 2 with per-class vectors scaled to max 1",
              [](Checker& check) {
                  const RunResult plain =
                      run_cli("rank " + fixture("disjoint.csv") + " --format json");
                  check.require(plain.exit_code == 2, "exit code without --per-class");
                  const json plain_doc = json::parse(plain.output, nullptr, false);
                  check.require(!plain_doc.is_discarded() && plain_doc["scores"].empty(),
                                "a merged ranking was emitted without --per-class");
                  check.require(plain_doc["unique"] == false, "unique flag wrong");

                  const RunResult detailed = run_cli("rank " + fixture("disjoint.csv") +
                                                     " --format json --per-class");
                  check.require(detailed.exit_code == 2, "exit code with --per-class");
                  const json doc = json::parse(detailed.output, nullptr, false);
                  check.require(!doc.is_discarded(), "per-class output is not JSON");
                  std::set<int> classes;
                  std::map<int, double> class_max;
                  for (const auto& row : doc["scores"]) {
                      const int cls = row["class"].get<int>();
                      classes.insert(cls);
                      class_max[cls] =
                          std::max(class_max[cls], row["score"].get<double>());
                  }
                  check.require(classes.size() == 2, "expected two recurrent classes");
                  for (const auto& [cls, max] : class_max) {
                      check.require(max == 1.0, "class " + std::to_string(cls) +
                                                    " not normalized to max 1");
                  }
              });

    // 6. Permutation equivariance and per-citer count scaling.
    criterion(6, "scores are permutation-equivariant (1e-10) and scale-invariant (1e-12)",
              [](Checker& check) {
                  std::mt19937_64 rng(606);
                  const SolveOptions tight{1e-13, 200000};
                  for (int trial = 0; trial < 100; ++trial) {
                      const int n = 2 + static_cast<int>(rng() % 7);
                      RawCitationMatrix raw = random_irreducible_raw(rng, n);
                      const NormalizedCitationMatrix c = normalize(raw);
                      const ScoreResult base = solve(c, tight);

                      const std::vector<int> sigma = random_permutation(rng, n);
                      const ScoreResult permuted = solve(permute(c, sigma), tight);
                      double worst = 0.0;
                      for (int v = 0; v < n; ++v) {
                          worst = std::max(
                              worst,
                              std::abs(permuted.scores(sigma[static_cast<std::size_t>(v)]) -
                                       base.scores(v)));
                      }
                      check.require(worst <= 1e-10,
                                    "trial " + std::to_string(trial) +
                                        ": permutation deviation " + std::to_string(worst));

                      const int column = static_cast<int>(rng() % static_cast<unsigned long>(n));
                      const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 9);
                      raw.counts.col(column) *= k;
                      const ScoreResult scaled = solve(normalize(raw), tight);
                      const double drift =
                          (scaled.scores - base.scores).lpNorm<Eigen::Infinity>();
                      check.require(drift <= 1e-12, "trial " + std::to_string(trial) +
                                                        ": scaling drift " +
                                                        std::to_string(drift));
                  }
              });

    // 7. Periodic matrices converge under the shifted iteration.
    criterion(7, "2-cycle and 3-cycle converge to residual <= 1e-12 in < 1000 iterations",
              [](Checker& check) {
                  Eigen::MatrixXd two(2, 2);
                  two << 0, 1, 1, 0;
                  const EigenPair p2 = dominant_eigenpair(two, 1e-12, 1000);
                  check.require(p2.residual <= 1e-12, "2-cycle residual");
                  check.require(p2.iterations < 1000, "2-cycle iteration count");
                  check.require(std::abs(p2.lambda - 1.0) <= 1e-10, "2-cycle lambda");

                  Eigen::MatrixXd three(3, 3);
                  three << 0, 0, 1,
                           1, 0, 0,
                           0, 1, 0;
                  const EigenPair p3 = dominant_eigenpair(three, 1e-12, 1000);
                  check.require(p3.residual <= 1e-12, "3-cycle residual");
                  check.require(p3.iterations < 1000, "3-cycle iteration count");
                  check.require(std::abs(p3.lambda - 1.0) <= 1e-10, "3-cycle lambda");
              });

    // 8. CLI determinism, schema conformance, and the exit-code contract.
    criterion(8, "fixtures render byte-identical schema-conformant JSON; exits {0,1,2} seen",
              [](Checker& check) {
                  struct Case {
                      std::string args;
                      int expected_exit;
                  };
                  const std::vector<Case> cases = {
                      {"rank " + fixture("worked3.csv") + " --format json", 0},
                      {"rank " + fixture("cycle2.csv") + " --format json", 0},
                      {"rank " + fixture("cycle3.csv") + " --format json", 0},
                      {"rank " + fixture("reducible.csv") + " --format json", 0},
                      {"rank " + fixture("isolated.csv") + " --format json", 0},
                      {"rank " + fixture("disjoint.csv") + " --format json", 2},
                      {"rank " + fixture("disjoint.csv") + " --format json --per-class", 2},
                      {"rank " + fixture("league_round_robin.csv") +
                           " --mode league --format json",
                       0},
                      {"rank " + fixture("league_undefeated.csv") +
                           " --mode league --format json",
                       1},
                      {"rank " + fixture("selfcite.csv") + " --format json", 1},
                      {"rank " + fixture("deadchain.csv") + " --format json", 1},
                      {"rank " + fixture("malformed.csv") + " --format json", 1},
                      {"analyze " + fixture("reducible.csv") + " --format json", 0},
                      {"validate " + fixture("disjoint.csv") + " --format json", 2},
                  };
                  std::set<int> exits;
                  for (const Case& c : cases) {
                      const RunResult first = run_cli(c.args);
                      const RunResult second = run_cli(c.args);
                      check.require(first.exit_code == c.expected_exit,
                                    c.args + ": exit " + std::to_string(first.exit_code) +
                                        ", expected " + std::to_string(c.expected_exit));
                      check.require(first.output == second.output,
                                    c.args + ": output differs between runs");
                      check.require(conforms_to_schema(first.output),
                                    c.args + ": output violates the documented schema");
                      exits.insert(first.exit_code);
                  }
                  check.require(exits.count(0) == 1 && exits.count(1) == 1 &&
                                    exits.count(2) == 1,
                                "exit codes 0, 1 and 2 were not all exercised");
              });

    if (g_failed_criteria > 0) {
        std::cout << g_failed_criteria << " criterion/criteria FAILED\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
