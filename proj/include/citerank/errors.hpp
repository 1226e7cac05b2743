#ifndef CITERANK_ERRORS_HPP
#define CITERANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace citerank {

/// Bad caller input: malformed edges, non-positive counts, invalid permutations.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A line in an edge file could not be parsed. Carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::string path, long line, const std::string& what)
        : InputError(path + ":" + std::to_string(line) + ": " + what),
          path_(std::move(path)),
          line_(line) {}

    const std::string& path() const noexcept { return path_; }
    long line() const noexcept { return line_; }

private:
    std::string path_;
    long line_;
};

/// The iteration did not reach the requested residual within max_iter steps.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_residual, long iterations)
        : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}

    double last_residual() const noexcept { return last_residual_; }
    long iterations() const noexcept { return iterations_; }

private:
    double last_residual_;
    long iterations_;
};

/// The graph has no strongly connected class that retains weight, so no
/// score vector exists: every node is either a dead sink (cites no one)
/// or drains all of its weight toward dead sinks.
class NoRankableStructure : public std::runtime_error {
public:
    explicit NoRankableStructure(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check between two quantities that must agree failed. This means
/// a bug in the solver or a hand-forged structure report, not bad user data.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace citerank

#endif
