#ifndef QEMHJ_ERRORS_HPP
#define QEMHJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qemhj {

// Error taxonomy. Every throwing path names the violated condition in the
// message so the CLI can forward it verbatim as a single "error:" line.

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatchError : std::runtime_error {
    explicit GridMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct AllZeroError : std::runtime_error {
    explicit AllZeroError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularNodeError : std::runtime_error {
    explicit SingularNodeError(const std::string& what) : std::runtime_error(what) {}
};

// Negative radicand in a residue/branch formula: parameters outside the
// solvable regime.
struct BranchError : std::runtime_error {
    explicit BranchError(const std::string& what) : std::runtime_error(what) {}
};

struct ConstraintError : std::runtime_error {
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

struct PositiveEnergyError : std::runtime_error {
    explicit PositiveEnergyError(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundError : std::runtime_error {
    explicit UnboundError(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeRadicandError : std::runtime_error {
    explicit NegativeRadicandError(const std::string& what) : std::runtime_error(what) {}
};

struct RecurrenceBreakdown : std::runtime_error {
    explicit RecurrenceBreakdown(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct RootFindingError : std::runtime_error {
    explicit RootFindingError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qemhj

#endif  // QEMHJ_ERRORS_HPP
