#ifndef NGSO_ERRORS_HPP
#define NGSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ngso {

// Invalid domain-type field values (aggregated where noted).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown catalog entry; message lists the available names.
struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; message carries the line number where applicable.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical non-convergence (should not occur for e <= 0.95).
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke an operation precondition that is part of the API contract.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace ngso

#endif
