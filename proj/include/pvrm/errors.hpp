#pragma once

#include <stdexcept>
#include <string>

namespace pvrm {

// Exit codes used by the CLI; library code throws, the CLI maps.
enum ExitCode : int {
    kExitOk = 0,
    kExitDomain = 2,
    kExitPrecision = 3,
    kExitConsistency = 4,
};

// Invalid parameter combination, argument outside the supported domain.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation could not reach the requested accuracy (quadrature that
// stopped converging, series that would need more working precision,
// non-positive pivot in a positive-definite factorization).
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An identity that must hold exactly failed beyond rounding tolerance.
// Signals a corrupted internal state, not a user error.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pvrm
