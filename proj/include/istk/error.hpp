#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace istk {

enum class ErrorCode {
    ParseError,
    Io,
    NotSimple,
    Disconnected,
    UnknownVertex,
    NotSubgraph,
    NotTree,
    NotSpanning,
    NotApplicable,
    NoBranchpoint,
    PreconditionViolation,
    StaleCandidate,
    InvalidPair,
    InvalidTree,
    LiftBoundViolated,
    InternalContradiction,
    TooLarge,
    BadSpec,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raises InternalContradiction when an asserted property of the construction
// fails. These never fire on a correct implementation.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw Error(ErrorCode::InternalContradiction, what);
}

}  // namespace istk
