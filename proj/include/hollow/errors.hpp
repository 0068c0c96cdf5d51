#ifndef HOLLOW_ERRORS_HPP
#define HOLLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hollow {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments violate a documented precondition.
struct InvalidArgumentError : Error {
    using Error::Error;
};

// X and Y overlap where disjointness is required.
struct OverlappingSetsError : InvalidArgumentError {
    using InvalidArgumentError::InvalidArgumentError;
};

// A search exhausted its node budget before completing.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Operation requires a connected graph.
struct DisconnectedInputError : Error {
    using Error::Error;
};

// No component of G minus the terminals sees all three of them.
struct NoConnectorError : Error {
    using Error::Error;
};

// A set produced by the star-to-clique construction failed the clique
// check, i.e. the sparseness hypothesis is violated.
struct NotSparseError : Error {
    using Error::Error;
};

// No component of weight > 1/2 (or a tie) when forming a canonical
// two-clique separation.
struct NotUnbalancedError : Error {
    using Error::Error;
};

// Two separations handed to the central-bag builder cross.
struct CrossingPairsError : Error {
    using Error::Error;
};

// No marker path with interior in A*(K1,K2) exists.
struct NoMarkerPathError : Error {
    using Error::Error;
};

// Graph exceeds the exact-oracle size cap.
struct SizeCapError : Error {
    using Error::Error;
};

// A pipeline hypothesis failed; `stage` names which one.
struct HypothesisViolatedError : Error {
    std::string stage;
    HypothesisViolatedError(std::string stage_, const std::string& what_)
        : Error(what_), stage(std::move(stage_)) {}
};

// Malformed graph or weight input; `offset` is the byte position.
struct ParseError : Error {
    std::size_t offset;
    ParseError(std::size_t offset_, const std::string& what_)
        : Error(what_), offset(offset_) {}
};

}  // namespace hollow

#endif
