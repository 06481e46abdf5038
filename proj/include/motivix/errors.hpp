#pragma once

#include <stdexcept>
#include <string>

namespace motivix {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct LatticeError : Error { using Error::Error; };
struct UnsupportedQuery : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
// Theorem hypothesis unmet (some proper exponent below 4). Derives from
// PreconditionError so callers that only guard preconditions still catch it.
struct HypothesisError : PreconditionError { using PreconditionError::PreconditionError; };
struct CandidateError : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct ReductionError : Error { using Error::Error; };
struct OracleError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace motivix
