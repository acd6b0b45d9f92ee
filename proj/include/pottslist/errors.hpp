#pragma once

#include <stdexcept>
#include <string>

namespace pottslist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (JSON, literals, flags). The CLI maps this to exit status 2.
struct ParseError : Error {
    using Error::Error;
};

// Everything below is a precondition or cap violation (CLI exit status 3).
struct PreconditionError : Error {
    using Error::Error;
};

struct InvalidWeight : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct UnknownEdge : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct UnknownVertex : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ContractLoop : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct SizeError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct IncompleteValuation : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct DecompositionError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct AntiferroModeError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct CoverageError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct SpinOutOfRange : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct InvalidDimensions : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct MissingCoordinates : PreconditionError {
    using PreconditionError::PreconditionError;
};

}  // namespace pottslist
