#pragma once

#include <stdexcept>
#include <string>

namespace rc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct EmptySeries : Error {
    using Error::Error;
};
struct NonzeroConstantTerm : Error {
    using Error::Error;
};
struct NotInvertibleAtOrigin : Error {
    using Error::Error;
};
struct BranchCutError : Error {
    using Error::Error;
};
struct BranchError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct DegenerateSeries : Error {
    using Error::Error;
};
struct DegenerateTable : Error {
    using Error::Error;
};
struct RootFindingFailure : Error {
    using Error::Error;
};
struct PlanMismatch : Error {
    using Error::Error;
};
struct UnsupportedCase : Error {
    using Error::Error;
};
struct ContourError : Error {
    using Error::Error;
};
struct PoleNotConverged : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace rc
