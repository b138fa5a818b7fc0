#pragma once

#include <stdexcept>
#include <string>

namespace gaw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments do not conform to the group family they are used with.
struct FamilyMismatchError : Error {
    using Error::Error;
};

// Element lies outside the tabulated Cayley ball; enlarge the radius.
struct OutOfBallError : Error {
    using Error::Error;
};

// A configured element-count or similar cap was exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Generator images violate a defining relation of the source group.
struct RelationViolationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Cache file fails its integrity check (spec hash or layout mismatch).
struct CacheError : ParseError {
    using ParseError::ParseError;
};

// Truncation tail estimate exceeds the configured fraction of the value.
struct TailNotNegligibleError : Error {
    using Error::Error;
};

}  // namespace gaw
