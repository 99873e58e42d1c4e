// error.hpp -- single exception type carrying a machine-checkable kind.
#pragma once

#include <stdexcept>
#include <string>

namespace ore {

enum class ErrorKind {
    InvalidIri,
    FragmentPresent,
    NotAnAggregationUri,
    MalformedDateTime,
    InvalidCreator,
    ValidationFailed,
    MalformedXml,
    MissingSelfLink,
    MissingDescribesLink,
    DescribesBindingViolation,
    ParseError,
    AmbiguousGraphName,
    Transport,
    Decode,
    RemUriMismatch,
    UnknownAggregation,
    EmptyMembers,
    Io,
    Usage,
};

const char* to_string(ErrorKind kind) noexcept;

/// Thrown by every operation in this toolkit that can fail hard.
/// Recoverable problems (validation findings, skipped link-header
/// segments) are reported as data, not exceptions.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ore
