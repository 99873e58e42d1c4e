#include "ore/error.hpp"

namespace ore {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidIri: return "invalid-iri";
    case ErrorKind::FragmentPresent: return "fragment-present";
    case ErrorKind::NotAnAggregationUri: return "not-an-aggregation-uri";
    case ErrorKind::MalformedDateTime: return "malformed-datetime";
    case ErrorKind::InvalidCreator: return "invalid-creator";
    case ErrorKind::ValidationFailed: return "validation-failed";
    case ErrorKind::MalformedXml: return "malformed-xml";
    case ErrorKind::MissingSelfLink: return "missing-self-link";
    case ErrorKind::MissingDescribesLink: return "missing-describes-link";
    case ErrorKind::DescribesBindingViolation: return "describes-binding-violation";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::AmbiguousGraphName: return "ambiguous-graph-name";
    case ErrorKind::Transport: return "transport-error";
    case ErrorKind::Decode: return "decode-error";
    case ErrorKind::RemUriMismatch: return "rem-uri-mismatch";
    case ErrorKind::UnknownAggregation: return "unknown-aggregation";
    case ErrorKind::EmptyMembers: return "empty-members";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::Usage: return "usage-error";
    }
    return "error";
}

} // namespace ore
