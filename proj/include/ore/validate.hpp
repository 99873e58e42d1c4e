// validate.hpp -- conformance checking of Resource Map graphs,
// producing coded findings rather than thrown failures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ore/model.hpp"

namespace ore {

class Fetcher;

enum class Severity { Error, Warning };

/// One verdict. Codes are stable identifiers (e.g. E-MODIFIED-MISSING);
/// each maps to exactly one documented rule.
struct Finding {
    std::string code;
    Severity severity;
    std::optional<Iri> subject;
    std::string message;

    bool operator==(const Finding& other) const = default;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool passed = true; // true iff no finding has severity Error

    bool has(std::string_view code) const;
    std::size_t error_count() const;
};

/// Offline conformance check. Pure: same graph, identical report.
/// Unknown predicates from arbitrary vocabularies pass silently.
ValidationReport validate(const ResourceMapGraph& g);

/// Offline findings plus dereference checks: E-REM-NOT-DEREFERENCEABLE
/// when a GET on the graph's rem_uri fails, W-REM-CONTENT-MISMATCH when
/// the served document decodes to a different graph (compared against
/// the Atom-expressible projection when the served form is Atom).
/// Network trouble becomes a finding, never an exception.
ValidationReport validate_online(const ResourceMapGraph& g, Fetcher& fetcher);

/// Line-oriented rendering: `SEVERITY CODE subject message`, one
/// finding per line, then a PASSED/FAILED summary line.
std::string to_text(const ValidationReport& report);

/// Machine-readable JSON document for CI use.
std::string to_json(const ValidationReport& report);

} // namespace ore
