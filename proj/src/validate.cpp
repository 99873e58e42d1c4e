#include "ore/validate.hpp"

#include <json.hpp>

#include "ore/atom.hpp"
#include "ore/datetime.hpp"
#include "ore/error.hpp"
#include "ore/harvester.hpp"
#include "ore/vocab.hpp"

namespace ore {

bool ValidationReport::has(std::string_view code) const {
    for (const Finding& f : findings) {
        if (f.code == code) return true;
    }
    return false;
}

std::size_t ValidationReport::error_count() const {
    std::size_t n = 0;
    for (const Finding& f : findings) {
        if (f.severity == Severity::Error) ++n;
    }
    return n;
}

namespace {

void add(ValidationReport& report, std::string code, Severity severity,
         std::optional<Iri> subject, std::string message) {
    if (severity == Severity::Error) report.passed = false;
    report.findings.push_back(
        {std::move(code), severity, std::move(subject), std::move(message)});
}

bool well_formed_modified(const Term& object) {
    if (!object.is_literal()) return false;
    const Literal& lit = object.literal();
    if (lit.datatype) return false; // carried in plain form
    return is_datetime(lit.lexical);
}

} // namespace

ValidationReport validate(const ResourceMapGraph& g) {
    ValidationReport report;
    const Iri& rem = g.rem_uri();
    Iri agg = aggregation_uri(rem);

    if (!g.contains(Triple(rem, vocab::rdf_type, vocab::resource_map))) {
        add(report, "E-TYPE-REM", Severity::Error, rem,
            "missing triple typing the Resource Map as ore:ResourceMap");
    }
    if (!g.contains(Triple(agg, vocab::rdf_type, vocab::aggregation))) {
        add(report, "E-TYPE-AGG", Severity::Error, agg,
            "missing triple typing the Aggregation as ore:Aggregation");
    }

    auto describes = query(g, rem, vocab::describes, std::nullopt);
    if (describes.empty()) {
        add(report, "E-DESCRIBES", Severity::Error, rem, "missing ore:describes triple");
    } else if (describes.size() > 1) {
        add(report, "E-DESCRIBES", Severity::Error, rem,
            "a Resource Map describes exactly one Aggregation, found " +
                std::to_string(describes.size()) + " ore:describes triples");
    } else if (!describes[0].object.is_iri() || describes[0].object.iri() != agg) {
        add(report, "E-DESCRIBES", Severity::Error, rem,
            "ore:describes must bind to " + agg.str());
    }

    if (query(g, rem, vocab::dc_creator, std::nullopt).empty()) {
        add(report, "E-CREATOR-MISSING", Severity::Error, rem,
            "mandatory dc:creator element missing");
    }

    auto modified = query(g, rem, vocab::dcterms_modified, std::nullopt);
    if (modified.empty()) {
        add(report, "E-MODIFIED-MISSING", Severity::Error, rem,
            "mandatory dcterms:modified element missing");
    } else if (modified.size() > 1) {
        add(report, "E-MODIFIED-REPEATED", Severity::Error, rem,
            std::to_string(modified.size()) + " dcterms:modified triples, expected one");
    } else if (!well_formed_modified(modified[0].object)) {
        add(report, "E-MODIFIED-MALFORMED", Severity::Error, rem,
            "dcterms:modified must be a plain literal holding a zoned dateTime");
    }

    auto members = aggregated_resources(g);
    if (members.empty()) {
        add(report, "E-AGG-EMPTY", Severity::Error, agg,
            "the Aggregation enumerates no constituents");
    }
    if (members.count(agg) > 0) {
        add(report, "E-SELF-AGGREGATE", Severity::Error, agg,
            "an Aggregation is not its own constituent");
    }
    if (members.count(rem) > 0) {
        add(report, "W-REM-AGGREGATED", Severity::Warning, rem,
            "the Resource Map is listed among the resources it aggregates");
    }

    std::set<Iri> referenced; // objects of any ore:aggregates triple
    for (const Triple& t : g.triples()) {
        if (t.predicate != vocab::aggregates) continue;
        if (t.object.is_literal()) {
            add(report, "E-AGGREGATES-LITERAL", Severity::Error, t.subject,
                "ore:aggregates object must be a resource, found literal \"" +
                    t.object.literal().lexical + "\"");
        } else {
            referenced.insert(t.object.iri());
        }
    }
    for (const Triple& t : g.triples()) {
        if (t.predicate == vocab::rdf_type && t.object.is_iri() &&
            t.object.iri() == vocab::aggregated_resource && referenced.count(t.subject) == 0) {
            add(report, "W-ORPHAN-AR-TYPE", Severity::Warning, t.subject,
                "typed ore:AggregatedResource but no ore:aggregates triple references it");
        }
    }

    if (query(g, rem, vocab::dcterms_created, std::nullopt).size() > 1) {
        add(report, "W-CREATED-REPEATED", Severity::Warning, rem,
            "optional dcterms:created element repeated");
    }
    if (query(g, rem, vocab::dc_rights, std::nullopt).size() > 1) {
        add(report, "W-RIGHTS-REPEATED", Severity::Warning, rem,
            "optional dc:rights element repeated");
    }

    return report;
}

ValidationReport validate_online(const ResourceMapGraph& g, Fetcher& fetcher) {
    ValidationReport report = validate(g);

    harvest::Document doc;
    try {
        doc = harvest::fetch_document(fetcher, g.rem_uri());
    } catch (const Error& e) {
        add(report, "E-REM-NOT-DEREFERENCEABLE", Severity::Error, g.rem_uri(), e.what());
        return report;
    }
    if (doc.status < 200 || doc.status >= 300) {
        add(report, "E-REM-NOT-DEREFERENCEABLE", Severity::Error, g.rem_uri(),
            "GET returned status " + std::to_string(doc.status));
        return report;
    }

    try {
        harvest::Decoded decoded =
            harvest::decode_resource_map(doc.body, doc.media_type, doc.final_iri);
        const ResourceMapGraph& expected_view =
            decoded.form == harvest::SerializationForm::Atom
                ? atom::projection(g).kept
                : g;
        if (decoded.graph.rem_uri() != g.rem_uri() ||
            !graph_equal(decoded.graph, expected_view)) {
            add(report, "W-REM-CONTENT-MISMATCH", Severity::Warning, g.rem_uri(),
                "the document served at the Resource Map URI decodes to a different graph");
        }
    } catch (const Error& e) {
        add(report, "W-REM-CONTENT-MISMATCH", Severity::Warning, g.rem_uri(),
            std::string("served document did not decode: ") + e.what());
    }
    return report;
}

std::string to_text(const ValidationReport& report) {
    std::string out;
    for (const Finding& f : report.findings) {
        out += f.severity == Severity::Error ? "ERROR" : "WARNING";
        out += ' ';
        out += f.code;
        out += ' ';
        out += f.subject ? f.subject->str() : "-";
        out += ' ';
        out += f.message;
        out += '\n';
    }
    out += report.passed ? "PASSED" : "FAILED";
    out += " (" + std::to_string(report.error_count()) + " errors, " +
           std::to_string(report.findings.size() - report.error_count()) + " warnings)\n";
    return out;
}

std::string to_json(const ValidationReport& report) {
    nlohmann::json doc;
    doc["passed"] = report.passed;
    doc["findings"] = nlohmann::json::array();
    for (const Finding& f : report.findings) {
        nlohmann::json entry;
        entry["code"] = f.code;
        entry["severity"] = f.severity == Severity::Error ? "error" : "warning";
        if (f.subject) entry["subject"] = f.subject->str();
        entry["message"] = f.message;
        doc["findings"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

} // namespace ore
