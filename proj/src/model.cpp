#include "ore/model.hpp"

#include <algorithm>

#include "ore/datetime.hpp"
#include "ore/error.hpp"
#include "ore/vocab.hpp"

namespace ore {

namespace {

Iri canonical_predicate(Iri p) {
    const auto& s = p.str();
    if (s.rfind(vocab::dc_ns_deployed, 0) == 0) {
        return Iri(std::string(vocab::dc_ns) + s.substr(vocab::dc_ns_deployed.size()));
    }
    return p;
}

bool datetime_position(const Iri& predicate) {
    return predicate == vocab::dcterms_modified || predicate == vocab::dcterms_created;
}

} // namespace

Triple normalize_triple(const Triple& t) {
    if (!t.object.is_literal()) return t;
    const Literal& lit = t.object.literal();
    bool typed_datetime = lit.datatype && *lit.datatype == vocab::xsd_datetime;
    if (!typed_datetime && !datetime_position(t.predicate)) return t;
    auto canonical = normalize_datetime(lit.lexical);
    if (!canonical) return t;
    return Triple(t.subject, t.predicate, Literal{*canonical, lit.datatype});
}

Triple::Triple(Iri s, Iri p, Term o)
    : subject(std::move(s)), predicate(canonical_predicate(std::move(p))), object(std::move(o)) {}

ResourceMapGraph::ResourceMapGraph(Iri rem_uri, std::set<Triple> triples)
    : rem_uri_(std::move(rem_uri)), triples_(std::move(triples)) {
    if (rem_uri_.has_fragment()) {
        throw Error(ErrorKind::FragmentPresent,
                    "Resource Map URI must not carry a fragment: " + rem_uri_.str());
    }
}

Iri aggregation_uri(const Iri& rem) {
    if (rem.has_fragment()) {
        throw Error(ErrorKind::FragmentPresent,
                    "cannot derive an Aggregation URI from " + rem.str() +
                        ": fragment already present");
    }
    return rem.with_fragment("aggregation");
}

Iri rem_uri_from_aggregation(const Iri& agg) {
    auto fragment = agg.fragment();
    if (!fragment || *fragment != "aggregation") {
        throw Error(ErrorKind::NotAnAggregationUri,
                    agg.str() + " does not end in '#aggregation'");
    }
    return agg.without_fragment();
}

ResourceMapGraph new_resource_map(const Iri& rem, const Term& creator, const Literal& modified) {
    if (rem.has_fragment()) {
        throw Error(ErrorKind::FragmentPresent, "Resource Map URI has a fragment: " + rem.str());
    }
    if (creator.is_literal() && creator.literal().datatype) {
        throw Error(ErrorKind::InvalidCreator, "creator must be an IRI or a plain literal");
    }
    if (modified.datatype) {
        throw Error(ErrorKind::MalformedDateTime,
                    "dateTime literals are carried in plain form in this toolkit");
    }
    auto canonical = normalize_datetime(modified.lexical);
    if (!canonical) {
        throw Error(ErrorKind::MalformedDateTime,
                    "not a zoned dateTime: '" + modified.lexical + "'");
    }

    Iri agg = aggregation_uri(rem);
    std::set<Triple> triples;
    triples.emplace(rem, vocab::rdf_type, vocab::resource_map);
    triples.emplace(agg, vocab::rdf_type, vocab::aggregation);
    triples.emplace(rem, vocab::describes, agg);
    triples.emplace(rem, vocab::dc_creator, creator);
    triples.emplace(rem, vocab::dcterms_modified, Literal{*canonical, std::nullopt});
    return ResourceMapGraph(rem, std::move(triples));
}

ResourceMapGraph add_triple(ResourceMapGraph g, Triple t) {
    std::set<Triple> triples = g.triples();
    triples.insert(std::move(t));
    return ResourceMapGraph(g.rem_uri(), std::move(triples));
}

std::vector<Triple> query(const ResourceMapGraph& g, const std::optional<Iri>& subject,
                          const std::optional<Iri>& predicate,
                          const std::optional<Term>& object) {
    std::vector<Triple> matches;
    for (const Triple& t : g.triples()) {
        if (subject && t.subject != *subject) continue;
        if (predicate && t.predicate != *predicate) continue;
        if (object && t.object != *object) continue;
        matches.push_back(t);
    }
    return matches;
}

std::set<Iri> aggregated_resources(const ResourceMapGraph& g) {
    Iri agg = aggregation_uri(g.rem_uri());
    std::set<Iri> resources;
    for (const Triple& t : g.triples()) {
        if (t.subject == agg && t.predicate == vocab::aggregates && t.object.is_iri()) {
            resources.insert(t.object.iri());
        }
    }
    return resources;
}

Equivalents equivalents(const ResourceMapGraph& g, const Iri& r) {
    Equivalents result;
    for (const Triple& t : g.triples()) {
        if (t.predicate == vocab::same_as && t.object.is_iri()) {
            if (t.subject == r) result.same_as.insert(t.object.iri());
            if (t.object.iri() == r) result.same_as.insert(t.subject);
        } else if (t.predicate == vocab::analogous_to && t.subject == r && t.object.is_iri()) {
            result.analogous_to.insert(t.object.iri());
        }
    }
    return result;
}

std::set<Triple> normalized_triples(const ResourceMapGraph& g) {
    std::set<Triple> normalized;
    for (const Triple& t : g.triples()) normalized.insert(normalize_triple(t));
    return normalized;
}

bool graph_equal(const ResourceMapGraph& a, const ResourceMapGraph& b) {
    return a.rem_uri() == b.rem_uri() && normalized_triples(a) == normalized_triples(b);
}

std::vector<Triple> triples_missing_from(const ResourceMapGraph& a, const ResourceMapGraph& b) {
    std::set<Triple> present = normalized_triples(b);
    std::vector<Triple> missing;
    for (const Triple& t : a.triples()) {
        if (present.count(normalize_triple(t)) == 0) missing.push_back(t);
    }
    return missing;
}

} // namespace ore
