// model.hpp -- Resource Maps as named graphs, and the URI convention
// binding a Resource Map to the one Aggregation it describes.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ore/iri.hpp"

namespace ore {

/// A literal value: lexical form plus optional datatype. Absent
/// datatype means plain text. The lexical form survives every codec
/// byte-exactly; no language tags, by design.
struct Literal {
    std::string lexical;
    std::optional<Iri> datatype;

    auto operator<=>(const Literal& other) const = default;
};

/// Either an IRI or a literal, never both.
class Term {
public:
    Term(Iri iri) : value_(std::move(iri)) {}
    Term(Literal literal) : value_(std::move(literal)) {}

    bool is_iri() const noexcept { return std::holds_alternative<Iri>(value_); }
    bool is_literal() const noexcept { return !is_iri(); }
    const Iri& iri() const { return std::get<Iri>(value_); }
    const Literal& literal() const { return std::get<Literal>(value_); }

    auto operator<=>(const Term& other) const = default;

private:
    std::variant<Iri, Literal> value_;
};

/// One statement. Subject and predicate are always IRIs; there are no
/// blank nodes anywhere in this model, which keeps graph equality a
/// set comparison rather than an isomorphism check.
///
/// Construction canonicalizes predicates in the widely deployed
/// `http://purl.org/dc/elements/1.1/` namespace to the singular
/// `element` form this toolkit emits; both spellings are thereby
/// accepted on input and indistinguishable afterwards.
struct Triple {
    Triple(Iri s, Iri p, Term o);

    Iri subject;
    Iri predicate;
    Term object;

    auto operator<=>(const Triple& other) const = default;
};

/// A named graph: the Resource Map IRI plus the set of triples it
/// asserts. `rem_uri` never carries a fragment -- the fragment slot is
/// reserved for the `#aggregation` convention. Immutable after
/// construction; builder operations return new values.
class ResourceMapGraph {
public:
    explicit ResourceMapGraph(Iri rem_uri, std::set<Triple> triples = {});

    const Iri& rem_uri() const noexcept { return rem_uri_; }
    const std::set<Triple>& triples() const noexcept { return triples_; }
    std::size_t size() const noexcept { return triples_.size(); }
    bool contains(const Triple& t) const { return triples_.count(t) > 0; }

private:
    Iri rem_uri_;
    std::set<Triple> triples_;
};

/// Appends `#aggregation`. Errors with FragmentPresent when `rem`
/// already has a fragment, since that would break the one-Aggregation-
/// per-Resource-Map guarantee.
Iri aggregation_uri(const Iri& rem);

/// Inverse of aggregation_uri. Errors with NotAnAggregationUri when the
/// fragment is absent or anything other than `aggregation`.
Iri rem_uri_from_aggregation(const Iri& agg);

/// Builds the five bootstrap triples: both rdf:type assertions, the
/// describes link, the creator, and the (normalized) modification time.
/// `creator` must be an IRI or a plain literal; `modified` a plain
/// dateTime literal with an explicit zone.
ResourceMapGraph new_resource_map(const Iri& rem, const Term& creator, const Literal& modified);

/// Set insert; re-adding an existing triple is a no-op.
ResourceMapGraph add_triple(ResourceMapGraph g, Triple t);

/// Triples matching every bound position; all-unbound returns the
/// whole graph. Results come back in graph (sorted) order.
std::vector<Triple> query(const ResourceMapGraph& g, const std::optional<Iri>& subject,
                          const std::optional<Iri>& predicate,
                          const std::optional<Term>& object);

/// IRI objects of the aggregation's ore:aggregates triples. Literal
/// objects are skipped here; the validator reports them.
std::set<Iri> aggregated_resources(const ResourceMapGraph& g);

struct Equivalents {
    std::set<Iri> same_as;      // symmetric: r on either side
    std::set<Iri> analogous_to; // as asserted only; never substituted
};

/// Partitions equivalence assertions about `r`. Nothing in this toolkit
/// ever substitutes an analogous_to IRI for `r`.
Equivalents equivalents(const ResourceMapGraph& g, const Iri& r);

/// Canonical view of one triple: a dateTime-position literal value
/// (object of dcterms:modified / dcterms:created, or anything typed
/// xsd:dateTime) is rewritten to canonical UTC form. Codecs apply this
/// at parse time; lexical forms that do not parse are left byte-exact.
Triple normalize_triple(const Triple& t);

/// normalize_triple applied across the whole graph.
std::set<Triple> normalized_triples(const ResourceMapGraph& g);

/// True iff the graph names match and the triple sets are equal under
/// exact term equality after dateTime normalization.
bool graph_equal(const ResourceMapGraph& a, const ResourceMapGraph& b);

/// Triples of `a` (original lexical forms) absent from `b` under the
/// same normalized comparison graph_equal uses.
std::vector<Triple> triples_missing_from(const ResourceMapGraph& a, const ResourceMapGraph& b);

} // namespace ore
