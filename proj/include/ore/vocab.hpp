// vocab.hpp -- the vocabulary constants this toolkit relies on.
// Namespace IRIs are verbatim, including the singular
// "dc/element/1.1" spelling; see VOCABULARY.md.
#pragma once

#include <string>

#include "ore/iri.hpp"

namespace ore::vocab {

// Namespace prefixes.
inline constexpr std::string_view dc_ns = "http://purl.org/dc/element/1.1/";
inline constexpr std::string_view dcterms_ns = "http://purl.org/dc/terms/";
inline constexpr std::string_view ore_ns = "http://www.openarchives.org/ore/terms/";
inline constexpr std::string_view owl_ns = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

// Commonly deployed Dublin Core elements namespace, accepted on input
// and rewritten to dc_ns at triple construction.
inline constexpr std::string_view dc_ns_deployed = "http://purl.org/dc/elements/1.1/";

// Classes.
inline const Iri resource_map{"http://www.openarchives.org/ore/terms/ResourceMap"};
inline const Iri aggregation{"http://www.openarchives.org/ore/terms/Aggregation"};
inline const Iri aggregated_resource{"http://www.openarchives.org/ore/terms/AggregatedResource"};

// Predicates.
inline const Iri describes{"http://www.openarchives.org/ore/terms/describes"};
inline const Iri aggregates{"http://www.openarchives.org/ore/terms/aggregates"};
inline const Iri is_aggregated_by{"http://www.openarchives.org/ore/terms/isAggregatedBy"};
inline const Iri also_in_resource_map{"http://www.openarchives.org/ore/terms/alsoInResourceMap"};
inline const Iri from_resource_map{"http://www.openarchives.org/ore/terms/fromResourceMap"};
inline const Iri analogous_to{"http://www.openarchives.org/ore/terms/analogousTo"};
inline const Iri same_as{"http://www.w3.org/2002/07/owl#sameAs"};
inline const Iri rdf_type{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"};
inline const Iri dc_creator{"http://purl.org/dc/element/1.1/creator"};
inline const Iri dc_rights{"http://purl.org/dc/element/1.1/rights"};
inline const Iri dcterms_modified{"http://purl.org/dc/terms/modified"};
inline const Iri dcterms_created{"http://purl.org/dc/terms/created"};

// XSD datatype recognized by dateTime normalization.
inline const Iri xsd_datetime{"http://www.w3.org/2001/XMLSchema#dateTime"};

/// Markdown table of the namespace prefixes and every constant above;
/// VOCABULARY.md is this function's output, checked by a test.
std::string vocabulary_markdown();

} // namespace ore::vocab
