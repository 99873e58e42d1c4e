#include "ore/vocab.hpp"

#include <sstream>

namespace ore::vocab {

std::string vocabulary_markdown() {
    std::ostringstream out;
    out << "# Vocabulary\n\n";
    out << "Namespace prefixes used throughout the toolkit:\n\n";
    out << "| Prefix | Namespace URI | Description |\n";
    out << "|--------|---------------|-------------|\n";
    out << "| dc | `" << dc_ns << "` | Dublin Core elements |\n";
    out << "| dcterms | `" << dcterms_ns << "` | Dublin Core terms |\n";
    out << "| ore | `" << ore_ns << "` | ORE vocabulary terms |\n";
    out << "| owl | `" << owl_ns << "` | OWL vocabulary terms |\n";
    out << "| rdf | `" << rdf_ns << "` | RDF vocabulary terms |\n";
    out << "\n";
    out << "The deployed Dublin Core namespace `" << dc_ns_deployed
        << "` is accepted on input and rewritten to the dc form above.\n";
    out << "\n## Classes\n\n";
    out << "| Constant | IRI |\n|----------|-----|\n";
    out << "| ore:ResourceMap | `" << resource_map.str() << "` |\n";
    out << "| ore:Aggregation | `" << aggregation.str() << "` |\n";
    out << "| ore:AggregatedResource | `" << aggregated_resource.str() << "` |\n";
    out << "\n## Predicates\n\n";
    out << "| Constant | IRI |\n|----------|-----|\n";
    out << "| ore:describes | `" << describes.str() << "` |\n";
    out << "| ore:aggregates | `" << aggregates.str() << "` |\n";
    out << "| ore:isAggregatedBy | `" << is_aggregated_by.str() << "` |\n";
    out << "| ore:alsoInResourceMap | `" << also_in_resource_map.str() << "` |\n";
    out << "| ore:fromResourceMap | `" << from_resource_map.str() << "` |\n";
    out << "| ore:analogousTo | `" << analogous_to.str() << "` |\n";
    out << "| owl:sameAs | `" << same_as.str() << "` |\n";
    out << "| rdf:type | `" << rdf_type.str() << "` |\n";
    out << "| dc:creator | `" << dc_creator.str() << "` |\n";
    out << "| dc:rights | `" << dc_rights.str() << "` |\n";
    out << "| dcterms:modified | `" << dcterms_modified.str() << "` |\n";
    out << "| dcterms:created | `" << dcterms_created.str() << "` |\n";
    return out.str();
}

} // namespace ore::vocab
