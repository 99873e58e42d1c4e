// ntriples.hpp -- line-oriented full-fidelity serialization. The one
// format in this toolkit that loses nothing, used as the reference
// side of every round-trip check.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ore/model.hpp"

namespace ore::ntriples {

/// One `<s> <p> <o> .` line per triple, lines sorted lexicographically,
/// preceded by a `# resourcemap: <uri>` comment carrying the graph name
/// (the plain triple format has no graph-name slot of its own).
/// Byte-deterministic: serializing the same graph twice yields
/// identical output.
std::string to_ntriples(const ResourceMapGraph& g);

/// Parses the grammar above. The graph name comes from the header
/// comment, else from `rem_override`, else is inferred as the subject
/// of the unique ore:describes triple. Throws ParseError with a line
/// number, or AmbiguousGraphName when no naming route applies.
ResourceMapGraph from_ntriples(std::string_view text,
                               const std::optional<Iri>& rem_override = std::nullopt);

/// Display-only pretty printer using the standard prefix table.
/// Never a parse source.
std::string to_display(const ResourceMapGraph& g);

} // namespace ore::ntriples
