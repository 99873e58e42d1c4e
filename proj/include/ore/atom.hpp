// atom.hpp -- bidirectional mapping between Resource Map graphs and
// their Atom Syndication Format serialization.
//
// A Resource Map maps to a feed, each Aggregated Resource to an entry.
// The feed's self link carries the Resource Map URI, the describes
// link the Aggregation URI. Feed and entry ids/titles are minted and
// produce no triples when parsed. Triples the format cannot carry
// (foreign subjects, Aggregated Resources in object position) are
// returned in a dropped list rather than silently lost.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ore/model.hpp"

namespace ore::atom {

inline constexpr std::string_view kMediaType = "application/atom+xml";
inline constexpr std::string_view kAtomNs = "http://www.w3.org/2005/Atom";
// Category scheme as printed in the reference serialization (no
// trailing slash, unlike the vocabulary namespace).
inline constexpr std::string_view kCategoryScheme = "http://www.openarchives.org/ore/terms";

/// Minting scheme for the Atom-required ids and titles. Minted ids
/// must be deterministic, injective over their inputs, and never equal
/// to any Resource Map, Aggregation, or Aggregated Resource URI.
struct AtomProfile {
    std::function<std::string(const Iri& rem)> feed_id_minter;
    std::function<std::string(const Iri& rem, const Iri& resource)> entry_id_minter;
    std::string feed_title_prefix = "Resource Map ";
    std::string entry_title_prefix = "Aggregated Resource ";
};

/// tag:-scheme minting derived from the Resource Map authority, with
/// the full URI percent-encoded into the specific part so distinct
/// inputs can never collide.
AtomProfile default_profile();

struct Projection {
    ResourceMapGraph kept;       // the Atom-expressible subset
    std::vector<Triple> dropped; // everything the format cannot carry
};

/// Partitions a graph into what to_atom will carry and what it will
/// drop. Pure; usable on graphs that would fail to_atom's validation
/// precondition.
Projection projection(const ResourceMapGraph& g);

struct Serialized {
    std::string bytes;
    std::vector<Triple> dropped;
};

/// Serializes. Requires the graph to pass offline validation with zero
/// errors; throws ValidationFailed otherwise. Output is deterministic:
/// entries in lexicographic Aggregated Resource order, byte-identical
/// across repeated calls.
Serialized to_atom(const ResourceMapGraph& g, const AtomProfile& profile = default_profile());

struct Decoded {
    ResourceMapGraph graph;
    std::optional<Iri> feed_id; // minted; no model correspondence
    std::vector<std::string> warnings;
};

/// Parses an Atom document into a graph. Relative hrefs resolve
/// against `base` (or an xml:base attribute on the feed). Throws
/// MalformedXml, MissingSelfLink, MissingDescribesLink, or
/// DescribesBindingViolation.
Decoded decode(std::string_view bytes, const std::optional<Iri>& base = std::nullopt);

inline ResourceMapGraph from_atom(std::string_view bytes,
                                  const std::optional<Iri>& base = std::nullopt) {
    return decode(bytes, base).graph;
}

} // namespace ore::atom
