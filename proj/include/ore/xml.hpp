// xml.hpp -- a small namespace-aware XML reader, just enough for Atom
// feeds and sitemaps. Not a general-purpose XML library: no DTD
// processing, no mixed-content fidelity, elements carry their resolved
// namespace URI plus local name.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ore::xml {

struct Attribute {
    std::string ns;    // resolved namespace URI; empty for unprefixed attributes
    std::string local;
    std::string value;
};

struct Element {
    std::string ns; // resolved namespace URI; empty when none is in scope
    std::string local;
    std::vector<Attribute> attributes;
    std::vector<Element> children;
    std::string text; // concatenated character data directly inside this element

    const Element* first(std::string_view ns_uri, std::string_view local_name) const;
    std::vector<const Element*> all(std::string_view ns_uri, std::string_view local_name) const;
    /// Value of an unprefixed attribute.
    std::optional<std::string> attribute(std::string_view local_name) const;
    std::optional<std::string> attribute_ns(std::string_view ns_uri,
                                            std::string_view local_name) const;
};

/// Parses a complete document and returns the root element. Throws
/// Error{MalformedXml} with a line number on anything unwell-formed.
Element parse(std::string_view bytes);

/// Escaping helpers shared by the writers. Text escapes &, <, > and
/// carriage return; attribute values additionally escape quotes.
std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

/// True when `s` can be carried in XML 1.0 character data at all
/// (no control characters other than tab, LF, CR).
bool representable_text(std::string_view s);

/// True when `s` is usable as an XML element name part (NCName).
bool is_ncname(std::string_view s);

} // namespace ore::xml
