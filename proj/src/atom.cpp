#include "ore/atom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ore/error.hpp"
#include "ore/validate.hpp"
#include "ore/vocab.hpp"
#include "ore/xml.hpp"

namespace ore::atom {

namespace {

constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
// ORE registered no IANA rel for "describes"; emit the bare token and
// accept an IRI-valued form as well.
constexpr std::string_view kDescribesRelIri =
    "http://www.openarchives.org/ore/terms/describes";

std::string percent_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || c == '.' || c == '_' || c == '~' || c == '-') {
            out += c;
        } else {
            out += '%';
            out += hex[u >> 4];
            out += hex[u & 0xF];
        }
    }
    return out;
}

// Splits a predicate IRI into a namespace and an XML-expressible local
// name at the last '#' or '/'. Empty result means inexpressible.
std::pair<std::string, std::string> split_predicate(const Iri& predicate) {
    const std::string& s = predicate.str();
    auto cut = s.find_last_of("#/");
    if (cut == std::string::npos || cut + 1 >= s.size()) return {};
    std::string ns = s.substr(0, cut + 1);
    std::string local = s.substr(cut + 1);
    if (!xml::is_ncname(local) || !is_valid_iri(ns)) return {};
    return {ns, local};
}

struct Structural {
    Iri rem;
    Iri agg;
    std::set<Iri> resources;
    std::vector<Term> creators; // IRIs and plain literals, in set order
    std::optional<std::string> modified;
};

// Everything the feed skeleton itself expresses; the remainder rides
// as extension elements or is dropped.
bool is_structural(const Structural& s, const Triple& t) {
    if (t.subject == s.rem && t.predicate == vocab::rdf_type && t.object.is_iri() &&
        t.object.iri() == vocab::resource_map) {
        return true;
    }
    if (t.subject == s.agg && t.predicate == vocab::rdf_type && t.object.is_iri() &&
        t.object.iri() == vocab::aggregation) {
        return true;
    }
    if (t.subject == s.rem && t.predicate == vocab::describes && t.object.is_iri() &&
        t.object.iri() == s.agg) {
        return true;
    }
    if (t.subject == s.rem && t.predicate == vocab::dc_creator) {
        if (t.object.is_iri()) return true;
        const Literal& lit = t.object.literal();
        return !lit.datatype && xml::representable_text(lit.lexical);
    }
    if (t.subject == s.rem && t.predicate == vocab::dcterms_modified && t.object.is_literal() &&
        !t.object.literal().datatype) {
        return true;
    }
    if (t.subject == s.agg && t.predicate == vocab::aggregates && t.object.is_iri()) {
        return true;
    }
    return false;
}

bool expressible_extension(const Structural& s, const Triple& t) {
    bool family_subject = t.subject == s.rem || t.subject == s.agg ||
                          s.resources.count(t.subject) > 0;
    if (!family_subject) return false;
    if (t.object.is_iri() && s.resources.count(t.object.iri()) > 0) return false;
    if (split_predicate(t.predicate).second.empty()) return false;
    if (t.object.is_literal() && !xml::representable_text(t.object.literal().lexical)) {
        return false;
    }
    return true;
}

Structural extract_structural(const ResourceMapGraph& g) {
    Structural s{g.rem_uri(), aggregation_uri(g.rem_uri()), aggregated_resources(g), {}, {}};
    for (const Triple& t : g.triples()) {
        if (t.subject != s.rem) continue;
        if (t.predicate == vocab::dc_creator) {
            if (t.object.is_iri() ||
                (!t.object.literal().datatype &&
                 xml::representable_text(t.object.literal().lexical))) {
                s.creators.push_back(t.object);
            }
        } else if (t.predicate == vocab::dcterms_modified && t.object.is_literal() &&
                   !t.object.literal().datatype && !s.modified) {
            s.modified = t.object.literal().lexical;
        }
    }
    return s;
}

// ---------------------------------------------------------------- writer

struct NamespaceTable {
    // namespace URI -> prefix
    std::map<std::string, std::string> prefixes;

    std::string prefix_for(const std::string& ns) const { return prefixes.at(ns); }
};

NamespaceTable assign_prefixes(const std::set<std::string>& needed) {
    NamespaceTable table;
    int counter = 1;
    for (const std::string& ns : needed) {
        if (ns == vocab::dc_ns) table.prefixes[ns] = "dc";
        else if (ns == vocab::dcterms_ns) table.prefixes[ns] = "dcterms";
        else if (ns == vocab::ore_ns) table.prefixes[ns] = "ore";
        else if (ns == vocab::owl_ns) table.prefixes[ns] = "owl";
        else if (ns == kRdfNs) table.prefixes[ns] = "rdf";
        else table.prefixes[ns] = "ns" + std::to_string(counter++);
    }
    return table;
}

void write_extension(std::ostringstream& out, const std::string& indent,
                     const NamespaceTable& table, const Triple& t,
                     const std::optional<Iri>& about) {
    auto [ns, local] = split_predicate(t.predicate);
    std::string tag = table.prefix_for(ns) + ":" + local;
    out << indent << "<" << tag;
    if (about) out << " about=\"" << xml::escape_attribute(about->str()) << "\"";
    if (t.object.is_iri()) {
        out << " rdf:resource=\"" << xml::escape_attribute(t.object.iri().str()) << "\"/>\n";
        return;
    }
    const Literal& lit = t.object.literal();
    if (lit.datatype) {
        out << " rdf:datatype=\"" << xml::escape_attribute(lit.datatype->str()) << "\"";
    }
    out << ">" << xml::escape_text(lit.lexical) << "</" << tag << ">\n";
}

std::string mint_free_of(std::string id, const Structural& s) {
    auto taken = [&](const std::string& candidate) {
        if (candidate == s.rem.str() || candidate == s.agg.str()) return true;
        return s.resources.count(Iri(candidate)) > 0;
    };
    while (taken(id)) id += ";minted";
    return id;
}

} // namespace

AtomProfile default_profile() {
    AtomProfile profile;
    profile.feed_id_minter = [](const Iri& rem) {
        std::string host = rem.host();
        if (host.empty()) host = "ore.invalid";
        return "tag:" + host + ",2008:rem;" + percent_encode(rem.str());
    };
    profile.entry_id_minter = [](const Iri& rem, const Iri& resource) {
        std::string host = rem.host();
        if (host.empty()) host = "ore.invalid";
        return "tag:" + host + ",2008:ar;" + percent_encode(rem.str()) + ";" +
               percent_encode(resource.str());
    };
    return profile;
}

Projection projection(const ResourceMapGraph& g) {
    Structural s = extract_structural(g);
    std::set<Triple> kept;
    std::vector<Triple> dropped;
    for (const Triple& t : g.triples()) {
        if (is_structural(s, t) || expressible_extension(s, t)) {
            kept.insert(t);
        } else {
            dropped.push_back(t);
        }
    }
    return {ResourceMapGraph(g.rem_uri(), std::move(kept)), std::move(dropped)};
}

Serialized to_atom(const ResourceMapGraph& g, const AtomProfile& profile) {
    ValidationReport report = validate(g);
    if (!report.passed) {
        std::string codes;
        for (const Finding& f : report.findings) {
            if (f.severity == Severity::Error) codes += " " + f.code;
        }
        throw Error(ErrorKind::ValidationFailed,
                    "graph fails validation, cannot serialize:" + codes);
    }

    Structural s = extract_structural(g);
    Projection parts = projection(g);

    // Extension triples grouped by subject, in set (sorted) order.
    std::vector<Triple> rem_extras, agg_extras;
    std::map<Iri, std::vector<Triple>> entry_extras;
    for (const Triple& t : parts.kept.triples()) {
        if (is_structural(s, t)) continue;
        if (t.subject == s.rem) rem_extras.push_back(t);
        else if (t.subject == s.agg) agg_extras.push_back(t);
        else entry_extras[t.subject].push_back(t);
    }

    std::set<std::string> needed_ns;
    bool needs_rdf = false;
    auto note = [&](const Triple& t) {
        needed_ns.insert(split_predicate(t.predicate).first);
        if (t.object.is_iri() || t.object.literal().datatype) needs_rdf = true;
    };
    for (const Triple& t : rem_extras) note(t);
    for (const Triple& t : agg_extras) note(t);
    for (const auto& [subject, list] : entry_extras) {
        for (const Triple& t : list) note(t);
    }
    if (needs_rdf) needed_ns.insert(std::string(kRdfNs));
    NamespaceTable table = assign_prefixes(needed_ns);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
    out << "<feed xmlns=\"" << kAtomNs << "\"";
    for (const auto& [ns, prefix] : table.prefixes) {
        out << " xmlns:" << prefix << "=\"" << xml::escape_attribute(ns) << "\"";
    }
    out << ">\n";

    out << "  <id>" << xml::escape_text(mint_free_of(profile.feed_id_minter(s.rem), s))
        << "</id>\n";
    out << "  <link href=\"" << xml::escape_attribute(s.rem.str())
        << "\" rel=\"self\" type=\"" << kMediaType << "\"/>\n";
    out << "  <category scheme=\"" << kCategoryScheme << "\" term=\""
        << vocab::resource_map.str() << "\" label=\"Resource Map\"/>\n";
    out << "  <link rel=\"describes\" href=\"" << xml::escape_attribute(s.agg.str())
        << "\"/>\n";
    out << "  <title>" << xml::escape_text(profile.feed_title_prefix + s.rem.str())
        << "</title>\n";
    for (const Term& creator : s.creators) {
        out << "  <author>\n";
        if (creator.is_iri()) {
            out << "    <uri>" << xml::escape_text(creator.iri().str()) << "</uri>\n";
        } else {
            out << "    <name>" << xml::escape_text(creator.literal().lexical) << "</name>\n";
        }
        out << "  </author>\n";
    }
    out << "  <updated>" << xml::escape_text(*s.modified) << "</updated>\n";
    for (const Triple& t : rem_extras) write_extension(out, "  ", table, t, std::nullopt);
    for (const Triple& t : agg_extras) write_extension(out, "  ", table, t, s.agg);

    for (const Iri& resource : s.resources) { // lexicographic: set order
        out << "  <entry>\n";
        out << "    <id>"
            << xml::escape_text(mint_free_of(profile.entry_id_minter(s.rem, resource), s))
            << "</id>\n";
        out << "    <link href=\"" << xml::escape_attribute(resource.str())
            << "\" rel=\"alternate\"/>\n";
        out << "    <title>" << xml::escape_text(profile.entry_title_prefix + resource.str())
            << "</title>\n";
        // The model has no per-resource timestamp; Atom requires one.
        out << "    <updated>" << xml::escape_text(*s.modified) << "</updated>\n";
        auto extras = entry_extras.find(resource);
        if (extras != entry_extras.end()) {
            for (const Triple& t : extras->second) {
                write_extension(out, "    ", table, t, std::nullopt);
            }
        }
        out << "  </entry>\n";
    }
    out << "</feed>\n";

    return {out.str(), std::move(parts.dropped)};
}

// ---------------------------------------------------------------- reader

namespace {

class FeedReader {
public:
    FeedReader(const xml::Element& feed, std::optional<Iri> base)
        : feed_(feed), base_(std::move(base)) {
        if (auto xml_base = feed.attribute_ns("http://www.w3.org/XML/1998/namespace", "base")) {
            base_ = base_ ? resolve_reference(*base_, *xml_base) : Iri(*xml_base);
        }
    }

    Decoded read() {
        Iri rem = self_link();
        Iri described = describes_link();
        Iri agg = aggregation_uri(rem);
        if (described != agg) {
            throw Error(ErrorKind::DescribesBindingViolation,
                        "describes link " + described.str() + " is not " + agg.str());
        }

        std::set<Triple> triples;
        triples.emplace(rem, vocab::rdf_type, vocab::resource_map);
        triples.emplace(agg, vocab::rdf_type, vocab::aggregation);
        triples.emplace(rem, vocab::describes, agg);

        for (const xml::Element* author : feed_.all(kAtomNs, "author")) {
            // Only name or uri carry meaning; uri wins when both appear.
            if (const xml::Element* uri = author->first(kAtomNs, "uri")) {
                triples.emplace(rem, vocab::dc_creator, resolve(trim(uri->text)));
            } else if (const xml::Element* name = author->first(kAtomNs, "name")) {
                triples.emplace(rem, vocab::dc_creator,
                                Literal{name->text, std::nullopt});
            }
        }
        if (const xml::Element* updated = feed_.first(kAtomNs, "updated")) {
            triples.insert(normalize_triple(
                Triple(rem, vocab::dcterms_modified, Literal{trim(updated->text), std::nullopt})));
        }

        for (const xml::Element& child : feed_.children) {
            if (child.ns == kAtomNs) {
                if (child.local == "entry") read_entry(child, agg, triples);
                continue; // id, title, link, category, updated...: no triples
            }
            read_extension(child, rem, agg, /*feed_level=*/true, triples);
        }

        Decoded decoded{ResourceMapGraph(rem, std::move(triples)), std::nullopt,
                        std::move(warnings_)};
        if (const xml::Element* id = feed_.first(kAtomNs, "id")) {
            std::string value = trim(id->text);
            if (is_valid_iri(value)) decoded.feed_id = Iri(value);
        }
        return decoded;
    }

private:
    static std::string trim(std::string_view s) {
        size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return std::string(s.substr(b, e - b));
    }

    Iri resolve(const std::string& href) {
        if (is_valid_iri(href)) return Iri(href);
        if (base_) return resolve_reference(*base_, href);
        throw Error(ErrorKind::MalformedXml,
                    "relative reference '" + href + "' with no document base");
    }

    static bool rel_matches(const std::optional<std::string>& rel, std::string_view token,
                            std::string_view iri_form = {}) {
        if (!rel) return token == "alternate"; // Atom default
        return *rel == token || (!iri_form.empty() && *rel == iri_form);
    }

    Iri self_link() {
        for (const xml::Element* link : feed_.all(kAtomNs, "link")) {
            auto rel = link->attribute("rel");
            if (rel && *rel == "self") {
                if (auto href = link->attribute("href")) return resolve(*href);
            }
        }
        throw Error(ErrorKind::MissingSelfLink, "feed has no link[@rel=\"self\"]");
    }

    Iri describes_link() {
        for (const xml::Element* link : feed_.all(kAtomNs, "link")) {
            auto rel = link->attribute("rel");
            if (rel && (*rel == "describes" || *rel == kDescribesRelIri)) {
                if (auto href = link->attribute("href")) return resolve(*href);
            }
        }
        throw Error(ErrorKind::MissingDescribesLink, "feed has no link[@rel=\"describes\"]");
    }

    void read_entry(const xml::Element& entry, const Iri& agg, std::set<Triple>& triples) {
        std::optional<Iri> resource;
        for (const xml::Element* link : entry.all(kAtomNs, "link")) {
            if (!rel_matches(link->attribute("rel"), "alternate")) continue;
            auto href = link->attribute("href");
            if (!href) continue;
            if (resource) {
                warn("entry for " + resource->str() + " has more than one alternate link");
                continue;
            }
            resource = resolve(*href);
        }
        if (!resource) {
            warn("entry without an alternate link skipped");
            return;
        }
        triples.emplace(agg, vocab::aggregates, *resource);
        for (const xml::Element& child : entry.children) {
            if (child.ns == kAtomNs) continue; // id, title, updated: no triples
            read_extension(child, *resource, agg, /*feed_level=*/false, triples);
        }
    }

    void read_extension(const xml::Element& element, const Iri& default_subject, const Iri& agg,
                        bool feed_level, std::set<Triple>& triples) {
        if (element.ns.empty()) {
            warn("extension element '" + element.local + "' has no namespace, skipped");
            return;
        }
        std::string predicate_iri = element.ns + element.local;
        if (!is_valid_iri(predicate_iri)) {
            warn("extension element does not form a predicate IRI: " + predicate_iri);
            return;
        }
        Iri subject = default_subject;
        if (auto about = element.attribute("about")) {
            if (!is_valid_iri(*about)) {
                warn("extension 'about' is not an IRI, element skipped");
                return;
            }
            Iri named(*about);
            bool acceptable = feed_level ? (named == default_subject || named == agg)
                                         : named == default_subject;
            if (!acceptable) {
                warn("extension about=\"" + named.str() + "\" names a foreign subject, skipped");
                return;
            }
            subject = named;
        }

        std::optional<Term> object;
        if (auto resource = element.attribute_ns(kRdfNs, "resource")) {
            object = resolve(*resource);
        } else if (!element.children.empty()) {
            warn("structured extension content under <" + element.local + "> dropped");
            return;
        } else {
            std::optional<Iri> datatype;
            if (auto dt = element.attribute_ns(kRdfNs, "datatype")) {
                if (!is_valid_iri(*dt)) {
                    warn("rdf:datatype is not an IRI, element skipped");
                    return;
                }
                datatype = Iri(*dt);
            }
            object = Literal{element.text, std::move(datatype)};
        }
        triples.insert(normalize_triple(Triple(subject, Iri(predicate_iri), *object)));
    }

    void warn(std::string message) { warnings_.push_back(std::move(message)); }

    const xml::Element& feed_;
    std::optional<Iri> base_;
    std::vector<std::string> warnings_;
};

} // namespace

Decoded decode(std::string_view bytes, const std::optional<Iri>& base) {
    xml::Element root = xml::parse(bytes);
    if (root.ns != kAtomNs || root.local != "feed") {
        throw Error(ErrorKind::MalformedXml, "document root is not an Atom feed");
    }
    return FeedReader(root, base).read();
}

} // namespace ore::atom
