#include "ore/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <vector>

#include "ore/error.hpp"
#include "ore/vocab.hpp"

namespace ore::ntriples {

namespace {

std::string escape_literal(std::string_view lexical) {
    std::string out;
    out.reserve(lexical.size());
    for (char c : lexical) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04X", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string render(const Triple& t) {
    std::string line = "<" + t.subject.str() + "> <" + t.predicate.str() + "> ";
    if (t.object.is_iri()) {
        line += "<" + t.object.iri().str() + ">";
    } else {
        const Literal& lit = t.object.literal();
        line += "\"" + escape_literal(lit.lexical) + "\"";
        if (lit.datatype) line += "^^<" + lit.datatype->str() + ">";
    }
    line += " .";
    return line;
}

constexpr std::string_view kHeaderPrefix = "# resourcemap:";

class LineParser {
public:
    LineParser(std::string_view line, size_t line_number)
        : line_(line), number_(line_number) {}

    Triple parse() {
        Iri subject = parse_iri("subject");
        skip_ws(true);
        Iri predicate = parse_iri("predicate");
        skip_ws(true);
        Term object = parse_object();
        skip_ws(false);
        if (pos_ >= line_.size() || line_[pos_] != '.') fail("expected terminating '.'");
        ++pos_;
        skip_ws(false);
        if (pos_ != line_.size()) fail("trailing content after '.'");
        return Triple(std::move(subject), std::move(predicate), std::move(object));
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(number_) + ": " + what);
    }

    void skip_ws(bool required) {
        size_t start = pos_;
        while (pos_ < line_.size() &&
               (line_[pos_] == ' ' || line_[pos_] == '\t')) {
            ++pos_;
        }
        if (required && pos_ == start) fail("expected whitespace");
    }

    Iri parse_iri(const char* role) {
        if (pos_ < line_.size() && line_[pos_] == '_') {
            fail(std::string("blank nodes are not part of this model (") + role + ")");
        }
        if (pos_ >= line_.size() || line_[pos_] != '<') {
            fail(std::string("expected '<' opening the ") + role);
        }
        auto end = line_.find('>', ++pos_);
        if (end == std::string_view::npos) fail("unterminated IRI");
        std::string value(line_.substr(pos_, end - pos_));
        pos_ = end + 1;
        try {
            return Iri(std::move(value));
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    Term parse_object() {
        if (pos_ < line_.size() && line_[pos_] == '<') return parse_iri("object");
        if (pos_ < line_.size() && line_[pos_] == '_') {
            fail("blank nodes are not part of this model (object)");
        }
        if (pos_ >= line_.size() || line_[pos_] != '"') fail("expected IRI or literal object");
        ++pos_;
        std::string lexical;
        for (;;) {
            if (pos_ >= line_.size()) fail("unterminated literal");
            char c = line_[pos_];
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c != '\\') {
                lexical += c;
                ++pos_;
                continue;
            }
            if (++pos_ >= line_.size()) fail("dangling escape");
            char esc = line_[pos_++];
            switch (esc) {
            case 't': lexical += '\t'; break;
            case 'b': lexical += '\b'; break;
            case 'n': lexical += '\n'; break;
            case 'r': lexical += '\r'; break;
            case 'f': lexical += '\f'; break;
            case '"': lexical += '"'; break;
            case '\'': lexical += '\''; break;
            case '\\': lexical += '\\'; break;
            case 'u': lexical += parse_codepoint(4); break;
            case 'U': lexical += parse_codepoint(8); break;
            default: fail(std::string("unknown escape '\\") + esc + "'");
            }
        }
        std::optional<Iri> datatype;
        if (pos_ + 1 < line_.size() && line_[pos_] == '^' && line_[pos_ + 1] == '^') {
            pos_ += 2;
            datatype = parse_iri("datatype");
        }
        if (pos_ < line_.size() && line_[pos_] == '@') {
            fail("language-tagged literals are not part of this model");
        }
        return Literal{std::move(lexical), std::move(datatype)};
    }

    std::string parse_codepoint(int digits) {
        unsigned long cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (pos_ >= line_.size()) fail("truncated \\u escape");
            char c = line_[pos_++];
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else { fail("bad hex digit in \\u escape"); }
            cp = cp * 16 + static_cast<unsigned long>(v);
        }
        if (cp > 0x10FFFF) fail("codepoint out of range");
        std::string out;
        if (cp <= 0x7F) {
            out += static_cast<char>(cp);
        } else if (cp <= 0x7FF) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp <= 0xFFFF) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
        return out;
    }

    std::string_view line_;
    size_t number_;
    size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

std::string to_ntriples(const ResourceMapGraph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.size());
    for (const Triple& t : g.triples()) lines.push_back(render(t));
    std::sort(lines.begin(), lines.end());

    std::string out = std::string(kHeaderPrefix) + " <" + g.rem_uri().str() + ">\n";
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

ResourceMapGraph from_ntriples(std::string_view text,
                               const std::optional<Iri>& rem_override) {
    std::optional<Iri> header_name;
    std::set<Triple> triples;
    std::vector<Iri> describes_subjects;

    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                             : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        std::string stripped = trim(raw);
        if (stripped.empty()) continue;
        if (stripped[0] == '#') {
            if (!header_name && stripped.rfind(kHeaderPrefix, 0) == 0) {
                std::string value = trim(stripped.substr(kHeaderPrefix.size()));
                if (value.size() >= 2 && value.front() == '<' && value.back() == '>') {
                    value = value.substr(1, value.size() - 2);
                }
                try {
                    header_name = Iri(value);
                } catch (const Error&) {
                    throw Error(ErrorKind::ParseError,
                                "line " + std::to_string(line_number) +
                                    ": bad graph name in header comment");
                }
            }
            continue;
        }

        Triple t = normalize_triple(LineParser(stripped, line_number).parse());
        if (t.predicate == vocab::describes) describes_subjects.push_back(t.subject);
        triples.insert(std::move(t));
    }

    Iri rem = [&]() -> Iri {
        if (header_name) return *header_name;
        if (rem_override) return *rem_override;
        if (describes_subjects.size() == 1) return describes_subjects[0];
        throw Error(ErrorKind::AmbiguousGraphName,
                    "no header comment, no override, and " +
                        std::to_string(describes_subjects.size()) +
                        " ore:describes triples to infer from");
    }();
    return ResourceMapGraph(std::move(rem), std::move(triples));
}

std::string to_display(const ResourceMapGraph& g) {
    struct Prefix {
        std::string_view prefix;
        std::string_view ns;
    };
    static const Prefix kPrefixes[] = {
        {"dc", vocab::dc_ns},   {"dcterms", vocab::dcterms_ns}, {"ore", vocab::ore_ns},
        {"owl", vocab::owl_ns}, {"rdf", vocab::rdf_ns},
    };
    auto shorten = [](const Iri& iri) -> std::string {
        for (const Prefix& p : kPrefixes) {
            const std::string& s = iri.str();
            if (s.rfind(p.ns, 0) == 0) {
                std::string_view rest = std::string_view(s).substr(p.ns.size());
                if (!rest.empty() && rest.find('/') == std::string_view::npos &&
                    rest.find('#') == std::string_view::npos) {
                    return std::string(p.prefix) + ":" + std::string(rest);
                }
            }
        }
        return "<" + iri.str() + ">";
    };

    std::string out = "# " + g.rem_uri().str() + "\n";
    for (const Prefix& p : kPrefixes) {
        out += "@prefix " + std::string(p.prefix) + ": <" + std::string(p.ns) + "> .\n";
    }
    out += "\n";
    std::vector<std::string> lines;
    for (const Triple& t : g.triples()) {
        std::string line = shorten(t.subject) + " " + shorten(t.predicate) + " ";
        if (t.object.is_iri()) {
            line += shorten(t.object.iri());
        } else {
            const Literal& lit = t.object.literal();
            line += "\"" + escape_literal(lit.lexical) + "\"";
            if (lit.datatype) line += "^^" + shorten(*lit.datatype);
        }
        lines.push_back(line + " .");
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) out += line + "\n";
    return out;
}

} // namespace ore::ntriples
