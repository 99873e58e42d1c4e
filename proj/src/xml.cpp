#include "ore/xml.hpp"

#include <cctype>
#include <map>

#include "ore/error.hpp"

namespace ore::xml {

const Element* Element::first(std::string_view ns_uri, std::string_view local_name) const {
    for (const Element& child : children) {
        if (child.ns == ns_uri && child.local == local_name) return &child;
    }
    return nullptr;
}

std::vector<const Element*> Element::all(std::string_view ns_uri,
                                         std::string_view local_name) const {
    std::vector<const Element*> matches;
    for (const Element& child : children) {
        if (child.ns == ns_uri && child.local == local_name) matches.push_back(&child);
    }
    return matches;
}

std::optional<std::string> Element::attribute(std::string_view local_name) const {
    for (const Attribute& a : attributes) {
        if (a.ns.empty() && a.local == local_name) return a.value;
    }
    return std::nullopt;
}

std::optional<std::string> Element::attribute_ns(std::string_view ns_uri,
                                                 std::string_view local_name) const {
    for (const Attribute& a : attributes) {
        if (a.ns == ns_uri && a.local == local_name) return a.value;
    }
    return std::nullopt;
}

namespace {

constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           static_cast<unsigned char>(c) >= 0x80;
}

bool name_char(char c) {
    return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

struct RawAttribute {
    std::string prefix;
    std::string local;
    std::string value;
};

class Parser {
public:
    explicit Parser(std::string_view input) {
        // Line-end normalization up front; character references to CR
        // are expanded later and therefore survive.
        input_.reserve(input.size());
        for (size_t i = 0; i < input.size(); ++i) {
            if (input[i] == '\r') {
                input_ += '\n';
                if (i + 1 < input.size() && input[i + 1] == '\n') ++i;
            } else {
                input_ += input[i];
            }
        }
        if (input_.rfind("\xEF\xBB\xBF", 0) == 0) pos_ = 3;
    }

    Element parse_document() {
        skip_misc();
        if (!starts_with("<")) fail("no root element");
        Element root = parse_element({});
        skip_misc();
        if (pos_ != input_.size()) fail("content after the root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::MalformedXml, what + " (line " + std::to_string(line()) + ")");
    }

    size_t line() const {
        size_t n = 1;
        for (size_t i = 0; i < pos_ && i < input_.size(); ++i) {
            if (input_[i] == '\n') ++n;
        }
        return n;
    }

    bool starts_with(std::string_view s) const { return input_.compare(pos_, s.size(), s) == 0; }

    char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
    }

    // Prolog, comments, processing instructions, DOCTYPE, whitespace.
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<?")) {
                auto end = input_.find("?>", pos_);
                if (end == std::string::npos) fail("unterminated processing instruction");
                pos_ = end + 2;
            } else if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<!DOCTYPE")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_comment() {
        auto end = input_.find("-->", pos_ + 4);
        if (end == std::string::npos) fail("unterminated comment");
        pos_ = end + 3;
    }

    void skip_doctype() {
        int depth = 0;
        for (pos_ += 9; pos_ < input_.size(); ++pos_) {
            char c = input_[pos_];
            if (c == '[') ++depth;
            else if (c == ']') --depth;
            else if (c == '>' && depth == 0) {
                ++pos_;
                return;
            }
        }
        fail("unterminated DOCTYPE");
    }

    std::string parse_name() {
        if (pos_ >= input_.size() || (!name_start(input_[pos_]) && input_[pos_] != ':')) {
            fail("expected a name");
        }
        size_t start = pos_;
        while (pos_ < input_.size() && (name_char(input_[pos_]) || input_[pos_] == ':')) ++pos_;
        return input_.substr(start, pos_ - start);
    }

    std::string expand_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                if (raw[i] == '\0') fail("NUL character");
                out += raw[i];
                continue;
            }
            auto semi = raw.find(';', i);
            if (semi == std::string_view::npos) fail("unterminated entity reference");
            std::string_view name = raw.substr(i + 1, semi - i - 1);
            if (name == "amp") out += '&';
            else if (name == "lt") out += '<';
            else if (name == "gt") out += '>';
            else if (name == "apos") out += '\'';
            else if (name == "quot") out += '"';
            else if (!name.empty() && name[0] == '#') {
                out += expand_char_ref(name.substr(1));
            } else {
                fail("unknown entity '&" + std::string(name) + ";'");
            }
            i = semi;
        }
        return out;
    }

    std::string expand_char_ref(std::string_view digits) {
        unsigned long cp = 0;
        bool hex = !digits.empty() && (digits[0] == 'x' || digits[0] == 'X');
        std::string_view body = hex ? digits.substr(1) : digits;
        if (body.empty()) fail("empty character reference");
        for (char c : body) {
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else { fail("bad character reference"); }
            cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(v);
            if (cp > 0x10FFFF) fail("character reference out of range");
        }
        if (cp == 0 || (cp < 0x20 && cp != 0x9 && cp != 0xA && cp != 0xD)) {
            fail("character reference to a control character");
        }
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

    using Scope = std::map<std::string, std::string, std::less<>>;

    std::pair<std::string, std::string> split_qname(const std::string& qname) {
        auto colon = qname.find(':');
        if (colon == std::string::npos) return {"", qname};
        if (colon == 0 || colon + 1 >= qname.size() ||
            qname.find(':', colon + 1) != std::string::npos) {
            fail("malformed qualified name '" + qname + "'");
        }
        return {qname.substr(0, colon), qname.substr(colon + 1)};
    }

    std::string resolve(const Scope& scope, const std::string& prefix, bool is_attribute) {
        if (prefix == "xml") return std::string(kXmlNs);
        if (prefix.empty()) {
            if (is_attribute) return ""; // default namespace never applies to attributes
            auto it = scope.find("");
            return it == scope.end() ? "" : it->second;
        }
        auto it = scope.find(prefix);
        if (it == scope.end()) fail("undeclared namespace prefix '" + prefix + "'");
        return it->second;
    }

    Element parse_element(Scope scope) {
        ++pos_; // consume '<'
        std::string qname = parse_name();

        std::vector<RawAttribute> raw_attrs;
        bool self_closing = false;
        for (;;) {
            skip_ws();
            if (peek() == '/') {
                if (!starts_with("/>")) fail("stray '/' in tag");
                self_closing = true;
                pos_ += 2;
                break;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            std::string attr_name = parse_name();
            skip_ws();
            if (peek() != '=') fail("attribute '" + attr_name + "' has no value");
            ++pos_;
            skip_ws();
            char quote = peek();
            if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
            ++pos_;
            auto end = input_.find(quote, pos_);
            if (end == std::string::npos) fail("unterminated attribute value");
            std::string value = expand_entities(std::string_view(input_).substr(pos_, end - pos_));
            pos_ = end + 1;

            auto [prefix, local] = split_qname(attr_name);
            if (prefix.empty() && local == "xmlns") {
                scope[""] = value;
            } else if (prefix == "xmlns") {
                if (value.empty()) fail("cannot undeclare prefix '" + local + "'");
                scope[local] = value;
            } else {
                raw_attrs.push_back({prefix, local, value});
            }
        }

        Element element;
        auto [prefix, local] = split_qname(qname);
        element.ns = resolve(scope, prefix, false);
        element.local = local;
        for (const RawAttribute& a : raw_attrs) {
            std::string ns = resolve(scope, a.prefix, true);
            for (const Attribute& existing : element.attributes) {
                if (existing.ns == ns && existing.local == a.local) {
                    fail("duplicate attribute '" + a.local + "'");
                }
            }
            element.attributes.push_back({ns, a.local, a.value});
        }
        if (self_closing) return element;

        // Content until the matching close tag.
        for (;;) {
            size_t text_start = pos_;
            while (pos_ < input_.size() && input_[pos_] != '<') ++pos_;
            if (pos_ > text_start) {
                element.text += expand_entities(
                    std::string_view(input_).substr(text_start, pos_ - text_start));
            }
            if (pos_ >= input_.size()) fail("unterminated element <" + qname + ">");
            if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<![CDATA[")) {
                auto end = input_.find("]]>", pos_ + 9);
                if (end == std::string::npos) fail("unterminated CDATA section");
                element.text += input_.substr(pos_ + 9, end - pos_ - 9);
                pos_ = end + 3;
            } else if (starts_with("<?")) {
                auto end = input_.find("?>", pos_);
                if (end == std::string::npos) fail("unterminated processing instruction");
                pos_ = end + 2;
            } else if (starts_with("</")) {
                pos_ += 2;
                std::string close = parse_name();
                if (close != qname) {
                    fail("mismatched close tag </" + close + "> for <" + qname + ">");
                }
                skip_ws();
                if (peek() != '>') fail("malformed close tag");
                ++pos_;
                return element;
            } else {
                element.children.push_back(parse_element(scope));
            }
        }
    }

    std::string input_;
    size_t pos_ = 0;
};

} // namespace

Element parse(std::string_view bytes) {
    return Parser(bytes).parse_document();
}

std::string escape_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '\r': out += "&#13;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string escape_attribute(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\r': out += "&#13;"; break;
        case '\n': out += "&#10;"; break;
        case '\t': out += "&#9;"; break;
        default: out += c;
        }
    }
    return out;
}

bool representable_text(std::string_view s) {
    for (char c : s) {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 && c != '\t' && c != '\n' && c != '\r') return false;
    }
    return true;
}

bool is_ncname(std::string_view s) {
    if (s.empty() || !name_start(s[0])) return false;
    for (char c : s) {
        if (!name_char(c)) return false;
    }
    return true;
}

} // namespace ore::xml
