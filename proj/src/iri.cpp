#include "ore/iri.hpp"

#include <algorithm>
#include <cctype>

#include "ore/error.hpp"

namespace ore {

namespace {

bool is_scheme_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_scheme_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

// Split into the five generic components. Works on both absolute IRIs
// and relative references (scheme/authority then optional).
struct Components {
    std::optional<std::string_view> scheme;
    std::optional<std::string_view> authority;
    std::string_view path;
    std::optional<std::string_view> query;
    std::optional<std::string_view> fragment;
};

Components split(std::string_view s) {
    Components c;
    if (auto hash = s.find('#'); hash != std::string_view::npos) {
        c.fragment = s.substr(hash + 1);
        s = s.substr(0, hash);
    }
    if (auto q = s.find('?'); q != std::string_view::npos) {
        c.query = s.substr(q + 1);
        s = s.substr(0, q);
    }
    if (!s.empty() && is_scheme_start(s[0])) {
        size_t i = 1;
        while (i < s.size() && is_scheme_char(s[i])) ++i;
        if (i < s.size() && s[i] == ':') {
            c.scheme = s.substr(0, i);
            s = s.substr(i + 1);
        }
    }
    if (s.size() >= 2 && s[0] == '/' && s[1] == '/') {
        s = s.substr(2);
        auto slash = s.find('/');
        c.authority = s.substr(0, slash);
        s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
    }
    c.path = s;
    return c;
}

std::string remove_dot_segments(std::string_view path) {
    std::string out;
    std::string in(path);
    while (!in.empty()) {
        if (in.rfind("../", 0) == 0) {
            in.erase(0, 3);
        } else if (in.rfind("./", 0) == 0) {
            in.erase(0, 2);
        } else if (in.rfind("/./", 0) == 0) {
            in.replace(0, 3, "/");
        } else if (in == "/.") {
            in = "/";
        } else if (in.rfind("/../", 0) == 0 || in == "/..") {
            in.replace(0, in == "/.." ? 3 : 4, "/");
            auto last = out.rfind('/');
            out.erase(last == std::string::npos ? 0 : last);
        } else if (in == "." || in == "..") {
            in.clear();
        } else {
            size_t next = in.find('/', 1);
            out.append(in.substr(0, next));
            in.erase(0, next == std::string::npos ? in.size() : next);
        }
    }
    return out;
}

std::string recompose(const Components& c) {
    std::string out;
    if (c.scheme) {
        out += *c.scheme;
        out += ':';
    }
    if (c.authority) {
        out += "//";
        out += *c.authority;
    }
    out += c.path;
    if (c.query) {
        out += '?';
        out += *c.query;
    }
    if (c.fragment) {
        out += '#';
        out += *c.fragment;
    }
    return out;
}

} // namespace

bool is_valid_iri(std::string_view value) noexcept {
    if (value.empty() || !is_scheme_start(value[0])) return false;
    size_t i = 1;
    while (i < value.size() && is_scheme_char(value[i])) ++i;
    if (i >= value.size() || value[i] != ':') return false;
    // Liberal beyond the scheme, but characters that can never appear
    // in a URI reference make angle-bracket serializations ambiguous.
    for (char ch : value) {
        auto u = static_cast<unsigned char>(ch);
        if (u <= 0x20 || ch == '<' || ch == '>' || ch == '"' || u == 0x7f) return false;
    }
    return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (!is_valid_iri(value_)) {
        throw Error(ErrorKind::InvalidIri, "not an absolute IRI: '" + value_ + "'");
    }
}

std::string Iri::scheme() const {
    return value_.substr(0, value_.find(':'));
}

bool Iri::has_fragment() const noexcept {
    return value_.find('#') != std::string::npos;
}

std::optional<std::string> Iri::fragment() const {
    auto hash = value_.find('#');
    if (hash == std::string::npos) return std::nullopt;
    return value_.substr(hash + 1);
}

Iri Iri::without_fragment() const {
    auto hash = value_.find('#');
    if (hash == std::string::npos) return *this;
    return Iri(value_.substr(0, hash));
}

Iri Iri::with_fragment(std::string_view fragment) const {
    return Iri(without_fragment().str() + "#" + std::string(fragment));
}

std::string Iri::host() const {
    auto c = split(value_);
    if (!c.authority) return {};
    std::string_view auth = *c.authority;
    if (auto at = auth.rfind('@'); at != std::string_view::npos) auth = auth.substr(at + 1);
    if (!auth.empty() && auth[0] == '[') {
        auto close = auth.find(']');
        return std::string(auth.substr(0, close == std::string_view::npos ? auth.size() : close + 1));
    }
    if (auto colon = auth.find(':'); colon != std::string_view::npos) auth = auth.substr(0, colon);
    return std::string(auth);
}

Iri resolve_reference(const Iri& base, std::string_view ref) {
    Components r = split(ref);
    Components b = split(base.str());
    Components t;
    if (r.scheme) {
        t.scheme = r.scheme;
        t.authority = r.authority;
        t.path = r.path;
        t.query = r.query;
    } else {
        t.scheme = b.scheme;
        if (r.authority) {
            t.authority = r.authority;
            t.path = r.path;
            t.query = r.query;
        } else {
            t.authority = b.authority;
            if (r.path.empty()) {
                t.path = b.path;
                t.query = r.query ? r.query : b.query;
            } else if (r.path[0] == '/') {
                t.path = r.path;
                t.query = r.query;
            } else {
                t.path = r.path; // merged below
                t.query = r.query;
            }
        }
    }
    std::string merged;
    if (!r.scheme && !r.authority && !r.path.empty() && r.path[0] != '/') {
        if (b.authority && b.path.empty()) {
            merged = "/" + std::string(r.path);
        } else {
            auto slash = b.path.rfind('/');
            merged = std::string(slash == std::string_view::npos ? "" : b.path.substr(0, slash + 1));
            merged += r.path;
        }
        t.path = merged;
    }
    std::string cleaned = remove_dot_segments(t.path);
    t.path = cleaned;
    t.fragment = r.fragment;
    return Iri(recompose(t));
}

} // namespace ore
