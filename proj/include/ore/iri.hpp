// iri.hpp -- absolute IRIs and RFC 3986 reference resolution.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ore {

/// An absolute IRI. Construction checks generic URI syntax with a
/// non-empty scheme; everything after the scheme is kept verbatim.
/// Comparison is exact character equality -- no case folding, no
/// percent-normalization.
class Iri {
public:
    explicit Iri(std::string value);

    const std::string& str() const noexcept { return value_; }

    std::string scheme() const;

    bool has_fragment() const noexcept;

    /// Text after '#', when present.
    std::optional<std::string> fragment() const;

    Iri without_fragment() const;
    Iri with_fragment(std::string_view fragment) const;

    /// Host part of the authority, empty when the IRI has no authority
    /// (e.g. info: or tag: URIs). Userinfo and port are stripped.
    std::string host() const;

    auto operator<=>(const Iri& other) const = default;

private:
    std::string value_;
};

/// True when `value` would be accepted by the Iri constructor.
bool is_valid_iri(std::string_view value) noexcept;

/// RFC 3986 section 5 reference resolution. `ref` may be relative
/// ("/rem/1", "../x", "?q", "#f") or absolute; the result is always an
/// absolute IRI with dot-segments removed.
Iri resolve_reference(const Iri& base, std::string_view ref);

} // namespace ore
