// datetime.hpp -- canonical UTC form for dateTime literal values.
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ore {

/// Normalizes a dateTime lexical form to UTC `YYYY-MM-DDThh:mm:ssZ`.
/// Accepts `YYYY-MM-DDThh:mm:ss[.fff](Z|+hh:mm|-hh:mm)`; the zone is
/// required, the calendar date must exist, and a non-zero fractional
/// part is preserved with trailing zeros trimmed. Returns nullopt for
/// anything else.
std::optional<std::string> normalize_datetime(std::string_view lexical);

inline bool is_datetime(std::string_view lexical) {
    return normalize_datetime(lexical).has_value();
}

} // namespace ore
