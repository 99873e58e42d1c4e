#include "ore/datetime.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

namespace ore {

namespace {

bool read_digits(std::string_view s, size_t& pos, int count, int& out) {
    out = 0;
    if (pos + count > s.size()) return false;
    for (int i = 0; i < count; ++i) {
        char c = s[pos + i];
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        out = out * 10 + (c - '0');
    }
    pos += count;
    return true;
}

bool expect(std::string_view s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c) return false;
    ++pos;
    return true;
}

} // namespace

std::optional<std::string> normalize_datetime(std::string_view lexical) {
    size_t pos = 0;
    int year, month, day, hour, minute, second;
    if (!read_digits(lexical, pos, 4, year) || !expect(lexical, pos, '-') ||
        !read_digits(lexical, pos, 2, month) || !expect(lexical, pos, '-') ||
        !read_digits(lexical, pos, 2, day) || !expect(lexical, pos, 'T') ||
        !read_digits(lexical, pos, 2, hour) || !expect(lexical, pos, ':') ||
        !read_digits(lexical, pos, 2, minute) || !expect(lexical, pos, ':') ||
        !read_digits(lexical, pos, 2, second)) {
        return std::nullopt;
    }

    std::string fraction;
    if (pos < lexical.size() && lexical[pos] == '.') {
        ++pos;
        size_t start = pos;
        while (pos < lexical.size() && std::isdigit(static_cast<unsigned char>(lexical[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        fraction = std::string(lexical.substr(start, pos - start));
        while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
    }

    // Explicit zone required; dateTime values in this toolkit name instants.
    int offset_minutes = 0;
    if (pos < lexical.size() && lexical[pos] == 'Z') {
        ++pos;
    } else if (pos < lexical.size() && (lexical[pos] == '+' || lexical[pos] == '-')) {
        bool negative = lexical[pos] == '-';
        ++pos;
        int oh, om;
        if (!read_digits(lexical, pos, 2, oh) || !expect(lexical, pos, ':') ||
            !read_digits(lexical, pos, 2, om)) {
            return std::nullopt;
        }
        if (oh > 14 || om > 59) return std::nullopt;
        offset_minutes = oh * 60 + om;
        if (negative) offset_minutes = -offset_minutes;
    } else {
        return std::nullopt;
    }
    if (pos != lexical.size()) return std::nullopt;

    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                       std::chrono::day{unsigned(day)}};
    if (!ymd.ok() || hour > 23 || minute > 59 || second > 59) return std::nullopt;

    sys_seconds instant = sys_days{ymd} + hours{hour} + minutes{minute} + seconds{second} -
                          minutes{offset_minutes};
    sys_days date = floor<days>(instant);
    year_month_day out_ymd{date};
    hh_mm_ss<seconds> tod{instant - date};

    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ", int(out_ymd.year()),
                  unsigned(out_ymd.month()), unsigned(out_ymd.day()),
                  long(tod.hours().count()), long(tod.minutes().count()),
                  long(tod.seconds().count()));
    std::string result(buf);
    if (!fraction.empty()) {
        result.insert(result.size() - 1, "." + fraction);
    }
    return result;
}

} // namespace ore
