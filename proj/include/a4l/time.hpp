#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace a4l {

// Milliseconds since the Unix epoch, always UTC. A distinct type so table
// cells can tell timestamps apart from plain integers.
struct Timestamp {
    std::int64_t millis = 0;

    auto operator<=>(const Timestamp&) const = default;

    Timestamp operator+(std::int64_t delta_ms) const { return Timestamp{millis + delta_ms}; }
    Timestamp operator-(std::int64_t delta_ms) const { return Timestamp{millis - delta_ms}; }
};

inline constexpr std::int64_t kMillisPerSecond = 1000;
inline constexpr std::int64_t kMillisPerMinute = 60 * kMillisPerSecond;
inline constexpr std::int64_t kMillisPerHour = 60 * kMillisPerMinute;
inline constexpr std::int64_t kMillisPerDay = 24 * kMillisPerHour;
inline constexpr std::int64_t kMillisPerWeek = 7 * kMillisPerDay;

// Broken-down UTC instant at minute resolution, used by the cron matcher.
struct CivilMinute {
    int year = 1970;
    unsigned month = 1;   // 1..12
    unsigned day = 1;     // 1..31
    unsigned hour = 0;    // 0..23
    unsigned minute = 0;  // 0..59
    unsigned weekday = 4; // 0 = Sunday .. 6 = Saturday
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

inline std::int64_t positive_mod(std::int64_t a, std::int64_t b) {
    std::int64_t m = a % b;
    return m < 0 ? m + b : m;
}

}  // namespace detail

inline CivilMinute civil_from_timestamp(Timestamp ts) {
    using namespace std::chrono;
    const std::int64_t day_count = detail::floor_div(ts.millis, kMillisPerDay);
    const std::int64_t in_day = detail::positive_mod(ts.millis, kMillisPerDay);
    const sys_days sd{days{day_count}};
    const year_month_day ymd{sd};
    CivilMinute cm;
    cm.year = static_cast<int>(ymd.year());
    cm.month = static_cast<unsigned>(ymd.month());
    cm.day = static_cast<unsigned>(ymd.day());
    cm.hour = static_cast<unsigned>(in_day / kMillisPerHour);
    cm.minute = static_cast<unsigned>((in_day / kMillisPerMinute) % 60);
    cm.weekday = weekday{sd}.c_encoding();
    return cm;
}

// Builds a timestamp from civil fields. Out-of-range days roll forward
// (e.g. Feb 31 becomes Mar 3) so pattern-valid inputs always parse.
inline std::optional<Timestamp> timestamp_from_civil(int year, unsigned month, unsigned day,
                                                     unsigned hour, unsigned minute,
                                                     unsigned second, unsigned millis) {
    using namespace std::chrono;
    if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
    if (hour > 23 || minute > 59 || second > 59) return std::nullopt;
    const sys_days month_start{year_month_day{std::chrono::year{year}, std::chrono::month{month},
                                              std::chrono::day{1}}};
    const std::int64_t day_count =
        month_start.time_since_epoch().count() + static_cast<std::int64_t>(day - 1);
    std::int64_t ms = day_count * kMillisPerDay + hour * kMillisPerHour +
                      minute * kMillisPerMinute + second * kMillisPerSecond + millis;
    return Timestamp{ms};
}

// Parses "YYYY-MM-DDTHH:MM:SS(.fff)?(Z|±HH:MM)". Returns nullopt on any
// other shape; offsets are normalized to UTC.
inline std::optional<Timestamp> parse_iso8601(std::string_view s) {
    auto digits = [&](std::size_t pos, std::size_t n, long& out) -> bool {
        if (pos + n > s.size()) return false;
        long v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') return false;
            v = v * 10 + (c - '0');
        }
        out = v;
        return true;
    };
    long year, month, day, hour, minute, second;
    if (!digits(0, 4, year) || s.size() < 20) return std::nullopt;
    if (s[4] != '-' || !digits(5, 2, month)) return std::nullopt;
    if (s[7] != '-' || !digits(8, 2, day)) return std::nullopt;
    if (s[10] != 'T' || !digits(11, 2, hour)) return std::nullopt;
    if (s[13] != ':' || !digits(14, 2, minute)) return std::nullopt;
    if (s[16] != ':' || !digits(17, 2, second)) return std::nullopt;
    std::size_t pos = 19;
    long millis = 0;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        long frac = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            if (pos - start < 3) frac = frac * 10 + (s[pos] - '0');
            ++pos;
        }
        std::size_t ndigits = pos - start;
        if (ndigits == 0) return std::nullopt;
        while (ndigits < 3) {
            frac *= 10;
            ++ndigits;
        }
        millis = frac;
    }
    if (pos >= s.size()) return std::nullopt;
    std::int64_t offset_ms = 0;
    if (s[pos] == 'Z') {
        if (pos + 1 != s.size()) return std::nullopt;
    } else if (s[pos] == '+' || s[pos] == '-') {
        long oh, om;
        if (pos + 6 != s.size()) return std::nullopt;
        if (!digits(pos + 1, 2, oh) || s[pos + 3] != ':' || !digits(pos + 4, 2, om))
            return std::nullopt;
        if (oh > 23 || om > 59) return std::nullopt;
        offset_ms = (oh * kMillisPerHour + om * kMillisPerMinute) * (s[pos] == '+' ? 1 : -1);
    } else {
        return std::nullopt;
    }
    auto ts = timestamp_from_civil(static_cast<int>(year), static_cast<unsigned>(month),
                                   static_cast<unsigned>(day), static_cast<unsigned>(hour),
                                   static_cast<unsigned>(minute), static_cast<unsigned>(second),
                                   static_cast<unsigned>(millis));
    if (!ts) return std::nullopt;
    return Timestamp{ts->millis - offset_ms};
}

inline std::string format_iso8601(Timestamp ts) {
    using namespace std::chrono;
    const std::int64_t day_count = detail::floor_div(ts.millis, kMillisPerDay);
    const std::int64_t in_day = detail::positive_mod(ts.millis, kMillisPerDay);
    const year_month_day ymd{sys_days{days{day_count}}};
    const int ms = static_cast<int>(in_day % 1000);
    char buf[40];
    if (ms == 0) {
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                      static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                      static_cast<unsigned>(ymd.day()),
                      static_cast<long long>(in_day / kMillisPerHour),
                      static_cast<long long>((in_day / kMillisPerMinute) % 60),
                      static_cast<long long>((in_day / kMillisPerSecond) % 60));
    } else {
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lld.%03dZ",
                      static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                      static_cast<unsigned>(ymd.day()),
                      static_cast<long long>(in_day / kMillisPerHour),
                      static_cast<long long>((in_day / kMillisPerMinute) % 60),
                      static_cast<long long>((in_day / kMillisPerSecond) % 60), ms);
    }
    return buf;
}

inline Timestamp floor_to_day(Timestamp ts) {
    return Timestamp{detail::floor_div(ts.millis, kMillisPerDay) * kMillisPerDay};
}

// Start of the ISO week (Monday 00:00 UTC) containing ts.
inline Timestamp floor_to_week(Timestamp ts) {
    using namespace std::chrono;
    const std::int64_t day_count = detail::floor_div(ts.millis, kMillisPerDay);
    const weekday wd{sys_days{days{day_count}}};
    const std::int64_t since_monday = (wd.c_encoding() + 6) % 7;
    return Timestamp{(day_count - since_monday) * kMillisPerDay};
}

// Whole UTC days between two instants' calendar dates (b date - a date).
inline std::int64_t days_between(Timestamp a, Timestamp b) {
    return detail::floor_div(b.millis, kMillisPerDay) - detail::floor_div(a.millis, kMillisPerDay);
}

// "YYYY-MM-DD" (midnight UTC).
inline std::optional<Timestamp> parse_date(std::string_view s) {
    if (s.size() != 10) return std::nullopt;
    return parse_iso8601(std::string(s) + "T00:00:00Z");
}

inline std::string format_date(Timestamp ts) {
    return format_iso8601(floor_to_day(ts)).substr(0, 10);
}

}  // namespace a4l
