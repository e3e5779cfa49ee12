#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sentcause::ts {

/// A calendar day, stored as days since 1970-01-01. No intraday time,
/// no time zones; ordering and equality are plain day comparisons.
class Date {
  public:
    Date() = default;

    /// Throws Error(DomainError) if the triple is not a valid calendar day.
    Date(int year, unsigned month, unsigned day);

    /// Parse with a strptime-style format (default ISO-8601). The whole
    /// field must be consumed; trailing garbage is an error.
    /// Throws Error(UnparsableDate).
    [[nodiscard]] static Date parse(const std::string& text,
                                    const std::string& format = "%Y-%m-%d");

    [[nodiscard]] std::string to_string(const std::string& format = "%Y-%m-%d") const;

    [[nodiscard]] int year() const;
    [[nodiscard]] unsigned month() const;
    [[nodiscard]] unsigned day() const;

    /// 0 = Sunday ... 6 = Saturday.
    [[nodiscard]] int weekday() const;
    [[nodiscard]] bool is_weekend() const {
        const int w = weekday();
        return w == 0 || w == 6;
    }

    [[nodiscard]] Date plus_days(int n) const {
        Date d;
        d.serial_ = serial_ + n;
        return d;
    }

    /// Next calendar day that is not a Saturday or Sunday.
    [[nodiscard]] Date next_weekday() const;

    [[nodiscard]] std::int32_t serial() const { return serial_; }

    friend auto operator<=>(const Date&, const Date&) = default;

  private:
    std::int32_t serial_ = 0;
};

}  // namespace sentcause::ts
