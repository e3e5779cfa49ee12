#include "sentcause/date.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "sentcause/errors.hpp"

namespace sentcause::ts {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(std::int32_t serial) {
    return chr::year_month_day{chr::sys_days{chr::days{serial}}};
}

std::int32_t from_ymd(const chr::year_month_day& ymd) {
    return static_cast<std::int32_t>(chr::sys_days{ymd}.time_since_epoch().count());
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day) {
    const chr::year_month_day ymd{chr::year{year}, chr::month{month}, chr::day{day}};
    if (!ymd.ok()) {
        throw Error(ErrorCode::DomainError,
                    "invalid calendar day: " + std::to_string(year) + "-" +
                        std::to_string(month) + "-" + std::to_string(day));
    }
    serial_ = from_ymd(ymd);
}

Date Date::parse(const std::string& text, const std::string& format) {
    std::tm tm{};
    std::istringstream in(text);
    in >> std::get_time(&tm, format.c_str());
    if (in.fail()) {
        throw Error(ErrorCode::UnparsableDate, "cannot parse date '" + text +
                                                   "' with format '" + format + "'");
    }
    // Require the whole field to be consumed (trailing whitespace tolerated).
    char c;
    while (in.get(c)) {
        if (c != ' ' && c != '\t') {
            throw Error(ErrorCode::UnparsableDate,
                        "trailing characters after date in '" + text + "'");
        }
    }
    const chr::year_month_day ymd{chr::year{tm.tm_year + 1900},
                                  chr::month{static_cast<unsigned>(tm.tm_mon + 1)},
                                  chr::day{static_cast<unsigned>(tm.tm_mday)}};
    if (!ymd.ok()) {
        throw Error(ErrorCode::UnparsableDate, "'" + text + "' is not a calendar day");
    }
    Date d;
    d.serial_ = from_ymd(ymd);
    return d;
}

std::string Date::to_string(const std::string& format) const {
    const auto ymd = to_ymd(serial_);
    std::tm tm{};
    tm.tm_year = static_cast<int>(ymd.year()) - 1900;
    tm.tm_mon = static_cast<int>(static_cast<unsigned>(ymd.month())) - 1;
    tm.tm_mday = static_cast<int>(static_cast<unsigned>(ymd.day()));
    tm.tm_wday = weekday();
    const std::int32_t jan1 = from_ymd(chr::year_month_day{
        ymd.year(), chr::month{1}, chr::day{1}});
    tm.tm_yday = serial_ - jan1;
    std::ostringstream out;
    out << std::put_time(&tm, format.c_str());
    return out.str();
}

int Date::year() const { return static_cast<int>(to_ymd(serial_).year()); }
unsigned Date::month() const { return static_cast<unsigned>(to_ymd(serial_).month()); }
unsigned Date::day() const { return static_cast<unsigned>(to_ymd(serial_).day()); }

int Date::weekday() const {
    const chr::weekday wd{chr::sys_days{chr::days{serial_}}};
    return static_cast<int>(wd.c_encoding());
}

Date Date::next_weekday() const {
    Date d = plus_days(1);
    while (d.is_weekend()) d = d.plus_days(1);
    return d;
}

}  // namespace sentcause::ts
