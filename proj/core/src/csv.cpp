#include "sentcause/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sentcause/errors.hpp"

namespace sentcause::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::optional<std::size_t> Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t Table::require_column(std::string_view name) const {
    if (auto idx = column(name)) return *idx;
    throw Error(ErrorCode::MissingColumn, "column '" + std::string(name) + "' not found");
}

Table parse_table(std::string_view text) {
    Table table;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool any_field = false;

    auto end_field = [&] {
        record.push_back(field);
        field.clear();
        any_field = false;
    };
    auto end_record = [&] {
        end_field();
        if (table.header.empty()) {
            table.header = std::move(record);
        } else {
            table.rows.push_back(std::move(record));
        }
        record.clear();
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty() && !any_field) {
            in_quotes = true;
            any_field = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
            // A lone newline between records (blank line) is skipped.
            if (!record.empty() || any_field || !field.empty()) end_record();
        } else {
            field.push_back(c);
            any_field = true;
        }
        ++i;
    }
    if (in_quotes) {
        throw Error(ErrorCode::UnparsableValue, "unterminated quoted field at end of input");
    }
    if (!record.empty() || any_field || !field.empty()) end_record();

    if (table.header.empty()) {
        throw Error(ErrorCode::EmptySeries, "CSV input has no header row");
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.header.size()) {
            throw Error(ErrorCode::UnparsableValue,
                        "record " + std::to_string(r + 1) + " has " +
                            std::to_string(table.rows[r].size()) + " fields, expected " +
                            std::to_string(table.header.size()));
        }
    }
    return table;
}

Table load_table(const std::string& path) { return parse_table(load_text(path)); }

std::string escape_field(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view field, const std::string& context) {
    const std::string_view s = trim(field);
    if (s.empty()) {
        throw Error(ErrorCode::UnparsableValue, context + ": empty numeric field");
    }
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw Error(ErrorCode::UnparsableValue,
                    context + ": cannot parse '" + std::string(field) + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::UnparsableValue,
                    context + ": non-finite value '" + std::string(field) + "'");
    }
    return value;
}

std::string SeriesColumns::value_column_for(ts::SeriesKind kind) const {
    if (!value_column.empty()) return value_column;
    return kind == ts::SeriesKind::ClosePrice ? "close" : "score";
}

ts::DatedSeries parse_series(std::string_view text, ts::SeriesKind kind,
                             const SeriesColumns& columns) {
    const Table table = parse_table(text);
    const std::size_t date_idx = table.require_column(columns.date_column);
    const std::size_t value_idx = table.require_column(columns.value_column_for(kind));

    std::vector<ts::Observation> obs;
    obs.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::string context = "record " + std::to_string(r + 1);
        ts::Date date;
        try {
            date = ts::Date::parse(std::string(trim(table.rows[r][date_idx])),
                                   columns.date_format);
        } catch (const Error& e) {
            throw Error(ErrorCode::UnparsableDate, context + ": " + e.what());
        }
        obs.push_back({date, parse_double(table.rows[r][value_idx], context)});
    }
    if (obs.empty()) {
        throw Error(ErrorCode::EmptySeries, "CSV input holds no data rows");
    }
    std::stable_sort(obs.begin(), obs.end(),
                     [](const auto& a, const auto& b) { return a.date < b.date; });

    if (kind == ts::SeriesKind::ClosePrice) {
        for (std::size_t i = 1; i < obs.size(); ++i) {
            if (obs[i].date == obs[i - 1].date) {
                throw Error(ErrorCode::DuplicateDate,
                            "duplicate date " + obs[i].date.to_string() +
                                " in a close-price series");
            }
        }
    } else {
        // Sentiment rows may repeat a day; collapse to the daily mean.
        std::vector<ts::Observation> daily;
        std::size_t i = 0;
        while (i < obs.size()) {
            std::size_t j = i;
            double sum = 0.0;
            while (j < obs.size() && obs[j].date == obs[i].date) {
                sum += obs[j].value;
                ++j;
            }
            daily.push_back({obs[i].date, sum / static_cast<double>(j - i)});
            i = j;
        }
        obs = std::move(daily);
    }
    return ts::DatedSeries(kind, std::move(obs));
}

ts::DatedSeries load_series(const std::string& path, ts::SeriesKind kind,
                            const SeriesColumns& columns) {
    try {
        return parse_series(load_text(path), kind, columns);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::string write_series(const ts::DatedSeries& series, const SeriesColumns& columns) {
    std::ostringstream out;
    out << columns.date_column << ',' << columns.value_column_for(series.kind()) << '\n';
    for (const auto& o : series.observations()) {
        out << o.date.to_string(columns.date_format) << ',' << format_double(o.value)
            << '\n';
    }
    return out.str();
}

void save_series(const ts::DatedSeries& series, const std::string& path,
                 const SeriesColumns& columns) {
    save_text(path, write_series(series, columns));
}

void save_text(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "read from '" + path + "' failed");
    return buf.str();
}

}  // namespace sentcause::csv
