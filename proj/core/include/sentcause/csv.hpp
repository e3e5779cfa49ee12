#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentcause/timeseries.hpp"

namespace sentcause::csv {

/// A parsed CSV file: one header row plus data rows, fields unescaped.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Case-sensitive header lookup.
    [[nodiscard]] std::optional<std::size_t> column(std::string_view name) const;

    /// Lookup that throws Error(MissingColumn).
    [[nodiscard]] std::size_t require_column(std::string_view name) const;
};

/// Parse UTF-8 CSV text: comma separators, double-quote quoting with ""
/// escapes, \n or \r\n record ends. The first record is the header.
[[nodiscard]] Table parse_table(std::string_view text);

/// Read and parse a CSV file. Throws Error(IoError) on filesystem trouble.
[[nodiscard]] Table load_table(const std::string& path);

/// Quote a field only when it needs it (comma, quote, newline).
[[nodiscard]] std::string escape_field(std::string_view field);

/// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_double(double value);

/// Strict full-field double parse; also rejects non-finite values.
/// `context` names the row in error messages.
[[nodiscard]] double parse_double(std::string_view field, const std::string& context);

/// Column names and date format for a series CSV.
struct SeriesColumns {
    std::string date_column = "date";
    /// Empty means the default for the series kind: "close" or "score".
    std::string value_column;
    std::string date_format = "%Y-%m-%d";

    [[nodiscard]] std::string value_column_for(ts::SeriesKind kind) const;
};

/// Parse a series CSV. Rows are sorted by date ascending; duplicate dates
/// are an error for ClosePrice and are mean-aggregated for SentimentScore
/// (matching the sentiment module's daily-mean rule).
[[nodiscard]] ts::DatedSeries parse_series(std::string_view text, ts::SeriesKind kind,
                                           const SeriesColumns& columns = {});

[[nodiscard]] ts::DatedSeries load_series(const std::string& path, ts::SeriesKind kind,
                                          const SeriesColumns& columns = {});

/// Serialize with the same schema parse_series reads; parse_series of the
/// output reproduces the series exactly.
[[nodiscard]] std::string write_series(const ts::DatedSeries& series,
                                       const SeriesColumns& columns = {});

void save_series(const ts::DatedSeries& series, const std::string& path,
                 const SeriesColumns& columns = {});

/// Write arbitrary text to a file. Throws Error(IoError).
void save_text(const std::string& path, std::string_view text);

[[nodiscard]] std::string load_text(const std::string& path);

}  // namespace sentcause::csv
