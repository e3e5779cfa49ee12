#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sentcause/date.hpp"
#include "sentcause/matrix.hpp"

namespace sentcause::ts {

enum class SeriesKind { ClosePrice, SentimentScore };

[[nodiscard]] const char* series_kind_name(SeriesKind kind) noexcept;

struct Observation {
    Date date;
    double value = 0.0;

    friend bool operator==(const Observation&, const Observation&) = default;
};

/// Strictly date-ordered sequence of daily observations.
///
/// Invariants, enforced at construction: dates strictly increasing,
/// all values finite, length >= 1.
class DatedSeries {
  public:
    /// Throws Error(EmptySeries) on empty input, Error(DuplicateDate) on a
    /// repeated date, Error(DomainError) on out-of-order dates or
    /// non-finite values.
    DatedSeries(SeriesKind kind, std::vector<Observation> observations);

    [[nodiscard]] SeriesKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<Observation>& observations() const { return obs_; }
    [[nodiscard]] std::size_t size() const { return obs_.size(); }
    [[nodiscard]] const Observation& front() const { return obs_.front(); }
    [[nodiscard]] const Observation& back() const { return obs_.back(); }

    [[nodiscard]] std::vector<double> values() const;

    friend bool operator==(const DatedSeries&, const DatedSeries&) = default;

  private:
    SeriesKind kind_;
    std::vector<Observation> obs_;
};

/// Inner-joined (y = close price, x = sentiment) observations on common
/// dates. |dates| = |y| = |x| = n >= 1, dates strictly increasing.
class AlignedPair {
  public:
    AlignedPair(std::vector<Date> dates, std::vector<double> y, std::vector<double> x);

    [[nodiscard]] const std::vector<Date>& dates() const { return dates_; }
    [[nodiscard]] const std::vector<double>& y() const { return y_; }
    [[nodiscard]] const std::vector<double>& x() const { return x_; }
    [[nodiscard]] std::size_t size() const { return dates_.size(); }

    /// Same dates with the y and x roles exchanged (used to test the
    /// reverse causal direction).
    [[nodiscard]] AlignedPair swapped() const { return AlignedPair(dates_, x_, y_); }

    friend bool operator==(const AlignedPair&, const AlignedPair&) = default;

  private:
    std::vector<Date> dates_;
    std::vector<double> y_;
    std::vector<double> x_;
};

/// Regression target plus restricted/unrestricted designs for lag order p.
///
/// Row t (t = 0..m-1, m = n - p) targets y[p+t]. Lag columns are ordered
/// most-recent first:
///   restricted row t:    [1, y[p+t-1], ..., y[t]]
///   unrestricted row t:  [1, y[p+t-1], ..., y[t], x[p+t-1], ..., x[t]]
/// The restricted columns are a bitwise prefix of the unrestricted ones.
struct LagDesign {
    std::size_t lag = 0;
    std::vector<double> target;  // length m
    Matrix restricted;           // m x (1 + p)
    Matrix unrestricted;         // m x (1 + 2p)
};

/// Chronological train/test split. `test` is absent when the ratio is 1.
struct SplitPair {
    AlignedPair train;
    std::optional<AlignedPair> test;
    double ratio = 1.0;
};

/// Inner join on exact calendar-day equality; dates present in only one
/// series are dropped. The first argument fills the y role. Throws
/// Error(EmptyIntersection) when no common dates exist.
[[nodiscard]] AlignedPair align(const DatedSeries& y, const DatedSeries& x);

/// d-th difference; length |s| - d, dates are the later date of each
/// differenced pair. d = 0 returns the series unchanged.
/// Throws Error(SeriesTooShort) unless |s| > d.
[[nodiscard]] DatedSeries difference(const DatedSeries& s, std::size_t order);

/// Positional d-th difference of both columns of an aligned pair.
[[nodiscard]] AlignedPair difference(const AlignedPair& pair, std::size_t order);

/// Build the lag-p design. Requires p >= 1 and n - p >= 1 + 2p (positive
/// residual degrees of freedom for the unrestricted model); throws
/// Error(InsufficientObservations) otherwise.
[[nodiscard]] LagDesign build_lag_design(const AlignedPair& pair, std::size_t lag);

/// First floor(ratio * n) observations form train, the rest test; no
/// shuffling. Throws Error(InvalidRatio) unless 0 < ratio <= 1 and
/// Error(EmptyTrain) if the train segment would be empty.
[[nodiscard]] SplitPair chrono_split(const AlignedPair& pair, double ratio);

}  // namespace sentcause::ts
