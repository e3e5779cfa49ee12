#include "sentcause/timeseries.hpp"

#include <cmath>
#include <string>

#include "sentcause/errors.hpp"

namespace sentcause::ts {

const char* series_kind_name(SeriesKind kind) noexcept {
    return kind == SeriesKind::ClosePrice ? "close_price" : "sentiment_score";
}

DatedSeries::DatedSeries(SeriesKind kind, std::vector<Observation> observations)
    : kind_(kind), obs_(std::move(observations)) {
    if (obs_.empty()) {
        throw Error(ErrorCode::EmptySeries, "a dated series must hold at least one observation");
    }
    for (std::size_t i = 0; i < obs_.size(); ++i) {
        if (!std::isfinite(obs_[i].value)) {
            throw Error(ErrorCode::DomainError,
                        "non-finite value at " + obs_[i].date.to_string());
        }
        if (i > 0) {
            if (obs_[i].date == obs_[i - 1].date) {
                throw Error(ErrorCode::DuplicateDate,
                            "duplicate date " + obs_[i].date.to_string());
            }
            if (obs_[i].date < obs_[i - 1].date) {
                throw Error(ErrorCode::DomainError,
                            "dates out of order at " + obs_[i].date.to_string());
            }
        }
    }
}

std::vector<double> DatedSeries::values() const {
    std::vector<double> out;
    out.reserve(obs_.size());
    for (const auto& o : obs_) out.push_back(o.value);
    return out;
}

AlignedPair::AlignedPair(std::vector<Date> dates, std::vector<double> y,
                         std::vector<double> x)
    : dates_(std::move(dates)), y_(std::move(y)), x_(std::move(x)) {
    if (dates_.empty()) {
        throw Error(ErrorCode::EmptySeries, "an aligned pair must hold at least one observation");
    }
    if (dates_.size() != y_.size() || dates_.size() != x_.size()) {
        throw Error(ErrorCode::ShapeMismatch, "aligned pair columns differ in length");
    }
    for (std::size_t i = 1; i < dates_.size(); ++i) {
        if (!(dates_[i - 1] < dates_[i])) {
            throw Error(ErrorCode::DomainError,
                        "aligned dates not strictly increasing at " + dates_[i].to_string());
        }
    }
}

AlignedPair align(const DatedSeries& y, const DatedSeries& x) {
    std::vector<Date> dates;
    std::vector<double> yv;
    std::vector<double> xv;
    const auto& a = y.observations();
    const auto& b = x.observations();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].date < b[j].date) {
            ++i;
        } else if (b[j].date < a[i].date) {
            ++j;
        } else {
            dates.push_back(a[i].date);
            yv.push_back(a[i].value);
            xv.push_back(b[j].value);
            ++i;
            ++j;
        }
    }
    if (dates.empty()) {
        throw Error(ErrorCode::EmptyIntersection, "the two series share no dates");
    }
    return AlignedPair(std::move(dates), std::move(yv), std::move(xv));
}

DatedSeries difference(const DatedSeries& s, std::size_t order) {
    if (s.size() <= order) {
        throw Error(ErrorCode::SeriesTooShort,
                    "need more than " + std::to_string(order) + " observations, have " +
                        std::to_string(s.size()));
    }
    std::vector<Observation> obs = s.observations();
    for (std::size_t d = 0; d < order; ++d) {
        std::vector<Observation> next;
        next.reserve(obs.size() - 1);
        for (std::size_t i = 1; i < obs.size(); ++i) {
            next.push_back({obs[i].date, obs[i].value - obs[i - 1].value});
        }
        obs = std::move(next);
    }
    return DatedSeries(s.kind(), std::move(obs));
}

AlignedPair difference(const AlignedPair& pair, std::size_t order) {
    if (pair.size() <= order) {
        throw Error(ErrorCode::SeriesTooShort,
                    "need more than " + std::to_string(order) + " aligned observations, have " +
                        std::to_string(pair.size()));
    }
    std::vector<Date> dates(pair.dates().begin() + static_cast<std::ptrdiff_t>(order),
                            pair.dates().end());
    std::vector<double> y = pair.y();
    std::vector<double> x = pair.x();
    for (std::size_t d = 0; d < order; ++d) {
        for (std::size_t i = y.size() - 1; i >= 1; --i) {
            y[i] -= y[i - 1];
            x[i] -= x[i - 1];
        }
        y.erase(y.begin());
        x.erase(x.begin());
    }
    return AlignedPair(std::move(dates), std::move(y), std::move(x));
}

LagDesign build_lag_design(const AlignedPair& pair, std::size_t lag) {
    const std::size_t n = pair.size();
    if (lag < 1) {
        throw Error(ErrorCode::DomainError, "lag order must be >= 1");
    }
    // m = n - p rows must cover the 1 + 2p unrestricted parameters.
    if (n < 3 * lag + 1 || n - lag < 1 + 2 * lag) {
        throw Error(ErrorCode::InsufficientObservations,
                    "lag " + std::to_string(lag) + " needs at least " +
                        std::to_string(3 * lag + 1) + " aligned observations, have " +
                        std::to_string(n));
    }
    const std::size_t m = n - lag;
    LagDesign design;
    design.lag = lag;
    design.target.resize(m);
    design.restricted = Matrix(m, 1 + lag);
    design.unrestricted = Matrix(m, 1 + 2 * lag);
    const auto& y = pair.y();
    const auto& x = pair.x();
    for (std::size_t t = 0; t < m; ++t) {
        design.target[t] = y[lag + t];
        design.restricted(t, 0) = 1.0;
        design.unrestricted(t, 0) = 1.0;
        for (std::size_t j = 1; j <= lag; ++j) {
            const double y_lag = y[lag + t - j];  // j = 1 is the most recent lag
            design.restricted(t, j) = y_lag;
            design.unrestricted(t, j) = y_lag;
            design.unrestricted(t, lag + j) = x[lag + t - j];
        }
    }
    return design;
}

SplitPair chrono_split(const AlignedPair& pair, double ratio) {
    if (!(ratio > 0.0) || !(ratio <= 1.0)) {
        throw Error(ErrorCode::InvalidRatio,
                    "split ratio must lie in (0, 1], got " + std::to_string(ratio));
    }
    const std::size_t n = pair.size();
    const auto n_train =
        static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
    if (n_train == 0) {
        throw Error(ErrorCode::EmptyTrain, "split ratio " + std::to_string(ratio) +
                                               " leaves no training observations");
    }
    auto slice = [&](std::size_t from, std::size_t to) {
        std::vector<Date> d(pair.dates().begin() + static_cast<std::ptrdiff_t>(from),
                            pair.dates().begin() + static_cast<std::ptrdiff_t>(to));
        std::vector<double> y(pair.y().begin() + static_cast<std::ptrdiff_t>(from),
                              pair.y().begin() + static_cast<std::ptrdiff_t>(to));
        std::vector<double> x(pair.x().begin() + static_cast<std::ptrdiff_t>(from),
                              pair.x().begin() + static_cast<std::ptrdiff_t>(to));
        return AlignedPair(std::move(d), std::move(y), std::move(x));
    };
    SplitPair out{slice(0, n_train), std::nullopt, ratio};
    if (n_train < n) out.test = slice(n_train, n);
    return out;
}

}  // namespace sentcause::ts
