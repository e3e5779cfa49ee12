#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sentcause/matrix.hpp"

namespace sentcause::reg {

/// Result of a full-column-rank least-squares fit.
struct OlsFit {
    std::vector<double> coefficients;  // length k
    double rss = 0.0;                  // ||y - X beta||^2, >= 0
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::size_t rank = 0;  // always == n_cols for a produced fit

    /// Inner product of a design row with the coefficients.
    [[nodiscard]] double predict_row(std::span<const double> row) const;
};

/// Minimize ||y - X beta||^2 by Householder QR (not normal equations:
/// lagged-price columns are collinear enough that squaring the condition
/// number would corrupt the rank decision).
///
/// Throws Error(ShapeMismatch) unless m >= k >= 1 and |y| == m, and
/// Error(RankDeficient) when any factor diagonal falls below
/// 1e-10 x the largest design column norm. The message of RankDeficient
/// carries the effective rank.
[[nodiscard]] OlsFit ols_fit(const Matrix& X, std::span<const double> y);

}  // namespace sentcause::reg
