#include "sentcause/ols.hpp"

#include <cmath>
#include <string>

#include "sentcause/errors.hpp"

namespace sentcause::reg {

namespace {

constexpr double kRankTolScale = 1e-10;

double column_norm(const Matrix& A, std::size_t j, std::size_t from_row) {
    double sum = 0.0;
    for (std::size_t i = from_row; i < A.rows(); ++i) sum += A(i, j) * A(i, j);
    return std::sqrt(sum);
}

}  // namespace

double OlsFit::predict_row(std::span<const double> row) const {
    double z = 0.0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) z += row[j] * coefficients[j];
    return z;
}

OlsFit ols_fit(const Matrix& X, std::span<const double> y) {
    const std::size_t m = X.rows();
    const std::size_t k = X.cols();
    if (k < 1 || m < k) {
        throw Error(ErrorCode::ShapeMismatch,
                    "need m >= k >= 1, got m=" + std::to_string(m) +
                        " k=" + std::to_string(k));
    }
    if (y.size() != m) {
        throw Error(ErrorCode::ShapeMismatch,
                    "y has length " + std::to_string(y.size()) + ", expected " +
                        std::to_string(m));
    }

    double max_col_norm = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        max_col_norm = std::max(max_col_norm, column_norm(X, j, 0));
    }
    const double rank_tol = kRankTolScale * max_col_norm;

    // Householder triangularization of [X | qty], R overwrites A in place.
    Matrix A = X;
    std::vector<double> qty(y.begin(), y.end());
    for (std::size_t j = 0; j < k; ++j) {
        // Reflector for column j acting on rows j..m-1.
        const double norm = column_norm(A, j, j);
        if (norm > 0.0) {
            const double alpha = A(j, j) >= 0.0 ? -norm : norm;
            // v = x - alpha * e1, beta_v = v^T v / 2 kept implicitly.
            std::vector<double> v(m - j);
            v[0] = A(j, j) - alpha;
            for (std::size_t i = j + 1; i < m; ++i) v[i - j] = A(i, j);
            const double vtv = 2.0 * norm * (norm + std::abs(A(j, j)));
            A(j, j) = alpha;
            for (std::size_t i = j + 1; i < m; ++i) A(i, j) = 0.0;
            if (vtv > 0.0) {
                for (std::size_t c = j + 1; c < k; ++c) {
                    double dot = 0.0;
                    for (std::size_t i = j; i < m; ++i) dot += v[i - j] * A(i, c);
                    const double scale = 2.0 * dot / vtv;
                    for (std::size_t i = j; i < m; ++i) A(i, c) -= scale * v[i - j];
                }
                double dot = 0.0;
                for (std::size_t i = j; i < m; ++i) dot += v[i - j] * qty[i];
                const double scale = 2.0 * dot / vtv;
                for (std::size_t i = j; i < m; ++i) qty[i] -= scale * v[i - j];
            }
        }
    }

    std::size_t rank = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (std::abs(A(j, j)) >= rank_tol && A(j, j) != 0.0) ++rank;
    }
    if (rank < k) {
        throw Error(ErrorCode::RankDeficient,
                    "design has effective rank " + std::to_string(rank) + " < " +
                        std::to_string(k) + " columns (rank=" + std::to_string(rank) +
                        ")");
    }

    OlsFit fit;
    fit.n_rows = m;
    fit.n_cols = k;
    fit.rank = rank;
    fit.coefficients.assign(k, 0.0);
    for (std::size_t jj = k; jj-- > 0;) {
        double s = qty[jj];
        for (std::size_t c = jj + 1; c < k; ++c) s -= A(jj, c) * fit.coefficients[c];
        fit.coefficients[jj] = s / A(jj, jj);
    }

    // Exact residual accounting against the original design.
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double pred = 0.0;
        for (std::size_t j = 0; j < k; ++j) pred += X(i, j) * fit.coefficients[j];
        const double r = y[i] - pred;
        rss += r * r;
    }
    fit.rss = rss;
    return fit;
}

}  // namespace sentcause::reg
