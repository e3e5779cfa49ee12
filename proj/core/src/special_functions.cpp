#include "sentcause/special_functions.hpp"

#include <cmath>
#include <string>

#include "sentcause/errors.hpp"

namespace sentcause::stats {

namespace {

constexpr int kMaxIterations = 300;
constexpr double kEps = 1e-15;
constexpr double kFpMin = 1e-300;

/// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw Error(ErrorCode::NonConvergence,
                "incomplete beta continued fraction did not converge (a=" +
                    std::to_string(a) + ", b=" + std::to_string(b) +
                    ", x=" + std::to_string(x) + ")");
}

}  // namespace

double ln_gamma(double z) {
    if (!(z > 0.0)) {
        throw Error(ErrorCode::DomainError,
                    "ln_gamma requires z > 0, got " + std::to_string(z));
    }
    return std::lgamma(z);
}

double reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw Error(ErrorCode::DomainError, "reg_inc_beta requires a, b > 0");
    }
    if (!(x >= 0.0) || !(x <= 1.0)) {
        throw Error(ErrorCode::DomainError,
                    "reg_inc_beta requires 0 <= x <= 1, got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double f_cdf(double x, int d1, int d2) {
    if (d1 < 1 || d2 < 1) {
        throw Error(ErrorCode::DomainError, "f_cdf requires positive degrees of freedom");
    }
    if (!(x >= 0.0)) {
        throw Error(ErrorCode::DomainError,
                    "f_cdf requires x >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    const double num = static_cast<double>(d1) * x;
    const double t = num / (num + static_cast<double>(d2));
    return reg_inc_beta(t, 0.5 * d1, 0.5 * d2);
}

}  // namespace sentcause::stats
