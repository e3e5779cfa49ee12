#pragma once

namespace sentcause::stats {

/// Natural log of the gamma function. Defined for z > 0; throws
/// Error(DomainError) otherwise. Absolute error <= 1e-10 on [0.5, 300].
[[nodiscard]] double ln_gamma(double z);

/// Regularized incomplete beta I_x(a, b), a, b > 0, 0 <= x <= 1.
///
/// Evaluated by a modified-Lentz continued fraction; the symmetry
/// I_x(a,b) = 1 - I_{1-x}(b,a) is applied when x > (a+1)/(a+b+2) so the
/// fraction always converges from the fast side. Absolute error <= 1e-10.
/// Throws Error(DomainError) on bad arguments and Error(NonConvergence)
/// if the fraction fails to settle within 300 iterations (that signals a
/// bug, not an input problem).
[[nodiscard]] double reg_inc_beta(double x, double a, double b);

/// CDF of the F(d1, d2) distribution at x >= 0:
///   I_{d1 x / (d1 x + d2)}(d1/2, d2/2).
/// Throws Error(DomainError) for x < 0 or non-positive df.
[[nodiscard]] double f_cdf(double x, int d1, int d2);

}  // namespace sentcause::stats
