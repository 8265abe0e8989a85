#pragma once

// Reference summation routes: the defining power series of Phi, the Lerch
// transcendent and Li, the lambda-accelerated Lerch series, and the
// hypergeometric identity for integer orders.

#include <span>

#include "gpolylog/core.hpp"

namespace gpolylog {

/// Geometric remainder bound for sum c_k z^k with non-increasing |c_k|:
/// after the term of index K the remainder is at most |c_K| r^{K+1} / (1 - r).
struct SeriesTail {
  double last_term_mag = 0.0;
  double geometric_ratio_bound = 0.0;
  double bound = 0.0;
};

/// last_term_mag is |c_K z^K|; the bound is last_term_mag * r / (1 - r).
SeriesTail geometric_tail(double last_term_mag, double ratio);

EvalResult phi_series(const PhiParams& params, const ToleranceConfig& tol = {});

/// sum_{n>=0} z^n / (n+a)^s
EvalResult lerch_series(const LerchParams& params, const ToleranceConfig& tol = {});

/// sum_n (1-lambda)^{-(n+1)} sum_{k<=n} C(n,k) (-lambda)^{n-k} z^k / (k+a)^s.
///
/// For lambda > 0 the inner sums alternate and their magnitudes grow like
/// ((|lambda|+|z|)/(1-lambda))^n, so double precision loses every digit long
/// before the outer series converges. When the predicted growth exceeds
/// 10^3 the sum is carried out in MPFR with a precision chosen from the
/// a-priori bound |T_n| <= rho^n / ((1-lambda) a^s).
EvalResult lerch_lambda_series(const LerchParams& params, const ToleranceConfig& tol = {});

/// Li_r(z) = sum_{n>=1} z^n / n^r.
EvalResult polylog_series(double r, complex z, const ToleranceConfig& tol = {});

/// Generalized hypergeometric series sum_k prod (numer_i)_k / prod (denom_j)_k z^k / k!,
/// with terms generated by the Pochhammer ratio recurrence. The tail bound
/// is applied once the coefficient ratio has dropped to <= 1, which holds
/// from the first term for the parameter lists produced by the polylog identity.
EvalResult hypergeometric_series(std::span<const double> numer,
                                 std::span<const double> denom, complex z,
                                 const ToleranceConfig& tol = {});

/// Phi = z * {}_{p+q+1}F_{p+q}(1, (1+a)x p, (1+b)x q; (2+a)x p, (2+b)x q; z)
/// for positive integer orders.
EvalResult phi_via_hypergeometric(const PhiParams& params, const ToleranceConfig& tol = {});

}  // namespace gpolylog
