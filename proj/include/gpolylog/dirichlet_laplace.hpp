#pragma once

// Single-integral route. Writing Phi as a Dirichlet series in p with
// exponents log Delta(n), Delta(y) = (y+a)(y+b)^{q/p}, its Laplace form is
//
//   Phi = (1+a)^p (1+b)^q ( z/(1-z) + p z/(z-1) * int_0^inf e^{-p y} z^{j(y)} dy ),
//   j(y) = floor(Delta^{-1}(e^y)),
//
// valid for a, b > 1. j is a staircase that steps from n-1 to n at
// y_n = log Delta(n), so the integral splits into segments with closed-form
// pieces z^n (e^{-p y_n} - e^{-p y_{n+1}}) / p.

#include <cstdint>
#include <vector>

#include "gpolylog/core.hpp"

namespace gpolylog {

struct DeltaMap {
  double a = 2.0;
  double b = 2.0;
  double ratio = 1.0;  // q / p
};

/// (y+a)(y+b)^ratio
double delta(const DeltaMap& d, double y);

/// x >= 0 with |Delta(x) - t| <= 1e-12 t, by bracketed Newton with bisection
/// fallback. Throws DomainError for t < Delta(0).
double delta_inverse(const DeltaMap& d, double t);

/// floor(Delta^{-1}(e^y)), 0 while e^y < Delta(0). Roots within 1e-12
/// (relative) of an integer snap to it, giving the half-open convention
/// j(y) = n on [y_n, y_{n+1}).
std::uint64_t j_of_y(const DeltaMap& d, double y);

/// The p = q staircase in closed form:
/// floor((-(a+b) + sqrt((a-b)^2 + 4 e^y)) / 2), clamped at 0.
std::uint64_t n_of_y_closed_form(double a, double b, double y);

struct SegmentDecomposition {
  /// y_n = log Delta(n) for n = 1..N, strictly increasing.
  std::vector<double> breakpoints;
  /// z^n for n = 1..N.
  std::vector<complex> coefficients;
  /// Bound on |int_{y_N}^inf e^{-p y} z^{j(y)} dy| = |z|^N e^{-p y_N} / p.
  double truncation_tail = 0.0;
};

/// Breakpoints are generated forward until both the Laplace integral and the
/// assembled Phi value have truncation error below target_abs_tol.
SegmentDecomposition build_segments(const PhiParams& params, const ToleranceConfig& tol = {});

/// Exact per-segment integration of the single-integral representation.
EvalResult phi_single_integral_segments(const PhiParams& params,
                                        const ToleranceConfig& tol = {});

/// int_0^inf e^{-p y} z^{j(y)} dy by the segment identity. abs_error_estimate
/// covers truncation and rounding of the integral itself.
EvalResult staircase_laplace_integral(const PhiParams& params, const ToleranceConfig& tol = {});

enum class StaircaseIndex {
  /// j(y) by numerical inversion of Delta at every sample.
  Inverse,
  /// n(y) in closed form; requires p == q.
  ClosedForm,
};

/// Same representation, integrated by adaptive quadrature with j(y)
/// evaluated pointwise. The breakpoints are handed to the engine as forced
/// split points; the integral is cut at y_N with the analytic tail bound.
EvalResult phi_single_integral_quadrature(const PhiParams& params,
                                          const ToleranceConfig& tol = {},
                                          StaircaseIndex index = StaircaseIndex::Inverse);

/// Lerch transcendent from the a = b, p = q special case:
///   1/a^s + z/(1-z) + s z/(z-1) int_0^inf e^{-s t} z^{max(0, floor(e^t - a))} dt,
/// integrated segment-wise over t_n = log(n + a).
EvalResult lerch_single_integral(double s, double a, double z, const ToleranceConfig& tol = {});

}  // namespace gpolylog
