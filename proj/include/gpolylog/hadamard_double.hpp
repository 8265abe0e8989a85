#pragma once

// Double-integral routes. The Hadamard-product representation
//
//   Phi = C (z q / Gamma(p)) int_0^inf int_0^inf e^{-q u} e^{-(a+1) v} v^{p-1}
//         (1 - (z e^{-v})^{m(u)}) / (1 - z e^{-v}) dv du,   m(u) = floor(e^u - b),
//
// with C = (1+a)^p (1+b)^q, and the older form over [0,1]^2 written after
// u = e^{-x}, v = e^{-y} as a pair of semi-infinite integrals.

#include <vector>

#include "gpolylog/core.hpp"

namespace gpolylog {

/// Gamma(x) for x > 0 (Lanczos, g = 7, reflection below 1/2).
double gamma_fn(double x);

/// u-strips [log(m+b), log(m+1+b)) carry weight ((m+b)^{-q} - (m+1+b)^{-q}) / q.
/// The initial range [0, log(1+b)) has m(u) <= 0, an empty geometric sum, and
/// contributes nothing; its weight is reported so that the weights can be
/// checked against int_0^inf e^{-q u} du = 1/q.
struct StripWeights {
  double zero_region = 0.0;
  std::vector<double> strips;  // m = 1..count
  double tail = 0.0;           // weight of every strip beyond `count`
};
StripWeights strip_weights(double b, double q, std::size_t count);

struct DoubleIntegralDetail {
  EvalResult result;
  /// Literal per-strip contributions C z q / Gamma(p) * w_m * int v^{p-1} e^{-(a+1)v} K_m(v) dv,
  /// all non-negative for z in [0,1). Their running sum is a lower bound on the value.
  std::vector<double> strip_contributions;
  /// Always true for b > 0: the strip below log(1+b) is empty.
  bool zero_region_skipped = true;
};

/// Quadrature path. Each strip's kernel is split as
/// K_m = 1/(1 - z e^{-v}) - z^m e^{-m v}/(1 - z e^{-v}); the first part sums in
/// closed form over all strips, and the second part decays like z^m, which
/// gives a geometric stopping rule.
EvalResult phi_double_integral(const PhiParams& params, const ToleranceConfig& tol = {});
DoubleIntegralDetail phi_double_integral_detail(const PhiParams& params,
                                                const ToleranceConfig& tol = {});

/// Fast path: the kernel expanded as sum_{k<m} z^k e^{-k v}, each v-integral in
/// closed form Gamma(p)/(a+1+k)^p. Accepts complex z.
EvalResult phi_double_integral_expanded(const PhiParams& params, const ToleranceConfig& tol = {});

/// C z / (Gamma(p) Gamma(q)) int int x^{p-1} y^{q-1} e^{-(a+1)x-(b+1)y} / (1 - z e^{-x-y}) dx dy
/// by nested one-dimensional quadrature.
EvalResult phi_double_integral_known(const PhiParams& params, const ToleranceConfig& tol = {});

/// 1/a^s + (z/Gamma(s)) int_0^inf x^{s-1} e^{-(a+1)x} / (1 - z e^{-x}) dx, real z in [0,1).
EvalResult lerch_kernel_integral(double s, double a, double z, const ToleranceConfig& tol = {});

}  // namespace gpolylog
