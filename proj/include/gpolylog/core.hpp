#pragma once

// Shared parameter, result and error types for every evaluation route of
// the generalized polylogarithm
//
//     Phi_{p,q}(a,b;z) = sum_{k>=1} (1+a)^p (1+b)^q z^k / ((k+a)^p (k+b)^q).

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gpolylog {

using complex = std::complex<double>;

enum class Route {
  Series,
  SingleIntegralQuad,
  SingleIntegralSegments,
  DoubleIntegral,
  DoubleIntegralKnown,
  Hypergeometric,
  LerchIntegral,
  LerchSeries,
  LerchLambdaSeries,
  LerchKernelIntegral,
  PolylogSeries,
};

std::string_view route_name(Route r);

/// Route whose integral representation needs a > 1 and b > 1.
bool is_integral_route(Route r);
/// Route whose integrand is only defined for a real argument z in [0, 1).
bool requires_real_argument(Route r);

// ---------------------------------------------------------------------------
// Errors

enum class ErrorKind {
  Domain,
  NonConvergence,
  QuadratureFailure,
  NonFiniteSample,
  ConvergenceFailure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A parameter violates the hypothesis of the requested route.
class DomainError : public Error {
 public:
  DomainError(std::string field, std::string constraint);
  const std::string& field() const noexcept { return field_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string field_;
  std::string constraint_;
};

/// A series or segment sum exhausted max_terms before meeting its tail bound.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what)
      : Error(ErrorKind::NonConvergence, what) {}
};

class QuadratureFailure : public Error {
 public:
  explicit QuadratureFailure(const std::string& what)
      : Error(ErrorKind::QuadratureFailure, what) {}
};

class NonFiniteSample : public Error {
 public:
  explicit NonFiniteSample(double x);
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Root finding did not converge (unreachable for a monotone map).
class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& what)
      : Error(ErrorKind::ConvergenceFailure, what) {}
};

// ---------------------------------------------------------------------------
// Parameters and results

struct PhiParams {
  double p = 1.0;
  double q = 1.0;
  double a = 1.0;
  double b = 1.0;
  complex z = 0.0;

  bool operator==(const PhiParams&) const = default;
};

struct LerchParams {
  double s = 1.0;
  double a = 1.0;
  complex z = 0.0;
  double lambda = 0.0;  // only read by the lambda-accelerated series

  bool operator==(const LerchParams&) const = default;
};

struct EvalResult {
  complex value = 0.0;
  double abs_error_estimate = 0.0;
  Route route = Route::Series;
  std::uint64_t terms_or_evals = 1;
};

struct ToleranceConfig {
  double target_abs_tol = 1e-14;
  std::uint64_t max_terms = 1'000'000;
  std::uint64_t max_function_evals = 5'000'000;
  double fd_step = 1e-2;
  /// Expert switch: accept 0 < a, b <= 1 on the integral routes.
  bool relax_shift_hypothesis = false;
  /// Allow the lambda series to fall back to MPFR when its inner binomial
  /// sums cancel catastrophically in double precision.
  bool extended_precision = true;
};

/// Throws DomainError unless every ToleranceConfig invariant holds.
void validate(const ToleranceConfig& tol);

/// Returns `params` unchanged when it satisfies every constraint of `route`;
/// otherwise throws DomainError naming the first violated field.
PhiParams validate(const PhiParams& params, Route route,
                   bool relax_shift_hypothesis = false);

/// Lerch routes: s > 0, a > 0, |z| < 1; the lambda series also needs lambda < 1/2
/// and |z - lambda| < 1 - lambda; the integral routes need a > 1 and real z in [0,1).
LerchParams validate(const LerchParams& params, Route route,
                     bool relax_shift_hypothesis = false);

/// Normalizing factor (1+a)^p (1+b)^q.
double normalization(const PhiParams& params);

}  // namespace gpolylog
