#include "gpolylog/core.hpp"

#include <cmath>
#include <sstream>

namespace gpolylog {

std::string_view route_name(Route r) {
  switch (r) {
    case Route::Series: return "series";
    case Route::SingleIntegralQuad: return "single-integral-quad";
    case Route::SingleIntegralSegments: return "single-integral";
    case Route::DoubleIntegral: return "double-integral";
    case Route::DoubleIntegralKnown: return "double-integral-known";
    case Route::Hypergeometric: return "hypergeometric";
    case Route::LerchIntegral: return "lerch-integral";
    case Route::LerchSeries: return "lerch-series";
    case Route::LerchLambdaSeries: return "lerch-lambda";
    case Route::LerchKernelIntegral: return "lerch-kernel";
    case Route::PolylogSeries: return "polylog";
  }
  return "unknown";
}

bool is_integral_route(Route r) {
  return r == Route::SingleIntegralQuad || r == Route::SingleIntegralSegments ||
         r == Route::DoubleIntegral || r == Route::DoubleIntegralKnown ||
         r == Route::LerchIntegral;
}

bool requires_real_argument(Route r) {
  return r == Route::SingleIntegralQuad || r == Route::DoubleIntegral ||
         r == Route::DoubleIntegralKnown || r == Route::LerchIntegral ||
         r == Route::LerchKernelIntegral;
}

DomainError::DomainError(std::string field, std::string constraint)
    : Error(ErrorKind::Domain, field + ": " + constraint),
      field_(std::move(field)),
      constraint_(std::move(constraint)) {}

namespace {

std::string describe_sample(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand returned a non-finite value at x = " << x;
  return os.str();
}

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(field, std::string(field) + ">0 required");
}

void require_unit_disc(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0))
    throw DomainError("z", "|z|<1 required");
}

void require_shift_above_one(double v, const char* field, bool relax) {
  if (!relax && !(v > 1.0))
    throw DomainError(field, std::string(field) + ">1 required");
}

void require_real_unit_interval(complex z) {
  if (z.imag() != 0.0 || !(z.real() >= 0.0))
    throw DomainError("z", "real z in [0,1) required");
}

bool is_positive_integer(double v) {
  return v >= 1.0 && v == std::floor(v) && v < 1e6;
}

}  // namespace

NonFiniteSample::NonFiniteSample(double x)
    : Error(ErrorKind::NonFiniteSample, describe_sample(x)), x_(x) {}

void validate(const ToleranceConfig& tol) {
  if (!(tol.target_abs_tol > 0.0))
    throw DomainError("tol", "target_abs_tol>0 required");
  if (tol.max_terms < 16) throw DomainError("max_terms", "max_terms>=16 required");
  if (!(tol.fd_step > 0.0)) throw DomainError("fd_step", "fd_step>0 required");
  if (tol.max_function_evals < 1)
    throw DomainError("max_function_evals", "max_function_evals>=1 required");
}

PhiParams validate(const PhiParams& params, Route route, bool relax) {
  require_positive(params.p, "p");
  require_positive(params.q, "q");
  require_positive(params.a, "a");
  require_positive(params.b, "b");
  require_unit_disc(params.z);
  if (is_integral_route(route)) {
    require_shift_above_one(params.a, "a", relax);
    require_shift_above_one(params.b, "b", relax);
  }
  if (requires_real_argument(route)) require_real_unit_interval(params.z);
  if (route == Route::Hypergeometric) {
    if (!is_positive_integer(params.p)) throw DomainError("p", "integer p>=1 required");
    if (!is_positive_integer(params.q)) throw DomainError("q", "integer q>=1 required");
  }
  return params;
}

LerchParams validate(const LerchParams& params, Route route, bool relax) {
  require_positive(params.s, "s");
  require_positive(params.a, "a");
  require_unit_disc(params.z);
  if (route == Route::LerchLambdaSeries &&
      (!(params.lambda < 0.5) || !std::isfinite(params.lambda)))
    throw DomainError("lambda", "lambda<1/2 required");
  // the transformed series is a power series in (z-lambda)/(1-lambda)
  if (route == Route::LerchLambdaSeries && !(std::abs(params.z - params.lambda) < 1.0 - params.lambda))
    throw DomainError("lambda", "|z-lambda|<1-lambda required");
  if (route == Route::LerchIntegral) require_shift_above_one(params.a, "a", relax);
  if (requires_real_argument(route)) require_real_unit_interval(params.z);
  return params;
}

double normalization(const PhiParams& params) {
  return std::pow(1.0 + params.a, params.p) * std::pow(1.0 + params.b, params.q);
}

}  // namespace gpolylog
