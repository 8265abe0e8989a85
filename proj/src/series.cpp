#include "gpolylog/series.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace gpolylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

[[noreturn]] void give_up(std::string_view what, std::uint64_t terms, double bound) {
  std::ostringstream os;
  os << what << ": tail bound " << bound << " not met after " << terms << " terms";
  throw NonConvergence(os.str());
}

// Drives sum_{k>=first} coeff(k) z^k for a non-increasing |coeff|. The
// z-powers are built by repeated multiplication.
template <class Coeff>
EvalResult power_series(std::string_view what, Coeff coeff, std::uint64_t first,
                        complex z, const ToleranceConfig& tol, Route route) {
  const double r = std::abs(z);
  complex zk = first == 0 ? complex(1.0) : z;
  complex sum = 0.0;
  double abs_sum = 0.0;
  SeriesTail tail;
  std::uint64_t terms = 0;
  for (std::uint64_t k = first;; ++k) {
    const double c = coeff(k);
    const complex term = zk * c;
    sum += term;
    abs_sum += std::abs(term);
    ++terms;
    tail = geometric_tail(std::abs(c) * std::pow(r, static_cast<double>(k)), r);
    if (tail.bound <= tol.target_abs_tol) break;
    if (terms >= tol.max_terms) give_up(what, terms, tail.bound);
    zk *= z;
  }
  EvalResult out;
  out.value = sum;
  out.abs_error_estimate = tail.bound + 2.0 * kEps * static_cast<double>(terms) * abs_sum;
  out.route = route;
  out.terms_or_evals = terms;
  return out;
}

}  // namespace

SeriesTail geometric_tail(double last_term_mag, double ratio) {
  SeriesTail t;
  t.last_term_mag = last_term_mag;
  t.geometric_ratio_bound = ratio;
  t.bound = ratio == 0.0 ? 0.0 : last_term_mag * ratio / (1.0 - ratio);
  return t;
}

EvalResult phi_series(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto& pr = validate(params, Route::Series);
  if (pr.z == complex(0.0)) return EvalResult{0.0, 0.0, Route::Series, 1};
  const double norm = normalization(pr);
  auto coeff = [&](std::uint64_t k) {
    const double kd = static_cast<double>(k);
    return norm / (std::pow(kd + pr.a, pr.p) * std::pow(kd + pr.b, pr.q));
  };
  return power_series("phi_series", coeff, 1, pr.z, tol, Route::Series);
}

EvalResult lerch_series(const LerchParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto& pr = validate(params, Route::LerchSeries);
  auto coeff = [&](std::uint64_t n) {
    return 1.0 / std::pow(static_cast<double>(n) + pr.a, pr.s);
  };
  if (pr.z == complex(0.0)) return EvalResult{coeff(0), 0.0, Route::LerchSeries, 1};
  return power_series("lerch_series", coeff, 0, pr.z, tol, Route::LerchSeries);
}

EvalResult polylog_series(double r, complex z, const ToleranceConfig& tol) {
  validate(tol);
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("r", "r>0 required");
  if (!(std::abs(z) < 1.0)) throw DomainError("z", "|z|<1 required");
  if (z == complex(0.0)) return EvalResult{0.0, 0.0, Route::PolylogSeries, 1};
  auto coeff = [&](std::uint64_t n) {
    return 1.0 / std::pow(static_cast<double>(n), r);
  };
  return power_series("polylog_series", coeff, 1, z, tol, Route::PolylogSeries);
}

EvalResult hypergeometric_series(std::span<const double> numer,
                                 std::span<const double> denom, complex z,
                                 const ToleranceConfig& tol) {
  validate(tol);
  if (!(std::abs(z) < 1.0)) throw DomainError("z", "|z|<1 required");
  for (double d : denom) {
    if (d <= 0.0 && d == std::floor(d))
      throw DomainError("denom", "denominator parameters must not be 0 or negative integers");
  }
  const double r = std::abs(z);
  double coeff = 1.0;  // prod (numer)_k / prod (denom)_k / k!
  complex zk = 1.0;
  complex sum = 0.0;
  double abs_sum = 0.0;
  std::uint64_t terms = 0;
  double bound = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0;; ++k) {
    const complex term = zk * coeff;
    sum += term;
    abs_sum += std::abs(term);
    ++terms;
    if (coeff == 0.0) {  // a numerator parameter hit zero: the series terminates
      bound = 0.0;
      break;
    }
    const double kd = static_cast<double>(k);
    double ratio = 1.0 / (kd + 1.0);
    for (double n : numer) ratio *= n + kd;
    for (double d : denom) ratio /= d + kd;
    if (std::abs(ratio) <= 1.0) {
      bound = geometric_tail(std::abs(coeff) * std::pow(r, kd), r).bound;
      if (bound <= tol.target_abs_tol) break;
    }
    if (terms >= tol.max_terms) give_up("hypergeometric_series", terms, bound);
    coeff *= ratio;
    zk *= z;
  }
  EvalResult out;
  out.value = sum;
  out.abs_error_estimate = bound + 2.0 * kEps * static_cast<double>(terms) * abs_sum;
  out.route = Route::Hypergeometric;
  out.terms_or_evals = terms;
  return out;
}

EvalResult phi_via_hypergeometric(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto& pr = validate(params, Route::Hypergeometric);
  if (pr.z == complex(0.0)) return EvalResult{0.0, 0.0, Route::Hypergeometric, 1};
  const auto p = static_cast<std::size_t>(pr.p);
  const auto q = static_cast<std::size_t>(pr.q);
  std::vector<double> numer{1.0};
  std::vector<double> denom;
  numer.insert(numer.end(), p, 1.0 + pr.a);
  numer.insert(numer.end(), q, 1.0 + pr.b);
  denom.insert(denom.end(), p, 2.0 + pr.a);
  denom.insert(denom.end(), q, 2.0 + pr.b);

  // The series is multiplied by z, so the inner target shrinks by 1/|z|.
  ToleranceConfig inner = tol;
  inner.target_abs_tol = tol.target_abs_tol / std::abs(pr.z);
  EvalResult f = hypergeometric_series(numer, denom, pr.z, inner);
  f.value *= pr.z;
  f.abs_error_estimate *= std::abs(pr.z);
  return f;
}

}  // namespace gpolylog
