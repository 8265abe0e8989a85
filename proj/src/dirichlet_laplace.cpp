#include "gpolylog/dirichlet_laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gpolylog/quadrature.hpp"

namespace gpolylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSnap = 1e-12;
constexpr int kMaxNewton = 200;

double log_delta(const DeltaMap& d, double x) {
  return std::log(x + d.a) + d.ratio * std::log(x + d.b);
}

// Root of log Delta(x) = log_t. g(x) = log Delta(x) - log_t is increasing and
// concave, so a Newton step from any bracketed point lands at or left of the
// root; the bracket only guards against rounding.
double log_delta_inverse(const DeltaMap& d, double log_t) {
  const double lo_shift = std::max(d.a, d.b);
  const double hi_shift = std::min(d.a, d.b);
  const double root_scale = std::exp(log_t / (1.0 + d.ratio));
  double lo = std::max(0.0, root_scale - lo_shift);
  double hi = std::max(lo, root_scale - hi_shift);
  while (log_delta(d, hi) < log_t) hi = 2.0 * hi + 1.0;
  if (log_delta(d, lo) >= log_t) return lo;

  double x = lo;
  for (int it = 0; it < kMaxNewton; ++it) {
    const double g = log_delta(d, x) - log_t;
    if (g < 0.0) lo = x; else hi = x;
    const double slope = 1.0 / (x + d.a) + d.ratio / (x + d.b);
    double next = x - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double scale = std::max(1.0, std::abs(next));
    if (std::abs(next - x) <= 4.0 * kEps * scale || hi - lo <= 4.0 * kEps * scale) return next;
    x = next;
  }
  std::ostringstream os;
  os << "delta_inverse: no convergence after " << kMaxNewton << " iterations (log t = "
     << log_t << ")";
  throw ConvergenceFailure(os.str());
}

std::uint64_t snap_floor(double x) {
  if (!(x > 0.0)) return 0;
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kSnap * std::max(1.0, x)) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::floor(x));
}

// Generic staircase with E_n = (n+a)^{-p} (n+b)^{-q}. q = 0 gives the Lerch
// case. dE_n = E_n - E_{n+1} is formed with expm1 so adjacent breakpoints do
// not cancel.
struct Staircase {
  double p, q, a, b;

  double log_e(std::uint64_t n) const {
    const double nd = static_cast<double>(n);
    return -p * std::log(nd + a) - (q == 0.0 ? 0.0 : q * std::log(nd + b));
  }
  double drop(std::uint64_t n, double e_n) const {
    const double nd = static_cast<double>(n);
    const double step = p * std::log1p(1.0 / (nd + a)) +
                        (q == 0.0 ? 0.0 : q * std::log1p(1.0 / (nd + b)));
    return -e_n * std::expm1(-step);
  }
};

// Smallest N >= 1 with weight * |z|^N E_N <= tol.
std::uint64_t segment_count(const Staircase& st, double r, double weight, double tol,
                            std::uint64_t max_terms, const char* what) {
  if (r == 0.0) return 1;
  const double log_r = std::log(r);
  const double log_target = std::log(tol / weight);
  for (std::uint64_t n = 1;; ++n) {
    if (static_cast<double>(n) * log_r + st.log_e(n) <= log_target) return n;
    if (n >= max_terms) {
      std::ostringstream os;
      os << what << ": truncation bound not met after " << n << " segments";
      throw NonConvergence(os.str());
    }
  }
}

struct StaircaseSum {
  complex stable;         // E_1 - sum_{n<N} z^n dE_n = sum_{n<N} (1 - z^n) dE_n + E_N
  complex laplace;        // (1 - E_1)/p + sum_{n<N} z^n dE_n / p
  double truncation = 0;  // |z|^N E_N, bounds |sum_{n>=N} z^n dE_n|
  double rounding = 0;    // in the same units as `stable`
};

StaircaseSum sum_staircase(const Staircase& st, complex z, std::uint64_t n_segments) {
  StaircaseSum out;
  const double e1 = std::exp(st.log_e(1));
  complex zn = z;
  complex stable = 0.0;
  complex weighted = 0.0;
  double abs_sum = 0.0;
  double e_n = e1;
  for (std::uint64_t n = 1; n < n_segments; ++n) {
    const double de = st.drop(n, e_n);
    stable += (1.0 - zn) * de;
    weighted += zn * de;
    abs_sum += 2.0 * de;
    e_n -= de;
    // Re-anchor every so often so the running E_n does not drift.
    if (n % 64 == 0) e_n = std::exp(st.log_e(n + 1));
    zn *= z;
  }
  const double e_last = std::exp(st.log_e(n_segments));
  out.stable = stable + e_last;
  out.laplace = (-std::expm1(st.log_e(1)) + weighted) / st.p;
  out.truncation = std::pow(std::abs(z), static_cast<double>(n_segments)) * e_last;
  out.rounding = 4.0 * kEps * static_cast<double>(n_segments + 1) * (abs_sum + e1);
  return out;
}

Staircase staircase_of(const PhiParams& pr) { return Staircase{pr.p, pr.q, pr.a, pr.b}; }

// |C z / (1 - z)|, the factor turning an error in `stable` into an error in Phi.
double phi_weight(const PhiParams& pr) {
  return normalization(pr) * std::abs(pr.z / (1.0 - pr.z));
}

std::uint64_t phi_segment_count(const PhiParams& pr, double tol, std::uint64_t max_terms,
                                const char* what) {
  const double weight = std::max(phi_weight(pr), 1.0 / pr.p);
  return segment_count(staircase_of(pr), std::abs(pr.z), weight, tol, max_terms, what);
}

}  // namespace

double delta(const DeltaMap& d, double y) {
  return (y + d.a) * std::pow(y + d.b, d.ratio);
}

double delta_inverse(const DeltaMap& d, double t) {
  const double t0 = delta(d, 0.0);
  if (!(t >= t0)) throw DomainError("t", "t>=Delta(0) required");
  if (t == t0) return 0.0;
  const double x = log_delta_inverse(d, std::log(t));
  if (!(std::abs(delta(d, x) - t) <= 1e-12 * t)) {
    std::ostringstream os;
    os << "delta_inverse: residual above 1e-12 relative at t = " << t;
    throw ConvergenceFailure(os.str());
  }
  return x;
}

std::uint64_t j_of_y(const DeltaMap& d, double y) {
  if (y < log_delta(d, 0.0)) return 0;
  return snap_floor(log_delta_inverse(d, y));
}

std::uint64_t n_of_y_closed_form(double a, double b, double y) {
  // (n+a)(n+b) = e^y, with the root written as 2(e^y - ab)/((a+b) + sqrt(D))
  // to avoid cancelling against a+b.
  const double ey = std::exp(y);
  if (!std::isfinite(ey)) return snap_floor(std::exp(0.5 * y) - 0.5 * (a + b));
  const double disc = (a - b) * (a - b) + 4.0 * ey;
  const double n = 2.0 * (ey - a * b) / ((a + b) + std::sqrt(disc));
  return snap_floor(n);
}

SegmentDecomposition build_segments(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(params, Route::SingleIntegralSegments, tol.relax_shift_hypothesis);
  const Staircase st = staircase_of(pr);
  const std::uint64_t n_seg =
      phi_segment_count(pr, tol.target_abs_tol, tol.max_terms, "build_segments");
  SegmentDecomposition out;
  out.breakpoints.reserve(n_seg);
  out.coefficients.reserve(n_seg);
  const DeltaMap d{pr.a, pr.b, pr.q / pr.p};
  complex zn = pr.z;
  for (std::uint64_t n = 1; n <= n_seg; ++n) {
    out.breakpoints.push_back(log_delta(d, static_cast<double>(n)));
    out.coefficients.push_back(zn);
    zn *= pr.z;
  }
  out.truncation_tail = std::pow(std::abs(pr.z), static_cast<double>(n_seg)) *
                        std::exp(st.log_e(n_seg)) / pr.p;
  return out;
}

EvalResult phi_single_integral_segments(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(params, Route::SingleIntegralSegments, tol.relax_shift_hypothesis);
  if (pr.z == complex(0.0)) return EvalResult{0.0, 0.0, Route::SingleIntegralSegments, 0};
  const std::uint64_t n_seg =
      phi_segment_count(pr, tol.target_abs_tol, tol.max_terms, "phi_single_integral_segments");
  const StaircaseSum s = sum_staircase(staircase_of(pr), pr.z, n_seg);
  const complex front = normalization(pr) * pr.z / (1.0 - pr.z);
  EvalResult out;
  out.value = front * s.stable;
  out.abs_error_estimate = phi_weight(pr) * (s.truncation + s.rounding) +
                           2.0 * kEps * std::abs(out.value);
  out.route = Route::SingleIntegralSegments;
  out.terms_or_evals = n_seg;
  return out;
}

EvalResult staircase_laplace_integral(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(params, Route::SingleIntegralSegments, tol.relax_shift_hypothesis);
  const Staircase st = staircase_of(pr);
  const std::uint64_t n_seg = segment_count(st, std::abs(pr.z), 1.0 / pr.p, tol.target_abs_tol,
                                            tol.max_terms, "staircase_laplace_integral");
  const StaircaseSum s = sum_staircase(st, pr.z, n_seg);
  EvalResult out;
  out.value = s.laplace;
  out.abs_error_estimate = (s.truncation + s.rounding) / pr.p + 2.0 * kEps * std::abs(s.laplace);
  out.route = Route::SingleIntegralSegments;
  out.terms_or_evals = n_seg;
  return out;
}

EvalResult phi_single_integral_quadrature(const PhiParams& params, const ToleranceConfig& tol,
                                          StaircaseIndex index) {
  validate(tol);
  const auto pr = validate(params, Route::SingleIntegralQuad, tol.relax_shift_hypothesis);
  if (index == StaircaseIndex::ClosedForm && pr.p != pr.q)
    throw DomainError("q", "p==q required for the closed-form index");
  if (pr.z == complex(0.0)) return EvalResult{0.0, 0.0, Route::SingleIntegralQuad, 0};

  const double x = pr.z.real();
  const double weight = phi_weight(pr) * pr.p;  // |d Phi / d I|
  // Half the budget goes to the cut at y_N, half to the quadrature.
  const SegmentDecomposition seg = [&] {
    ToleranceConfig half = tol;
    half.target_abs_tol = 0.5 * tol.target_abs_tol;
    return build_segments(pr, half);
  }();
  const DeltaMap d{pr.a, pr.b, pr.q / pr.p};
  const double p = pr.p;
  quad::QuadratureProblem problem;
  problem.lo = 0.0;
  problem.hi = seg.breakpoints.back();
  problem.forced_split_points = seg.breakpoints;
  if (index == StaircaseIndex::ClosedForm) {
    problem.integrand = [p, x, a = pr.a, b = pr.b](double y) {
      return std::exp(-p * y) * std::pow(x, static_cast<double>(n_of_y_closed_form(a, b, y)));
    };
  } else {
    problem.integrand = [p, x, d](double y) {
      return std::exp(-p * y) * std::pow(x, static_cast<double>(j_of_y(d, y)));
    };
  }
  const double quad_tol = 0.5 * tol.target_abs_tol / std::max(weight, 1.0);
  const quad::QuadratureOutcome q =
      quad::integrate_adaptive(problem, quad_tol, tol.max_function_evals);

  const double front = normalization(pr) * x / (1.0 - x);
  EvalResult out;
  out.value = front * (1.0 - p * q.value);
  out.abs_error_estimate = weight * (q.error_estimate + seg.truncation_tail) +
                           2.0 * kEps * (std::abs(front) + std::abs(out.value));
  out.route = Route::SingleIntegralQuad;
  out.terms_or_evals = q.evals;
  return out;
}

EvalResult lerch_single_integral(double s, double a, double z, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(LerchParams{s, a, z, 0.0}, Route::LerchIntegral,
                           tol.relax_shift_hypothesis);
  const double head = std::pow(pr.a, -pr.s);
  if (z == 0.0) return EvalResult{head, 0.0, Route::LerchIntegral, 0};
  const Staircase st{s, 0.0, a, a};
  const double weight = std::abs(z / (1.0 - z));
  const std::uint64_t n_seg = segment_count(st, std::abs(z), std::max(weight, 1e-300),
                                            tol.target_abs_tol, tol.max_terms,
                                            "lerch_single_integral");
  const StaircaseSum sum = sum_staircase(st, z, n_seg);
  EvalResult out;
  out.value = head + weight * sum.stable;
  out.abs_error_estimate =
      weight * (sum.truncation + sum.rounding) + 2.0 * kEps * std::abs(out.value);
  out.route = Route::LerchIntegral;
  out.terms_or_evals = n_seg;
  return out;
}

}  // namespace gpolylog
