#include "gpolylog/hadamard_double.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gpolylog/quadrature.hpp"
#include "gpolylog/series.hpp"

namespace gpolylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Exponential envelope for v^sigma e^{-c v} / (1 - r e^{-v}) on [0, inf),
// scaled by `extra`, in the form quad::integrate_semi_infinite expects.
void set_envelope(quad::QuadratureProblem& pb, double sigma, double c, double r, double extra) {
  if (sigma <= 0.0) {
    pb.decay_rate = c;
    pb.decay_prefactor = extra / (1.0 - r);
    pb.tail_start = 1.0;
  } else {
    // v^sigma e^{-c v / 2} <= (2 sigma / (c e))^sigma
    pb.decay_rate = 0.5 * c;
    pb.decay_prefactor = extra * std::pow(2.0 * sigma / (c * std::numbers::e), sigma) / (1.0 - r);
    pb.tail_start = 0.0;
  }
}

// int_0^inf v^{p-1} e^{-c v} z^m / (1 - z e^{-v}) dv
quad::QuadratureOutcome kernel_integral(double p, double c, double z, double zm, double tol,
                                        std::uint64_t max_evals) {
  quad::QuadratureProblem pb;
  pb.lo = 0.0;
  pb.hi = quad::kInfinity;
  pb.singularity_exponent = p - 1.0;
  pb.integrand = [p, c, z, zm](double v) {
    const double ev = std::exp(-v);
    return zm * std::pow(v, p - 1.0) * std::exp(-c * v) / (1.0 - z * ev);
  };
  set_envelope(pb, p - 1.0, c, z, zm);
  return quad::integrate(pb, tol, max_evals);
}

// Smallest M with C |z|^{M+2} (M+1+b)^{-q} (a+2+M)^{-p} / (1-|z|) <= target:
// the bound on every strip beyond M once the kernel has been split.
std::size_t strip_count(const PhiParams& pr, double target, std::uint64_t max_terms) {
  const double r = std::abs(pr.z);
  const double log_c = std::log(normalization(pr)) - std::log1p(-r);
  const double log_target = std::log(target);
  const double log_r = std::log(r);
  for (std::size_t m = 1;; ++m) {
    const double md = static_cast<double>(m);
    const double bound = log_c + (md + 2.0) * log_r - pr.q * std::log(md + 1.0 + pr.b) -
                         pr.p * std::log(pr.a + 2.0 + md);
    if (bound <= log_target) return m;
    if (m >= max_terms) {
      std::ostringstream os;
      os << "phi_double_integral: strip tail bound not met after " << m << " strips";
      throw NonConvergence(os.str());
    }
  }
}

double strip_weight(double b, double q, double m) {
  // ((m+b)^{-q} - (m+1+b)^{-q}) / q without cancelling for large m
  const double head = std::pow(m + b, -q);
  return -head * std::expm1(-q * std::log1p(1.0 / (m + b))) / q;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "x>0 required");
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  x -= 1.0;
  double acc = kLanczos[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

StripWeights strip_weights(double b, double q, std::size_t count) {
  StripWeights w;
  w.zero_region = -std::expm1(-q * std::log1p(b)) / q;
  w.strips.reserve(count);
  for (std::size_t m = 1; m <= count; ++m) w.strips.push_back(strip_weight(b, q, static_cast<double>(m)));
  w.tail = std::pow(static_cast<double>(count) + 1.0 + b, -q) / q;
  return w;
}

DoubleIntegralDetail phi_double_integral_detail(const PhiParams& params,
                                                const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(params, Route::DoubleIntegral, tol.relax_shift_hypothesis);
  DoubleIntegralDetail out;
  out.result.route = Route::DoubleIntegral;
  out.result.terms_or_evals = 0;
  if (pr.z == complex(0.0)) return out;

  const double z = pr.z.real();
  const double norm = normalization(pr);
  const double gp = gamma_fn(pr.p);
  const double head_weight = std::pow(1.0 + pr.b, -pr.q);  // q * sum of all strip weights
  const double front = norm * z * pr.q / gp;
  const double target = tol.target_abs_tol / 3.0;
  // An error e in any v-integral moves Phi by at most front * e * (1+b)^{-q} / q.
  const double inner_tol = target / (norm * z * head_weight / gp);
  const std::size_t m_max = strip_count(pr, target, tol.max_terms);

  std::uint64_t evals = 0;
  auto budget = [&] {
    if (evals >= tol.max_function_evals)
      throw QuadratureFailure("phi_double_integral: evaluation budget exhausted");
    return tol.max_function_evals - evals;
  };
  const auto v_inf = kernel_integral(pr.p, pr.a + 1.0, z, 1.0, inner_tol, budget());
  evals += v_inf.evals;

  double correction = 0.0;
  double error = v_inf.error_estimate * head_weight / pr.q;
  double zm = 1.0;
  out.strip_contributions.reserve(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    zm *= z;
    const double w = strip_weight(pr.b, pr.q, static_cast<double>(m));
    const auto r_m = kernel_integral(pr.p, pr.a + 1.0 + static_cast<double>(m), z, zm,
                                     inner_tol, budget());
    evals += r_m.evals;
    correction += w * r_m.value;
    error += w * r_m.error_estimate;
    out.strip_contributions.push_back(front * w * (v_inf.value - r_m.value));
  }
  const double md = static_cast<double>(m_max);
  const double tail = norm * std::pow(z, md + 2.0) * std::pow(md + 1.0 + pr.b, -pr.q) *
                      std::pow(pr.a + 2.0 + md, -pr.p) / (1.0 - z);

  const double inner = v_inf.value * head_weight / pr.q - correction;
  out.result.value = front * inner;
  out.result.abs_error_estimate = front * error + tail +
                                  4.0 * kEps * front * (v_inf.value * head_weight / pr.q);
  out.result.terms_or_evals = evals;
  return out;
}

EvalResult phi_double_integral(const PhiParams& params, const ToleranceConfig& tol) {
  return phi_double_integral_detail(params, tol).result;
}

EvalResult phi_double_integral_expanded(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(params, Route::SingleIntegralSegments, tol.relax_shift_hypothesis);
  EvalResult out;
  out.route = Route::DoubleIntegral;
  out.terms_or_evals = 0;
  if (pr.z == complex(0.0)) return out;

  const double norm = normalization(pr);
  const double r = std::abs(pr.z);
  const double target = tol.target_abs_tol / 3.0;
  const std::size_t m_max = strip_count(pr, target, tol.max_terms);
  const double head_weight = std::pow(1.0 + pr.b, -pr.q);
  const complex front = norm * pr.z * pr.q;

  // sum_{j>=0} z^j / (c+j)^p to absolute accuracy `acc` (the Gamma(p) of each
  // closed-form v-integral cancels against the prefactor).
  std::uint64_t terms = 0;
  auto shifted_lerch = [&](double c, double acc) {
    ToleranceConfig t = tol;
    t.target_abs_tol = acc;
    const EvalResult e = lerch_series(LerchParams{pr.p, c, pr.z, 0.0}, t);
    terms += e.terms_or_evals;
    return e;
  };
  const double inner_tol = target / (norm * r * head_weight);
  const EvalResult v_inf = shifted_lerch(pr.a + 1.0, inner_tol);
  complex correction = 0.0;
  double error = v_inf.abs_error_estimate * head_weight / pr.q;
  complex zm = 1.0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    zm *= pr.z;
    const double w = strip_weight(pr.b, pr.q, static_cast<double>(m));
    const double rm = std::pow(r, static_cast<double>(m));
    const EvalResult r_m = shifted_lerch(pr.a + 1.0 + static_cast<double>(m),
                                         rm > 0.0 ? inner_tol / rm : inner_tol);
    correction += w * zm * r_m.value;
    error += w * rm * r_m.abs_error_estimate;
  }
  const double md = static_cast<double>(m_max);
  const double tail = norm * std::pow(r, md + 2.0) * std::pow(md + 1.0 + pr.b, -pr.q) *
                      std::pow(pr.a + 2.0 + md, -pr.p) / (1.0 - r);
  out.value = front * (v_inf.value * head_weight / pr.q - correction);
  out.abs_error_estimate = std::abs(front) * error + tail + 4.0 * kEps * std::abs(out.value);
  out.terms_or_evals = terms;
  return out;
}

EvalResult phi_double_integral_known(const PhiParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(params, Route::DoubleIntegralKnown, tol.relax_shift_hypothesis);
  EvalResult out;
  out.route = Route::DoubleIntegralKnown;
  out.terms_or_evals = 0;
  if (pr.z == complex(0.0)) return out;

  const double z = pr.z.real();
  const double gp = gamma_fn(pr.p);
  const double gq = gamma_fn(pr.q);
  const double front = normalization(pr) * z / (gp * gq);
  const double outer_tol = 0.5 * tol.target_abs_tol / front;
  // Inner errors are integrated against x^{p-1} e^{-(a+1)x}.
  const double inner_tol = outer_tol / (gp * std::pow(pr.a + 1.0, -pr.p));

  std::uint64_t evals = 0;
  const double p = pr.p, q = pr.q, a = pr.a, b = pr.b;
  const std::uint64_t max_evals = tol.max_function_evals;
  auto inner = [&](double x) {
    const double zx = z * std::exp(-x);
    const double budget = max_evals > evals ? static_cast<double>(max_evals - evals) : 0.0;
    if (budget <= 0.0) throw QuadratureFailure("phi_double_integral_known: evaluation budget exhausted");
    quad::QuadratureProblem pb;
    pb.lo = 0.0;
    pb.hi = quad::kInfinity;
    pb.singularity_exponent = q - 1.0;
    pb.integrand = [q, b, zx](double y) {
      return std::pow(y, q - 1.0) * std::exp(-(b + 1.0) * y) / (1.0 - zx * std::exp(-y));
    };
    set_envelope(pb, q - 1.0, b + 1.0, zx, 1.0);
    const auto res = quad::integrate(pb, inner_tol, static_cast<std::uint64_t>(budget));
    evals += res.evals;
    return res.value;
  };

  quad::QuadratureProblem outer;
  outer.lo = 0.0;
  outer.hi = quad::kInfinity;
  outer.singularity_exponent = p - 1.0;
  outer.integrand = [&, p, a](double x) {
    return std::pow(x, p - 1.0) * std::exp(-(a + 1.0) * x) * inner(x);
  };
  // inner(x) <= Gamma(q) (b+1)^{-q} / (1 - z) up to its own small error
  set_envelope(outer, p - 1.0, a + 1.0, z, 2.0 * gq * std::pow(b + 1.0, -q));
  const auto res = quad::integrate(outer, outer_tol, max_evals);

  out.value = front * res.value;
  out.abs_error_estimate =
      front * (res.error_estimate + inner_tol * gp * std::pow(a + 1.0, -p)) +
      4.0 * kEps * std::abs(out.value);
  out.terms_or_evals = evals + res.evals;
  return out;
}

EvalResult lerch_kernel_integral(double s, double a, double z, const ToleranceConfig& tol) {
  validate(tol);
  const auto pr = validate(LerchParams{s, a, z, 0.0}, Route::LerchKernelIntegral,
                           tol.relax_shift_hypothesis);
  const double head = std::pow(pr.a, -pr.s);
  EvalResult out;
  out.route = Route::LerchKernelIntegral;
  out.value = head;
  out.terms_or_evals = 0;
  if (z == 0.0) return out;
  const double gs = gamma_fn(s);
  const double front = z / gs;
  const auto res = kernel_integral(s, a + 1.0, z, 1.0, tol.target_abs_tol / front,
                                   tol.max_function_evals);
  out.value = head + front * res.value;
  out.abs_error_estimate = front * res.error_estimate + 4.0 * kEps * std::abs(out.value);
  out.terms_or_evals = res.evals;
  return out;
}

}  // namespace gpolylog
