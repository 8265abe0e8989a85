#include "gpolylog/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpolylog/dirichlet_laplace.hpp"
#include "gpolylog/series.hpp"

namespace gpolylog {
namespace {

PropertyReport finish(Property prop, std::vector<GapEntry> entries, double tol) {
  PropertyReport r;
  r.property = prop;
  r.entries = std::move(entries);
  r.tolerance = tol;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (const auto& e : r.entries) r.min_gap = std::min(r.min_gap, e.gap);
  r.verdict = r.min_gap >= -tol;
  return r;
}

void require_real_x(complex z) {
  if (z.imag() != 0.0 || !(z.real() > 0.0 && z.real() < 1.0))
    throw DomainError("x", "real x in (0,1) required");
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::CompleteMonotonicity: return "cm";
    case Property::LogConvexity: return "log-convexity";
    case Property::TuranPsi: return "turan-psi";
    case Property::TuranPhiQ: return "turan-phi-q";
    case Property::TuranPhiP: return "turan-phi-p";
    case Property::Bounds: return "bounds";
  }
  return "unknown";
}

void validate(const PsiParams& ctx) {
  if (!(ctx.q > 0.0) || !std::isfinite(ctx.q)) throw DomainError("q", "q>0 required");
  if (!(ctx.a > 1.0) || !std::isfinite(ctx.a)) throw DomainError("a", "a>1 required");
  if (!(ctx.b > 1.0) || !std::isfinite(ctx.b)) throw DomainError("b", "b>1 required");
  if (!(ctx.x > 0.0 && ctx.x < 1.0)) throw DomainError("x", "real x in (0,1) required");
}

double phi_value(const PhiParams& params, const AnalysisOptions& opt) {
  const EvalResult r = opt.source == PhiSource::Series
                           ? phi_series(params, opt.tol)
                           : phi_single_integral_segments(params, opt.tol);
  return r.value.real();
}

double psi(double p, const PsiParams& ctx, const AnalysisOptions& opt) {
  validate(ctx);
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("p", "p>0 required");
  const PhiParams pr{p, ctx.q, ctx.a, ctx.b, ctx.x};
  const double x = ctx.x;
  const double phi = phi_value(pr, opt);
  return (phi / normalization(pr) - x / (1.0 - x)) * (x - 1.0) / (p * x);
}

double forward_differences(const RealFunction& f, double p0, double h, int k) {
  if (k < 0 || k > 8) throw DomainError("k", "0<=k<=8 required");
  if (!(h > 0.0)) throw DomainError("h", "h>0 required");
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;
    acc += sign * binomial(k, j) * f(p0 + j * h);
  }
  return acc;
}

PropertyReport check_complete_monotonicity(const RealFunction& f, const std::vector<double>& grid,
                                           int max_order, double h, double tol) {
  if (max_order < 0 || max_order > 6) throw DomainError("max_order", "0<=max_order<=6 required");
  if (!(h > 0.0)) throw DomainError("h", "h>0 required");
  std::vector<GapEntry> entries;
  entries.reserve(grid.size() * static_cast<std::size_t>(max_order + 1));
  for (double p : grid) {
    // One set of samples per grid point serves every order.
    std::vector<double> samples;
    samples.reserve(max_order + 1);
    for (int j = 0; j <= max_order; ++j) samples.push_back(f(p + j * h));
    for (int k = 0; k <= max_order; ++k) {
      double diff = 0.0;
      for (int j = 0; j <= k; ++j)
        diff += ((k - j) % 2 == 0 ? 1.0 : -1.0) * binomial(k, j) * samples[j];
      entries.push_back({p, k, (k % 2 == 0 ? 1.0 : -1.0) * diff});
    }
  }
  return finish(Property::CompleteMonotonicity, std::move(entries), tol);
}

PropertyReport check_complete_monotonicity(const PsiParams& ctx, const std::vector<double>& grid,
                                           int max_order, double h, double tol,
                                           const AnalysisOptions& opt) {
  validate(ctx);
  return check_complete_monotonicity([&](double p) { return psi(p, ctx, opt); }, grid, max_order,
                                     h, tol);
}

PropertyReport check_log_convexity(const RealFunction& f, const std::vector<double>& grid,
                                   double h, double tol) {
  if (!(h > 0.0)) throw DomainError("h", "h>0 required");
  std::vector<GapEntry> entries;
  for (double p : grid) {
    if (!(p - h > 0.0)) continue;
    const double gap = std::log(f(p - h)) - 2.0 * std::log(f(p)) + std::log(f(p + h));
    entries.push_back({p, 0, gap});
  }
  return finish(Property::LogConvexity, std::move(entries), tol);
}

PropertyReport check_log_convexity(const PsiParams& ctx, const std::vector<double>& grid,
                                   double h, double tol, const AnalysisOptions& opt) {
  validate(ctx);
  return check_log_convexity([&](double p) { return psi(p, ctx, opt); }, grid, h, tol);
}

double turan_gap(const RealFunction& f, double p) {
  const double mid = f(p + 1.0);
  return f(p) * f(p + 2.0) - mid * mid;
}

double turan_gap_psi(double p, const PsiParams& ctx, const AnalysisOptions& opt) {
  return turan_gap([&](double t) { return psi(t, ctx, opt); }, p);
}

PropertyReport check_turan_psi(const PsiParams& ctx, const std::vector<double>& grid, double tol,
                               const AnalysisOptions& opt) {
  validate(ctx);
  std::vector<GapEntry> entries;
  entries.reserve(grid.size());
  for (double p : grid) entries.push_back({p, 0, turan_gap_psi(p, ctx, opt)});
  return finish(Property::TuranPsi, std::move(entries), tol);
}

double turan_gap_phi_q(const PhiParams& params, const AnalysisOptions& opt) {
  require_real_x(params.z);
  PhiParams s1 = params, s2 = params;
  s1.q += 1.0;
  s2.q += 2.0;
  const double mid = phi_value(s1, opt);
  return phi_value(params, opt) * phi_value(s2, opt) - mid * mid;
}

double turan_gap_phi_p(const PhiParams& params, const AnalysisOptions& opt) {
  require_real_x(params.z);
  PhiParams s1 = params, s2 = params;
  s1.p += 1.0;
  s2.p += 2.0;
  const double mid = phi_value(s1, opt);
  return phi_value(params, opt) * phi_value(s2, opt) - mid * mid;
}

PropertyReport check_turan_phi(Property which, const PhiParams& params,
                               const std::vector<double>& x_grid, double tol,
                               const AnalysisOptions& opt) {
  if (which != Property::TuranPhiQ && which != Property::TuranPhiP)
    throw DomainError("property", "turan-phi-q or turan-phi-p required");
  std::vector<GapEntry> entries;
  entries.reserve(x_grid.size());
  for (double x : x_grid) {
    PhiParams pr = params;
    pr.z = x;
    const double gap =
        which == Property::TuranPhiQ ? turan_gap_phi_q(pr, opt) : turan_gap_phi_p(pr, opt);
    entries.push_back({x, 0, gap});
  }
  return finish(which, std::move(entries), tol);
}

PropertyReport bounds_check(const PhiParams& params, const std::vector<double>& x_grid,
                            double tol, const AnalysisOptions& opt) {
  std::vector<GapEntry> entries;
  entries.reserve(2 * x_grid.size());
  for (double x : x_grid) {
    PhiParams pr = params;
    pr.z = x;
    require_real_x(pr.z);
    const double phi = phi_value(pr, opt);
    const double upper = normalization(pr) * x / (1.0 - x);
    entries.push_back({x, 0, phi - x});
    entries.push_back({x, 1, upper - phi});
  }
  return finish(Property::Bounds, std::move(entries), tol);
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  std::vector<double> g;
  if (!(step > 0.0) || lo > hi || !std::isfinite(lo) || !std::isfinite(hi)) return g;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  g.reserve(count);
  for (std::size_t i = 0; i < count; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

}  // namespace gpolylog
