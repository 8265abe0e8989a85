#pragma once

// Numerical checks of the analytic properties of Phi and of
//
//   psi(p) = (Phi_{p,q}(a,b;x) / ((1+a)^p (1+b)^q) - x/(1-x)) (x-1)/(p x)
//          = int_0^inf e^{-p t} x^{j(t)} dt,
//
// as a function of p: complete monotonicity (forward differences),
// log-convexity, Turan-type gaps and the elementary bounds on Phi.

#include <functional>
#include <string_view>
#include <vector>

#include "gpolylog/core.hpp"

namespace gpolylog {

enum class Property {
  CompleteMonotonicity,
  LogConvexity,
  TuranPsi,
  TuranPhiQ,
  TuranPhiP,
  Bounds,
};

std::string_view property_name(Property p);

/// Which evaluator supplies Phi. Verdicts must not depend on the choice.
enum class PhiSource { Series, Segments };

struct AnalysisOptions {
  ToleranceConfig tol{};
  PhiSource source = PhiSource::Series;
};

struct PsiParams {
  double q = 0.75;
  double a = 1.4;
  double b = 1.2;
  double x = 0.5;
};

/// Throws DomainError unless q > 0, a, b > 1 and x in (0,1).
void validate(const PsiParams& ctx);

struct GapEntry {
  double point = 0.0;  // p for the psi checks, x for the Phi checks
  int index = 0;       // difference order k (CM); 0 lower / 1 upper (Bounds); else 0
  double gap = 0.0;    // signed slack, >= 0 is a pass
};

struct PropertyReport {
  Property property = Property::CompleteMonotonicity;
  std::vector<GapEntry> entries;
  double min_gap = 0.0;
  double tolerance = 0.0;
  bool verdict = false;  // min_gap >= -tolerance
};

double phi_value(const PhiParams& params, const AnalysisOptions& opt = {});

double psi(double p, const PsiParams& ctx, const AnalysisOptions& opt = {});

using RealFunction = std::function<double(double)>;

/// Delta_h^k f(p0) = sum_j (-1)^{k-j} C(k,j) f(p0 + j h), k <= 8.
double forward_differences(const RealFunction& f, double p0, double h, int k);

/// (-1)^k Delta_h^k f(p) >= -tol for k = 0..max_order (max_order <= 6) at each p.
PropertyReport check_complete_monotonicity(const RealFunction& f, const std::vector<double>& grid,
                                           int max_order, double h, double tol);
PropertyReport check_complete_monotonicity(const PsiParams& ctx, const std::vector<double>& grid,
                                           int max_order, double h, double tol,
                                           const AnalysisOptions& opt = {});

/// log f(p-h) - 2 log f(p) + log f(p+h) >= -tol at every grid point with p - h > 0.
PropertyReport check_log_convexity(const RealFunction& f, const std::vector<double>& grid,
                                   double h, double tol);
PropertyReport check_log_convexity(const PsiParams& ctx, const std::vector<double>& grid,
                                   double h, double tol, const AnalysisOptions& opt = {});

/// f(p) f(p+2) - f(p+1)^2
double turan_gap(const RealFunction& f, double p);
double turan_gap_psi(double p, const PsiParams& ctx, const AnalysisOptions& opt = {});
PropertyReport check_turan_psi(const PsiParams& ctx, const std::vector<double>& grid, double tol,
                               const AnalysisOptions& opt = {});

/// Phi_{p,q} Phi_{p,q+2} - Phi_{p,q+1}^2 at real x = params.z.
double turan_gap_phi_q(const PhiParams& params, const AnalysisOptions& opt = {});
/// Phi_{p,q} Phi_{p+2,q} - Phi_{p+1,q}^2 at real x = params.z.
double turan_gap_phi_p(const PhiParams& params, const AnalysisOptions& opt = {});
/// Gaps at params with z replaced by each x in the grid.
PropertyReport check_turan_phi(Property which, const PhiParams& params,
                               const std::vector<double>& x_grid, double tol,
                               const AnalysisOptions& opt = {});

/// Lower gap Phi - x and upper gap (1+a)^p (1+b)^q x/(1-x) - Phi for each x.
PropertyReport bounds_check(const PhiParams& params, const std::vector<double>& x_grid,
                            double tol, const AnalysisOptions& opt = {});

/// lo, lo + step, ... up to hi inclusive (with 1e-9 step slack). Empty if lo > hi.
std::vector<double> uniform_grid(double lo, double hi, double step);

}  // namespace gpolylog
