#include "gpolylog/gpolylog.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "gpolylog/analysis.hpp"
#include "gpolylog/dirichlet_laplace.hpp"
#include "gpolylog/hadamard_double.hpp"
#include "gpolylog/series.hpp"

using namespace gpolylog;

struct gpl_context {
  ToleranceConfig tol;
  bool analysis_segments = false;
  std::string last_error;
  std::string last_field;
};

struct gpl_report {
  PropertyReport report;
};

namespace {

constexpr Route kRoutes[] = {
    Route::Series,          Route::SingleIntegralQuad, Route::SingleIntegralSegments,
    Route::DoubleIntegral,  Route::DoubleIntegralKnown, Route::Hypergeometric,
    Route::LerchIntegral,   Route::LerchSeries,        Route::LerchLambdaSeries,
    Route::LerchKernelIntegral, Route::PolylogSeries};

constexpr Property kProperties[] = {Property::CompleteMonotonicity, Property::LogConvexity,
                                    Property::TuranPsi,             Property::TuranPhiQ,
                                    Property::TuranPhiP,            Property::Bounds};

bool valid_route(gpl_route r) { return r >= 0 && r < static_cast<int>(std::size(kRoutes)); }
bool valid_property(gpl_property p) {
  return p >= 0 && p < static_cast<int>(std::size(kProperties));
}

gpl_status fail(gpl_context* ctx, gpl_status s, std::string msg, std::string field = {}) {
  if (ctx) {
    ctx->last_error = std::move(msg);
    ctx->last_field = std::move(field);
  }
  return s;
}

// Runs body and translates exceptions into status codes.
template <class Body>
gpl_status guarded(gpl_context* ctx, Body&& body) {
  if (!ctx) return GPL_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  ctx->last_field.clear();
  try {
    body();
    return GPL_OK;
  } catch (const DomainError& e) {
    return fail(ctx, GPL_E_DOMAIN, e.what(), e.field());
  } catch (const NonConvergence& e) {
    return fail(ctx, GPL_E_NONCONVERGENCE, e.what());
  } catch (const QuadratureFailure& e) {
    return fail(ctx, GPL_E_QUADRATURE, e.what());
  } catch (const NonFiniteSample& e) {
    return fail(ctx, GPL_E_NONFINITE, e.what());
  } catch (const ConvergenceFailure& e) {
    return fail(ctx, GPL_E_CONVERGENCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, GPL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, GPL_E_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, GPL_E_INTERNAL, "unknown error");
  }
}

void store(const EvalResult& r, gpl_result* out) {
  out->value_re = r.value.real();
  out->value_im = r.value.imag();
  out->abs_error_estimate = r.abs_error_estimate;
  for (std::size_t i = 0; i < std::size(kRoutes); ++i)
    if (kRoutes[i] == r.route) out->route = static_cast<gpl_route>(i);
  out->terms_or_evals = r.terms_or_evals;
}

AnalysisOptions options(const gpl_context* ctx) {
  AnalysisOptions o;
  o.tol = ctx->tol;
  o.source = ctx->analysis_segments ? PhiSource::Segments : PhiSource::Series;
  return o;
}

PsiParams to_psi(const gpl_psi_params& p) { return PsiParams{p.q, p.a, p.b, p.x}; }

const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Figure parameters, verbatim.
const gpl_preset kPresets[] = {
    {"fig1", GPL_PROP_CM, 'p', kNaN, 0.75, 1.4, 1.2, 0.5, 0.1, 5.0, 0.1, 5, 1e-9},
    {"fig2", GPL_PROP_BOUNDS, 'x', 0.5, 0.75, 1.2, 1.3, kNaN, 0.05, 0.95, 0.05, 0, 0.0},
    {"fig3", GPL_PROP_LOG_CONVEXITY, 'p', kNaN, 0.75, 1.5, 1.2, 0.5, 0.1, 5.0, 0.1, 0, 1e-9},
    {"fig4", GPL_PROP_TURAN_PSI, 'p', kNaN, 0.75, 1.6, 1.2, 0.5, 0.1, 5.0, 0.1, 0, 1e-12},
    {"fig5", GPL_PROP_TURAN_PHI_Q, 'x', 0.5, 0.75, 1.4, 1.8, kNaN, 0.05, 0.95, 0.05, 0, 1e-12},
};

}  // namespace

extern "C" {

gpl_status gpl_context_create(gpl_context** out) {
  if (!out) return GPL_E_INVALID_ARGUMENT;
  *out = new (std::nothrow) gpl_context();
  return *out ? GPL_OK : GPL_E_INTERNAL;
}

void gpl_context_destroy(gpl_context* ctx) { delete ctx; }

gpl_status gpl_context_set_tolerance(gpl_context* ctx, double abs_tol) {
  return guarded(ctx, [&] {
    ToleranceConfig t = ctx->tol;
    t.target_abs_tol = abs_tol;
    validate(t);
    ctx->tol = t;
  });
}

gpl_status gpl_context_set_max_terms(gpl_context* ctx, uint64_t max_terms) {
  return guarded(ctx, [&] {
    ToleranceConfig t = ctx->tol;
    t.max_terms = max_terms;
    validate(t);
    ctx->tol = t;
  });
}

gpl_status gpl_context_set_max_evals(gpl_context* ctx, uint64_t max_evals) {
  return guarded(ctx, [&] {
    ToleranceConfig t = ctx->tol;
    t.max_function_evals = max_evals;
    validate(t);
    ctx->tol = t;
  });
}

gpl_status gpl_context_set_fd_step(gpl_context* ctx, double h) {
  return guarded(ctx, [&] {
    ToleranceConfig t = ctx->tol;
    t.fd_step = h;
    validate(t);
    ctx->tol = t;
  });
}

gpl_status gpl_context_set_relax_domain(gpl_context* ctx, int on) {
  return guarded(ctx, [&] { ctx->tol.relax_shift_hypothesis = on != 0; });
}

gpl_status gpl_context_set_extended_precision(gpl_context* ctx, int on) {
  return guarded(ctx, [&] { ctx->tol.extended_precision = on != 0; });
}

gpl_status gpl_context_set_analysis_segments(gpl_context* ctx, int on) {
  return guarded(ctx, [&] { ctx->analysis_segments = on != 0; });
}

const char* gpl_context_last_error(const gpl_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

const char* gpl_context_last_error_field(const gpl_context* ctx) {
  return ctx ? ctx->last_field.c_str() : "";
}

const char* gpl_status_name(gpl_status s) {
  switch (s) {
    case GPL_OK: return "ok";
    case GPL_E_DOMAIN: return "domain";
    case GPL_E_NONCONVERGENCE: return "non-convergence";
    case GPL_E_QUADRATURE: return "quadrature-failure";
    case GPL_E_NONFINITE: return "non-finite-sample";
    case GPL_E_CONVERGENCE: return "convergence-failure";
    case GPL_E_INVALID_ARGUMENT: return "invalid-argument";
    case GPL_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gpl_route_name(gpl_route r) {
  if (!valid_route(r)) return "";
  return route_name(kRoutes[r]).data();
}

gpl_status gpl_route_from_name(const char* name, gpl_route* out) {
  if (!name || !out) return GPL_E_INVALID_ARGUMENT;
  for (std::size_t i = 0; i < std::size(kRoutes); ++i) {
    if (route_name(kRoutes[i]) == name) {
      *out = static_cast<gpl_route>(i);
      return GPL_OK;
    }
  }
  return GPL_E_INVALID_ARGUMENT;
}

int gpl_route_is_lerch(gpl_route r) {
  return r == GPL_ROUTE_LERCH_INTEGRAL || r == GPL_ROUTE_LERCH_SERIES ||
         r == GPL_ROUTE_LERCH_LAMBDA || r == GPL_ROUTE_LERCH_KERNEL;
}

gpl_status gpl_phi(gpl_context* ctx, gpl_route route, const gpl_phi_params* params,
                   gpl_result* out) {
  if (!ctx) return GPL_E_INVALID_ARGUMENT;
  if (!params || !out) return fail(ctx, GPL_E_INVALID_ARGUMENT, "null argument");
  if (!valid_route(route) || gpl_route_is_lerch(route) || route == GPL_ROUTE_POLYLOG)
    return fail(ctx, GPL_E_INVALID_ARGUMENT, "route does not evaluate Phi");
  return guarded(ctx, [&] {
    const PhiParams pr{params->p, params->q, params->a, params->b,
                       complex(params->z_re, params->z_im)};
    const ToleranceConfig& t = ctx->tol;
    EvalResult r;
    switch (kRoutes[route]) {
      case Route::Series: r = phi_series(pr, t); break;
      case Route::SingleIntegralQuad: r = phi_single_integral_quadrature(pr, t); break;
      case Route::SingleIntegralSegments: r = phi_single_integral_segments(pr, t); break;
      case Route::DoubleIntegral: r = phi_double_integral(pr, t); break;
      case Route::DoubleIntegralKnown: r = phi_double_integral_known(pr, t); break;
      case Route::Hypergeometric: r = phi_via_hypergeometric(pr, t); break;
      default: throw std::logic_error("unreachable route");
    }
    store(r, out);
  });
}

gpl_status gpl_lerch(gpl_context* ctx, gpl_route route, const gpl_lerch_params* params,
                     gpl_result* out) {
  if (!ctx) return GPL_E_INVALID_ARGUMENT;
  if (!params || !out) return fail(ctx, GPL_E_INVALID_ARGUMENT, "null argument");
  if (!valid_route(route) || !gpl_route_is_lerch(route))
    return fail(ctx, GPL_E_INVALID_ARGUMENT, "route does not evaluate the Lerch transcendent");
  return guarded(ctx, [&] {
    const LerchParams pr{params->s, params->a, complex(params->z_re, params->z_im),
                         params->lambda};
    const ToleranceConfig& t = ctx->tol;
    const Route r = kRoutes[route];
    validate(pr, r, t.relax_shift_hypothesis);
    EvalResult res;
    switch (r) {
      case Route::LerchSeries: res = lerch_series(pr, t); break;
      case Route::LerchLambdaSeries: res = lerch_lambda_series(pr, t); break;
      case Route::LerchIntegral: res = lerch_single_integral(pr.s, pr.a, pr.z.real(), t); break;
      case Route::LerchKernelIntegral:
        res = lerch_kernel_integral(pr.s, pr.a, pr.z.real(), t);
        break;
      default: throw std::logic_error("unreachable route");
    }
    store(res, out);
  });
}

gpl_status gpl_polylog(gpl_context* ctx, double r, double z_re, double z_im, gpl_result* out) {
  if (!ctx) return GPL_E_INVALID_ARGUMENT;
  if (!out) return fail(ctx, GPL_E_INVALID_ARGUMENT, "null argument");
  return guarded(ctx, [&] { store(polylog_series(r, complex(z_re, z_im), ctx->tol), out); });
}

gpl_status gpl_psi(gpl_context* ctx, double p, const gpl_psi_params* params, double* out) {
  if (!ctx) return GPL_E_INVALID_ARGUMENT;
  if (!params || !out) return fail(ctx, GPL_E_INVALID_ARGUMENT, "null argument");
  return guarded(ctx, [&] { *out = psi(p, to_psi(*params), options(ctx)); });
}

const char* gpl_property_name(gpl_property p) {
  if (!valid_property(p)) return "";
  return property_name(kProperties[p]).data();
}

gpl_status gpl_property_from_name(const char* name, gpl_property* out) {
  if (!name || !out) return GPL_E_INVALID_ARGUMENT;
  for (std::size_t i = 0; i < std::size(kProperties); ++i) {
    if (property_name(kProperties[i]) == name) {
      *out = static_cast<gpl_property>(i);
      return GPL_OK;
    }
  }
  return GPL_E_INVALID_ARGUMENT;
}

gpl_status gpl_verify(gpl_context* ctx, const gpl_verify_request* req, gpl_report** out) {
  if (!ctx) return GPL_E_INVALID_ARGUMENT;
  if (!req || !out || (!req->grid && req->grid_len > 0))
    return fail(ctx, GPL_E_INVALID_ARGUMENT, "null argument");
  if (!valid_property(req->property)) return fail(ctx, GPL_E_INVALID_ARGUMENT, "unknown property");
  *out = nullptr;
  return guarded(ctx, [&] {
    const std::vector<double> grid(req->grid, req->grid + req->grid_len);
    const double h = req->h > 0.0 ? req->h : ctx->tol.fd_step;
    const AnalysisOptions opt = options(ctx);
    const PsiParams psi_ctx = to_psi(req->psi);
    const PhiParams phi{req->phi.p, req->phi.q, req->phi.a, req->phi.b, 0.0};
    PropertyReport rep;
    switch (kProperties[req->property]) {
      case Property::CompleteMonotonicity:
        rep = check_complete_monotonicity(psi_ctx, grid, req->max_order, h, req->tol, opt);
        break;
      case Property::LogConvexity:
        rep = check_log_convexity(psi_ctx, grid, h, req->tol, opt);
        break;
      case Property::TuranPsi: rep = check_turan_psi(psi_ctx, grid, req->tol, opt); break;
      case Property::TuranPhiQ:
        rep = check_turan_phi(Property::TuranPhiQ, phi, grid, req->tol, opt);
        break;
      case Property::TuranPhiP:
        rep = check_turan_phi(Property::TuranPhiP, phi, grid, req->tol, opt);
        break;
      case Property::Bounds: rep = bounds_check(phi, grid, req->tol, opt); break;
    }
    *out = new gpl_report{std::move(rep)};
  });
}

void gpl_report_destroy(gpl_report* rep) { delete rep; }

size_t gpl_report_size(const gpl_report* rep) { return rep ? rep->report.entries.size() : 0; }

gpl_status gpl_report_entry(const gpl_report* rep, size_t i, double* point, int* index,
                            double* gap) {
  if (!rep || i >= rep->report.entries.size()) return GPL_E_INVALID_ARGUMENT;
  const GapEntry& e = rep->report.entries[i];
  if (point) *point = e.point;
  if (index) *index = e.index;
  if (gap) *gap = e.gap;
  return GPL_OK;
}

double gpl_report_min_gap(const gpl_report* rep) { return rep ? rep->report.min_gap : kNaN; }
double gpl_report_tolerance(const gpl_report* rep) { return rep ? rep->report.tolerance : kNaN; }
int gpl_report_verdict(const gpl_report* rep) { return rep && rep->report.verdict ? 1 : 0; }

gpl_property gpl_report_property(const gpl_report* rep) {
  if (!rep) return GPL_PROP_CM;
  for (std::size_t i = 0; i < std::size(kProperties); ++i)
    if (kProperties[i] == rep->report.property) return static_cast<gpl_property>(i);
  return GPL_PROP_CM;
}

gpl_status gpl_preset_lookup(const char* name, gpl_preset* out) {
  if (!name || !out) return GPL_E_INVALID_ARGUMENT;
  for (const auto& p : kPresets) {
    if (std::strcmp(p.name, name) == 0) {
      *out = p;
      return GPL_OK;
    }
  }
  return GPL_E_INVALID_ARGUMENT;
}

}  // extern "C"
