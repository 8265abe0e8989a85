/* C interface to the generalized polylogarithm library.
 *
 * Every entry point returns a gpl_status. On failure the context keeps a
 * message (and, for domain errors, the offending field) until the next call
 * on the same context. A context is not safe to share between threads; use
 * one per thread. */
#ifndef GPOLYLOG_H
#define GPOLYLOG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GPOLYLOG_BUILDING)
#    define GPL_API __declspec(dllexport)
#  else
#    define GPL_API __declspec(dllimport)
#  endif
#else
#  define GPL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpl_status {
  GPL_OK = 0,
  GPL_E_DOMAIN = 1,           /* a parameter violates the route's hypothesis */
  GPL_E_NONCONVERGENCE = 2,   /* series / segment sum hit max_terms */
  GPL_E_QUADRATURE = 3,       /* quadrature error estimate above tolerance */
  GPL_E_NONFINITE = 4,        /* integrand produced NaN/inf */
  GPL_E_CONVERGENCE = 5,      /* root finding failed */
  GPL_E_INVALID_ARGUMENT = 6, /* null pointer, unknown name, bad index */
  GPL_E_INTERNAL = 7
} gpl_status;

typedef enum gpl_route {
  GPL_ROUTE_SERIES = 0,
  GPL_ROUTE_SINGLE_INTEGRAL_QUAD = 1,
  GPL_ROUTE_SINGLE_INTEGRAL = 2,
  GPL_ROUTE_DOUBLE_INTEGRAL = 3,
  GPL_ROUTE_DOUBLE_INTEGRAL_KNOWN = 4,
  GPL_ROUTE_HYPERGEOMETRIC = 5,
  GPL_ROUTE_LERCH_INTEGRAL = 6,
  GPL_ROUTE_LERCH_SERIES = 7,
  GPL_ROUTE_LERCH_LAMBDA = 8,
  GPL_ROUTE_LERCH_KERNEL = 9,
  GPL_ROUTE_POLYLOG = 10
} gpl_route;

typedef enum gpl_property {
  GPL_PROP_CM = 0,
  GPL_PROP_LOG_CONVEXITY = 1,
  GPL_PROP_TURAN_PSI = 2,
  GPL_PROP_TURAN_PHI_Q = 3,
  GPL_PROP_TURAN_PHI_P = 4,
  GPL_PROP_BOUNDS = 5
} gpl_property;

typedef struct gpl_phi_params {
  double p, q, a, b;
  double z_re, z_im;
} gpl_phi_params;

typedef struct gpl_lerch_params {
  double s, a;
  double z_re, z_im;
  double lambda; /* lerch-lambda route only */
} gpl_lerch_params;

typedef struct gpl_psi_params {
  double q, a, b, x;
} gpl_psi_params;

typedef struct gpl_result {
  double value_re, value_im;
  double abs_error_estimate;
  gpl_route route;
  uint64_t terms_or_evals;
} gpl_result;

typedef struct gpl_context gpl_context;
typedef struct gpl_report gpl_report;

/* ---- context ---------------------------------------------------------- */

GPL_API gpl_status gpl_context_create(gpl_context** out);
GPL_API void gpl_context_destroy(gpl_context* ctx);

/* Defaults: tol 1e-14, max_terms 1e6, max_evals 5e6, fd_step 1e-2,
 * relax_domain off, extended_precision on. */
GPL_API gpl_status gpl_context_set_tolerance(gpl_context* ctx, double abs_tol);
GPL_API gpl_status gpl_context_set_max_terms(gpl_context* ctx, uint64_t max_terms);
GPL_API gpl_status gpl_context_set_max_evals(gpl_context* ctx, uint64_t max_evals);
GPL_API gpl_status gpl_context_set_fd_step(gpl_context* ctx, double h);
/* Accept 0 < a, b <= 1 on the integral routes. */
GPL_API gpl_status gpl_context_set_relax_domain(gpl_context* ctx, int on);
/* Allow MPFR in the lambda series when double precision would cancel. */
GPL_API gpl_status gpl_context_set_extended_precision(gpl_context* ctx, int on);
/* Evaluate Phi with the segment route instead of the series in gpl_psi and gpl_verify. */
GPL_API gpl_status gpl_context_set_analysis_segments(gpl_context* ctx, int on);

/* Message of the last failure on ctx, "" after a success. Owned by ctx. */
GPL_API const char* gpl_context_last_error(const gpl_context* ctx);
/* Parameter named by the last GPL_E_DOMAIN, "" otherwise. */
GPL_API const char* gpl_context_last_error_field(const gpl_context* ctx);

GPL_API const char* gpl_status_name(gpl_status s);

/* ---- routes and evaluation -------------------------------------------- */

GPL_API const char* gpl_route_name(gpl_route r);
GPL_API gpl_status gpl_route_from_name(const char* name, gpl_route* out);
/* Nonzero for routes that evaluate the Lerch transcendent. */
GPL_API int gpl_route_is_lerch(gpl_route r);

/* Phi_{p,q}(a,b;z) by the series, single-integral(-quad), double-integral(-known)
 * or hypergeometric route. */
GPL_API gpl_status gpl_phi(gpl_context* ctx, gpl_route route, const gpl_phi_params* params,
                           gpl_result* out);
/* Lerch transcendent by the lerch-* routes. */
GPL_API gpl_status gpl_lerch(gpl_context* ctx, gpl_route route, const gpl_lerch_params* params,
                             gpl_result* out);
/* Li_r(z). */
GPL_API gpl_status gpl_polylog(gpl_context* ctx, double r, double z_re, double z_im,
                               gpl_result* out);
GPL_API gpl_status gpl_psi(gpl_context* ctx, double p, const gpl_psi_params* params,
                           double* out);

/* ---- property verification -------------------------------------------- */

GPL_API const char* gpl_property_name(gpl_property p);
GPL_API gpl_status gpl_property_from_name(const char* name, gpl_property* out);

typedef struct gpl_verify_request {
  gpl_property property;
  gpl_psi_params psi;      /* cm, log-convexity, turan-psi */
  gpl_phi_params phi;      /* turan-phi-q, turan-phi-p, bounds (z ignored) */
  const double* grid;      /* p values for psi properties, x values otherwise */
  size_t grid_len;
  int max_order;           /* cm only, <= 6 */
  double h;                /* cm and log-convexity step; 0 means the context fd_step */
  double tol;              /* verdict tolerance */
} gpl_verify_request;

GPL_API gpl_status gpl_verify(gpl_context* ctx, const gpl_verify_request* req, gpl_report** out);
GPL_API void gpl_report_destroy(gpl_report* rep);
GPL_API size_t gpl_report_size(const gpl_report* rep);
/* index is the difference order for cm, 0/1 (lower/upper) for bounds, else 0. */
GPL_API gpl_status gpl_report_entry(const gpl_report* rep, size_t i, double* point, int* index,
                                    double* gap);
GPL_API double gpl_report_min_gap(const gpl_report* rep);
GPL_API double gpl_report_tolerance(const gpl_report* rep);
GPL_API int gpl_report_verdict(const gpl_report* rep);
GPL_API gpl_property gpl_report_property(const gpl_report* rep);

/* ---- figure presets ---------------------------------------------------- */

typedef struct gpl_preset {
  const char* name;       /* fig1 .. fig5 */
  gpl_property property;  /* default property */
  char sweep;             /* 'p' or 'x' */
  double p, q, a, b, x;   /* the swept variable is NaN */
  double lo, hi, step;    /* default grid for the swept variable */
  int max_order;          /* cm */
  double tol;             /* verdict tolerance */
} gpl_preset;

GPL_API gpl_status gpl_preset_lookup(const char* name, gpl_preset* out);

#ifdef __cplusplus
}
#endif

#endif
