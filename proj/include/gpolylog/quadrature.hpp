#pragma once

// One-dimensional adaptive quadrature: a 7/15-point Gauss-Kronrod pair with
// global bisection, forced breakpoints, semi-infinite truncation with an
// analytic tail bound, and removal of an algebraic endpoint singularity.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace gpolylog::quad {

using Integrand = std::function<double(double)>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr int kMaxDepth = 60;

struct QuadratureProblem {
  /// The full integrand f, including any (x - lo)^sigma factor.
  Integrand integrand;
  double lo = 0.0;
  /// Upper limit; kInfinity selects the semi-infinite path.
  double hi = 1.0;
  /// sigma > -1 such that f(x) ~ (x - lo)^sigma near lo; 0 means regular.
  double singularity_exponent = 0.0;
  /// Interior points that always become subdivision boundaries.
  std::vector<double> forced_split_points;
  // Semi-infinite tail contract:
  //   |f(y)| <= decay_prefactor * exp(-decay_rate * (y - lo))  for y >= tail_start.
  double decay_rate = 0.0;
  double decay_prefactor = 1.0;
  double tail_start = -kInfinity;
};

struct QuadratureOutcome {
  double value = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evals = 0;
  std::uint64_t subdivisions = 0;
};

inline constexpr std::uint64_t kDefaultMaxEvals = 2'000'000;

/// Finite interval. Forced split points seed the initial partition; the
/// segment with the largest excess error is bisected until the summed
/// estimate is within max(tol, rounding floor). Delegates to
/// integrate_singular_endpoint when singularity_exponent lies in (-1, 0).
QuadratureOutcome integrate_adaptive(const QuadratureProblem& problem, double tol,
                                     std::uint64_t max_evals = kDefaultMaxEvals);

/// [lo, inf): cuts at Y where the declared envelope leaves at most tol/2,
/// integrates [lo, Y] to tol/2 and adds the tail bound to the error estimate.
QuadratureOutcome integrate_semi_infinite(const QuadratureProblem& problem, double tol,
                                          std::uint64_t max_evals = kDefaultMaxEvals);

/// Substitutes x = lo + t^(1/(1+sigma)), which turns (x-lo)^sigma dx into a
/// bounded multiple of dt. sigma >= 0 is passed through unchanged.
QuadratureOutcome integrate_singular_endpoint(const QuadratureProblem& problem, double tol,
                                              std::uint64_t max_evals = kDefaultMaxEvals);

/// Picks the semi-infinite or finite path from problem.hi.
QuadratureOutcome integrate(const QuadratureProblem& problem, double tol,
                            std::uint64_t max_evals = kDefaultMaxEvals);

}  // namespace gpolylog::quad
