#include "gpolylog/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

#include "gpolylog/core.hpp"

namespace gpolylog::quad {
namespace {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss
// weights belong to the odd-indexed abscissae and the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRoundingFactor = 50.0 * kEps;

struct Segment {
  double lo;
  double hi;
  double value;
  double error;   // max(|K15 - G7|, rounding floor)
  double excess;  // part of error above the rounding floor; drives refinement
  double resabs;
  int depth;
};

struct ByExcess {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.excess != y.excess) return x.excess < y.excess;
    return x.lo > y.lo;
  }
};

using Sampler = std::function<double(double)>;

double checked(const Sampler& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw NonFiniteSample(x);
  return v;
}

Segment apply_rule(const Sampler& f, double lo, double hi, int depth) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = checked(f, centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double resabs = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(f, centre - dx);
    const double f2 = checked(f, centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.value = kronrod * half;
  s.resabs = resabs * std::abs(half);
  const double raw = std::abs((kronrod - gauss) * half);
  const double floor = kRoundingFactor * s.resabs;
  s.error = std::max(raw, floor);
  s.excess = raw > floor ? raw - floor : 0.0;
  s.depth = depth;
  return s;
}

std::vector<double> partition(double lo, double hi, std::vector<double> splits) {
  std::sort(splits.begin(), splits.end());
  std::vector<double> edges{lo};
  for (double s : splits) {
    if (s > edges.back() && s < hi) edges.push_back(s);
  }
  edges.push_back(hi);
  return edges;
}

QuadratureOutcome adaptive_core(const Sampler& f, double lo, double hi,
                                const std::vector<double>& splits, double tol,
                                std::uint64_t max_evals) {
  QuadratureOutcome out;
  if (hi == lo) return out;
  constexpr std::uint64_t kEvalsPerRule = 15;

  std::priority_queue<Segment, std::vector<Segment>, ByExcess> work;
  const auto edges = partition(lo, hi, splits);
  double total_error = 0.0;
  double total_resabs = 0.0;
  if ((edges.size() - 1) * kEvalsPerRule > max_evals) {
    std::ostringstream os;
    os << edges.size() - 1 << " forced segments need more than " << max_evals << " evaluations";
    throw QuadratureFailure(os.str());
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Segment s = apply_rule(f, edges[i], edges[i + 1], 0);
    out.evals += kEvalsPerRule;
    total_error += s.error;
    total_resabs += s.resabs;
    work.push(s);
  }

  auto converged = [&] {
    return total_error <= std::max(tol, kRoundingFactor * total_resabs) ||
           work.top().excess == 0.0;
  };

  while (!converged()) {
    Segment worst = work.top();
    if (worst.depth >= kMaxDepth) {
      std::ostringstream os;
      os << "recursion depth " << kMaxDepth << " exceeded near [" << worst.lo << ", "
         << worst.hi << "]";
      throw QuadratureFailure(os.str());
    }
    if (out.evals + 2 * kEvalsPerRule > max_evals) {
      std::ostringstream os;
      os << "error estimate " << total_error << " exceeds tolerance " << tol << " after "
         << out.evals << " evaluations";
      throw QuadratureFailure(os.str());
    }
    work.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = apply_rule(f, worst.lo, mid, worst.depth + 1);
    Segment right = apply_rule(f, mid, worst.hi, worst.depth + 1);
    out.evals += 2 * kEvalsPerRule;
    ++out.subdivisions;
    total_error += left.error + right.error - worst.error;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    work.push(left);
    work.push(right);
  }

  // Sum in interval order so results do not depend on heap layout.
  std::vector<Segment> done;
  done.reserve(work.size());
  while (!work.empty()) {
    done.push_back(work.top());
    work.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  double value = 0.0;
  double error = 0.0;
  for (const auto& s : done) {
    value += s.value;
    error += s.error;
  }
  out.value = value;
  out.error_estimate = error;
  return out;
}

void check_finite_problem(const QuadratureProblem& problem) {
  if (!problem.integrand) throw DomainError("integrand", "integrand required");
  if (!std::isfinite(problem.lo) || !std::isfinite(problem.hi) || problem.hi < problem.lo)
    throw DomainError("interval", "finite lo<=hi required");
  if (!(problem.singularity_exponent > -1.0))
    throw DomainError("singularity_exponent", "singularity_exponent>-1 required");
  if (!(problem.singularity_exponent < std::numeric_limits<double>::max()))
    throw DomainError("singularity_exponent", "finite singularity_exponent required");
}

}  // namespace

QuadratureOutcome integrate_adaptive(const QuadratureProblem& problem, double tol,
                                     std::uint64_t max_evals) {
  check_finite_problem(problem);
  if (problem.singularity_exponent < 0.0)
    return integrate_singular_endpoint(problem, tol, max_evals);
  return adaptive_core(problem.integrand, problem.lo, problem.hi,
                       problem.forced_split_points, tol, max_evals);
}

QuadratureOutcome integrate_singular_endpoint(const QuadratureProblem& problem, double tol,
                                              std::uint64_t max_evals) {
  check_finite_problem(problem);
  const double sigma = problem.singularity_exponent;
  if (sigma >= 0.0)
    return adaptive_core(problem.integrand, problem.lo, problem.hi,
                         problem.forced_split_points, tol, max_evals);

  const double lo = problem.lo;
  const double power = 1.0 / (1.0 + sigma);
  const double jacobian = power;
  const Integrand& f = problem.integrand;
  // Smallest offset from lo that survives rounding; samples that collapse
  // onto the endpoint use the transformed integrand's value there instead.
  const double min_offset = std::max(4.0 * kEps * std::abs(lo), 1e-280);

  auto transformed = [&](double t) {
    const double offset = std::pow(t, power);
    const double x = lo + offset;
    const double fx = f(x);
    if (std::isfinite(fx)) return fx * jacobian * std::pow(t, power - 1.0);
    if (offset > min_offset) throw NonFiniteSample(x);
    const double x_limit = lo + min_offset;
    const double actual = x_limit - lo;
    const double limit = f(x_limit) * jacobian * std::pow(actual, -sigma);
    if (!std::isfinite(limit)) throw NonFiniteSample(x);
    return limit;
  };

  std::vector<double> splits;
  splits.reserve(problem.forced_split_points.size());
  for (double s : problem.forced_split_points) {
    if (s > lo && s < problem.hi) splits.push_back(std::pow(s - lo, 1.0 + sigma));
  }
  const double t_hi = std::pow(problem.hi - lo, 1.0 + sigma);
  return adaptive_core(transformed, 0.0, t_hi, splits, tol, max_evals);
}

QuadratureOutcome integrate_semi_infinite(const QuadratureProblem& problem, double tol,
                                          std::uint64_t max_evals) {
  if (!(problem.decay_rate > 0.0) || !std::isfinite(problem.decay_rate))
    throw DomainError("decay_rate", "decay_rate>0 required");
  if (!(problem.decay_prefactor >= 0.0))
    throw DomainError("decay_prefactor", "decay_prefactor>=0 required");
  if (!(tol > 0.0)) throw DomainError("tol", "tol>0 required");

  const double rate = problem.decay_rate;
  const double prefactor = std::max(problem.decay_prefactor, 1e-300);
  double cut = problem.lo + std::log(2.0 * prefactor / (rate * tol)) / rate;
  cut = std::max({cut, problem.tail_start, problem.lo});
  const double tail = prefactor * std::exp(-rate * (cut - problem.lo)) / rate;

  QuadratureProblem finite = problem;
  finite.hi = cut;
  finite.forced_split_points.clear();
  for (double s : problem.forced_split_points) {
    if (s > problem.lo && s < cut) finite.forced_split_points.push_back(s);
  }
  QuadratureOutcome out = integrate_adaptive(finite, 0.5 * tol, max_evals);
  out.error_estimate += tail;
  return out;
}

QuadratureOutcome integrate(const QuadratureProblem& problem, double tol,
                            std::uint64_t max_evals) {
  if (std::isinf(problem.hi)) return integrate_semi_infinite(problem, tol, max_evals);
  return integrate_adaptive(problem, tol, max_evals);
}

}  // namespace gpolylog::quad
