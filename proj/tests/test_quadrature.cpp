#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpolylog/core.hpp"
#include "gpolylog/quadrature.hpp"
#include "oracles.hpp"

using namespace gpolylog;
using namespace gpolylog::quad;

namespace {

QuadratureProblem finite(Integrand f, double lo, double hi, double sigma = 0.0) {
  QuadratureProblem pb;
  pb.integrand = std::move(f);
  pb.lo = lo;
  pb.hi = hi;
  pb.singularity_exponent = sigma;
  return pb;
}

QuadratureProblem semi(Integrand f, double rate, double prefactor = 1.0) {
  QuadratureProblem pb;
  pb.integrand = std::move(f);
  pb.lo = 0.0;
  pb.hi = kInfinity;
  pb.decay_rate = rate;
  pb.decay_prefactor = prefactor;
  return pb;
}

}  // namespace

TEST_CASE("integrate_adaptive basics") {
  const auto r = integrate_adaptive(finite([](double x) { return x; }, 0, 1), 1e-14);
  CHECK(std::abs(r.value - 0.5) <= 1e-14);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.evals >= 15);

  const auto s = integrate_adaptive(finite([](double x) { return 1 / std::sqrt(x); }, 0, 1, -0.5), 1e-12);
  CHECK(std::abs(s.value - 2.0) <= 1e-10);
}

TEST_CASE("forced split makes a step function exact") {
  auto pb = finite([](double x) { return x > 1.0 / 3 ? 1.0 : 0.0; }, 0, 1);
  pb.forced_split_points = {1.0 / 3};
  const auto r = integrate_adaptive(pb, 1e-14);
  CHECK(std::abs(r.value - 2.0 / 3) <= 1e-14);

  // a staircase with several jumps
  auto stairs = finite([](double x) { return std::floor(4 * x); }, 0, 1);
  stairs.forced_split_points = {0.75, 0.25, 0.5};  // order does not matter
  CHECK(std::abs(integrate_adaptive(stairs, 1e-14).value - 1.5) <= 1e-14);
}

TEST_CASE("semi-infinite examples") {
  CHECK(std::abs(integrate_semi_infinite(semi([](double y) { return std::exp(-y); }, 1), 1e-12).value - 1) <=
        1e-10);
  CHECK(std::abs(integrate_semi_infinite(semi([](double y) { return std::exp(-2 * y); }, 2), 1e-12).value -
                 0.5) <= 1e-10);
  // y e^{-y} <= (2/e) e^{-y/2}
  const auto r = integrate_semi_infinite(
      semi([](double y) { return y * std::exp(-y); }, 0.5, 2 / std::numbers::e), 1e-11);
  CHECK(std::abs(r.value - 1) <= 1e-9);
  CHECK_THROWS_AS(integrate_semi_infinite(semi([](double y) { return std::exp(-y); }, 0), 1e-10),
                  DomainError);
}

TEST_CASE("singular endpoint examples") {
  const auto a = integrate_singular_endpoint(finite([](double x) { return 1 / std::sqrt(x); }, 0, 1, -0.5),
                                             1e-13);
  CHECK(std::abs(a.value - 2.0) <= 1e-12);
  const auto b = integrate_singular_endpoint(
      finite([](double x) { return std::exp(-x) / std::sqrt(x); }, 0, 1, -0.5), 1e-13);
  CHECK(std::abs(b.value - 1.4936482656248540) <= 1e-12);
  // sigma = 0 is a pass-through, bit for bit
  const auto pb = finite([](double x) { return std::cos(3 * x); }, 0, 2);
  const auto c = integrate_singular_endpoint(pb, 1e-12);
  const auto d = integrate_adaptive(pb, 1e-12);
  CHECK(c.value == d.value);
  CHECK(c.error_estimate == d.error_estimate);
  CHECK(c.evals == d.evals);
}

TEST_CASE("non-finite sample at the singular endpoint is replaced by its limit") {
  // 1/sqrt(x) evaluated exactly at x = 0 is inf; the transformed integrand is finite.
  const auto r = integrate_adaptive(finite([](double x) { return x == 0 ? INFINITY : 1 / std::sqrt(x); },
                                           0, 1, -0.5),
                                    1e-12);
  CHECK(std::abs(r.value - 2.0) <= 1e-10);
}

TEST_CASE("non-finite sample away from the endpoint raises") {
  auto pb = finite([](double x) { return x > 0.5 ? NAN : 1.0; }, 0, 1);
  CHECK_THROWS_AS(integrate_adaptive(pb, 1e-10), NonFiniteSample);
  try {
    integrate_adaptive(pb, 1e-10);
  } catch (const NonFiniteSample& e) {
    CHECK(e.x() > 0.5);
  }
}

TEST_CASE("unreachable tolerance raises QuadratureFailure") {
  // 1/x on (0,1] diverges; declaring no singularity leaves the engine to refine forever.
  auto pb = finite([](double x) { return x > 0 ? 1 / x : 1e300; }, 0, 1);
  CHECK_THROWS_AS(integrate_adaptive(pb, 1e-10, 3000), QuadratureFailure);
  // an unsplit jump needs deep bisection; a small eval budget runs out first
  auto step = finite([](double x) { return x > 0.3 ? 1.0 : 0.0; }, 0, 1);
  CHECK_THROWS_AS(integrate_adaptive(step, 1e-14, 200), QuadratureFailure);
  CHECK(std::abs(integrate_adaptive(step, 1e-10).value - 0.7) <= 1e-9);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(integrate_adaptive(finite([](double) { return 1.0; }, 0, 1, -1.0), 1e-10), DomainError);
  CHECK_THROWS_AS(integrate_adaptive(finite([](double) { return 1.0; }, 1, 0), 1e-10), DomainError);
  CHECK_THROWS_AS(integrate_adaptive(finite(nullptr, 0, 1), 1e-10), DomainError);
  CHECK(integrate_adaptive(finite([](double) { return 1.0; }, 1, 1), 1e-10).value == 0.0);
}

TEST_CASE("error honesty on the closed-form battery") {
  for (const auto& c : oracle::quadrature_battery()) {
    CAPTURE(c.name);
    QuadratureProblem pb;
    pb.integrand = c.f;
    pb.lo = c.lo;
    pb.hi = c.hi;
    pb.singularity_exponent = c.sigma;
    pb.forced_split_points = c.splits;
    pb.decay_rate = c.decay_rate;
    pb.decay_prefactor = c.decay_prefactor;
    pb.tail_start = c.tail_start;
    for (double tol : {1e-6, 1e-10, 1e-13}) {
      CAPTURE(tol);
      const auto r = integrate(pb, tol);
      CHECK(std::abs(r.value - c.truth) <= 10 * r.error_estimate);
      CHECK(r.error_estimate <= tol * 1.0000001 + 100 * 2.3e-16 * std::abs(c.truth));
    }
  }
}

TEST_CASE("determinism: identical problems give identical outcomes") {
  auto pb = finite([](double x) { return std::exp(-x) * std::sin(7 * x) / std::sqrt(x); }, 0, 3, -0.5);
  pb.forced_split_points = {0.7, 1.9};
  const auto a = integrate(pb, 1e-12);
  const auto b = integrate(pb, 1e-12);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(a.evals == b.evals);
  CHECK(a.subdivisions == b.subdivisions);
}
