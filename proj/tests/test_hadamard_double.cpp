#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpolylog/hadamard_double.hpp"
#include "gpolylog/series.hpp"
#include "oracles.hpp"

using namespace gpolylog;

namespace {

ToleranceConfig tol(double t, bool relax = false) {
  ToleranceConfig c;
  c.target_abs_tol = t;
  c.relax_shift_hypothesis = relax;
  return c;
}

}  // namespace

TEST_CASE("gamma matches std::tgamma") {
  for (double x = 0.01; x < 30; x *= 1.17) {
    CAPTURE(x);
    CHECK(std::abs(gamma_fn(x) / std::tgamma(x) - 1) <= 1e-13);
  }
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(gamma_fn(5) == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("strip weights add up to 1/q") {
  for (double b : {1.2, 3.0})
    for (double q : {0.5, 0.75, 2.0}) {
      const auto w = strip_weights(b, q, 50);
      REQUIRE(w.strips.size() == 50);
      double total = w.zero_region + w.tail;
      for (double s : w.strips) {
        CHECK(s > 0);
        total += s;
      }
      CHECK(total == doctest::Approx(1 / q).epsilon(1e-14));
      CHECK(w.zero_region == doctest::Approx((1 - std::pow(1 + b, -q)) / q).epsilon(1e-14));
    }
}

TEST_CASE("double integral examples") {
  const PhiParams a{1, 1, 1.4, 1.2, 0.5};
  const auto r = phi_double_integral(a, tol(1e-10));
  CHECK(std::abs(r.value - phi_series(a).value) <= 1e-8);
  CHECK(r.route == Route::DoubleIntegral);
  CHECK(phi_double_integral(PhiParams{1, 1, 1.4, 1.2, 0.0}).value == complex(0.0));
  const PhiParams s{0.5, 0.75, 1.5, 1.5, 0.3};
  CHECK(std::abs(phi_double_integral(s, tol(1e-9)).value - phi_series(s).value) <= 1e-7);
  CHECK_THROWS_AS(phi_double_integral(PhiParams{1, 1, 1.4, 0.9, 0.5}), DomainError);
}

TEST_CASE("double integral error estimate is honest") {
  for (double p : {0.5, 2.0})
    for (double q : {0.5, 2.0})
      for (double z : {0.1, 0.9}) {
        const PhiParams pr{p, q, 1.1, 2.0, z};
        const auto r = phi_double_integral(pr, tol(1e-9));
        CHECK(std::abs(r.value - oracle::phi_partial(p, q, 1.1, 2.0, z)) <= r.abs_error_estimate);
      }
}

TEST_CASE("strip contributions are non-negative and bounded by the value") {
  const PhiParams pr{0.5, 0.75, 1.5, 1.5, 0.7};
  const auto d = phi_double_integral_detail(pr, tol(1e-10));
  CHECK(d.zero_region_skipped);
  REQUIRE(!d.strip_contributions.empty());
  double running = 0;
  for (double c : d.strip_contributions) {
    CHECK(c >= 0);
    running += c;
  }
  CHECK(running <= d.result.value.real() + d.result.abs_error_estimate);
  CHECK(d.result.value == phi_double_integral(pr, tol(1e-10)).value);
}

TEST_CASE("expanded fast path") {
  const ToleranceConfig t = tol(1e-12);
  for (complex z : {complex(0.5), complex(0.9), complex(-0.6), complex(0.3, 0.5)}) {
    const PhiParams pr{0.5, 1.5, 1.2, 1.8, z};
    const auto r = phi_double_integral_expanded(pr, t);
    CHECK(std::abs(r.value - oracle::phi_partial(0.5, 1.5, 1.2, 1.8, z)) <= 1e-11);
  }
  const PhiParams real{2, 0.75, 1.4, 1.2, 0.8};
  CHECK(std::abs(phi_double_integral_expanded(real, t).value - phi_double_integral(real, tol(1e-10)).value) <=
        1e-9);
  CHECK(phi_double_integral_expanded(PhiParams{1, 1, 1.4, 1.2, 0.0}).value == complex(0.0));
}

TEST_CASE("known double integral") {
  const auto r = phi_double_integral_known(PhiParams{1, 1, 1, 1, 0.5}, tol(1e-10, true));
  CHECK(std::abs(r.value.real() - 0.6579242117) <= 1e-8);
  CHECK(r.route == Route::DoubleIntegralKnown);
  CHECK(phi_double_integral_known(PhiParams{1, 1, 1.4, 1.2, 0.0}).value == complex(0.0));
  const PhiParams pr{2, 2, 1.2, 1.4, 0.7};
  CHECK(std::abs(phi_double_integral_known(pr, tol(1e-10)).value - phi_series(pr).value) <= 1e-8);
  const PhiParams sing{0.5, 0.75, 1.5, 1.5, 0.3};
  CHECK(std::abs(phi_double_integral_known(sing, tol(1e-10)).value - phi_series(sing).value) <= 1e-8);
}

TEST_CASE("lerch kernel integral") {
  CHECK(std::abs(lerch_kernel_integral(2, 1, 0.5).value.real() - 1.1644810529) <= 1e-9);
  CHECK(std::abs(lerch_kernel_integral(1, 2, 0.5).value.real() - 0.7725887222) <= 1e-9);
  CHECK(lerch_kernel_integral(2, 1.5, 0.0).value.real() == 1 / 2.25);
  CHECK(lerch_kernel_integral(0.5, 0.7, 0.0).value.real() == std::pow(0.7, -0.5));
  for (double s : {0.4, 1.0, 3.0})
    for (double a : {0.5, 2.0})
      for (double z : {0.3, 0.95})
        CHECK(std::abs(lerch_kernel_integral(s, a, z, tol(1e-12)).value.real() - oracle::lerch_partial(s, a, z)) <=
              1e-10);
  CHECK_THROWS_AS(lerch_kernel_integral(1, 2, -0.5), DomainError);
}
