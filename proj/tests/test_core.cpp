#include <doctest.h>

#include <cmath>

#include "gpolylog/core.hpp"

using namespace gpolylog;

namespace {

template <class F>
DomainError domain_error_of(F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e;
  }
  FAIL("expected DomainError");
  return DomainError("", "");
}

}  // namespace

TEST_CASE("validate accepts a series-valid parameter set unchanged") {
  const PhiParams pr{1, 1, 1.4, 1.2, 0.5};
  CHECK(validate(pr, Route::Series) == pr);
  // idempotent
  CHECK(validate(validate(pr, Route::Series), Route::Series) == pr);
}

TEST_CASE("integral routes need a, b > 1") {
  const PhiParams pr{1, 1, 0.5, 1.2, 0.5};
  CHECK_NOTHROW(validate(pr, Route::Series));
  for (Route r : {Route::SingleIntegralSegments, Route::SingleIntegralQuad, Route::DoubleIntegral,
                  Route::DoubleIntegralKnown}) {
    const auto e = domain_error_of([&] { validate(pr, r); });
    CHECK(e.field() == "a");
    CHECK(e.constraint() == "a>1 required");
    CHECK(e.kind() == ErrorKind::Domain);
  }
  const auto e = domain_error_of([&] { validate(PhiParams{1, 1, 1.4, 1.0, 0.5}, Route::DoubleIntegral); });
  CHECK(e.field() == "b");
}

TEST_CASE("relaxed shift hypothesis lets 0 < a <= 1 through") {
  const PhiParams pr{1, 1, 0.5, 0.8, 0.5};
  CHECK_NOTHROW(validate(pr, Route::SingleIntegralSegments, true));
  CHECK_THROWS_AS(validate(PhiParams{1, 1, 0.0, 0.8, 0.5}, Route::SingleIntegralSegments, true),
                  DomainError);
}

TEST_CASE("unit disc is open") {
  const auto e = domain_error_of([] { validate(PhiParams{1, 1, 1.4, 1.2, 1.0}, Route::Series); });
  CHECK(e.field() == "z");
  CHECK(e.constraint() == "|z|<1 required");
  CHECK_THROWS_AS(validate(PhiParams{1, 1, 1.4, 1.2, complex(0.8, 0.8)}, Route::Series), DomainError);
  CHECK_NOTHROW(validate(PhiParams{1, 1, 1.4, 1.2, complex(0.5, 0.5)}, Route::Series));
  CHECK_THROWS_AS(validate(PhiParams{1, 1, 1.4, 1.2, std::nan("")}, Route::Series), DomainError);
}

TEST_CASE("orders and shifts must be positive") {
  CHECK(domain_error_of([] { validate(PhiParams{0, 1, 1, 1, 0.5}, Route::Series); }).field() == "p");
  CHECK(domain_error_of([] { validate(PhiParams{1, -1, 1, 1, 0.5}, Route::Series); }).field() == "q");
  CHECK(domain_error_of([] { validate(PhiParams{1, 1, 0, 1, 0.5}, Route::Series); }).field() == "a");
  CHECK(domain_error_of([] { validate(PhiParams{1, 1, 1, -2, 0.5}, Route::Series); }).field() == "b");
}

TEST_CASE("quadrature routes need real z in [0,1); the segment route accepts complex z") {
  const PhiParams c{1, 1, 1.4, 1.2, complex(0.3, 0.2)};
  CHECK_NOTHROW(validate(c, Route::SingleIntegralSegments));
  CHECK_THROWS_AS(validate(c, Route::SingleIntegralQuad), DomainError);
  CHECK_THROWS_AS(validate(c, Route::DoubleIntegral), DomainError);
  CHECK_THROWS_AS(validate(PhiParams{1, 1, 1.4, 1.2, -0.3}, Route::DoubleIntegralKnown), DomainError);
}

TEST_CASE("hypergeometric route needs integer orders") {
  CHECK_NOTHROW(validate(PhiParams{2, 3, 1.2, 1.5, 0.3}, Route::Hypergeometric));
  const auto e = domain_error_of([] { validate(PhiParams{1.5, 1, 1.2, 1.5, 0.3}, Route::Hypergeometric); });
  CHECK(e.field() == "p");
}

TEST_CASE("lerch validation") {
  CHECK_NOTHROW(validate(LerchParams{2, 1, 0.5, 0.25}, Route::LerchLambdaSeries));
  const auto e = domain_error_of([] { validate(LerchParams{2, 1, 0.5, 0.6}, Route::LerchLambdaSeries); });
  CHECK(e.field() == "lambda");
  CHECK_THROWS_AS(validate(LerchParams{2, 1, 0.5, 0.5}, Route::LerchLambdaSeries), DomainError);
  // lambda is ignored off the lambda route
  CHECK_NOTHROW(validate(LerchParams{2, 1, 0.5, 0.9}, Route::LerchSeries));
  CHECK_THROWS_AS(validate(LerchParams{2, 1.0, 0.5, 0}, Route::LerchIntegral), DomainError);
  CHECK_NOTHROW(validate(LerchParams{2, 0.5, 0.5, 0}, Route::LerchKernelIntegral));
  CHECK_THROWS_AS(validate(LerchParams{0, 1, 0.5, 0}, Route::LerchSeries), DomainError);
}

TEST_CASE("tolerance config invariants") {
  ToleranceConfig t;
  CHECK_NOTHROW(validate(t));
  t.target_abs_tol = 0;
  CHECK_THROWS_AS(validate(t), DomainError);
  t = {};
  t.max_terms = 15;
  CHECK_THROWS_AS(validate(t), DomainError);
  t = {};
  t.fd_step = -1;
  CHECK_THROWS_AS(validate(t), DomainError);
}

TEST_CASE("normalization and route names") {
  CHECK(normalization(PhiParams{1, 1, 1, 1, 0}) == doctest::Approx(4.0));
  CHECK(normalization(PhiParams{0.5, 0.75, 1.2, 1.3, 0}) ==
        doctest::Approx(std::sqrt(2.2) * std::pow(2.3, 0.75)));
  CHECK(route_name(Route::Series) == "series");
  CHECK(route_name(Route::SingleIntegralSegments) == "single-integral");
  CHECK(route_name(Route::DoubleIntegralKnown) == "double-integral-known");
}

TEST_CASE("error kinds") {
  CHECK(NonFiniteSample(0.25).kind() == ErrorKind::NonFiniteSample);
  CHECK(NonFiniteSample(0.25).x() == 0.25);
  CHECK(std::string(DomainError("a", "a>1 required").what()) == "a: a>1 required");
  CHECK(QuadratureFailure("x").kind() == ErrorKind::QuadratureFailure);
  CHECK(NonConvergence("x").kind() == ErrorKind::NonConvergence);
  CHECK(ConvergenceFailure("x").kind() == ErrorKind::ConvergenceFailure);
}
