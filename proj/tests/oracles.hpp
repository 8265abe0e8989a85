#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library; sums are carried in long double and run far past the
// point where the terms stop mattering.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;

// sum_{k=1}^{K} C z^k / ((k+a)^p (k+b)^q) with K chosen so |z|^K < 1e-24.
inline std::complex<double> phi_partial(double p, double q, double a, double b,
                                        std::complex<double> z, long kmax = 0) {
  const long double r = std::abs(z);
  if (kmax == 0) kmax = r == 0 ? 1 : static_cast<long>(std::ceil(-55.0L / std::log(r))) + 10;
  const long double c = std::pow(1.0L + a, (long double)p) * std::pow(1.0L + b, (long double)q);
  cld zk = 1.0L, sum = 0.0L;
  const cld zz(z.real(), z.imag());
  for (long k = 1; k <= kmax; ++k) {
    zk *= zz;
    sum += zk / (std::pow(k + (long double)a, (long double)p) *
                 std::pow(k + (long double)b, (long double)q));
  }
  sum *= c;
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// sum_{n>=0} z^n / (n+a)^s
inline double lerch_partial(double s, double a, double z) {
  const long kmax = z == 0 ? 0 : static_cast<long>(std::ceil(-55.0L / std::log((long double)z))) + 10;
  long double zn = 1.0L, sum = 0.0L;
  for (long n = 0; n <= kmax; ++n) {
    sum += zn / std::pow(n + (long double)a, (long double)s);
    zn *= z;
  }
  return static_cast<double>(sum);
}

// psi(p) = sum_{n>=1} x^n (Delta(n)^{-p} - Delta(n+1)^{-p}) / p + (1 - Delta(1)^{-p}) / p,
// the segment-sum form of the Laplace integral, Delta(n)^{-p} = (n+a)^{-p}(n+b)^{-q}.
inline double psi_segments(double p, double q, double a, double b, double x) {
  auto e = [&](long n) {
    return std::pow(n + (long double)a, -(long double)p) * std::pow(n + (long double)b, -(long double)q);
  };
  const long kmax = static_cast<long>(std::ceil(-55.0L / std::log((long double)x))) + 10;
  long double sum = 1.0L - e(1), xn = 1.0L;
  for (long n = 1; n <= kmax; ++n) {
    xn *= x;
    sum += xn * (e(n) - e(n + 1));
  }
  return static_cast<double>(sum / p);
}

// Double sum for the q-shift Turan gap:
//   gap = x^2 (1+a)^{2p} (1+b)^{2q+2} sum_{n<N} sum_{k<=n} f(n,k) x^n,
//   f(n,k) = (2k-n) / ((k+1+a)^p (n-k+1+a)^p (k+1+b)^{q+1} (n-k+1+b)^{q+2}).
inline double turan_q_double_sum(double p, double q, double a, double b, double x, int n_terms) {
  std::vector<long double> fa(n_terms), fb1(n_terms), fb2(n_terms);
  for (int k = 0; k < n_terms; ++k) {
    fa[k] = std::pow(k + 1.0L + a, -(long double)p);
    fb1[k] = std::pow(k + 1.0L + b, -(q + 1.0L));
    fb2[k] = std::pow(k + 1.0L + b, -(q + 2.0L));
  }
  long double total = 0.0L, xn = 1.0L;
  for (int n = 0; n < n_terms; ++n) {
    long double inner = 0.0L;
    for (int k = 0; k <= n; ++k)
      inner += (2.0L * k - n) * fa[k] * fa[n - k] * fb1[k] * fb2[n - k];
    total += inner * xn;
    xn *= x;
  }
  const long double scale = (long double)x * x * std::pow(1.0L + a, 2.0L * p) *
                            std::pow(1.0L + b, 2.0L * q + 2.0L);
  return static_cast<double>(scale * total);
}

// Same gap from direct products of long-double partial sums.
inline double turan_q_direct(double p, double q, double a, double b, double x) {
  const double f0 = phi_partial(p, q, a, b, x).real();
  const double f1 = phi_partial(p, q + 1, a, b, x).real();
  const double f2 = phi_partial(p, q + 2, a, b, x).real();
  return f0 * f2 - f1 * f1;
}

// Integrands with known integrals, for the quadrature honesty battery.
struct Case {
  std::string name;
  std::function<double(double)> f;
  double lo, hi;  // hi = +inf for semi-infinite
  double sigma = 0.0;
  std::vector<double> splits;
  double decay_rate = 0.0, decay_prefactor = 1.0, tail_start = -INFINITY;
  double truth;
};

inline std::vector<Case> quadrature_battery() {
  using std::numbers::pi;
  const double inf = INFINITY;
  const double z = 0.9;
  std::vector<Case> c;
  c.push_back({"x", [](double x) { return x; }, 0, 1, 0, {}, 0, 1, -inf, 0.5});
  c.push_back({"x^2", [](double x) { return x * x; }, 0, 1, 0, {}, 0, 1, -inf, 1.0 / 3});
  c.push_back({"exp", [](double x) { return std::exp(x); }, 0, 1, 0, {}, 0, 1, -inf, std::numbers::e - 1});
  c.push_back({"sin", [](double x) { return std::sin(x); }, 0, pi, 0, {}, 0, 1, -inf, 2.0});
  c.push_back({"lorentz", [](double x) { return 1 / (1 + x * x); }, 0, 1, 0, {}, 0, 1, -inf, pi / 4});
  c.push_back({"sqrt", [](double x) { return std::sqrt(x); }, 0, 1, 0, {}, 0, 1, -inf, 2.0 / 3});
  c.push_back({"x^-1/2", [](double x) { return 1 / std::sqrt(x); }, 0, 1, -0.5, {}, 0, 1, -inf, 2.0});
  c.push_back({"x^-1/2 e^-x", [](double x) { return std::exp(-x) / std::sqrt(x); }, 0, 1, -0.5, {}, 0, 1,
               -inf, std::sqrt(pi) * std::erf(1.0)});
  c.push_back({"x^-0.9", [](double x) { return std::pow(x, -0.9); }, 0, 1, -0.9, {}, 0, 1, -inf, 10.0});
  c.push_back({"x^-0.3 (1-x)", [](double x) { return std::pow(x, -0.3) * (1 - x); }, 0, 1, -0.3, {}, 0, 1,
               -inf, 1 / 0.7 - 1 / 1.7});
  c.push_back({"step 1/3", [](double x) { return x > 1.0 / 3 ? 1.0 : 0.0; }, 0, 1, 0, {1.0 / 3}, 0, 1,
               -inf, 2.0 / 3});
  c.push_back({"|x-0.3|", [](double x) { return std::abs(x - 0.3); }, 0, 1, 0, {0.3}, 0, 1, -inf, 0.29});
  c.push_back({"cos 10x", [](double x) { return std::cos(10 * x); }, 0, 1, 0, {}, 0, 1, -inf,
               std::sin(10.0) / 10});
  c.push_back({"gauss", [](double x) { return std::exp(-x * x); }, 0, 1, 0, {}, 0, 1, -inf,
               std::sqrt(pi) / 2 * std::erf(1.0)});
  c.push_back({"e^-y", [](double y) { return std::exp(-y); }, 0, inf, 0, {}, 1, 1, -inf, 1.0});
  c.push_back({"e^-2y", [](double y) { return std::exp(-2 * y); }, 0, inf, 0, {}, 2, 1, -inf, 0.5});
  c.push_back({"y e^-y", [](double y) { return y * std::exp(-y); }, 0, inf, 0, {}, 0.5, 2 / std::numbers::e,
               -inf, 1.0});
  c.push_back({"y^-1/2 e^-y", [](double y) { return std::exp(-y) / std::sqrt(y); }, 0, inf, -0.5, {}, 1, 1,
               1.0, std::sqrt(pi)});
  c.push_back({"e^-y cos y", [](double y) { return std::exp(-y) * std::cos(y); }, 0, inf, 0, {}, 1, 1, -inf,
               0.5});
  c.push_back({"e^-2y/(1-z e^-y)", [z](double y) { return std::exp(-2 * y) / (1 - z * std::exp(-y)); }, 0,
               inf, 0, {}, 2, 1 / (1 - z), -inf, (-std::log1p(-z) - z) / (z * z)});
  return c;
}

}  // namespace oracle
