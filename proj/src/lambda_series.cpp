// lambda-accelerated Lerch series; see lerch_lambda_series in series.hpp.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "gpolylog/series.hpp"

namespace gpolylog {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kSmallTermsToStop = 3;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Shape of the accelerated series for one parameter set.
struct LambdaPlan {
  double alpha;   // -lambda / (1 - lambda)
  complex beta;   // z / (1 - lambda)
  double rho;     // |T_n| <= rho^n * scale
  double scale;   // 1 / ((1 - lambda) a^s)
  double growth;  // (|lambda| + |z|) / (1 - lambda): sum_k |C(n,k) alpha^{n-k} beta^k| = growth^n
  double stop_threshold;
  std::uint64_t n_cap;  // every T_n beyond this is below stop_threshold
};

LambdaPlan make_plan(const LerchParams& pr, const ToleranceConfig& tol) {
  const double one_minus = 1.0 - pr.lambda;
  LambdaPlan plan;
  plan.alpha = -pr.lambda / one_minus;
  plan.beta = pr.z / one_minus;
  plan.rho = std::max(std::abs(pr.z - pr.lambda), std::abs(pr.lambda)) / one_minus;
  plan.scale = 1.0 / (one_minus * std::pow(pr.a, pr.s));
  plan.growth = (std::abs(pr.lambda) + std::abs(pr.z)) / one_minus;
  // Three consecutive terms below tol*(1-rho)/2 keep the geometric remainder
  // under tol even when rho is close to 1.
  plan.stop_threshold = 0.5 * tol.target_abs_tol * (1.0 - plan.rho);
  if (plan.rho == 0.0) {
    plan.n_cap = 1;
  } else {
    const double n = std::log(plan.stop_threshold / plan.scale) / std::log(plan.rho);
    plan.n_cap = static_cast<std::uint64_t>(std::max(0.0, std::ceil(n))) + 1;
  }
  return plan;
}

double rigorous_tail(const LambdaPlan& plan, std::uint64_t next_n) {
  if (plan.rho == 0.0) return 0.0;
  return plan.scale * std::pow(plan.rho, static_cast<double>(next_n)) / (1.0 - plan.rho);
}

[[noreturn]] void give_up(std::uint64_t terms) {
  std::ostringstream os;
  os << "lerch_lambda_series: outer terms did not settle below tolerance after " << terms
     << " terms";
  throw NonConvergence(os.str());
}

EvalResult finish(complex sum, double rounding, const LambdaPlan& plan, std::uint64_t terms,
                  double last_small) {
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()) || !std::isfinite(rounding))
    throw NonConvergence("lerch_lambda_series: inner sums overflowed in double precision");
  EvalResult out;
  out.value = sum;
  const double tail = std::min(rigorous_tail(plan, terms),
                               last_small * plan.rho / std::max(1.0 - plan.rho, kEps) +
                                   last_small);
  out.abs_error_estimate = tail + rounding;
  out.route = Route::LerchLambdaSeries;
  out.terms_or_evals = terms;
  return out;
}

EvalResult lambda_series_double(const LerchParams& pr, const LambdaPlan& plan,
                                const ToleranceConfig& tol) {
  std::vector<complex> row{1.0};
  std::vector<double> inv_pow;
  complex sum = 0.0;
  double rounding = 0.0;
  int small = 0;
  double last_small = 0.0;
  const double outer = 1.0 / (1.0 - pr.lambda);
  for (std::uint64_t n = 0;; ++n) {
    inv_pow.push_back(1.0 / std::pow(static_cast<double>(n) + pr.a, pr.s));
    complex inner = 0.0;
    double inner_abs = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      inner += row[k] * inv_pow[k];
      inner_abs += std::abs(row[k]) * inv_pow[k];
    }
    const complex term = inner * outer;
    sum += term;
    rounding += 2.0 * kEps * static_cast<double>(n + 2) * inner_abs * outer;
    const double mag = std::abs(term);
    if (mag <= plan.stop_threshold) {
      last_small = std::max(last_small, mag);
      if (++small == kSmallTermsToStop) return finish(sum, rounding, plan, n + 1, last_small);
    } else {
      small = 0;
      last_small = 0.0;
    }
    // past n_cap the a-priori bound alone keeps the remainder under tol/2
    if (n + 1 >= plan.n_cap) return finish(sum, rounding, plan, n + 1, kInf);
    if (n + 1 >= tol.max_terms) give_up(n + 1);
    row.push_back(0.0);
    for (std::size_t k = row.size() - 1; k > 0; --k)
      row[k] = plan.alpha * row[k] + plan.beta * row[k - 1];
    row[0] *= plan.alpha;
  }
}

// Minimal RAII holder for an MPFR value.
class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mp(const Mp& other) { mpfr_init2(v_, mpfr_get_prec(other.v_)); mpfr_set(v_, other.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& other) { mpfr_set(v_, other.v_, MPFR_RNDN); return *this; }
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Row of complex MPFR coefficients held as separate real/imaginary parts;
// the imaginary parts are skipped entirely for real z.
EvalResult lambda_series_mpfr(const LerchParams& pr, const LambdaPlan& plan,
                              const ToleranceConfig& tol) {
  const double n_max = static_cast<double>(plan.n_cap + kSmallTermsToStop + 1);
  const double bits_needed = n_max * std::log2(std::max(plan.growth, 1.0)) +
                             std::log2(std::max(plan.scale, 1.0)) +
                             std::log2(1.0 / plan.stop_threshold) + std::log2(n_max) + 64.0;
  const auto prec = static_cast<mpfr_prec_t>(std::ceil(bits_needed));
  const bool real_z = pr.z.imag() == 0.0;

  Mp alpha(prec), beta_re(prec), beta_im(prec), one_minus(prec), tmp(prec), tmp2(prec);
  mpfr_set_d(one_minus.get(), 1.0, MPFR_RNDN);
  mpfr_sub_d(one_minus.get(), one_minus.get(), pr.lambda, MPFR_RNDN);
  mpfr_set_d(alpha.get(), -pr.lambda, MPFR_RNDN);
  mpfr_div(alpha.get(), alpha.get(), one_minus.get(), MPFR_RNDN);
  mpfr_set_d(beta_re.get(), pr.z.real(), MPFR_RNDN);
  mpfr_div(beta_re.get(), beta_re.get(), one_minus.get(), MPFR_RNDN);
  mpfr_set_d(beta_im.get(), pr.z.imag(), MPFR_RNDN);
  mpfr_div(beta_im.get(), beta_im.get(), one_minus.get(), MPFR_RNDN);

  std::vector<Mp> re, im, inv_pow;
  re.reserve(plan.n_cap + 8);
  im.reserve(plan.n_cap + 8);
  inv_pow.reserve(plan.n_cap + 8);
  re.emplace_back(prec);
  mpfr_set_d(re.back().get(), 1.0, MPFR_RNDN);
  im.emplace_back(prec);

  Mp acc_re(prec), acc_im(prec), base(prec), expo(prec);
  mpfr_set_d(expo.get(), -pr.s, MPFR_RNDN);
  complex sum = 0.0;
  int small = 0;
  double last_small = 0.0;
  for (std::uint64_t n = 0;; ++n) {
    inv_pow.emplace_back(prec);
    mpfr_set_d(base.get(), pr.a, MPFR_RNDN);
    mpfr_add_ui(base.get(), base.get(), n, MPFR_RNDN);
    mpfr_pow(inv_pow.back().get(), base.get(), expo.get(), MPFR_RNDN);

    mpfr_set_zero(acc_re.get(), 1);
    mpfr_set_zero(acc_im.get(), 1);
    for (std::size_t k = 0; k < re.size(); ++k) {
      mpfr_fma(acc_re.get(), re[k].get(), inv_pow[k].get(), acc_re.get(), MPFR_RNDN);
      if (!real_z) mpfr_fma(acc_im.get(), im[k].get(), inv_pow[k].get(), acc_im.get(), MPFR_RNDN);
    }
    mpfr_div(acc_re.get(), acc_re.get(), one_minus.get(), MPFR_RNDN);
    mpfr_div(acc_im.get(), acc_im.get(), one_minus.get(), MPFR_RNDN);
    const complex term(acc_re.to_double(), acc_im.to_double());
    sum += term;
    const double mag = std::abs(term);
    if (mag <= plan.stop_threshold) {
      last_small = std::max(last_small, mag);
      if (++small == kSmallTermsToStop) {
        const double rounding = 2.0 * kEps * static_cast<double>(n + 1) * std::abs(sum);
        return finish(sum, rounding, plan, n + 1, last_small);
      }
    } else {
      small = 0;
      last_small = 0.0;
    }
    if (n + 1 >= plan.n_cap) {
      const double rounding = 2.0 * kEps * static_cast<double>(n + 1) * std::abs(sum);
      return finish(sum, rounding, plan, n + 1, kInf);
    }
    if (n + 1 >= tol.max_terms) give_up(n + 1);

    // row_k <- alpha row_k + beta row_{k-1}, updated from the top down.
    re.emplace_back(prec);
    im.emplace_back(prec);
    for (std::size_t k = re.size() - 1; k > 0; --k) {
      if (real_z) {
        mpfr_mul(tmp.get(), beta_re.get(), re[k - 1].get(), MPFR_RNDN);
        mpfr_fma(re[k].get(), alpha.get(), re[k].get(), tmp.get(), MPFR_RNDN);
      } else {
        // (br + i bi)(r + i m) = (br r - bi m) + i (br m + bi r)
        mpfr_mul(tmp.get(), beta_re.get(), re[k - 1].get(), MPFR_RNDN);
        mpfr_mul(tmp2.get(), beta_im.get(), im[k - 1].get(), MPFR_RNDN);
        mpfr_sub(tmp.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
        mpfr_fma(re[k].get(), alpha.get(), re[k].get(), tmp.get(), MPFR_RNDN);
        mpfr_mul(tmp.get(), beta_re.get(), im[k - 1].get(), MPFR_RNDN);
        mpfr_mul(tmp2.get(), beta_im.get(), re[k - 1].get(), MPFR_RNDN);
        mpfr_add(tmp.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
        mpfr_fma(im[k].get(), alpha.get(), im[k].get(), tmp.get(), MPFR_RNDN);
      }
    }
    mpfr_mul(re[0].get(), re[0].get(), alpha.get(), MPFR_RNDN);
    if (!real_z) mpfr_mul(im[0].get(), im[0].get(), alpha.get(), MPFR_RNDN);
  }
}

}  // namespace

EvalResult lerch_lambda_series(const LerchParams& params, const ToleranceConfig& tol) {
  validate(tol);
  const auto& pr = validate(params, Route::LerchLambdaSeries);
  const LambdaPlan plan = make_plan(pr, tol);
  const double log10_growth =
      static_cast<double>(plan.n_cap) * std::log10(std::max(plan.growth, 1.0));
  if (tol.extended_precision && log10_growth > 3.0) return lambda_series_mpfr(pr, plan, tol);
  return lambda_series_double(pr, plan, tol);
}

}  // namespace gpolylog
