#include "phasebound/special_oracle.hpp"

#include <boost/math/policies/policy.hpp>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "phasebound/errors.hpp"

namespace phasebound::oracle {
namespace {

namespace bmp = boost::math::policies;

// Y_nu overflows to -inf for tiny x and large nu; atan2 handles that fine, so
// overflow must not throw.
using Policy = bmp::policy<bmp::overflow_error<bmp::ignore_error>,
                           bmp::promote_double<true>>;

double cyl_j(double nu, double x) { return boost::math::cyl_bessel_j(nu, x, Policy()); }
double cyl_y(double nu, double x) { return boost::math::cyl_neumann(nu, x, Policy()); }

double airy_ai_raw(double x) { return boost::math::airy_ai(x, Policy()); }
double airy_aip_raw(double x) { return boost::math::airy_ai_prime(x, Policy()); }

// Asymptotic series T(t) and U(t) for the Airy zeros, truncated once the
// terms stop decreasing.
double asymptotic_series(double t, const double* coeffs, int n) {
  const double inv_t2 = 1.0 / (t * t);
  double sum = 1.0;
  double power = 1.0;
  double last = 1.0;
  for (int i = 0; i < n; ++i) {
    power *= inv_t2;
    const double term = coeffs[i] * power;
    if (std::abs(term) > std::abs(last)) break;
    sum += term;
    last = term;
  }
  return std::cbrt(t * t) * sum;
}

constexpr double kTCoeffs[] = {5.0 / 48.0, -5.0 / 36.0, 77125.0 / 82944.0,
                               -108056875.0 / 6967296.0};
constexpr double kUCoeffs[] = {-7.0 / 48.0, 35.0 / 288.0, -181223.0 / 207360.0,
                               18683371.0 / 1244160.0};

void check_zero_index(long k) {
  if (k < 1 || k > 1000000) {
    throw DomainError("airy zero index must lie in [1, 1e6], got " + std::to_string(k));
  }
}

}  // namespace

bool inside_envelope(double nu, double x) noexcept {
  return nu >= 0.0 && nu <= kMaxOrder && x > 0.0 && x <= kMaxArgument;
}

BesselQuad bessel_eval(double nu, double x) {
  if (!(nu >= 0.0)) throw DomainError("bessel_eval: order must be >= 0");
  if (!(x > 0.0)) throw DomainError("bessel_eval: argument must be > 0");

  BesselQuad q;
  q.j = cyl_j(nu, x);
  q.y = cyl_y(nu, x);
  // Derivatives from the upward recurrence C'_nu = (nu/x) C_nu - C_{nu+1}.
  const double j_next = cyl_j(nu + 1.0, x);
  const double y_next = cyl_y(nu + 1.0, x);
  q.jp = (nu / x) * q.j - j_next;
  q.yp = (nu / x) * q.y - y_next;
  q.accuracy_degraded = !inside_envelope(nu, x);
  return q;
}

double wronskian_residual(const BesselQuad& q, double x) noexcept {
  const double target = 2.0 / (std::numbers::pi * x);
  const double w = q.j * q.yp - q.jp * q.y;
  const double scale = std::abs(q.j * q.yp) + std::abs(q.jp * q.y) + target;
  return std::abs(w - target) / scale;
}

AiryPair airy_eval(double x) {
  if (!(x >= -20.0 && x <= 20.0)) {
    throw DomainError("airy_eval: argument must lie in [-20, 20]");
  }
  return {airy_ai_raw(x), airy_aip_raw(x)};
}

double airy_zero(long k) {
  check_zero_index(k);
  const double t = 3.0 * std::numbers::pi * (4.0 * static_cast<double>(k) - 1.0) / 8.0;
  double x = -asymptotic_series(t, kTCoeffs, 4);
  for (int iter = 0; iter < 5; ++iter) {
    const double step = airy_ai_raw(x) / airy_aip_raw(x);
    x -= step;
    if (std::abs(step) <= 1e-15 * std::abs(x)) break;
  }
  return x;
}

double airy_deriv_zero(long k) {
  check_zero_index(k);
  const double t = 3.0 * std::numbers::pi * (4.0 * static_cast<double>(k) - 3.0) / 8.0;
  double x = -asymptotic_series(t, kUCoeffs, 4);
  // Ai'' = x Ai.
  for (int iter = 0; iter < 5; ++iter) {
    const double step = airy_aip_raw(x) / (x * airy_ai_raw(x));
    x -= step;
    if (std::abs(step) <= 1e-15 * std::abs(x)) break;
  }
  return x;
}

}  // namespace phasebound::oracle
