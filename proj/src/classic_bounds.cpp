#include "phasebound/classic_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "phasebound/errors.hpp"
#include "phasebound/special_oracle.hpp"

namespace phasebound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check(double nu, long k) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("classic bounds: nu must be finite and >= 0");
  if (k < 1) throw DomainError("classic bounds: k must be >= 1");
}

ClassicBound valid(double v, ClassicSource s) { return {v, BoundStatus::Valid, s}; }
ClassicBound not_applicable(ClassicSource s) { return {kNaN, BoundStatus::NotApplicable, s}; }

}  // namespace

std::string_view to_string(ClassicSource source) noexcept {
  switch (source) {
    case ClassicSource::HethcoteUp: return "HETHCOTE_UP";
    case ClassicSource::HethcoteLo: return "HETHCOTE_LO";
    case ClassicSource::ElUp: return "EL_UP";
    case ClassicSource::ElLo: return "EL_LO";
    case ClassicSource::QwLo: return "QW_LO";
    case ClassicSource::QwUp: return "QW_UP";
    case ClassicSource::AiryJPrimeUp: return "AIRY_JPRIME_UP";
    case ClassicSource::McMahon1: return "MCMAHON_1";
    case ClassicSource::McMahon2: return "MCMAHON_2";
    case ClassicSource::McMahon3: return "MCMAHON_3";
  }
  return "?";
}

double mcmahon_beta(double nu, long k, std::optional<double> tau) {
  check(nu, k);
  const double kk = static_cast<double>(k);
  if (tau) return kPi * (kk + nu / 2.0 + *tau - 1.25);
  return kPi * (kk + nu / 2.0 - 0.25);
}

double mcmahon(double nu, long k, int terms, std::optional<double> tau) {
  if (terms < 1 || terms > 3) throw DomainError("mcmahon: terms must be 1, 2 or 3");
  const double b = mcmahon_beta(nu, k, tau);
  if (!(b > 0.0)) throw DomainError("mcmahon: beta must be positive");
  const double m = 4.0 * nu * nu;
  double a = b;
  if (terms >= 2) a -= (m - 1.0) / (8.0 * b);
  if (terms >= 3) {
    const double e = 8.0 * b;
    a -= 4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * e * e * e);
  }
  return a;
}

ClassicPair hethcote(double nu, long k) {
  check(nu, k);
  ClassicPair p;
  p.upper = valid(mcmahon(nu, k, nu <= 0.5 ? 2 : 1), ClassicSource::HethcoteUp);
  p.lower = nu <= 0.5 ? valid(mcmahon(nu, k, 1), ClassicSource::HethcoteLo)
                      : not_applicable(ClassicSource::HethcoteLo);
  return p;
}

ClassicPair elbert_laforgia(double nu, long k) {
  check(nu, k);
  ClassicPair p;
  p.upper = valid(mcmahon(nu, k, nu <= 0.5 ? 2 : 3), ClassicSource::ElUp);
  if (nu <= 0.5) {
    p.lower = valid(mcmahon(nu, k, 3), ClassicSource::ElLo);
  } else if (nu < std::sqrt(31.0 / 28.0)) {
    p.lower = valid(mcmahon(nu, k, 2), ClassicSource::ElLo);
  } else {
    p.lower = not_applicable(ClassicSource::ElLo);
  }
  return p;
}

ClassicPair qu_wong(double nu, long k) {
  check(nu, k);
  if (!(nu > 0.0)) throw DomainError("qu_wong: requires nu > 0");
  const double a = oracle::airy_zero(k);
  const double c = std::cbrt(nu / 2.0);
  const double lo = nu - a * c;
  ClassicPair p;
  p.lower = valid(lo, ClassicSource::QwLo);
  p.upper = valid(lo + 0.15 * a * a / c, ClassicSource::QwUp);
  return p;
}

double airy_upper_jprime(double nu, long k) {
  check(nu, k);
  const double a = std::abs(oracle::airy_deriv_zero(k));
  const double a32 = a * std::sqrt(a);
  return nu + a * std::cbrt(nu / 2.0 + 8.0 * a32 / 27.0) +
         9.0 * a * a / (10.0 * std::cbrt(4.0)) / std::cbrt(27.0 * nu + 16.0 * a32);
}

}  // namespace phasebound
