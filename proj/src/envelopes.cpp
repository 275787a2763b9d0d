#include "phasebound/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "param_poly.hpp"
#include "phasebound/errors.hpp"

namespace phasebound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_nu(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("envelope: nu must be finite and >= 0");
}

// sqrt(x^2 - a^2) without squaring away the difference.
double edge_sqrt(double a, double x) { return std::sqrt((x - a) * (x + a)); }

// t - atan(t), accurate for small t.
double t_minus_atan(double t) {
  if (t < 0.1) {
    const double t2 = t * t;
    double term = t * t2;
    double sum = 0.0;
    for (int n = 1; n <= 12; ++n) {
      sum += (n % 2 == 1 ? 1.0 : -1.0) * term / (2 * n + 1);
      term *= t2;
    }
    return sum;
  }
  return t - std::atan(t);
}

// atan(a/s)/a, finite as a -> 0.
double atan_ratio(double a, double s) {
  const double r = a / s;
  if (r < 1e-4) return (1.0 - r * r / 3.0 + r * r * r * r / 5.0) / s;
  return std::atan2(a, s) / a;
}

double theta_upper(double nu, double x) {
  if (nu == 0.0) return x - kPi / 4.0;
  const double s = edge_sqrt(nu, x);
  // s - nu acos(nu/x) = nu (t - atan t) with t = s/nu
  return nu * t_minus_atan(s / nu) - kPi / 4.0;
}

double theta_lower(double nu, double x) {
  const double s = edge_sqrt(nu, x);
  return theta_upper(nu, x) - (3.0 * x * x + 2.0 * nu * nu) / (24.0 * s * s * s);
}

double phi_upper(double nu, double x) {
  const double s = edge_sqrt(nu, x);
  return theta_upper(nu, x) + kPi / 2.0 + (9.0 * x * x - 2.0 * nu * nu) / (24.0 * s * s * s);
}

double psi_lower(double nu, double eta, double x) {
  const double mu = mu_of(nu, eta);
  const double s = edge_sqrt(mu, x);
  // -(eta^2/(2mu) + mu) acos(mu/x) + pi/4 (eta^2/mu + 2mu) = (eta^2/(2mu) + mu) asin(mu/x)
  const double b_over_mu = atan_ratio(mu, s);
  return s + mu * mu * b_over_mu + 0.5 * eta * eta * b_over_mu + eta / s -
         kPi * (2.0 * nu - 1.0) / 4.0;
}

// 8xi^3 - 3xi^2 - 10nu^2 xi - 7nu^4
double p_cubic(double nu, double xi) {
  const double n2 = nu * nu;
  return ((8.0 * xi - 3.0) * xi - 10.0 * n2) * xi - 7.0 * n2 * n2;
}

double xi_star(double nu) {
  const double n2 = nu * nu;
  double lo = 0.0;
  double hi = 1.0 + std::max({3.0 / 8.0, 10.0 * n2 / 8.0, 7.0 * n2 * n2 / 8.0});
  // p_cubic <= 0 on [0, root], > 0 beyond.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (p_cubic(nu, mid) > 0.0 ? hi : lo) = mid;
  }
  double xi = 0.5 * (lo + hi);
  const double d = (24.0 * xi - 6.0) * xi - 10.0 * n2;
  if (d > 0.0) {
    const double polished = xi - p_cubic(nu, xi) / d;
    if (polished >= lo && polished <= hi) xi = polished;
  }
  return xi;
}

void check_domain(const EnvelopeKind& kind, double nu, double x) {
  check_nu(nu);
  if (!std::isfinite(x)) throw DomainError("envelope: x must be finite");
  const double edge = domain_edge(kind, nu);
  const bool ok = edge_included(kind.tag) ? x >= edge : x > edge;
  if (!ok) {
    throw DomainError("envelope " + std::string(to_string(kind.tag)) + ": x = " + std::to_string(x) +
                      " lies outside the domain (edge " + std::to_string(edge) + ")");
  }
  if (kind.tag == EnvelopeTag::PsiLower && x <= 0.0) throw DomainError("envelope: x must be > 0");
}

}  // namespace

std::string_view to_string(EnvelopeTag tag) noexcept {
  switch (tag) {
    case EnvelopeTag::ThetaUpper: return "THETA_UPPER";
    case EnvelopeTag::ThetaLower: return "THETA_LOWER";
    case EnvelopeTag::ThetaLowerClamped: return "THETA_LOWER_CLAMPED";
    case EnvelopeTag::PhiLower: return "PHI_LOWER";
    case EnvelopeTag::PhiUpper: return "PHI_UPPER";
    case EnvelopeTag::PhiUpperClamped: return "PHI_UPPER_CLAMPED";
    case EnvelopeTag::PsiLower: return "PSI_LOWER";
  }
  return "?";
}

double mu_of(double nu, double eta) {
  check_nu(nu);
  if (!(eta > 0.0 && eta <= nu)) throw DomainError("psi envelope needs nu >= eta > 0");
  return edge_sqrt(eta, nu);
}

double domain_edge(const EnvelopeKind& kind, double nu) {
  return kind.tag == EnvelopeTag::PsiLower ? mu_of(nu, kind.eta) : nu;
}

bool edge_included(EnvelopeTag tag) noexcept {
  return tag == EnvelopeTag::ThetaUpper || tag == EnvelopeTag::PhiLower;
}

double eval_envelope(const EnvelopeKind& kind, double nu, double x) {
  check_domain(kind, nu, x);
  switch (kind.tag) {
    case EnvelopeTag::ThetaUpper: return theta_upper(nu, x);
    case EnvelopeTag::ThetaLower: return theta_lower(nu, x);
    case EnvelopeTag::ThetaLowerClamped: return std::max(theta_lower(nu, x), -kPi / 2.0);
    case EnvelopeTag::PhiLower: return theta_upper(nu, x) + kPi / 2.0;
    case EnvelopeTag::PhiUpper: return phi_upper(nu, x);
    case EnvelopeTag::PhiUpperClamped: {
      const double xs = x_star(nu);
      return x < xs ? z_star(nu) : phi_upper(nu, x);
    }
    case EnvelopeTag::PsiLower: return psi_lower(nu, kind.eta, x);
  }
  return kNaN;
}

double envelope_derivative(const EnvelopeKind& kind, double nu, double x) {
  check_domain(kind, nu, x);
  const double n2 = nu * nu;
  switch (kind.tag) {
    case EnvelopeTag::ThetaUpper:
    case EnvelopeTag::PhiLower: return edge_sqrt(nu, x) / x;
    case EnvelopeTag::ThetaLowerClamped:
      if (theta_lower(nu, x) < -kPi / 2.0) return 0.0;
      [[fallthrough]];
    case EnvelopeTag::ThetaLower: {
      const double chi = (x - nu) * (x + nu);
      const double num = ((8.0 * chi + 1.0) * chi + 6.0 * n2) * chi + 5.0 * n2 * n2;
      return num / (8.0 * x * chi * chi * std::sqrt(chi));
    }
    case EnvelopeTag::PhiUpperClamped:
      if (x < x_star(nu)) return 0.0;
      [[fallthrough]];
    case EnvelopeTag::PhiUpper: {
      const double chi = (x - nu) * (x + nu);
      return p_cubic(nu, chi) / (8.0 * x * chi * chi * std::sqrt(chi));
    }
    case EnvelopeTag::PsiLower: {
      const double eta = kind.eta;
      const double mu = mu_of(nu, eta);
      const double chi = (x - mu) * (x + mu);
      const double num = (2.0 * chi - eta * (eta + 2.0)) * chi - 2.0 * eta * mu * mu;
      return num / (2.0 * x * chi * std::sqrt(chi));
    }
  }
  return kNaN;
}

double p_poly(double nu, double x) { return p_cubic(nu, (x - nu) * (x + nu)); }

double r_poly(double mu, double eta, double x) {
  const long double chi = static_cast<long double>(x - mu) * (x + mu);
  return static_cast<double>(detail::r_poly_printed().at_chi(eta, static_cast<long double>(mu) * mu, chi));
}

std::vector<long double> r_poly_chi_coefficients(double mu, double eta) {
  return detail::r_poly_printed().in_chi.coefficients_in_w(eta, static_cast<long double>(mu) * mu);
}

double x_star(double nu) {
  check_nu(nu);
  return std::sqrt(nu * nu + xi_star(nu));
}

double z_star(double nu) { return phi_upper(nu, x_star(nu)); }

double x_hash(double mu, double eta) {
  if (!(mu >= 0.0) || !(eta > 0.0)) throw DomainError("x_hash needs mu >= 0, eta > 0");
  const double m2 = mu * mu;
  const double a = eta * (eta + 2.0);
  return 0.5 * std::sqrt(4.0 * m2 + a + std::sqrt(a * a + 16.0 * m2 * eta));
}

namespace {

long double horner(const std::vector<long double>& c, long double w) {
  long double v = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * w + *it;
  return v;
}

// Coefficients of c(w + shift) by repeated synthetic division.
std::vector<long double> taylor_shift(std::vector<long double> c, long double shift) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 2; j + 1 > i; --j) c[j] += shift * c[j + 1];
  }
  return c;
}

int sign_changes(const std::vector<long double>& c) {
  int changes = 0;
  int last = 0;
  long double scale = 0.0L;
  for (const auto v : c) scale = std::max(scale, std::fabs(v));
  for (const auto v : c) {
    if (std::fabs(v) <= scale * 1e-15L) continue;
    const int s = v > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

double x_at(double mu, double eta) {
  if (!(mu >= 0.0) || !(eta > 0.0)) throw DomainError("x_at needs mu >= 0, eta > 0");
  const auto c = r_poly_chi_coefficients(mu, eta);
  const long double lead = c.back();
  const std::size_t n = c.size() - 1;

  // Positive roots in chi are bounded by 2 max_i |c_i/c_n|^{1/(n-i)} (Fujiwara).
  long double bound = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    bound = std::max(bound, std::pow(std::fabs(c[i] / lead), 1.0L / static_cast<long double>(n - i)));
  }
  long double hi = 2.0L * bound + 1.0L;

  const double xh = x_hash(mu, eta);
  long double lo = static_cast<long double>(xh - mu) * (xh + mu);
  // r < 0 at x# (so a root lies above it); r > 0 beyond the bound.
  auto no_root_above = [&](long double w) { return sign_changes(taylor_shift(c, w)) == 0; };

  for (int it = 0; it < 400 && hi - lo > 1e-18L * hi; ++it) {
    const long double mid = 0.5L * (lo + hi);
    const long double v = horner(c, mid);
    if (v < 0.0L) {
      lo = mid;
    } else if (no_root_above(mid)) {
      hi = mid;
    } else {
      // Undecided: look for a sign change above mid on a dense scan.
      constexpr int kScan = 4096;
      long double found = -1.0L;
      for (int i = kScan - 1; i >= 0; --i) {
        const long double w = mid + (hi - mid) * i / kScan;
        if (horner(c, w) < 0.0L) {
          found = w;
          break;
        }
      }
      if (found < 0.0L) {
        hi = mid;
      } else {
        lo = found;
      }
    }
  }
  const long double chi = 0.5L * (lo + hi);
  return static_cast<double>(std::sqrt(chi + static_cast<long double>(mu) * mu));
}

CriticalPoints critical_points(double nu, std::optional<double> eta) {
  check_nu(nu);
  CriticalPoints cp;
  cp.x_star = x_star(nu);
  cp.z_star = phi_upper(nu, cp.x_star);
  cp.x_hash = kNaN;
  cp.x_at = kNaN;
  if (eta) {
    const double mu = mu_of(nu, *eta);
    cp.x_hash = x_hash(mu, *eta);
    cp.x_at = x_at(mu, *eta);
  }
  return cp;
}

}  // namespace phasebound
