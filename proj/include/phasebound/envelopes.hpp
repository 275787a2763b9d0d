#pragma once

#include <optional>
#include <string_view>
#include <vector>

// Closed-form envelopes of the phase functions, with s = sqrt(x^2 - nu^2):
//
//   theta_up(x)  = s - nu acos(nu/x) - pi/4                       [nu, inf)
//   theta_lo(x)  = theta_up(x) - (3x^2 + 2nu^2) / (24 s^3)          (nu, inf)
//   phi_lo(x)    = theta_up(x) + pi/2                              [nu, inf)
//   phi_up(x)    = phi_lo(x) + (9x^2 - 2nu^2) / (24 s^3)            (nu, inf)
//   psi_lo(x)    = sqrt(x^2-mu^2) - (eta^2/(2mu) + mu) acos(mu/x)
//                  + eta/sqrt(x^2-mu^2) + pi/4 (eta^2/mu + 2(mu-nu) + 1)   (mu, inf)
//
// with mu = sqrt(nu^2 - eta^2). The clamped kinds are max(theta_lo, -pi/2)
// and phi_up held at z* below x*.

namespace phasebound {

enum class EnvelopeTag {
  ThetaUpper,
  ThetaLower,
  ThetaLowerClamped,
  PhiLower,
  PhiUpper,
  PhiUpperClamped,
  PsiLower,
};

struct EnvelopeKind {
  EnvelopeTag tag = EnvelopeTag::ThetaUpper;
  double eta = 0.0;  ///< PsiLower only

  static EnvelopeKind theta_upper() { return {EnvelopeTag::ThetaUpper}; }
  static EnvelopeKind theta_lower() { return {EnvelopeTag::ThetaLower}; }
  static EnvelopeKind theta_lower_clamped() { return {EnvelopeTag::ThetaLowerClamped}; }
  static EnvelopeKind phi_lower() { return {EnvelopeTag::PhiLower}; }
  static EnvelopeKind phi_upper() { return {EnvelopeTag::PhiUpper}; }
  static EnvelopeKind phi_upper_clamped() { return {EnvelopeTag::PhiUpperClamped}; }
  static EnvelopeKind psi_lower(double eta) { return {EnvelopeTag::PsiLower, eta}; }
};

std::string_view to_string(EnvelopeTag tag) noexcept;

/// Left end of the domain: nu, or mu for PsiLower.
double domain_edge(const EnvelopeKind& kind, double nu);

/// Whether the domain edge itself belongs to the domain (ThetaUpper, PhiLower).
bool edge_included(EnvelopeTag tag) noexcept;

double eval_envelope(const EnvelopeKind& kind, double nu, double x);
double envelope_derivative(const EnvelopeKind& kind, double nu, double x);

/// p_nu(x) = 8x^6 - 3(8nu^2+1)x^4 + 4nu^2(6nu^2-1)x^2 - 8nu^6, evaluated as
/// the cubic 8xi^3 - 3xi^2 - 10nu^2 xi - 7nu^4 in xi = x^2 - nu^2.
double p_poly(double nu, double x);

/// The degree-14 polynomial r_{mu,eta}(x) whose greatest root is x@.
double r_poly(double mu, double eta, double x);

/// Coefficients of r_{mu,eta} as a polynomial in chi = x^2 - mu^2, lowest first.
std::vector<long double> r_poly_chi_coefficients(double mu, double eta);

struct CriticalPoints {
  double x_star = 0.0;  ///< root of p_nu in (nu, inf)
  double z_star = 0.0;  ///< phi_up(x_star)
  double x_hash = 0.0;  ///< zero of psi_lo', NaN without eta
  double x_at = 0.0;    ///< greatest root of r_{mu,eta}, NaN without eta
};

double x_star(double nu);
double z_star(double nu);
double x_hash(double mu, double eta);
double x_at(double mu, double eta);

/// mu = sqrt(nu^2 - eta^2); DomainError unless nu >= eta > 0.
double mu_of(double nu, double eta);

CriticalPoints critical_points(double nu, std::optional<double> eta = std::nullopt);

}  // namespace phasebound
