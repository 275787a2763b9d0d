#pragma once

#include <string>
#include <string_view>

namespace phasebound {

/// Which zero sequence is targeted.
///
///   J, Y              zeros of J_nu, Y_nu
///   C (tau)           zeros of J_nu cos(pi tau) + Y_nu sin(pi tau), tau in (0, 1]
///   JPrime, YPrime    zeros of J'_nu, Y'_nu
///   CPrime (tau)      zeros of J'_nu cos(pi tau) + Y'_nu sin(pi tau), tau in [0, 1),
///                     counted from j'_{nu,1} upwards
///   UPrime, WPrime    zeros of x J'_nu - eta J_nu and x Y'_nu - eta Y_nu
///                     (derivatives of x^{-eta} J_nu and x^{-eta} Y_nu), nu >= eta > 0
enum class FamilyTag { J, Y, C, JPrime, YPrime, CPrime, UPrime, WPrime };

/// Phase function whose level crossings locate a family's zeros.
enum class PhaseKind { Theta, Phi, Psi };

struct ZeroFamily {
  FamilyTag tag = FamilyTag::J;
  double tau = 0.0;  ///< used by C and CPrime only
  double eta = 0.0;  ///< used by UPrime and WPrime only

  static ZeroFamily j() { return {FamilyTag::J}; }
  static ZeroFamily y() { return {FamilyTag::Y}; }
  static ZeroFamily c(double tau) { return {FamilyTag::C, tau}; }
  static ZeroFamily jprime() { return {FamilyTag::JPrime}; }
  static ZeroFamily yprime() { return {FamilyTag::YPrime}; }
  static ZeroFamily cprime(double tau) { return {FamilyTag::CPrime, tau}; }
  static ZeroFamily uprime(double eta) { return {FamilyTag::UPrime, 0.0, eta}; }
  static ZeroFamily wprime(double eta) { return {FamilyTag::WPrime, 0.0, eta}; }
};

/// Validity of one end of an enclosure (or of a reported zero).
enum class BoundStatus { Valid, NotApplicable, Convention };

std::string_view to_string(BoundStatus s) noexcept;
std::string_view to_string(FamilyTag t) noexcept;

/// Parses the CLI spelling (j, y, c, jp, yp, cp, up, wp). Throws DomainError.
FamilyTag parse_family_tag(std::string_view name);

PhaseKind phase_kind(FamilyTag tag) noexcept;

/// Throws DomainError unless (family, nu) is admissible: nu >= 0, tau in
/// (0, 1] for C, tau in [0, 1) for CPrime, nu >= eta > 0 for UPrime/WPrime.
void validate(const ZeroFamily& family, double nu);

/// Phase level whose k-th crossing is the k-th zero:
///   J: pi(k - 1/2)   Y: pi(k - 1)   C: pi(tau + k - 3/2)
///   JPrime, UPrime: pi(k - 1/2)    YPrime, WPrime: pi k    CPrime: pi(tau + k - 1/2)
double phase_target(const ZeroFamily& family, long k);

/// True for the two conventional zeros at the origin: j'_{0,1} (also
/// c'_{0,0,1}) and u'_{nu,nu,1}.
bool is_convention_zero(const ZeroFamily& family, double nu, long k) noexcept;

}  // namespace phasebound
