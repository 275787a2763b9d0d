#pragma once

#include <vector>

#include "phasebound/zero_family.hpp"

// Exact phase functions (continuous branches) and the true zeros they locate.
//
//   theta_nu:    J + iY   = M e^{i theta},  theta(0+) = -pi/2
//   phi_nu:      J' + iY' = N e^{i phi},    phi(0+)   =  pi/2
//   psi_{nu,eta}: (xJ' - eta J) + i(xY' - eta Y) = L e^{i psi}, psi(0+) = pi/2
//
// Branches are unwound by marching in x from a point where the principal
// value of atan2 is known to be the right branch, with steps sized from the
// analytic phase derivative so that no step can alias a full turn.

namespace phasebound::phase {

struct PhasePoint {
  double x = 0.0;
  double value = 0.0;  ///< unwound phase, radians
  long winding = 0;    ///< value = atan2(...) + 2 pi * winding
  bool accuracy_degraded = false;
};

PhasePoint phase_theta(double nu, double x);
PhasePoint phase_phi(double nu, double x);
/// Requires nu >= eta > 0.
PhasePoint phase_psi(double nu, double eta, double x);

/// Phase of the given kind; eta is ignored unless kind == Psi.
PhasePoint phase_value(PhaseKind kind, double nu, double eta, double x);

/// Phase at x on the branch nearest to `reference`, without marching. Only
/// meaningful when reference is known to be within pi of the true phase.
PhasePoint phase_near(PhaseKind kind, double nu, double eta, double x, double reference);

/// Analytic derivative of the phase (Wronskian over squared modulus).
double phase_derivative(PhaseKind kind, double nu, double eta, double x);

struct TrueZero {
  double value = 0.0;
  BoundStatus status = BoundStatus::Valid;  ///< Convention for the zeros pinned at 0
  bool accuracy_degraded = false;
};

/// The k-th zero of the family in the enumeration fixed by phase_target().
TrueZero true_zero(const ZeroFamily& family, double nu, long k);

/// Zeros k = 1..count in one march; element i holds zero k = i + 1.
std::vector<TrueZero> true_zeros(const ZeroFamily& family, double nu, long count);

/// tau*_nu = theta_nu(nu)/pi + 1/2, in [0, 1/2).
double tau_star(double nu);

}  // namespace phasebound::phase
