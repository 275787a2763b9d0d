#pragma once

// Reference evaluator for J, Y and their derivatives, and for the Airy
// function Ai, Ai' and their negative zeros. Everything else in the library is
// tested against this module.

namespace phasebound::oracle {

/// Orders and arguments inside which the evaluator guarantees 1e-10 relative
/// accuracy. Outside it values are still produced but flagged.
inline constexpr double kMaxOrder = 50.0;
inline constexpr double kMaxArgument = 1e4;

struct BesselQuad {
  double j = 0.0;   ///< J_nu(x)
  double y = 0.0;   ///< Y_nu(x)
  double jp = 0.0;  ///< J'_nu(x)
  double yp = 0.0;  ///< Y'_nu(x)
  bool accuracy_degraded = false;
};

struct AiryPair {
  double ai = 0.0;
  double aip = 0.0;
};

/// True when (nu, x) lies inside the guaranteed-accuracy envelope.
bool inside_envelope(double nu, double x) noexcept;

/// Evaluates J_nu, Y_nu, J'_nu, Y'_nu at x.
/// Throws DomainError if nu < 0 or x <= 0.
BesselQuad bessel_eval(double nu, double x);

/// Relative residual of the Wronskian identity J Y' - J' Y = 2/(pi x).
double wronskian_residual(const BesselQuad& q, double x) noexcept;

/// Ai(x) and Ai'(x) for -20 <= x <= 20; DomainError outside.
AiryPair airy_eval(double x);

/// k-th negative zero a_k of Ai (a_1 > a_2 > ...), 1 <= k <= 1e6.
double airy_zero(long k);

/// k-th negative zero a'_k of Ai', 1 <= k <= 1e6.
double airy_deriv_zero(long k);

}  // namespace phasebound::oracle
