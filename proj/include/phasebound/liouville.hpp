#pragma once

#include <functional>
#include <optional>
#include <string_view>

// Liouville potentials V_f = (f')^2 + f'''/(2f') - (3/4)(f''/f')^2 of the
// exact phases and of their envelopes, and grid checks of the comparison
// conditions between them.

namespace phasebound {

enum class PotentialTag {
  VTheta,       ///< 1 - (nu^2 - 1/4)/x^2
  VPhi,         ///< V_theta - (2nu^2 + x^2)/(x^2 - nu^2)^2
  VPsi,         ///< V_theta + 2(1 - eta)/(x^2 - mu^2) - 3x^2/(x^2 - mu^2)^2
  VThetaUpper,  ///< potential of theta_up (also of phi_lo)
  VThetaLower,  ///< potential of theta_lo
  VPhiUpper,    ///< potential of phi_up
  VPsiLower,    ///< potential of psi_lo
};

struct PotentialKind {
  PotentialTag tag = PotentialTag::VTheta;
  double eta = 0.0;  ///< VPsi and VPsiLower only
};

/// V_f from the first three derivatives of f.
double potential_from_derivatives(double d1, double d2, double d3);

/// Seven-point central-difference estimate of V_f at x with the given step.
/// Throws DegenerateDerivative if the estimated f' is not positive.
double potential_numeric(const std::function<double(double)>& f, double x, double step);

/// Step used when none is given: 2e-3 max(1, x), capped at a quarter of the
/// distance from x to edge (the left end of f's domain).
double default_potential_step(double x, double edge);
double potential_numeric_default(const std::function<double(double)>& f, double x, double edge);

double potential_closed(const PotentialKind& kind, double nu, double x);

/// delta_nu(x), the degree-18 polynomial equal to
/// 4096 x^2 (x^2-nu^2)^10 (phi_up')^2 (V_phi - V_phi_up).
double delta_poly(double nu, double x);

enum class SturmPair {
  ThetaUpperVsExact,  ///< V_theta - V_theta_up > 0 on (nu, inf)
  ThetaLowerVsExact,  ///< V_theta_lo - V_theta > 0 on (nu, inf)
  PhiLowerVsExact,    ///< V_phi_lo - V_phi > 0 on (nu, inf)
  PhiUpperVsExact,    ///< V_phi - V_phi_up > 0 on (x*, inf)
  PsiLowerVsExact,    ///< V_psi_lo - V_psi > 0 on (x@, inf)
};

inline constexpr SturmPair kAllSturmPairs[] = {
    SturmPair::ThetaUpperVsExact, SturmPair::ThetaLowerVsExact, SturmPair::PhiLowerVsExact,
    SturmPair::PhiUpperVsExact,   SturmPair::PsiLowerVsExact,
};

std::string_view to_string(SturmPair pair) noexcept;

/// Left end of the interval on which the pair's condition is asserted.
double sturm_edge(SturmPair pair, double nu, std::optional<double> eta);

enum class Spacing { Log, Linear };

struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  int count = 512;
  Spacing spacing = Spacing::Log;
};

/// 512 log-spaced points from max(edge (1 + 1e-3), edge + 1e-3) to max(100, 10 nu).
GridSpec default_grid(SturmPair pair, double nu, std::optional<double> eta);

struct SturmReport {
  SturmPair pair = SturmPair::ThetaUpperVsExact;
  double min_diff = 0.0;
  double argmin = 0.0;
  GridSpec grid;
  bool passed = false;
};

/// The pair's signed potential difference at x, formed in extended precision.
double signed_potential_difference(SturmPair pair, double nu, std::optional<double> eta, double x);

/// Minimum over the grid of the signed potential difference of the pair.
/// Throws DomainError if the grid reaches the edge of the pair's interval.
SturmReport verify_c2(SturmPair pair, double nu, std::optional<double> eta,
                      std::optional<GridSpec> grid = std::nullopt);

struct TailReport {
  double estimate = 0.0;  ///< x^s (h - g) at the sample point
  double expected = 0.0;  ///< the limiting constant
  int power = 1;          ///< s
  double x = 1000.0;
  bool passed = false;    ///< |estimate - expected| <= 0.2 |expected|
};

/// Estimates the limit of x^s (h - g) for the pair at x = 1e3, with the exact
/// phase taken from the phase oracle.
TailReport verify_c3(SturmPair pair, double nu, std::optional<double> eta, double x = 1000.0);

}  // namespace phasebound
