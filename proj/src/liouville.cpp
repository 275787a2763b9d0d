#include "phasebound/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "param_poly.hpp"
#include "phasebound/envelopes.hpp"
#include "phasebound/errors.hpp"
#include "phasebound/phase_oracle.hpp"

namespace phasebound {
namespace {

using ld = long double;

void check_nu(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("potential: nu must be finite and >= 0");
}

void require_above(double x, double edge, const char* what) {
  if (!(x > edge) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": x = " + std::to_string(x) + " must exceed " +
                      std::to_string(edge));
  }
}

ld v_theta(ld nu, ld x) { return 1.0L - (nu * nu - 0.25L) / (x * x); }

ld v_phi(ld nu, ld x) {
  const ld chi = (x - nu) * (x + nu);
  return v_theta(nu, x) - (2.0L * nu * nu + x * x) / (chi * chi);
}

ld v_psi(ld nu, ld eta, ld mu, ld x) {
  const ld chi = (x - mu) * (x + mu);
  return v_theta(nu, x) + 2.0L * (1.0L - eta) / chi - 3.0L * x * x / (chi * chi);
}

ld ratio(const detail::ShiftedPoly& num, const detail::ShiftedPoly& den, ld eta, ld m, ld chi) {
  const ld d = den.at_chi(eta, m, chi);
  if (d == 0.0L) throw DomainError("potential: denominator vanishes at this x");
  return num.at_chi(eta, m, chi) / d;
}

ld closed_ld(const PotentialKind& kind, double nu_d, double x_d) {
  check_nu(nu_d);
  const ld nu = nu_d;
  const ld x = x_d;
  switch (kind.tag) {
    case PotentialTag::VTheta:
      require_above(x_d, 0.0, "V_theta");
      return v_theta(nu, x);
    case PotentialTag::VPhi:
      require_above(x_d, nu_d, "V_phi");
      return v_phi(nu, x);
    case PotentialTag::VPsi: {
      const double mu = mu_of(nu_d, kind.eta);
      require_above(x_d, mu, "V_psi");
      return v_psi(nu, kind.eta, mu, x);
    }
    case PotentialTag::VThetaUpper:
      require_above(x_d, nu_d, "V_theta_up");
      return ratio(detail::v2_numerator(), detail::v2_denominator(), 0.0L, nu * nu, (x - nu) * (x + nu));
    case PotentialTag::VThetaLower:
      require_above(x_d, nu_d, "V_theta_lo");
      return ratio(detail::q1_poly(), detail::q2_poly(), 0.0L, nu * nu, (x - nu) * (x + nu));
    case PotentialTag::VPhiUpper:
      require_above(x_d, nu_d, "V_phi_up");
      return ratio(detail::q3_poly(), detail::q4_poly(), 0.0L, nu * nu, (x - nu) * (x + nu));
    case PotentialTag::VPsiLower: {
      const ld mu = mu_of(nu_d, kind.eta);
      require_above(x_d, static_cast<double>(mu), "V_psi_lo");
      return ratio(detail::q5_poly(), detail::q6_poly(), kind.eta, mu * mu, (x - mu) * (x + mu));
    }
  }
  return std::numeric_limits<ld>::quiet_NaN();
}

// Signed difference that the pair's comparison condition asserts positive.
ld signed_difference(SturmPair pair, double nu, double eta, double x) {
  auto v = [&](PotentialTag tag) { return closed_ld({tag, eta}, nu, x); };
  switch (pair) {
    case SturmPair::ThetaUpperVsExact: return v(PotentialTag::VTheta) - v(PotentialTag::VThetaUpper);
    case SturmPair::ThetaLowerVsExact: return v(PotentialTag::VThetaLower) - v(PotentialTag::VTheta);
    // phi_lo = theta_up + pi/2 shares its potential
    case SturmPair::PhiLowerVsExact: return v(PotentialTag::VThetaUpper) - v(PotentialTag::VPhi);
    case SturmPair::PhiUpperVsExact: return v(PotentialTag::VPhi) - v(PotentialTag::VPhiUpper);
    case SturmPair::PsiLowerVsExact: return v(PotentialTag::VPsiLower) - v(PotentialTag::VPsi);
  }
  return 0.0L;
}

double require_eta(SturmPair pair, std::optional<double> eta) {
  if (pair != SturmPair::PsiLowerVsExact) return 0.0;
  if (!eta) throw DomainError("the psi pair needs eta");
  return *eta;
}

}  // namespace

double potential_numeric(const std::function<double(double)>& f, double x, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("potential_numeric: step must be positive");
  double v[7];
  for (int i = 0; i < 7; ++i) v[i] = f(x + (i - 3) * h);
  const double d1 = (-v[0] + 9.0 * v[1] - 45.0 * v[2] + 45.0 * v[4] - 9.0 * v[5] + v[6]) / (60.0 * h);
  const double d2 = (2.0 * v[0] - 27.0 * v[1] + 270.0 * v[2] - 490.0 * v[3] + 270.0 * v[4] -
                     27.0 * v[5] + 2.0 * v[6]) /
                    (180.0 * h * h);
  const double d3 = (v[0] - 8.0 * v[1] + 13.0 * v[2] - 13.0 * v[4] + 8.0 * v[5] - v[6]) / (8.0 * h * h * h);
  if (!(d1 > 0.0)) {
    throw DegenerateDerivative("potential_numeric: f' estimate " + std::to_string(d1) + " at x = " +
                               std::to_string(x));
  }
  return potential_from_derivatives(d1, d2, d3);
}

double potential_from_derivatives(double d1, double d2, double d3) {
  const double r = d2 / d1;
  return d1 * d1 + 0.5 * d3 / d1 - 0.75 * r * r;
}

double default_potential_step(double x, double edge) {
  double h = 2e-3 * std::max(1.0, x);
  if (std::isfinite(edge)) h = std::min(h, 0.25 * (x - edge));
  return h;
}

double potential_numeric_default(const std::function<double(double)>& f, double x, double edge) {
  return potential_numeric(f, x, default_potential_step(x, edge));
}

double potential_closed(const PotentialKind& kind, double nu, double x) {
  return static_cast<double>(closed_ld(kind, nu, x));
}

double delta_poly(double nu, double x) {
  const ld n = nu;
  const ld chi = (static_cast<ld>(x) - n) * (static_cast<ld>(x) + n);
  return static_cast<double>(detail::delta_poly_printed().at_chi(0.0L, n * n, chi));
}

std::string_view to_string(SturmPair pair) noexcept {
  switch (pair) {
    case SturmPair::ThetaUpperVsExact: return "THETA_UPPER_VS_EXACT";
    case SturmPair::ThetaLowerVsExact: return "THETA_LOWER_VS_EXACT";
    case SturmPair::PhiLowerVsExact: return "PHI_LOWER_VS_EXACT";
    case SturmPair::PhiUpperVsExact: return "PHI_UPPER_VS_EXACT";
    case SturmPair::PsiLowerVsExact: return "PSI_LOWER_VS_EXACT";
  }
  return "?";
}

double sturm_edge(SturmPair pair, double nu, std::optional<double> eta) {
  check_nu(nu);
  switch (pair) {
    case SturmPair::PhiUpperVsExact: return x_star(nu);
    case SturmPair::PsiLowerVsExact: {
      const double e = require_eta(pair, eta);
      return x_at(mu_of(nu, e), e);
    }
    default: return nu;
  }
}

GridSpec default_grid(SturmPair pair, double nu, std::optional<double> eta) {
  const double edge = sturm_edge(pair, nu, eta);
  GridSpec g;
  g.x_min = std::max(edge * (1.0 + 1e-3), edge + 1e-3);
  g.x_max = std::max(100.0, 10.0 * nu);
  g.count = 512;
  g.spacing = Spacing::Log;
  return g;
}

double signed_potential_difference(SturmPair pair, double nu, std::optional<double> eta, double x) {
  return static_cast<double>(signed_difference(pair, nu, require_eta(pair, eta), x));
}

SturmReport verify_c2(SturmPair pair, double nu, std::optional<double> eta, std::optional<GridSpec> grid) {
  const double e = require_eta(pair, eta);
  const double edge = sturm_edge(pair, nu, eta);
  const GridSpec g = grid ? *grid : default_grid(pair, nu, eta);
  if (g.count < 2 || !(g.x_max > g.x_min)) throw DomainError("verify_c2: empty grid");
  if (!(g.x_min > edge)) {
    throw DomainError("verify_c2: grid starts at " + std::to_string(g.x_min) + ", not beyond the edge " +
                      std::to_string(edge) + " of " + std::string(to_string(pair)));
  }
  SturmReport report;
  report.pair = pair;
  report.grid = g;
  report.min_diff = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.count; ++i) {
    const double u = static_cast<double>(i) / (g.count - 1);
    double x = g.spacing == Spacing::Log ? g.x_min * std::pow(g.x_max / g.x_min, u)
                                         : g.x_min + (g.x_max - g.x_min) * u;
    if (i == g.count - 1) x = g.x_max;
    const double d = static_cast<double>(signed_difference(pair, nu, e, x));
    if (d < report.min_diff || std::isnan(d)) {
      report.min_diff = d;
      report.argmin = x;
      if (std::isnan(d)) break;
    }
  }
  report.passed = report.min_diff > 0.0;
  return report;
}

TailReport verify_c3(SturmPair pair, double nu, std::optional<double> eta, double x) {
  const double e = require_eta(pair, eta);
  TailReport t;
  t.x = x;
  auto exact = [&](PhaseKind kind, double reference) {
    const auto p = phase::phase_near(kind, nu, e, x, reference);
    if (p.accuracy_degraded) {
      throw AccuracyDegraded("verify_c3: oracle outside its accuracy envelope at x = " + std::to_string(x));
    }
    return p.value;
  };
  auto env = [&](const EnvelopeKind& k) { return eval_envelope(k, nu, x); };
  switch (pair) {
    case SturmPair::ThetaUpperVsExact: {
      const double up = env(EnvelopeKind::theta_upper());
      t.estimate = x * (up - exact(PhaseKind::Theta, up));
      t.expected = 1.0 / 8.0;
      t.power = 1;
      break;
    }
    case SturmPair::ThetaLowerVsExact: {
      const double lo = env(EnvelopeKind::theta_lower());
      t.estimate = x * x * x * (exact(PhaseKind::Theta, lo) - lo);
      t.expected = 25.0 / 384.0;
      t.power = 3;
      break;
    }
    case SturmPair::PhiLowerVsExact: {
      const double lo = env(EnvelopeKind::phi_lower());
      t.estimate = x * (exact(PhaseKind::Phi, lo) - lo);
      t.expected = 3.0 / 8.0;
      t.power = 1;
      break;
    }
    case SturmPair::PhiUpperVsExact: {
      const double up = env(EnvelopeKind::phi_upper());
      t.estimate = x * x * x * (up - exact(PhaseKind::Phi, up));
      t.expected = 21.0 / 128.0;
      t.power = 3;
      break;
    }
    case SturmPair::PsiLowerVsExact: {
      const double lo = env(EnvelopeKind::psi_lower(e));
      t.estimate = x * (exact(PhaseKind::Psi, lo) - lo);
      t.expected = 3.0 / 8.0;
      t.power = 1;
      break;
    }
  }
  t.passed = std::abs(t.estimate - t.expected) <= 0.2 * std::abs(t.expected);
  return t;
}

}  // namespace phasebound
