#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "phasebound/envelopes.hpp"
#include "phasebound/errors.hpp"
#include "phasebound/liouville.hpp"
#include "phasebound/phase_oracle.hpp"
#include "test_support.hpp"

using namespace phasebound;
using namespace testsupport;

namespace {

double theta_closed_potential(double nu, double x) { return 1.0 - (nu * nu - 0.25) / (x * x); }

// 64 chi^5 (8chi^3 + chi^2 + 6nu^2 chi + 5nu^4)^2 (V_theta_lo - V_theta) with x^2 = nu^2 + chi
long double chi_positive(long double nu, long double c) {
  const long double n2 = nu * nu;
  const long double n4 = n2 * n2;
  const long double n6 = n4 * n2;
  const long double n8 = n4 * n4;
  const long double n10 = n8 * n2;
  const long double n12 = n6 * n6;
  const long double n14 = n12 * n2;
  const long double coeff[] = {
      625 * n14,
      2375 * n12,
      3525 * n10,
      5 * (400 * n2 + 519) * n8,
      (5200 * n2 + 1011) * n6,
      3 * (1376 * n2 + 71) * n4,
      (70720 * n4 + 1696 * n2 + 23) * n2,
      99008 * n4 + 784 * n2 + 1,
      33984 * n2 + 16,
      1600,
  };
  long double acc = 0.0L;
  for (int i = 9; i >= 0; --i) acc = acc * c + coeff[i];
  return acc;
}

// nu^-14 delta_nu(nu (1 + z))
long double delta_zeta(long double nu, long double z) {
  const long double a = 63 * std::pow(z, 6) + 378 * std::pow(z, 5) + 1625 * std::pow(z, 4) + 3980 * std::pow(z, 3) +
                        5681 * z * z + 4410 * z + 1463;
  const long double b = 27 * std::pow(z, 8) + 216 * std::pow(z, 7) + 672 * std::pow(z, 6) + 1008 * std::pow(z, 5) +
                        998 * std::pow(z, 4) + 1304 * std::pow(z, 3) + 1672 * z * z + 1120 * z + 343;
  const long double c = 3 * z * z + 6 * z + 7;
  return 64 * std::pow(z, 6) * std::pow(z + 2, 6) * a * std::pow(nu, 4) +
         16 * std::pow(z, 3) * std::pow(z + 1, 2) * std::pow(z + 2, 3) * b * nu * nu - std::pow(z + 1, 6) * std::pow(c, 4);
}

struct Case {
  PotentialKind potential;
  EnvelopeKind envelope;
  double x_floor;  // interior points start above this
};

}  // namespace

TEST(Potential, NumericExamples) {
  EXPECT_NEAR(potential_numeric([](double x) { return x; }, 2.5, 1e-3), 1.0, 1e-9);
  const double theta0 = potential_numeric(
      [](double x) { return eval_envelope(EnvelopeKind::theta_upper(), 0.0, x); }, 2.0, 1e-3);
  EXPECT_NEAR(theta0, potential_closed({PotentialTag::VThetaUpper}, 0.0, 2.0), 1e-6);
  const double exact = potential_numeric([](double x) { return phase::phase_theta(1.0, x).value; }, 3.0, 1e-3);
  EXPECT_NEAR(exact, 1.0 - 0.75 / 9.0, 1e-5);
}

TEST(Potential, DegenerateDerivative) {
  EXPECT_THROW(potential_numeric([](double x) { return -x; }, 1.0, 1e-3), DegenerateDerivative);
  EXPECT_THROW(potential_numeric([](double) { return 2.0; }, 1.0, 1e-3), DegenerateDerivative);
}

TEST(Potential, FromDerivatives) {
  // f = x^2 at x = 1: 4 + 0 - 3/4
  EXPECT_DOUBLE_EQ(potential_from_derivatives(2.0, 2.0, 0.0), 3.25);
  EXPECT_DOUBLE_EQ(potential_from_derivatives(1.0, 0.0, 0.0), 1.0);
}

TEST(Potential, ClosedFormExamples) {
  for (double x : {0.1, 1.0, 7.0, 300.0}) {
    EXPECT_EQ(potential_closed({PotentialTag::VTheta}, 0.5, x), 1.0);
  }
  EXPECT_DOUBLE_EQ(potential_closed({PotentialTag::VThetaUpper}, 0.0, 1.0), 1.0);
  EXPECT_NEAR(potential_closed({PotentialTag::VTheta}, 2.0, 3.0) - potential_closed({PotentialTag::VThetaUpper}, 2.0, 3.0),
              0.25, 1e-14);
  EXPECT_THROW(potential_closed({PotentialTag::VPhi}, 2.0, 2.0), DomainError);
}

TEST(Potential, ExactPhasesMatchClosedForms) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const double nu = 8.0 * unit(rng);
    const double eta = nu * (0.1 + 0.9 * unit(rng));
    const double x = 1.3 * nu + 0.8 + 30.0 * unit(rng);
    const double vt = potential_numeric_default([nu](double s) { return phase::phase_theta(nu, s).value; }, x, nu);
    EXPECT_NEAR(vt, theta_closed_potential(nu, x), 1e-6 * std::max(1.0, std::fabs(vt))) << nu << " " << x;
    EXPECT_NEAR(vt, potential_closed({PotentialTag::VTheta}, nu, x), 1e-6 * std::max(1.0, std::fabs(vt)));
    const double vp = potential_numeric_default([nu](double s) { return phase::phase_phi(nu, s).value; }, x, nu);
    EXPECT_NEAR(vp, potential_closed({PotentialTag::VPhi}, nu, x), 1e-6 * std::max(1.0, std::fabs(vp))) << nu << " " << x;
    if (nu > 0.0) {
      const double xs = std::max(x, 1.3 * mu_of(nu, eta) + 2.0);
      const double vs =
          potential_numeric_default([nu, eta](double s) { return phase::phase_psi(nu, eta, s).value; }, xs,
                                    mu_of(nu, eta));
      EXPECT_NEAR(vs, potential_closed({PotentialTag::VPsi, eta}, nu, xs), 1e-6 * std::max(1.0, std::fabs(vs)))
          << nu << " " << eta << " " << xs;
    }
  }
}

TEST(Potential, ClosedMatchesNumericOnEveryEnvelope) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double nu = 20.0 * unit(rng);
    const double eta = std::max(1e-3, nu * unit(rng));
    const double mu = mu_of(nu, eta);
    const Case cases[] = {
        {{PotentialTag::VThetaUpper}, EnvelopeKind::theta_upper(), 1.1 * nu + 0.2},
        {{PotentialTag::VThetaLower}, EnvelopeKind::theta_lower(), 1.1 * nu + 0.2},
        {{PotentialTag::VThetaUpper}, EnvelopeKind::phi_lower(), 1.1 * nu + 0.2},
        {{PotentialTag::VPhiUpper}, EnvelopeKind::phi_upper(), 1.1 * x_star(nu)},
        {{PotentialTag::VPsiLower, eta}, EnvelopeKind::psi_lower(eta), 1.1 * x_at(mu, eta)},
    };
    for (const Case& c : cases) {
      if (c.envelope.tag == EnvelopeTag::PsiLower && nu == 0.0) continue;
      const double x = c.x_floor + (5.0 + 10.0 * nu) * unit(rng);
      const double closed = potential_closed(c.potential, nu, x);
      const double numeric = potential_numeric_default(
          [&](double s) { return eval_envelope(c.envelope, nu, s); }, x, domain_edge(c.envelope, nu));
      EXPECT_NEAR(numeric, closed, 1e-6 * std::max(1.0, std::fabs(closed)))
          << to_string(c.envelope.tag) << " nu=" << nu << " x=" << x;
    }
  }
}

TEST(Potential, PrintedIdentities) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double nu = 10.0 * unit(rng);
    const double x = nu + 0.05 + 20.0 * unit(rng);
    const double d2 = (x * x - nu * nu) * (x * x - nu * nu);
    const double up = signed_potential_difference(SturmPair::ThetaUpperVsExact, nu, std::nullopt, x);
    const double e1 = (x * x + 4 * nu * nu) / (4 * d2);
    EXPECT_NEAR(up, e1, 1e-9 * e1) << nu << " " << x;
    const double closed_up =
        potential_closed({PotentialTag::VTheta}, nu, x) - potential_closed({PotentialTag::VThetaUpper}, nu, x);
    EXPECT_NEAR(closed_up, e1, 1e-9 * std::max(1.0, e1));
    const double phi_lo = signed_potential_difference(SturmPair::PhiLowerVsExact, nu, std::nullopt, x);
    const double e2 = (4 * nu * nu + 3 * x * x) / (4 * d2);
    EXPECT_NEAR(phi_lo, e2, 1e-9 * e2) << nu << " " << x;
    const double vlo = potential_closed({PotentialTag::VThetaUpper}, nu, x);
    const double dphi = envelope_derivative(EnvelopeKind::phi_lower(), nu, x);
    const double dtheta = envelope_derivative(EnvelopeKind::theta_upper(), nu, x);
    EXPECT_DOUBLE_EQ(dphi, dtheta);
    EXPECT_NEAR(vlo, potential_closed({PotentialTag::VPhi}, nu, x) + e2, 1e-9 * std::max(1.0, std::fabs(vlo)));
  }
}

TEST(Potential, ThetaLowerChiPolynomialIdentity) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double nu = 6.0 * unit(rng);
    const double chi = 0.05 + 8.0 * unit(rng);
    const double x = std::sqrt(nu * nu + chi);
    const long double f = 8.0L * chi * chi * chi + chi * chi + 6.0L * nu * nu * chi + 5.0L * std::pow(nu, 4);
    const long double lhs = 64.0L * std::pow(chi, 5) * f * f *
                            signed_potential_difference(SturmPair::ThetaLowerVsExact, nu, std::nullopt, x);
    const long double rhs = chi_positive(nu, chi);
    EXPECT_NEAR(static_cast<double>(lhs / rhs), 1.0, 1e-9) << nu << " " << chi;
  }
}

TEST(Potential, ChiPolynomialPositive) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double nu = 50.0 * unit(rng) * unit(rng);
    const double chi = 1e-6 + 100.0 * unit(rng) * unit(rng);
    EXPECT_GT(chi_positive(nu, chi), 0.0L);
  }
}

TEST(Delta, ZeroOrderIdentity) {
  for (double xi : {0.0, 0.1, 1.0, 4.0}) {
    const double x = std::sqrt(0.375 + xi);
    EXPECT_NEAR(delta_poly(0.0, x) / std::pow(x, 14), 72.0 * (56.0 * xi * xi + 48.0 * xi + 9.0),
                1e-11 * 72.0 * (56.0 * xi * xi + 48.0 * xi + 9.0));
  }
  EXPECT_NEAR(delta_poly(0.0, std::sqrt(0.375)) / std::pow(0.375, 7), 648.0, 1e-9);
}

TEST(Delta, PositiveBeyondCriticalPoint) {
  EXPECT_GT(delta_poly(1.0, 1.01 * x_star(1.0)), 0.0);
  for (double nu : {0.0, 0.3, 1.0, 4.0, 30.0}) {
    for (double s : {1.001, 1.1, 2.0, 10.0}) EXPECT_GT(delta_poly(nu, s * x_star(nu)), 0.0) << nu << " " << s;
  }
}

TEST(Delta, CrossIdentity) {
  auto check = [](double nu, double x) {
    const double d = envelope_derivative(EnvelopeKind::phi_upper(), nu, x);
    const long double lhs = 4096.0L * x * x * std::pow(static_cast<long double>(x) * x - nu * nu, 10) * d * d *
                            signed_potential_difference(SturmPair::PhiUpperVsExact, nu, std::nullopt, x);
    const double rhs = delta_poly(nu, x);
    EXPECT_NEAR(static_cast<double>(lhs / rhs), 1.0, 1e-8) << nu << " " << x;
  };
  check(2.0, 4.0);
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double nu = 8.0 * unit(rng);
    check(nu, x_star(nu) * (1.05 + 3.0 * unit(rng)));
  }
  // the closed potentials give the same thing at moderate x
  const double x = 4.0;
  const double d = envelope_derivative(EnvelopeKind::phi_upper(), 2.0, x);
  const double closed = 4096.0 * x * x * std::pow(x * x - 4.0, 10) * d * d *
                        (potential_closed({PotentialTag::VPhi}, 2.0, x) - potential_closed({PotentialTag::VPhiUpper}, 2.0, x));
  EXPECT_NEAR(closed / delta_poly(2.0, x), 1.0, 1e-8);
}

TEST(Delta, ZetaForm) {
  for (double nu : {0.5, 1.0, 3.0, 12.0}) {
    for (double z : {0.01, 0.2, 1.0, 5.0}) {
      const long double expect = delta_zeta(nu, z) * std::pow(static_cast<long double>(nu), 14);
      const double got = delta_poly(nu, nu * (1.0 + z));
      EXPECT_NEAR(got / static_cast<double>(expect), 1.0, 1e-9) << nu << " " << z;
    }
  }
}

TEST(Delta, PsiCrossIdentity) {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double nu = 0.2 + 10.0 * unit(rng);
    const double eta = nu * (0.05 + 0.95 * unit(rng));
    const double mu = mu_of(nu, eta);
    const double x = x_at(mu, eta) * (1.02 + 3.0 * unit(rng));
    const double d = envelope_derivative(EnvelopeKind::psi_lower(eta), nu, x);
    const long double lhs = 16.0L * std::pow(static_cast<long double>(x), 4) *
                            std::pow(static_cast<long double>(x) * x - static_cast<long double>(mu) * mu, 6) * d * d *
                            signed_potential_difference(SturmPair::PsiLowerVsExact, nu, eta, x);
    EXPECT_NEAR(static_cast<double>(lhs / r_poly(mu, eta, x)), 1.0, 1e-9) << nu << " " << eta << " " << x;
  }
}

TEST(VerifyC2, ThetaUpperExample) {
  for (Spacing sp : {Spacing::Log, Spacing::Linear}) {
    const SturmReport r = verify_c2(SturmPair::ThetaUpperVsExact, 3.0, std::nullopt, GridSpec{3.001, 100.0, 500, sp});
    EXPECT_TRUE(r.passed);
    EXPECT_DOUBLE_EQ(r.argmin, 100.0);
    const double expect = (1e4 + 36.0) / (4.0 * (1e4 - 9.0) * (1e4 - 9.0));
    EXPECT_NEAR(r.min_diff, expect, 1e-12 * expect);
  }
}

TEST(VerifyC2, PsiExample) {
  const double xa = x_at(mu_of(2.0, 1.0), 1.0);
  const SturmReport r = verify_c2(SturmPair::PsiLowerVsExact, 2.0, 1.0, GridSpec{xa * 1.001, 50.0, 512, Spacing::Log});
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.min_diff, 0.0);
}

TEST(VerifyC2, GridCrossingEdgeThrows) {
  const double s = std::sqrt(0.375);
  EXPECT_NEAR(x_star(0.0), s, 1e-15);
  EXPECT_THROW(verify_c2(SturmPair::PhiUpperVsExact, 0.0, std::nullopt, GridSpec{0.5 * s, 10.0, 100, Spacing::Linear}),
               DomainError);
  EXPECT_THROW(verify_c2(SturmPair::ThetaLowerVsExact, 2.0, std::nullopt, GridSpec{1.0, 10.0, 100, Spacing::Log}),
               DomainError);
  EXPECT_THROW(verify_c2(SturmPair::PsiLowerVsExact, 2.0, std::nullopt), DomainError);
}

TEST(VerifyC2, DefaultGridPassesEverywhere) {
  for (double nu : {0.0, 0.25, 0.5, 1.0, 2.7, 10.0, 100.0}) {
    for (SturmPair p : kAllSturmPairs) {
      if (p == SturmPair::PsiLowerVsExact) {
        if (nu == 0.0) continue;
        for (double eta : {nu / 4.0, nu / 2.0, nu}) {
          const SturmReport r = verify_c2(p, nu, eta);
          EXPECT_TRUE(r.passed) << to_string(p) << " nu=" << nu << " eta=" << eta;
        }
        continue;
      }
      const SturmReport r = verify_c2(p, nu, std::nullopt);
      EXPECT_TRUE(r.passed) << to_string(p) << " nu=" << nu;
      EXPECT_EQ(r.grid.count, 512);
      EXPECT_GT(r.grid.x_min, sturm_edge(p, nu, std::nullopt));
      EXPECT_DOUBLE_EQ(r.grid.x_max, std::max(100.0, 10.0 * nu));
    }
  }
}

TEST(VerifyC3, PrintedTails) {
  const TailReport a = verify_c3(SturmPair::ThetaUpperVsExact, 0.0, std::nullopt);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.power, 1);
  EXPECT_NEAR(a.estimate, 0.125, 0.025);
  const TailReport b = verify_c3(SturmPair::PhiLowerVsExact, 1.0, std::nullopt);
  EXPECT_TRUE(b.passed);
  EXPECT_NEAR(b.estimate, 0.375, 0.075);
  const TailReport c = verify_c3(SturmPair::ThetaLowerVsExact, 0.0, std::nullopt);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.power, 3);
  EXPECT_NEAR(c.expected, 25.0 / 384.0, 1e-15);
  EXPECT_NEAR(c.estimate, 25.0 / 384.0, 0.2 * 25.0 / 384.0);
  const TailReport d = verify_c3(SturmPair::PhiUpperVsExact, 0.0, std::nullopt);
  EXPECT_TRUE(d.passed);
  EXPECT_NEAR(d.expected, 21.0 / 128.0, 1e-15);
  const TailReport e = verify_c3(SturmPair::PsiLowerVsExact, 2.0, 1.0);
  EXPECT_TRUE(e.passed);
  EXPECT_NEAR(e.expected, 0.375, 1e-15);
}
