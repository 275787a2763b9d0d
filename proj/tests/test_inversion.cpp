#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "phasebound/envelopes.hpp"
#include "phasebound/errors.hpp"
#include "phasebound/inversion.hpp"
#include "test_support.hpp"

using namespace phasebound;
using namespace testsupport;

namespace {

struct Sample {
  EnvelopeKind kind;
  double nu;
  double target;
};

// Random admissible queries over every kind.
std::vector<Sample> random_queries(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Sample> out;
  for (int i = 0; i < count; ++i) {
    const double nu = (i % 10 == 0) ? 0.0 : 50.0 * unit(rng) * unit(rng);
    EnvelopeKind kind;
    switch (i % 7) {
      case 0: kind = EnvelopeKind::theta_upper(); break;
      case 1: kind = EnvelopeKind::theta_lower(); break;
      case 2: kind = EnvelopeKind::theta_lower_clamped(); break;
      case 3: kind = EnvelopeKind::phi_lower(); break;
      case 4: kind = EnvelopeKind::phi_upper(); break;
      case 5: kind = EnvelopeKind::phi_upper_clamped(); break;
      default: kind = EnvelopeKind::psi_lower(nu * (0.05 + 0.95 * unit(rng))); break;
    }
    if (kind.tag == EnvelopeTag::PsiLower && nu == 0.0) kind = EnvelopeKind::theta_lower();
    const double start = range_start(kind, nu);
    const double lo = std::isfinite(start) ? start : -6.0;
    const double t = lo + 1e-6 + (300.0 - lo) * unit(rng) * unit(rng);
    out.push_back({kind, nu, t});
  }
  return out;
}

}  // namespace

TEST(Invert, ReferenceValues) {
  EXPECT_NEAR(invert({EnvelopeKind::theta_upper(), 0.0, kPi / 2.0}), 3.0 * kPi / 4.0, 1e-14);
  EXPECT_NEAR(invert({EnvelopeKind::theta_lower(), 0.0, kPi / 2.0}), (3.0 * kPi + std::sqrt(9.0 * kPi * kPi + 8.0)) / 8.0,
              1e-14);
  EXPECT_THROW(invert({EnvelopeKind::phi_upper(), 0.0, z_star(0.0) - 0.01}), TargetBelowRange);
}

TEST(Invert, RangeEdges) {
  for (double nu : {0.0, 1.0, 7.5}) {
    EXPECT_EQ(invert({EnvelopeKind::theta_upper(), nu, -kPi / 4.0}), nu);
    EXPECT_EQ(invert({EnvelopeKind::phi_lower(), nu, kPi / 4.0}), nu);
    EXPECT_EQ(invert({EnvelopeKind::phi_upper(), nu, z_star(nu)}), x_star(nu));
    EXPECT_THROW(invert({EnvelopeKind::theta_upper(), nu, -kPi / 4.0 - 1e-9}), TargetBelowRange);
    EXPECT_THROW(invert({EnvelopeKind::phi_lower(), nu, kPi / 4.0 - 1e-9}), TargetBelowRange);
    EXPECT_THROW(invert({EnvelopeKind::theta_lower_clamped(), nu, -kPi / 2.0}), TargetBelowRange);
    EXPECT_NO_THROW(invert({EnvelopeKind::theta_lower(), nu, -100.0}));
  }
  EXPECT_TRUE(std::isinf(range_start(EnvelopeKind::theta_lower(), 2.0)));
  EXPECT_FALSE(range_end_included(EnvelopeTag::PsiLower));
  EXPECT_TRUE(range_end_included(EnvelopeTag::PhiUpper));
}

TEST(Invert, PsiRangeStartsAtXAt) {
  for (auto [nu, eta] : {std::pair{2.0, 1.0}, std::pair{1.0, 1.0}, std::pair{10.0, 3.0}}) {
    const EnvelopeKind k = EnvelopeKind::psi_lower(eta);
    const double xa = x_at(mu_of(nu, eta), eta);
    const double start = eval_envelope(k, nu, xa);
    EXPECT_DOUBLE_EQ(range_start(k, nu), start);
    EXPECT_THROW(invert({k, nu, start}), TargetBelowRange);
    EXPECT_GT(invert({k, nu, start + 1e-3}), xa);
  }
}

TEST(Invert, MalformedQueries) {
  EXPECT_THROW(invert({EnvelopeKind::psi_lower(3.0), 2.0, 5.0}), DomainError);
  EXPECT_THROW(invert({EnvelopeKind::theta_upper(), -1.0, 5.0}), DomainError);
  EXPECT_THROW(invert({EnvelopeKind::theta_upper(), 1.0, std::nan("")}), DomainError);
}

TEST(Invert, RoundTripAndBracket) {
  for (const Sample& s : random_queries(1000, 11)) {
    const InverseResult r = invert_bracketed({s.kind, s.nu, s.target});
    const double f = eval_envelope(s.kind, s.nu, r.x);
    const std::string ctx = std::string(to_string(s.kind.tag)) + " nu=" + std::to_string(s.nu) +
                            " eta=" + std::to_string(s.kind.eta) + " t=" + std::to_string(s.target);
    EXPECT_LE(std::fabs(f - s.target), 1e-12 * std::max(1.0, std::fabs(s.target))) << ctx;
    EXPECT_LE(r.bracket_lo, r.x) << ctx;
    EXPECT_LE(r.x, r.bracket_hi) << ctx;
    EXPECT_LE(r.bracket_hi - r.bracket_lo, 1e-12 * std::max(1.0, r.x)) << ctx;
    const double flo = eval_envelope(s.kind, s.nu, r.bracket_lo) - s.target;
    const double fhi = eval_envelope(s.kind, s.nu, r.bracket_hi) - s.target;
    EXPECT_LE(flo, 0.0) << ctx;
    EXPECT_GE(fhi, 0.0) << ctx;
    // inside the monotone branch
    if (s.kind.tag == EnvelopeTag::PhiUpper || s.kind.tag == EnvelopeTag::PhiUpperClamped) {
      EXPECT_GE(r.x, x_star(s.nu)) << ctx;
    }
    if (s.kind.tag == EnvelopeTag::PsiLower) EXPECT_GT(r.x, x_at(mu_of(s.nu, s.kind.eta), s.kind.eta)) << ctx;
  }
}

TEST(Invert, MonotoneInTarget) {
  const auto qs = random_queries(1000, 12);
  for (const Sample& s : qs) {
    const double t2 = s.target + 1e-3 * std::max(1.0, std::fabs(s.target));
    EXPECT_LT(invert({s.kind, s.nu, s.target}), invert({s.kind, s.nu, t2}))
        << to_string(s.kind.tag) << " nu=" << s.nu << " t=" << s.target;
  }
}

TEST(Invert, Deterministic) {
  for (const Sample& s : random_queries(50, 13)) {
    EXPECT_EQ(invert({s.kind, s.nu, s.target}), invert({s.kind, s.nu, s.target}));
  }
}
