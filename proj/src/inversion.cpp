#include "phasebound/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "phasebound/errors.hpp"

namespace phasebound {
namespace {

constexpr double kPi = std::numbers::pi;

bool open_at_edge(EnvelopeTag tag) {
  return tag == EnvelopeTag::ThetaLower || tag == EnvelopeTag::ThetaLowerClamped;
}

// Left end of the branch on which the kind is strictly increasing.
double branch_start(const EnvelopeKind& kind, double nu) {
  switch (kind.tag) {
    case EnvelopeTag::PhiUpper:
    case EnvelopeTag::PhiUpperClamped: return x_star(nu);
    case EnvelopeTag::PsiLower: return x_at(mu_of(nu, kind.eta), kind.eta);
    default: return domain_edge(kind, nu);
  }
}

// x ~ target + offset for large x.
double seed_offset(EnvelopeTag tag, double nu) {
  switch (tag) {
    case EnvelopeTag::ThetaUpper:
    case EnvelopeTag::ThetaLower:
    case EnvelopeTag::ThetaLowerClamped: return kPi * (2.0 * nu + 1.0) / 4.0;
    default: return kPi * (2.0 * nu - 1.0) / 4.0;
  }
}

}  // namespace

double range_start(const EnvelopeKind& kind, double nu) {
  switch (kind.tag) {
    case EnvelopeTag::ThetaUpper: return -kPi / 4.0;
    case EnvelopeTag::ThetaLower: return -std::numeric_limits<double>::infinity();
    case EnvelopeTag::ThetaLowerClamped: return -kPi / 2.0;
    case EnvelopeTag::PhiLower: return kPi / 4.0;
    case EnvelopeTag::PhiUpper:
    case EnvelopeTag::PhiUpperClamped: return z_star(nu);
    case EnvelopeTag::PsiLower: {
      const double xa = branch_start(kind, nu);
      return eval_envelope(kind, nu, xa);
    }
  }
  return 0.0;
}

bool range_end_included(EnvelopeTag tag) noexcept {
  switch (tag) {
    case EnvelopeTag::ThetaUpper:
    case EnvelopeTag::PhiLower:
    case EnvelopeTag::PhiUpper:
    case EnvelopeTag::PhiUpperClamped: return true;
    default: return false;
  }
}

InverseResult invert_bracketed(const InverseQuery& q) {
  const EnvelopeKind& kind = q.kind;
  const double nu = q.nu;
  const double t = q.target;
  if (!std::isfinite(t)) throw DomainError("invert: target must be finite");
  const double a = branch_start(kind, nu);

  const double start = range_start(kind, nu);
  if (t < start || (t == start && !range_end_included(kind.tag))) {
    throw TargetBelowRange("invert " + std::string(to_string(kind.tag)) + ": target " +
                           std::to_string(t) + " below the invertible range");
  }
  if (t == start) return {a, a, a};

  auto f = [&](double x) { return eval_envelope(kind, nu, x) - t; };

  double hi = std::max(t + seed_offset(kind.tag, nu), a) + 1.0;
  for (int it = 0; f(hi) < 0.0; ++it) {
    if (it > 2000) throw DomainError("invert: could not bracket target from above");
    hi = a + 2.0 * (hi - a);
  }
  double lo = a;
  if (open_at_edge(kind.tag)) {
    lo = a + 0.5 * (hi - a);
    while (f(lo) >= 0.0) {
      const double next = a + 0.5 * (lo - a);
      if (next <= a) throw DomainError("invert: could not bracket target from below");
      hi = lo;
      lo = next;
    }
  }

  while (hi - lo > 1e-6 * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }

  // Newton inside the bracket until the bracket is narrow and the residual
  // is small; on steep stretches the second condition needs more digits of x.
  const double tol_f = 0.25e-12 * std::max(1.0, std::abs(t));
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    const double fx = f(x);
    if (fx == 0.0) {
      lo = hi = x;
      break;
    }
    (fx < 0.0 ? lo : hi) = x;
    if (hi - lo <= 1e-12 * std::max(1.0, x) && std::abs(fx) <= tol_f) break;
    if (std::nextafter(lo, hi) >= hi) break;
    const double d = envelope_derivative(kind, nu, x);
    double next = (d > 0.0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi) || next == x) next = 0.5 * (lo + hi);
    x = next;
    // Squeeze the bracket around the Newton iterate.
    const double delta = 0.4 * 1e-12 * std::max(1.0, x);
    if (x - delta > lo && x + delta < hi && f(x - delta) < 0.0 && f(x + delta) > 0.0) {
      lo = x - delta;
      hi = x + delta;
    }
  }
  if (x < lo || x > hi) x = 0.5 * (lo + hi);
  return {x, lo, hi};
}

double invert(const InverseQuery& query) { return invert_bracketed(query).x; }

}  // namespace phasebound
