#include "phasebound/phase_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "phasebound/errors.hpp"
#include "phasebound/special_oracle.hpp"

namespace phasebound::phase {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kMaxPhaseStep = kPi / 8.0;

struct RawPhase {
  double angle = 0.0;       // principal value in (-pi, pi]
  double derivative = 0.0;  // analytic phase derivative
  bool degraded = false;
};

RawPhase raw_phase(PhaseKind kind, double nu, double eta, double x) {
  const auto q = oracle::bessel_eval(nu, x);
  RawPhase r;
  r.degraded = q.accuracy_degraded;
  switch (kind) {
    case PhaseKind::Theta:
      r.angle = std::atan2(q.y, q.j);
      r.derivative = 2.0 / (kPi * x * (q.j * q.j + q.y * q.y));
      break;
    case PhaseKind::Phi:
      r.angle = std::atan2(q.yp, q.jp);
      r.derivative = 2.0 * (x - nu) * (x + nu) / (kPi * x * x * x * (q.jp * q.jp + q.yp * q.yp));
      break;
    case PhaseKind::Psi: {
      const double a = x * q.jp - eta * q.j;
      const double b = x * q.yp - eta * q.y;
      r.angle = std::atan2(b, a);
      r.derivative = 2.0 * ((x - nu) * (x + nu) + eta * eta) / (kPi * x * (a * a + b * b));
      break;
    }
  }
  if (!std::isfinite(r.derivative)) r.derivative = 0.0;
  return r;
}

// Limit value at 0+ shifted towards the region the phase occupies before the
// march starts; the principal angle is taken on the branch nearest to it.
double reference_value(PhaseKind kind) { return kind == PhaseKind::Theta ? -kPi / 4.0 : kPi / 2.0; }

double nearest_branch(double angle, double reference) {
  return angle + kTwoPi * std::round((reference - angle) / kTwoPi);
}

// Below this point the principal branch nearest reference_value() is exact:
// theta lies in (-pi/2, 0) on (0, nu], phi in (0, pi/2] on (0, nu], and psi
// stays close to pi/2 well below mu.
double march_start(PhaseKind kind, double nu) {
  switch (kind) {
    case PhaseKind::Theta:
    case PhaseKind::Phi: return std::max(nu, 1e-3);
    case PhaseKind::Psi: return std::max(nu / 8.0, 1e-3);
  }
  return 1e-3;
}

void check_args(PhaseKind kind, double nu, double eta, double x) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("phase: nu must be finite and >= 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("phase: x must be finite and > 0");
  if (kind == PhaseKind::Psi && !(eta > 0.0 && eta <= nu)) {
    throw DomainError("phase_psi: requires nu >= eta > 0");
  }
}

// Continuous-branch tracker. Each accepted step changes the phase by less
// than pi/2, and the raw atan2 increment must agree with the trapezoidal
// prediction from the analytic derivative, so a full-turn alias is rejected.
class PhaseMarch {
 public:
  PhaseMarch(PhaseKind kind, double nu, double eta) : kind_(kind), nu_(nu), eta_(eta) {
    x_ = march_start(kind, nu);
    raw_ = raw_phase(kind_, nu_, eta_, x_);
    value_ = nearest_branch(raw_.angle, reference_value(kind_));
    degraded_ = raw_.degraded;
  }

  double x() const { return x_; }
  double value() const { return value_; }
  double angle() const { return raw_.angle; }
  bool degraded() const { return degraded_; }

  /// One adaptive step, never beyond limit.
  void step(double limit) {
    const double slope = std::abs(raw_.derivative);
    double h = slope > 0.0 ? kMaxPhaseStep / slope : 1.0;
    h = std::min({h, x_, 1.0, limit - x_});
    for (int attempt = 0; attempt < 60; ++attempt) {
      const double x_new = x_ + h;
      const RawPhase next = raw_phase(kind_, nu_, eta_, x_new);
      const double delta = std::remainder(next.angle - raw_.angle, kTwoPi);
      const double predicted = 0.5 * h * (raw_.derivative + next.derivative);
      if (std::abs(delta) <= kPi / 2.0 && std::abs(delta - predicted) <= kPi / 4.0) {
        x_ = x_new;
        value_ += delta;
        raw_ = next;
        degraded_ = degraded_ || next.degraded;
        return;
      }
      h *= 0.5;
    }
    throw DomainError("phase march failed to resolve the branch near x = " + std::to_string(x_));
  }

  double advance_to(double x) {
    while (x_ < x) step(x);
    return value_;
  }

  /// Unwound value at a point inside the last accepted step's neighbourhood
  /// (the phase moves by less than pi between the anchor and x).
  double local_value(double anchor_value, double anchor_angle, double x) const {
    const RawPhase r = raw_phase(kind_, nu_, eta_, x);
    return anchor_value + std::remainder(r.angle - anchor_angle, kTwoPi);
  }

  PhaseKind kind() const { return kind_; }
  double nu() const { return nu_; }
  double eta() const { return eta_; }

 private:
  PhaseKind kind_;
  double nu_;
  double eta_;
  double x_ = 0.0;
  double value_ = 0.0;
  RawPhase raw_;
  bool degraded_ = false;
};

PhasePoint make_point(double x, double value, double angle, bool degraded) {
  PhasePoint p;
  p.x = x;
  p.value = value;
  p.winding = std::lround((value - angle) / kTwoPi);
  p.accuracy_degraded = degraded;
  return p;
}

// Refines a crossing of `target` known to lie in [lo, hi], where the phase
// moves by less than pi across the interval. Bisection to 1e-13 relative
// width, then one Newton step kept only if it stays inside the bracket.
double refine_crossing(const PhaseMarch& march, double anchor_value, double anchor_angle, double lo,
                       double hi, double target) {
  auto f = [&](double x) { return march.local_value(anchor_value, anchor_angle, x) - target; };
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  const double d = phase_derivative(march.kind(), march.nu(), march.eta(), x);
  if (d != 0.0 && std::isfinite(d)) {
    const double polished = x - f(x) / d;
    if (polished >= lo && polished <= hi) x = polished;
  }
  return x;
}

// Crossing of theta below the march start, where theta is its principal
// branch and increases from -pi/2.
double zero_below_start(PhaseKind kind, double nu, double eta, double target, double start) {
  auto phase = [&](double x) {
    return nearest_branch(raw_phase(kind, nu, eta, x).angle, reference_value(kind));
  };
  double hi = start;
  double lo = start;
  while (phase(lo) >= target) {
    hi = lo;
    lo *= 0.5;
    if (lo < 1e-300) throw DomainError("phase crossing below representable range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (phase(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double phase_derivative(PhaseKind kind, double nu, double eta, double x) {
  check_args(kind, nu, eta, x);
  return raw_phase(kind, nu, eta, x).derivative;
}

PhasePoint phase_value(PhaseKind kind, double nu, double eta, double x) {
  check_args(kind, nu, eta, x);
  const double start = march_start(kind, nu);
  if (x <= start) {
    const RawPhase r = raw_phase(kind, nu, eta, x);
    return make_point(x, nearest_branch(r.angle, reference_value(kind)), r.angle, r.degraded);
  }
  PhaseMarch march(kind, nu, eta);
  march.advance_to(x);
  return make_point(x, march.value(), march.angle(), march.degraded());
}

PhasePoint phase_near(PhaseKind kind, double nu, double eta, double x, double reference) {
  check_args(kind, nu, eta, x);
  const RawPhase r = raw_phase(kind, nu, eta, x);
  return make_point(x, nearest_branch(r.angle, reference), r.angle, r.degraded);
}

PhasePoint phase_theta(double nu, double x) { return phase_value(PhaseKind::Theta, nu, 0.0, x); }
PhasePoint phase_phi(double nu, double x) { return phase_value(PhaseKind::Phi, nu, 0.0, x); }
PhasePoint phase_psi(double nu, double eta, double x) {
  return phase_value(PhaseKind::Psi, nu, eta, x);
}

std::vector<TrueZero> true_zeros(const ZeroFamily& family, double nu, long count) {
  validate(family, nu);
  if (count < 1) throw DomainError("true_zeros: count must be >= 1");
  const PhaseKind kind = phase_kind(family.tag);
  std::vector<TrueZero> zeros;
  zeros.reserve(static_cast<std::size_t>(count));

  PhaseMarch march(kind, nu, family.eta);
  double turning = 0.0;
  if (kind == PhaseKind::Phi) turning = nu;
  if (kind == PhaseKind::Psi) turning = std::sqrt((nu - family.eta) * (nu + family.eta));
  for (long k = 1; k <= count; ++k) {
    if (is_convention_zero(family, nu, k)) {
      zeros.push_back({0.0, BoundStatus::Convention, false});
      continue;
    }
    const double target = phase_target(family, k);
    if (kind == PhaseKind::Theta && k == 1 && target <= march.value()) {
      // C family with tau <= tau*_nu.
      const double z = zero_below_start(kind, nu, family.eta, target, march.x());
      zeros.push_back({z, BoundStatus::Valid, !oracle::inside_envelope(nu, z)});
      continue;
    }
    // Every target here is >= pi/2, above the phase on the non-monotone
    // stretch (phi < pi/2 on (0, nu], psi < pi/2 on (0, mu]); pass the turning
    // point first, then the first upward crossing is the one we want.
    if (march.x() < turning) march.advance_to(turning);
    double prev_x = march.x();
    double prev_value = march.value();
    double prev_angle = march.angle();
    while (march.value() < target) {
      prev_x = march.x();
      prev_value = march.value();
      prev_angle = march.angle();
      march.step(std::numeric_limits<double>::infinity());
    }
    const double z = refine_crossing(march, prev_value, prev_angle, prev_x, march.x(), target);
    zeros.push_back({z, BoundStatus::Valid, march.degraded() || !oracle::inside_envelope(nu, z)});
  }
  return zeros;
}

TrueZero true_zero(const ZeroFamily& family, double nu, long k) {
  if (k < 1) throw DomainError("true_zero: k must be >= 1");
  return true_zeros(family, nu, k).back();
}

double tau_star(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("tau_star: nu must be finite and >= 0");
  if (nu == 0.0) return 0.0;
  return phase_theta(nu, nu).value / kPi + 0.5;
}

}  // namespace phasebound::phase
