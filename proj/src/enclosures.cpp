#include "phasebound/enclosures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "phasebound/envelopes.hpp"
#include "phasebound/errors.hpp"
#include "phasebound/inversion.hpp"

namespace phasebound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Side {
  double value = kNaN;
  BoundStatus status = BoundStatus::NotApplicable;
};

Side valid(double x) { return {x, BoundStatus::Valid}; }

Side try_invert(const EnvelopeKind& kind, double nu, double target) {
  try {
    return valid(invert({kind, nu, target}));
  } catch (const TargetBelowRange&) {
    return {};
  }
}

// Range limits that decide applicability, computed once per (family, nu).
struct Gates {
  double z_star = kNaN;    // phi_up(x*), lower bounds of the derivative families
  double psi_at = kNaN;    // psi_lo(x@), upper bounds of U'/W'
};

Gates make_gates(const ZeroFamily& family, double nu) {
  Gates g;
  switch (phase_kind(family.tag)) {
    case PhaseKind::Phi: g.z_star = z_star(nu); break;
    case PhaseKind::Psi: g.psi_at = range_start(EnvelopeKind::psi_lower(family.eta), nu); break;
    case PhaseKind::Theta: break;
  }
  return g;
}

Enclosure assemble(Side lo, Side hi) { return {lo.value, hi.value, lo.status, hi.status}; }

Enclosure enclose_one(const ZeroFamily& family, double nu, long k, const Gates& g) {
  const double t = phase_target(family, k);
  switch (phase_kind(family.tag)) {
    case PhaseKind::Theta: {
      // C with k = 1 needs a target above -pi/4, the start of theta_up.
      const Side lo = t > -kPi / 4.0 ? valid(invert({EnvelopeKind::theta_upper(), nu, t})) : Side{};
      return assemble(lo, valid(invert({EnvelopeKind::theta_lower(), nu, t})));
    }
    case PhaseKind::Phi: {
      const Side hi = valid(invert({EnvelopeKind::phi_lower(), nu, t}));
      if (is_convention_zero(family, nu, k)) return assemble({0.0, BoundStatus::Convention}, hi);
      const Side lo = g.z_star <= t ? valid(invert({EnvelopeKind::phi_upper(), nu, t})) : Side{};
      return assemble(lo, hi);
    }
    case PhaseKind::Psi: {
      const Side hi = t > g.psi_at ? try_invert(EnvelopeKind::psi_lower(family.eta), nu, t) : Side{};
      if (is_convention_zero(family, nu, k)) return assemble({0.0, BoundStatus::Convention}, hi);
      return assemble({}, hi);
    }
  }
  return {};
}

long floor_count(double phase) {
  const double n = std::floor(phase / kPi + 0.5);
  return n < 0.0 ? 0 : static_cast<long>(n);
}

void check_lambda(double nu, double lambda) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("count: nu must be finite and >= 0");
  if (!(lambda > nu) || !std::isfinite(lambda)) throw DomainError("count: lambda must exceed nu");
}

}  // namespace

std::vector<Enclosure> enclose_range(const ZeroFamily& family, double nu, long k_first, long k_last) {
  validate(family, nu);
  if (k_first < 1 || k_last < k_first) throw DomainError("enclose: k range must satisfy 1 <= first <= last");
  const Gates g = make_gates(family, nu);
  std::vector<Enclosure> out;
  out.reserve(static_cast<std::size_t>(k_last - k_first + 1));
  for (long k = k_first; k <= k_last; ++k) out.push_back(enclose_one(family, nu, k, g));
  return out;
}

Enclosure enclose(const ZeroFamily& family, double nu, long k) {
  return enclose_range(family, nu, k, k).front();
}

CountBound count_bessel_zeros(double nu, double lambda) {
  check_lambda(nu, lambda);
  return {floor_count(eval_envelope(EnvelopeKind::theta_lower_clamped(), nu, lambda)),
          floor_count(eval_envelope(EnvelopeKind::theta_upper(), nu, lambda))};
}

CountBound count_deriv_zeros(double nu, double lambda) {
  check_lambda(nu, lambda);
  return {floor_count(eval_envelope(EnvelopeKind::phi_lower(), nu, lambda)),
          floor_count(eval_envelope(EnvelopeKind::phi_upper_clamped(), nu, lambda))};
}

}  // namespace phasebound
