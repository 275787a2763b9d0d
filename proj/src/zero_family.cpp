#include "phasebound/zero_family.hpp"

#include <cmath>
#include <numbers>

#include "phasebound/errors.hpp"

namespace phasebound {

std::string_view to_string(BoundStatus s) noexcept {
  switch (s) {
    case BoundStatus::Valid: return "VALID";
    case BoundStatus::NotApplicable: return "NOT_APPLICABLE";
    case BoundStatus::Convention: return "CONVENTION";
  }
  return "?";
}

std::string_view to_string(FamilyTag t) noexcept {
  switch (t) {
    case FamilyTag::J: return "j";
    case FamilyTag::Y: return "y";
    case FamilyTag::C: return "c";
    case FamilyTag::JPrime: return "jp";
    case FamilyTag::YPrime: return "yp";
    case FamilyTag::CPrime: return "cp";
    case FamilyTag::UPrime: return "up";
    case FamilyTag::WPrime: return "wp";
  }
  return "?";
}

FamilyTag parse_family_tag(std::string_view name) {
  for (auto tag : {FamilyTag::J, FamilyTag::Y, FamilyTag::C, FamilyTag::JPrime, FamilyTag::YPrime,
                   FamilyTag::CPrime, FamilyTag::UPrime, FamilyTag::WPrime}) {
    if (to_string(tag) == name) return tag;
  }
  throw DomainError("unknown zero family '" + std::string(name) + "'");
}

PhaseKind phase_kind(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::J:
    case FamilyTag::Y:
    case FamilyTag::C: return PhaseKind::Theta;
    case FamilyTag::JPrime:
    case FamilyTag::YPrime:
    case FamilyTag::CPrime: return PhaseKind::Phi;
    case FamilyTag::UPrime:
    case FamilyTag::WPrime: return PhaseKind::Psi;
  }
  return PhaseKind::Theta;
}

void validate(const ZeroFamily& family, double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("order nu must be finite and >= 0");
  switch (family.tag) {
    case FamilyTag::C:
      if (!(family.tau > 0.0 && family.tau <= 1.0)) {
        throw DomainError("tau must lie in (0, 1] for the C family");
      }
      break;
    case FamilyTag::CPrime:
      if (!(family.tau >= 0.0 && family.tau < 1.0)) {
        throw DomainError("tau must lie in [0, 1) for the C' family");
      }
      break;
    case FamilyTag::UPrime:
    case FamilyTag::WPrime:
      if (!(family.eta > 0.0 && family.eta <= nu)) {
        throw DomainError("ultraspherical families need nu >= eta > 0");
      }
      break;
    default: break;
  }
}

double phase_target(const ZeroFamily& family, long k) {
  if (k < 1) throw DomainError("zero index k must be >= 1");
  const double kk = static_cast<double>(k);
  constexpr double pi = std::numbers::pi;
  switch (family.tag) {
    case FamilyTag::J:
    case FamilyTag::JPrime:
    case FamilyTag::UPrime: return pi * (kk - 0.5);
    case FamilyTag::Y: return pi * (kk - 1.0);
    case FamilyTag::C: return pi * (family.tau + kk - 1.5);
    case FamilyTag::YPrime:
    case FamilyTag::WPrime: return pi * kk;
    case FamilyTag::CPrime: return pi * (family.tau + kk - 0.5);
  }
  return 0.0;
}

bool is_convention_zero(const ZeroFamily& family, double nu, long k) noexcept {
  if (k != 1) return false;
  switch (family.tag) {
    case FamilyTag::JPrime: return nu == 0.0;
    case FamilyTag::CPrime: return nu == 0.0 && family.tau == 0.0;
    case FamilyTag::UPrime: return family.eta == nu;
    default: return false;
  }
}

}  // namespace phasebound
