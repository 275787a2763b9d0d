#pragma once

#include "phasebound/envelopes.hpp"

namespace phasebound {

struct InverseQuery {
  EnvelopeKind kind;
  double nu = 0.0;
  double target = 0.0;
};

/// Pre-image together with the final sign-change bracket that certifies it.
struct InverseResult {
  double x = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Smallest admissible target of the kind (z* for PhiUpper, psi_lo(x@) for
/// PsiLower, -inf for ThetaLower). Whether the end itself is admissible is
/// given by range_end_included().
double range_start(const EnvelopeKind& kind, double nu);
bool range_end_included(EnvelopeTag tag) noexcept;

/// Unique x in the monotone branch with envelope(x) = target.
/// Throws TargetBelowRange below the invertible range, DomainError for bad
/// parameters.
InverseResult invert_bracketed(const InverseQuery& query);
double invert(const InverseQuery& query);

}  // namespace phasebound
