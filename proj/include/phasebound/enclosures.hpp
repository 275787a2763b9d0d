#pragma once

#include <vector>

#include "phasebound/zero_family.hpp"

namespace phasebound {

/// [lower, upper] for one zero. An endpoint that is NotApplicable holds NaN.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  BoundStatus lower_status = BoundStatus::NotApplicable;
  BoundStatus upper_status = BoundStatus::NotApplicable;
};

struct CountBound {
  long lower = 0;
  long upper = 0;
};

/// Bounds for the k-th zero of the family. Throws DomainError for an
/// inadmissible (family, nu) or k < 1.
Enclosure enclose(const ZeroFamily& family, double nu, long k);

/// Bounds for zeros k_first..k_last; the critical points are computed once.
std::vector<Enclosure> enclose_range(const ZeroFamily& family, double nu, long k_first, long k_last);

/// Bounds on the number of zeros of J_nu in (0, lambda]. Requires lambda > nu.
CountBound count_bessel_zeros(double nu, double lambda);

/// Bounds on the number of zeros of J'_nu in [0, lambda], counting the
/// conventional j'_{0,1} = 0. Requires lambda > nu.
CountBound count_deriv_zeros(double nu, double lambda);

}  // namespace phasebound
