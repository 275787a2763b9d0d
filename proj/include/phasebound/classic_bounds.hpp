#pragma once

#include <optional>
#include <string_view>

#include "phasebound/zero_family.hpp"

// Bounds from the literature used as benchmarks. McMahon's truncations are
//   A1(b) = b
//   A2(b) = b - (4nu^2 - 1)/(8b)
//   A3(b) = A2(b) - 4(4nu^2 - 1)(28nu^2 - 31)/(3 (8b)^3)
// at b = pi(k + nu/2 - 1/4).

namespace phasebound {

enum class ClassicSource {
  HethcoteUp,
  HethcoteLo,
  ElUp,
  ElLo,
  QwLo,
  QwUp,
  AiryJPrimeUp,
  McMahon1,
  McMahon2,
  McMahon3,
};

std::string_view to_string(ClassicSource source) noexcept;

struct ClassicBound {
  double value = 0.0;  ///< NaN when not applicable
  BoundStatus status = BoundStatus::NotApplicable;
  ClassicSource source = ClassicSource::McMahon1;
};

struct ClassicPair {
  ClassicBound upper;
  ClassicBound lower;
};

/// b = pi(k + nu/2 - 1/4), or pi(k + nu/2 + tau - 5/4) when tau is given.
double mcmahon_beta(double nu, long k, std::optional<double> tau = std::nullopt);

/// McMahon truncation with 1, 2 or 3 terms.
double mcmahon(double nu, long k, int terms, std::optional<double> tau = std::nullopt);

/// Upper: A2 if nu <= 1/2, else A1. Lower: A1, only for nu <= 1/2.
ClassicPair hethcote(double nu, long k);

/// Upper: A2 if nu <= 1/2, else A3. Lower: A3 if nu <= 1/2, A2 if
/// 1/2 < nu < sqrt(31/28).
ClassicPair elbert_laforgia(double nu, long k);

/// nu - a_k (nu/2)^{1/3} and that plus (3/20) a_k^2 (nu/2)^{-1/3}; nu > 0.
ClassicPair qu_wong(double nu, long k);

/// Airy-type upper bound for j'_{nu,k}, all nu >= 0.
double airy_upper_jprime(double nu, long k);

}  // namespace phasebound
