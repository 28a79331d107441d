// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_PLATE_HPP
#define PHPLATE_PLATE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phplate {

inline constexpr double kPi = std::numbers::pi;

/// Every auxiliary function divides by 1 - sigma; values this close to 1 are
/// rejected at configuration time.
inline constexpr double kSigmaGap = 1e-6;

/// Thrown when a certified series cannot reach the requested tolerance within
/// the configured mode cap.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plate rectangle (0, pi) x (-ell, ell) and material constant sigma.
///
/// sigma in [0, 1) is the supported range; `experimental_sigma` widens it to
/// (-1, 1) with no positivity guarantee.
struct PlateConfig {
  double ell = 1.0;
  double sigma = 0.2;
  bool experimental_sigma = false;

  void validate() const {
    if (!(ell > 0.0) || !std::isfinite(ell))
      throw std::domain_error("PlateConfig: ell must be positive and finite");
    if (!std::isfinite(sigma)) throw std::domain_error("PlateConfig: sigma must be finite");
    if (1.0 - sigma < kSigmaGap)
      throw std::domain_error(
          "PlateConfig: sigma too close to 1; the auxiliary functions divide by 1-sigma");
    if (experimental_sigma) {
      if (!(sigma > -1.0))
        throw std::domain_error("PlateConfig: experimental sigma must lie in (-1, 1)");
    } else if (!(sigma >= 0.0)) {
      throw std::domain_error(
          "PlateConfig: sigma must lie in [0, 1); pass experimental_sigma for (-1, 0)");
    }
  }
};

/// A point of the closed rectangle [0, pi] x [-ell, ell].
struct Point {
  double x = 0.0;
  double y = 0.0;

  void validate(const PlateConfig& cfg) const {
    if (!(x >= 0.0) || !(x <= kPi))
      throw std::domain_error("Point: x must lie in [0, pi]");
    if (!(std::fabs(y) <= cfg.ell))
      throw std::domain_error("Point: |y| must not exceed ell");
  }
};

/// Nondimensional coordinates: s = w/ell, k = y/ell, z = m*ell.
struct ScaledCoords {
  double s = 0.0;
  double k = 0.0;
  double z = 1.0;

  void validate() const {
    if (!(std::fabs(s) <= 1.0) || !(std::fabs(k) <= 1.0))
      throw std::domain_error("ScaledCoords: |s| and |k| must not exceed 1");
    if (!(z > 0.0) || !std::isfinite(z))
      throw std::domain_error("ScaledCoords: z must be positive and finite");
  }
};

namespace detail {
inline void require_sigma_usable(double sigma) {
  if (!std::isfinite(sigma) || 1.0 - sigma < kSigmaGap)
    throw std::domain_error("sigma too close to 1: expressions divide by 1-sigma");
}
inline void require_positive_z(double z) {
  if (!(z > 0.0) || !std::isfinite(z))
    throw std::domain_error("z must be positive and finite");
}
}  // namespace detail

}  // namespace phplate

#endif  // PHPLATE_PLATE_HPP
