// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_HYPERBOLIC_HPP
#define PHPLATE_HYPERBOLIC_HPP

#include <cmath>

#include "phplate/plate.hpp"
#include "phplate/scaled.hpp"

namespace phplate {

/// F(z) = (3+sigma)/2 sinh(2z) - z(1-sigma) and its barred companion
/// Fbar(z) = (3+sigma)/2 sinh(2z) + z(1-sigma). Always 0 < F < Fbar.
struct FPair {
  ScaledReal f;
  ScaledReal fbar;
};

/// F'(z) = (3+sigma) cosh(2z) - (1-sigma), Fbar'(z) = (3+sigma) cosh(2z) + (1-sigma).
struct FDerivs {
  ScaledReal f;
  ScaledReal fbar;
};

inline FPair f_pair(double z, double sigma) {
  detail::require_positive_z(z);
  detail::require_sigma_usable(sigma);
  if (z < 1e-6) {
    // F(z) = 2(1+sigma) z + O(z^3) loses digits when sinh(2z) ~ 2z; use the
    // three-term Maclaurin expansion instead.
    const double z3 = z * z * z, z5 = z3 * z * z;
    const double tail = (2.0 / 3.0) * (3.0 + sigma) * z3 + (2.0 / 15.0) * (3.0 + sigma) * z5;
    return {ScaledReal::from(2.0 * (1.0 + sigma) * z + tail),
            ScaledReal::from(4.0 * z + tail)};
  }
  const double sh = -std::expm1(-4.0 * z) * 0.5;  // sinh(2z) e^{-2z}
  const double lin = z * (1.0 - sigma) * std::exp(-2.0 * z);
  const double half = (3.0 + sigma) * 0.5;
  return {{half * sh - lin, 2.0 * z}, {half * sh + lin, 2.0 * z}};
}

inline FDerivs f_derivs(double z, double sigma) {
  detail::require_positive_z(z);
  detail::require_sigma_usable(sigma);
  const double ch = (1.0 + std::exp(-4.0 * z)) * 0.5;  // cosh(2z) e^{-2z}
  const double lin = (1.0 - sigma) * std::exp(-2.0 * z);
  return {{(3.0 + sigma) * ch - lin, 2.0 * z}, {(3.0 + sigma) * ch + lin, 2.0 * z}};
}

/// The four auxiliary functions zeta, eta, psi, xi of (k, z) and their
/// z-derivatives, all as mantissas sharing the scale exp(|k z| + z).
///
/// zeta, psi and their derivatives are even in k; eta, xi and theirs are odd.
struct AuxValues {
  double zeta, eta, psi, xi;
  double zeta_z, eta_z, psi_z, xi_z;
  double log_scale;

  double scaled(double mantissa) const { return (ScaledReal{mantissa, log_scale}).to_double(); }
};

inline AuxValues aux_values(const ScaledCoords& c, double sigma) {
  c.validate();
  detail::require_sigma_usable(sigma);
  const double k = c.k, z = c.z;
  const double kz = k * z, akz = std::fabs(kz);

  // cosh/sinh products with the common factor e^{|kz|+z} divided out.
  const double ek = std::exp(-2.0 * akz);
  const double ez = std::exp(-2.0 * z);
  const double cK = (1.0 + ek) * 0.5;
  const double sK = std::copysign(-std::expm1(-2.0 * akz) * 0.5, kz);
  const double cZ = (1.0 + ez) * 0.5;
  const double sZ = -std::expm1(-2.0 * z) * 0.5;
  const double cc = cK * cZ, cs = cK * sZ, sc = sK * cZ, ss = sK * sZ;

  const double om = 1.0 - sigma, op = 1.0 + sigma;
  const double k2c = 1.0 - k * k;
  const double q = 2.0 * op / om;

  AuxValues a{};
  a.log_scale = akz + z;

  a.zeta = (4.0 / om - z * op) * cc + (op * op / om + 2.0 * z) * cs - 2.0 * kz * sc +
           kz * op * ss;
  a.eta = kz * op * cc - 2.0 * kz * cs + (op * op / om + 2.0 * z) * sc +
          (4.0 / om - z * op) * ss;
  a.psi = (2.0 + z * om) * cc + (-op + z * om) * cs - kz * om * sc - kz * om * ss;
  a.xi = -kz * om * cc - kz * om * cs + (-op + z * om) * sc + (2.0 + z * om) * ss;

  a.zeta_z = (sigma * q + 2.0 * z * k2c) * cc + (2.0 * (3.0 - sigma) / om - z * op * k2c) * cs +
             k * q * sc + k * q * ss;
  a.eta_z = k * q * cc + k * q * cs + (2.0 * (3.0 - sigma) / om - z * op * k2c) * sc +
            (sigma * q + 2.0 * z * k2c) * ss;
  a.psi_z = (-2.0 * sigma + z * k2c * om) * cc + (3.0 - sigma + z * k2c * om) * cs +
            k * op * sc - 2.0 * k * ss;
  a.xi_z = -2.0 * k * cc + k * op * cs + (3.0 - sigma + z * om * k2c) * sc +
           (-2.0 * sigma + z * om * k2c) * ss;
  return a;
}

}  // namespace phplate

#endif  // PHPLATE_HYPERBOLIC_HPP
