// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_SCALED_HPP
#define PHPLATE_SCALED_HPP

#include <cmath>
#include <limits>

namespace phplate {

/// A real number stored as `mant * exp(logexp)`.
///
/// Hyperbolic assemblies here involve factors up to exp(2e5) and results down
/// to exp(-2e5); neither fits a binary64, but every factor we build is a
/// product of a bounded mantissa and an exponent known in closed form
/// (|a|, 2z, |k z| + z, ...). Keeping the exponent as a separate summand makes
/// the whole pipeline overflow-free at full mantissa precision.
///
/// There is deliberately no automatic renormalisation: mantissas stay within
/// ~[1e-40, 1e40] for every composition used in this library, and exponents
/// are combined only by +/- of values derived from the same inputs, so the
/// exact cancellations (e.g. aux-function scale minus F scale at k = +-1)
/// come out bitwise exact.
struct ScaledReal {
  double mant = 0.0;
  double logexp = 0.0;

  static ScaledReal from(double v) { return {v, 0.0}; }

  /// e^a as a scaled value (mantissa 1).
  static ScaledReal exponential(double a) { return {1.0, a}; }

  /// cosh(a) = e^{|a|} (1 + e^{-2|a|}) / 2, exact for any magnitude of a.
  static ScaledReal cosh(double a) {
    const double aa = std::fabs(a);
    return {(1.0 + std::exp(-2.0 * aa)) * 0.5, aa};
  }

  /// sinh(a) = sign(a) e^{|a|} (1 - e^{-2|a|}) / 2; expm1 keeps small |a| exact.
  static ScaledReal sinh(double a) {
    const double aa = std::fabs(a);
    double m = -std::expm1(-2.0 * aa) * 0.5;
    return {a < 0.0 ? -m : m, aa};
  }

  bool zero() const { return mant == 0.0; }

  double to_double() const {
    if (mant == 0.0) return 0.0;
    if (logexp > 700.0 || logexp < -700.0) {
      // exp(logexp) alone would over/underflow even when the value fits.
      const double l = logexp + std::log(std::fabs(mant));
      if (l > 709.0)
        return mant > 0.0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
      if (l < -745.0) return 0.0;
      const double v = std::exp(l);
      return mant > 0.0 ? v : -v;
    }
    return mant * std::exp(logexp);
  }

  /// ln|value|; -inf for zero.
  double log_abs() const {
    if (mant == 0.0) return -std::numeric_limits<double>::infinity();
    return logexp + std::log(std::fabs(mant));
  }

  ScaledReal operator-() const { return {-mant, logexp}; }

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    return {a.mant * b.mant, a.logexp + b.logexp};
  }
  friend ScaledReal operator*(const ScaledReal& a, double c) { return {a.mant * c, a.logexp}; }
  friend ScaledReal operator*(double c, const ScaledReal& a) { return {a.mant * c, a.logexp}; }
  friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    return {a.mant / b.mant, a.logexp - b.logexp};
  }
  friend ScaledReal operator/(const ScaledReal& a, double c) { return {a.mant / c, a.logexp}; }

  friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.mant == 0.0) return b;
    if (b.mant == 0.0) return a;
    if (a.logexp >= b.logexp)
      return {a.mant + b.mant * std::exp(b.logexp - a.logexp), a.logexp};
    return {b.mant + a.mant * std::exp(a.logexp - b.logexp), b.logexp};
  }
  friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }
};

}  // namespace phplate

#endif  // PHPLATE_SCALED_HPP
