// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_MODE_HPP
#define PHPLATE_MODE_HPP

#include <cmath>
#include <stdexcept>

#include "phplate/hyperbolic.hpp"
#include "phplate/plate.hpp"
#include "phplate/scaled.hpp"

namespace phplate {

/// One evaluation of the mode profile phi(s, k, z) = e^{-z} g + h.
/// `value` is always g_part + h_part; h_part lies in (0, 1] and equals 1
/// exactly on the diagonal k = s; value is strictly positive.
struct ModeValue {
  double value;
  double g_part;
  double h_part;
};

namespace detail {

/// Sum/difference pairs of the auxiliary functions collapse to a single
/// hyperbolic frequency: zeta +- eta and psi +- xi live at (1 +- k) z. These
/// forms, divided by F/Fbar through Fbar - F = 2 z (1-sigma), are the only
/// way to evaluate the mode near the corners |k| = |s| = 1, where the value
/// sits exponentially far below the individual cosh(kz)cosh(z) products.
struct AuxCombos {
  ScaledReal u_plus, u_minus;  // psi + xi, psi - xi
  ScaledReal v_plus, v_minus;  // zeta + eta, zeta - eta
};

inline AuxCombos aux_combos(double k, double z, double sigma) {
  const double om = 1.0 - sigma, op = 1.0 + sigma;
  const double fp = (1.0 + k) * z, fm = (1.0 - k) * z;
  const ScaledReal cp = ScaledReal::cosh(fp), sp = ScaledReal::sinh(fp);
  const ScaledReal cm = ScaledReal::cosh(fm), sm = ScaledReal::sinh(fm);
  const double ac = 4.0 / om - z * op;
  const double bc = op * op / om + 2.0 * z;
  AuxCombos c;
  c.u_plus = (2.0 + om * fm) * cp + (-op + om * fm) * sp;
  c.u_minus = (2.0 + om * fp) * cm + (-op + om * fp) * sm;
  c.v_plus = (ac + k * z * op) * cp + (bc - 2.0 * k * z) * sp;
  c.v_minus = (ac - k * z * op) * cm + (bc + 2.0 * k * z) * sm;
  return c;
}

/// The ratio pairs P+- = psi/F +- xi/Fbar and R+- = zeta/F +- eta/Fbar,
/// assembled without cancellation from the single-frequency combos.
struct RatioPairs {
  double p_plus, p_minus;
  double r_plus, r_minus;
};

inline RatioPairs ratio_pairs(double k, double z, double sigma) {
  const AuxCombos c = aux_combos(k, z, sigma);
  const FPair f = f_pair(z, sigma);
  const ScaledReal fsum = f.f + f.fbar;
  const ScaledReal den = 2.0 * (f.f * f.fbar);
  const double delta = 2.0 * z * (1.0 - sigma);  // Fbar - F
  RatioPairs r;
  r.p_plus = ((c.u_plus * fsum + delta * c.u_minus) / den).to_double();
  r.p_minus = ((c.u_minus * fsum + delta * c.u_plus) / den).to_double();
  r.r_plus = ((c.v_plus * fsum + delta * c.v_minus) / den).to_double();
  r.r_minus = ((c.v_minus * fsum + delta * c.v_plus) / den).to_double();
  return r;
}

/// Reference assembly of e^{-z} g straight from aux_values; cancels badly
/// near the corners, kept as the cross-check route for tests.
inline double g_part_reference(const ScaledCoords& c, double sigma) {
  const AuxValues a = aux_values(c, sigma);
  const FPair fp = f_pair(c.z, sigma);
  const ScaledReal zeta{a.zeta, a.log_scale}, eta{a.eta, a.log_scale};
  const ScaledReal psi{a.psi, a.log_scale}, xi{a.xi, a.log_scale};
  const ScaledReal br1 = zeta / fp.f + c.z * (psi / fp.f) - (c.s * c.z) * (xi / fp.fbar);
  const ScaledReal br2 = eta / fp.fbar + c.z * (xi / fp.fbar) - (c.s * c.z) * (psi / fp.f);
  const ScaledReal g = ScaledReal::cosh(c.s * c.z) * br1 + ScaledReal::sinh(c.s * c.z) * br2;
  return (g * ScaledReal::exponential(-c.z)).to_double();
}

}  // namespace detail

inline ModeValue phi_scaled(const ScaledCoords& c, double sigma) {
  c.validate();
  detail::require_sigma_usable(sigma);
  const detail::RatioPairs r = detail::ratio_pairs(c.k, c.z, sigma);
  // e^{-z} g = e^{(s-1)z} X+ / 2 + e^{-(1+s)z} X- / 2 with
  // X+- = R+- + z (1 -+ s) P+-; both exponents are nonpositive.
  const double xp = r.r_plus + c.z * (1.0 - c.s) * r.p_plus;
  const double xm = r.r_minus + c.z * (1.0 + c.s) * r.p_minus;
  const double g_part =
      0.5 * (std::exp((c.s - 1.0) * c.z) * xp + std::exp(-(1.0 + c.s) * c.z) * xm);
  const double d = c.z * std::fabs(c.k - c.s);
  const double h_part = (1.0 + d) * std::exp(-d);
  return {g_part + h_part, g_part, h_part};
}

/// Mode profile phi_m(y, w) in plate coordinates; strictly positive and
/// strictly decreasing in m.
inline double phi_m(long m, double y, double w, const PlateConfig& cfg) {
  if (m < 1) throw std::domain_error("phi_m: m must be a positive integer");
  if (!(std::fabs(y) <= cfg.ell) || !(std::fabs(w) <= cfg.ell))
    throw std::domain_error("phi_m: |y| and |w| must not exceed ell");
  return phi_scaled({w / cfg.ell, y / cfg.ell, static_cast<double>(m) * cfg.ell}, cfg.sigma)
      .value;
}

/// Limit of e^{-z} g(s, k, z) as z -> +inf: zero away from the matched
/// corners, (4 + (1+sigma)^2) / ((1-sigma)(3+sigma)) at k = s = +-1.
inline double phi_limit(double s, double k, double sigma) {
  if (!(std::fabs(s) <= 1.0) || !(std::fabs(k) <= 1.0))
    throw std::domain_error("phi_limit: |s| and |k| must not exceed 1");
  detail::require_sigma_usable(sigma);
  if (k == s && std::fabs(k) == 1.0) {
    const double op = 1.0 + sigma;
    return (4.0 + op * op) / ((1.0 - sigma) * (3.0 + sigma));
  }
  return 0.0;
}

/// Limit coefficients of the box-load modal solution as the load shrinks to a
/// point at (., w); assembling them against {cosh(my), sinh(my), y cosh(my),
/// y sinh(my)} plus the kernel term reproduces phi_m(y, w) / (4 m^3).
struct CbarCoeffs {
  ScaledReal c1, c2, c3, c4;
};

inline CbarCoeffs cbar_coeffs(long m, double w, const PlateConfig& cfg) {
  if (m < 1) throw std::domain_error("cbar_coeffs: m must be a positive integer");
  if (!(std::fabs(w) <= cfg.ell)) throw std::domain_error("cbar_coeffs: |w| must not exceed ell");
  detail::require_sigma_usable(cfg.sigma);
  const double sigma = cfg.sigma, om = 1.0 - sigma, op = 1.0 + sigma;
  const double md = static_cast<double>(m);
  const double z = md * cfg.ell, mw = md * w;
  const double m3 = md * md * md;

  const FPair fp = f_pair(z, sigma);
  const ScaledReal chz = ScaledReal::cosh(z), shz = ScaledReal::sinh(z);
  const ScaledReal chw = ScaledReal::cosh(mw), shw = ScaledReal::sinh(mw);
  const ScaledReal em = ScaledReal::exponential(-z);

  const double quad = z * z * om + z * om;
  const double pa = quad + op * op / om;
  const double pb = quad + 4.0 / om;
  const double pc = 2.0 + z * om;
  const double pd = op - z * om;

  const ScaledReal n1 = pa * (shz * chw) + pb * (chz * chw) - (pc * mw) * (chz * shw) +
                        (pd * mw) * (shz * shw);
  const ScaledReal n2 = pa * (shw * chz) + pb * (shz * shw) - (pc * mw) * (shz * chw) +
                        (pd * mw) * (chz * chw);
  const ScaledReal n3 = pd * (shw * chz) + (om * mw) * (shz * chw) - pc * (shz * shw) +
                        (om * mw) * (chz * chw);
  const ScaledReal n4 = pd * (shz * chw) + (om * mw) * (shw * shz) - pc * (chz * chw) +
                        (om * mw) * (chz * shw);

  return {em * n1 / (4.0 * m3) / fp.f, em * n2 / (4.0 * m3) / fp.fbar,
          em * n3 / (4.0 * md * md) / fp.fbar, em * n4 / (4.0 * md * md) / fp.f};
}

/// Point-load kernel term (1 + m|y-w|) e^{-m|y-w|} / (4 m^3).
inline ScaledReal point_kernel(long m, double y, double w) {
  const double md = static_cast<double>(m);
  const double d = md * std::fabs(y - w);
  return ScaledReal{(1.0 + d) / (4.0 * md * md * md), -d};
}

/// Literal term-by-term assembly of the cbar profile; loses the value under
/// e^{2 m ell} of cancellation at opposite corners, kept for cross-checks.
inline double cbar_profile_reference(long m, double y, double w, const PlateConfig& cfg) {
  const CbarCoeffs c = cbar_coeffs(m, w, cfg);
  const double md = static_cast<double>(m);
  const ScaledReal chy = ScaledReal::cosh(md * y), shy = ScaledReal::sinh(md * y);
  const ScaledReal sum =
      c.c1 * chy + c.c2 * shy + (c.c3 * y) * chy + (c.c4 * y) * shy + point_kernel(m, y, w);
  return sum.to_double();
}

/// cbar-assembled modal coefficient; equals phi_m(y, w) / (4 m^3).
///
/// The basis terms are paired by e^{+-my}, which collapses the coefficient
/// sums c1 +- c2, c3 +- c4 to the single hyperbolic frequencies z -+ ... via
/// the addition formulas; every piece then carries the scale of the result.
inline double cbar_profile(long m, double y, double w, const PlateConfig& cfg) {
  if (m < 1) throw std::domain_error("cbar_profile: m must be a positive integer");
  if (!(std::fabs(w) <= cfg.ell) || !(std::fabs(y) <= cfg.ell))
    throw std::domain_error("cbar_profile: |y| and |w| must not exceed ell");
  detail::require_sigma_usable(cfg.sigma);
  const double sigma = cfg.sigma, om = 1.0 - sigma, op = 1.0 + sigma;
  const double md = static_cast<double>(m);
  const double z = md * cfg.ell, mw = md * w, my = md * y;
  const double m3 = md * md * md;

  const FPair fp = f_pair(z, sigma);
  const double quad = z * z * om + z * om;
  const double pa = quad + op * op / om;
  const double pb = quad + 4.0 / om;
  const double pc = 2.0 + z * om;
  const double pd = op - z * om;

  const ScaledReal sp = ScaledReal::sinh(z + mw), cp = ScaledReal::cosh(z + mw);
  const ScaledReal sm = ScaledReal::sinh(z - mw), cm = ScaledReal::cosh(z - mw);
  const ScaledReal n12p = (pa - pc * mw) * sp + (pb + pd * mw) * cp;
  const ScaledReal n12m = (pa + pc * mw) * sm + (pb - pd * mw) * cm;
  const ScaledReal n34p =
      pd * sp + (om * mw) * ScaledReal::exponential(z + mw) - pc * cp;
  const ScaledReal n34m =
      -pd * sm + (om * mw) * ScaledReal::exponential(z - mw) + pc * cm;

  const ScaledReal fsum = fp.f + fp.fbar;
  const ScaledReal den = 8.0 * m3 * (fp.f * fp.fbar);
  const double delta = 2.0 * z * om;  // Fbar - F
  const ScaledReal emz = ScaledReal::exponential(-z);
  const ScaledReal c12p = emz * (n12p * fsum + delta * n12m) / den;
  const ScaledReal c12m = emz * (n12m * fsum + delta * n12p) / den;
  const ScaledReal c34p = (md * emz) * (n34p * fsum - delta * n34m) / den;
  const ScaledReal c34m = (md * emz) * (n34m * fsum - delta * n34p) / den;

  const ScaledReal sum = 0.5 * (ScaledReal::exponential(my) * (c12p + y * c34p) +
                                ScaledReal::exponential(-my) * (c12m + y * c34m)) +
                         point_kernel(m, y, w);
  return sum.to_double();
}

}  // namespace phplate

#endif  // PHPLATE_MODE_HPP
