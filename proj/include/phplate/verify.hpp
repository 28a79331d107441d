// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_VERIFY_HPP
#define PHPLATE_VERIFY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phplate/detail/parallel.hpp"
#include "phplate/hyperbolic.hpp"
#include "phplate/mode.hpp"
#include "phplate/plate.hpp"
#include "phplate/scaled.hpp"

namespace phplate::verify {

enum class InequalityId {
  DIS2,
  INEQVARIE,
  DIS1,
  G_MONOTONE,
  CHI_PLUS,
  CHI_MINUS,
  MU_POSITIVE,
  MU1_MU2,
  MUBAR_NEGATIVE,
  XI_PLUS,
  XI_MINUS,
  VERTEX_PLUS,
  VERTEX_MINUS,
  SIGMA_VARSIGMA,
  AF_F1,
  PARITY,
  SIN2,
  SIN3,
  UPSILON_ZEROS,
  CONSTANTS_CN,
  CONSTANTS_CNBAR,
  SINE_LOWER,
};

inline constexpr std::array<InequalityId, 22> kAllInequalityIds = {
    InequalityId::DIS2,          InequalityId::INEQVARIE,
    InequalityId::DIS1,          InequalityId::G_MONOTONE,
    InequalityId::CHI_PLUS,      InequalityId::CHI_MINUS,
    InequalityId::MU_POSITIVE,   InequalityId::MU1_MU2,
    InequalityId::MUBAR_NEGATIVE, InequalityId::XI_PLUS,
    InequalityId::XI_MINUS,      InequalityId::VERTEX_PLUS,
    InequalityId::VERTEX_MINUS,  InequalityId::SIGMA_VARSIGMA,
    InequalityId::AF_F1,         InequalityId::PARITY,
    InequalityId::SIN2,          InequalityId::SIN3,
    InequalityId::UPSILON_ZEROS, InequalityId::CONSTANTS_CN,
    InequalityId::CONSTANTS_CNBAR, InequalityId::SINE_LOWER,
};

inline std::string_view to_string(InequalityId id) {
  switch (id) {
    case InequalityId::DIS2: return "DIS2";
    case InequalityId::INEQVARIE: return "INEQVARIE";
    case InequalityId::DIS1: return "DIS1";
    case InequalityId::G_MONOTONE: return "G_MONOTONE";
    case InequalityId::CHI_PLUS: return "CHI_PLUS";
    case InequalityId::CHI_MINUS: return "CHI_MINUS";
    case InequalityId::MU_POSITIVE: return "MU_POSITIVE";
    case InequalityId::MU1_MU2: return "MU1_MU2";
    case InequalityId::MUBAR_NEGATIVE: return "MUBAR_NEGATIVE";
    case InequalityId::XI_PLUS: return "XI_PLUS";
    case InequalityId::XI_MINUS: return "XI_MINUS";
    case InequalityId::VERTEX_PLUS: return "VERTEX_PLUS";
    case InequalityId::VERTEX_MINUS: return "VERTEX_MINUS";
    case InequalityId::SIGMA_VARSIGMA: return "SIGMA_VARSIGMA";
    case InequalityId::AF_F1: return "AF_F1";
    case InequalityId::PARITY: return "PARITY";
    case InequalityId::SIN2: return "SIN2";
    case InequalityId::SIN3: return "SIN3";
    case InequalityId::UPSILON_ZEROS: return "UPSILON_ZEROS";
    case InequalityId::CONSTANTS_CN: return "CONSTANTS_CN";
    case InequalityId::CONSTANTS_CNBAR: return "CONSTANTS_CNBAR";
    case InequalityId::SINE_LOWER: return "SINE_LOWER";
  }
  return "UNKNOWN";
}

inline std::optional<InequalityId> inequality_from_string(std::string_view name) {
  for (InequalityId id : kAllInequalityIds)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

/// Default sweep grids. k, s and omega are linear inclusive grids on [-1, 1];
/// z is log-spaced; the trigonometric lemmas use interior grids of (0, L).
struct VerifyGrid {
  int k_points = 201;
  int s_points = 201;
  int z_points = 400;
  double z_min = 1e-3;
  double z_max = 50.0;
  int omega_points = 81;
  int trig_points = 500;
  int n_max = 40;
};

/// Minimum signed slack of one inequality over its grid; positive margin
/// means the claimed strict sign holds at every node.
struct MarginReport {
  InequalityId id;
  double sigma = 0.0;
  std::string grid;
  double min_margin = 0.0;
  std::vector<double> argmin;
  std::uint64_t evaluations = 0;

  bool passed() const { return min_margin > 0.0; }
};

// ---------------------------------------------------------------------------
// Coefficient families and stable building blocks.
// ---------------------------------------------------------------------------

struct VariCoeff {
  double p, q, r, s, t, u;
};

struct VariCoeff2 {
  double a, b, c, d, e, f;
};

/// Everything that depends on z (and sigma) alone. The *_dif members are the
/// reduced differences assembled through Fbar - F = 2 z (1-sigma) and
/// (3+sigma) e^{-z} telescopes; the naive member-by-member differences lose
/// the result under e^{2z} of cancellation for z beyond ~18.
struct ZQuantities {
  double z, sigma;
  ScaledReal F, Fb, Fp, Fbp;
  double inv_f, inv_fb;
  double fpf, fbpfb;       // F'/F, Fbar'/Fbar
  double h_plus, h_minus;  // 1/F +- 1/Fbar
  double h2_plus, h2_minus;
  double alpha, alphabar;  // 2F - F', 2Fbar - Fbar'
  double af_plus, af_minus;
  ScaledReal g_minus_s;    // F'/F^2 - Fbar'/Fbar^2
  double mu1, mu21;        // mu1 and mu2 - mu1 (= 2(1-sigma)(3z+2z^2))
  double mu;               // discriminant quantity, positive-piece route
  double mubar;
  double varsigma, varsigma_tilde, varsigma_sum;  // sum = varsigma + varsigma_bar
  VariCoeff vc;
  VariCoeff2 vc2;
  double sp_sum, sp_dif, tq_sum, tq_dif, ur_sum, ur_dif;
  double ad_sum, ad_dif, be_sum, be_dif, cf_sum, cf_dif;
  ScaledReal xi_plus_corner, xi_minus_corner;  // Xi+(1,z), Xi-(-1,z)

  ZQuantities(double z_in, double sigma_in) : z(z_in), sigma(sigma_in) {
    detail::require_positive_z(z);
    detail::require_sigma_usable(sigma);
    const double om = 1.0 - sigma, op = 1.0 + sigma, tp = 3.0 + sigma;
    const FPair fpair = f_pair(z, sigma);
    const FDerivs fder = f_derivs(z, sigma);
    F = fpair.f;
    Fb = fpair.fbar;
    Fp = fder.f;
    Fbp = fder.fbar;
    const ScaledReal one = ScaledReal::from(1.0);
    const ScaledReal ez = ScaledReal::exponential(z);
    const ScaledReal emz = ScaledReal::exponential(-z);
    const ScaledReal chz = ScaledReal::cosh(z), shz = ScaledReal::sinh(z);
    const double delta = 2.0 * z * om;  // Fbar - F
    const ScaledReal ff = F * Fb, f2 = F * F, fb2 = Fb * Fb;
    const ScaledReal f2fb2 = f2 * fb2;

    inv_f = (one / F).to_double();
    inv_fb = (one / Fb).to_double();
    fpf = (Fp / F).to_double();
    fbpfb = (Fbp / Fb).to_double();
    h_plus = inv_f + inv_fb;
    h_minus = (ScaledReal::from(delta) / ff).to_double();
    h2_plus = (one / f2).to_double() + (one / fb2).to_double();
    h2_minus = (delta * (F + Fb) / f2fb2).to_double();

    const double a_part = -tp * std::exp(-2.0 * z);
    const double b_part = om * (1.0 - 2.0 * z);
    alpha = a_part + b_part;
    alphabar = a_part - b_part;
    af_plus =
        ((a_part * (f2 + fb2) + (b_part * delta) * (F + Fb)) / f2fb2).to_double();
    af_minus =
        (((a_part * delta) * (F + Fb) + b_part * (f2 + fb2)) / f2fb2).to_double();
    g_minus_s = (delta * (Fp * (2.0 * F + ScaledReal::from(delta))) - (2.0 * om) * f2) / f2fb2;

    const ScaledReal mu1_s = (4.0 + 2.0 * z) * F - z * Fp;
    const ScaledReal mu2_s = (4.0 + 2.0 * z) * Fb - z * Fbp;
    mu1 = mu1_s.to_double();
    mu21 = 2.0 * om * (3.0 * z + 2.0 * z * z);

    {  // mu, assembled from its positive-piece display
      const ScaledReal ch2 = ScaledReal::cosh(2.0 * z), sh2 = ScaledReal::sinh(2.0 * z);
      const double e4 = std::exp(-4.0 * z);
      // 2 z cosh(2z) - sinh(2z), positive for z > 0
      const ScaledReal w2{(2.0 * z * (1.0 + e4) - (1.0 - e4)) * 0.5, 2.0 * z};
      const double t1 =
          2.0 * om * tp *
          (h2_minus + (2.0 * z * tp * om) * (w2 / f2fb2).to_double());
      const double c7 = 7.0 + 10.0 * sigma - sigma * sigma;
      const ScaledReal sh2sq = sh2 * sh2;
      const ScaledReal zz4 = ScaledReal::from(4.0 * om * om * z * z);
      const double t2 =
          tp * tp *
          ((ch2 * (c7 * sh2sq - zz4) + sh2 * (c7 * sh2sq + zz4)) / f2fb2).to_double();
      const ScaledReal musum = mu1_s / f2 + mu2_s / fb2;
      const double t3 = -z * om * om * (ScaledReal::exponential(2.0 * z) * musum).to_double() *
                        af_plus;
      mu = t1 + t2 + t3;
    }

    // (vari coeff)
    {
      const double cr = -2.0 * op / om + 2.0 * z * om + z * z * om;
      const double crc = -op + z * om, crs = 2.0 + z * om;
      const double ezf = (ez / F).to_double(), ezfb = (ez / Fb).to_double();
      vc.p = -om * ezfb;
      vc.s = -om * ezf;
      vc.q = ((2.0 * op * chz - 4.0 * shz) / F).to_double() + z * om * ezf * fpf;
      vc.t = ((-4.0 * chz + 2.0 * op * shz) / Fb).to_double() + z * om * ezfb * fbpfb;
      const ScaledReal tf = crs * chz + crc * shz;   // cosh (2+z om) + sinh (-(1+s)+z om)
      const ScaledReal tfb = crc * chz + crs * shz;
      vc.u = cr * ezf - z * (tf * Fp / f2).to_double();
      vc.r = cr * ezfb - z * (tfb * Fbp / fb2).to_double();

      sp_sum = vc.s + vc.p;
      sp_dif = -om * ((ez * ScaledReal::from(delta)) / ff).to_double();
      tq_sum = vc.t + vc.q;
      tq_dif = -(6.0 + 2.0 * sigma) * (emz / Fb).to_double() -
               ((2.0 * op * chz - 4.0 * shz) * ScaledReal::from(delta) / ff).to_double() -
               z * om * (ez * g_minus_s).to_double();
      ur_sum = vc.u + vc.r;
      ur_dif = cr * ((ez * ScaledReal::from(delta)) / ff).to_double() -
               z * tp * (emz * Fp / f2).to_double() - z * (tfb * g_minus_s).to_double();
    }

    mubar = 2.0 * (((2.0 * z * om * om) * chz - (op * F + 2.0 * Fb) * emz) / ff).to_double() +
            z * om * (ez * ScaledReal::from(af_minus)).to_double();

    // (vari coeff2)
    {
      const double c1 = 2.0 * sigma * op / om + 2.0 * z;
      const double c2 = 2.0 * (3.0 - sigma) / om - z * op;
      const double c3 = 4.0 / om - z * op;
      const double c4 = op * op / om + 2.0 * z;
      const double ezf = (ez / F).to_double(), ezfb = (ez / Fb).to_double();
      vc2.a = -z * ((2.0 * chz - op * shz) / F).to_double();
      vc2.d = -z * ((2.0 * shz - op * chz) / Fb).to_double();
      vc2.b = (2.0 * op / om) * ezfb + z * ((2.0 * shz - op * chz) / Fb).to_double() * fbpfb;
      vc2.e = (2.0 * op / om) * ezf + z * ((2.0 * chz - op * shz) / F).to_double() * fpf;
      vc2.c = ((c1 * chz + c2 * shz) / F).to_double() -
              ((c3 * chz + c4 * shz) * Fp / f2).to_double();
      vc2.f = ((c2 * chz + c1 * shz) / Fb).to_double() -
              ((c4 * chz + c3 * shz) * Fbp / fb2).to_double();

      ad_sum = vc2.a + vc2.d;
      be_sum = vc2.b + vc2.e;
      cf_sum = vc2.c + vc2.f;
      ad_dif = -z * ((2.0 * chz - op * shz) * ScaledReal::from(delta) / ff).to_double() -
               z * tp * (emz / Fb).to_double();
      be_dif = -(2.0 * op / om) * ((ez * ScaledReal::from(delta)) / ff).to_double() -
               z * ((2.0 * shz - op * chz) * g_minus_s).to_double() -
               z * tp * (emz * Fp / f2).to_double();
      cf_dif = tp * (z - 2.0) * (emz / F).to_double() +
               ((c2 * chz + c1 * shz) * ScaledReal::from(delta) / ff).to_double() -
               tp * (1.0 - z) * (emz * Fp / f2).to_double() -
               ((c4 * chz + c3 * shz) * g_minus_s).to_double();
    }

    varsigma_tilde = -om * om * z - 4.0 * op + tp * tp * z * std::exp(-4.0 * z);
    varsigma = (ez * ScaledReal::from(
                         0.5 * (varsigma_tilde - 4.0 * tp * op / om * std::exp(-2.0 * z))))
                   .to_double();
    varsigma_sum = -4.0 * op * tp / om * std::exp(-z);

    {
      const ScaledReal s_sum = (-4.0 * op * tp / om) * emz;      // varsigma + varsigma_bar
      const ScaledReal d_dif = ez * ScaledReal::from(varsigma_tilde);  // varsigma - varsigma_bar
      const ScaledReal two_f2fb2 = 2.0 * f2fb2;
      xi_plus_corner = (s_sum * (f2 + fb2) + (d_dif * delta) * (F + Fb)) / two_f2fb2;
      xi_minus_corner = (d_dif * (f2 + fb2) + (s_sum * delta) * (F + Fb)) / two_f2fb2;
    }
  }

  /// Xi+(k, z); the k = 1 tangency uses the closed corner form.
  double xi_plus(double k) const {
    if (k == 1.0) return xi_plus_corner.to_double();
    return k * k * ad_sum + k * be_sum + cf_sum;
  }

  /// Xi-(k, z); the k = -1 tangency uses the closed corner form.
  double xi_minus(double k) const {
    if (k == -1.0) return xi_minus_corner.to_double();
    return k * k * ad_dif + k * be_dif + cf_dif;
  }

  double chi_plus(double k) const {
    const double kz = k * z;
    return kz * kz * sp_sum + kz * tq_sum + ur_sum;
  }

  double chi_minus(double k) const {
    const double kz = k * z;
    return kz * kz * sp_dif + kz * tq_dif + ur_dif;
  }

  double vertex_plus() const { return be_sum + 2.0 * ad_sum; }
  double vertex_minus() const { return be_dif - 2.0 * ad_dif; }

  /// [z psi/F + z xi/Fbar]_z - [zeta/F + eta/Fbar] at (k, z).
  ScaledReal dis8_plus(double k) const {
    return 0.5 * (ScaledReal::exponential(k * z) * ScaledReal::from(chi_plus(k)) +
                  ScaledReal::exponential(-k * z) * ScaledReal::from(chi_minus(k)));
  }

  /// [zeta/F + eta/Fbar]_z at (k, z).
  ScaledReal dis0_plus(double k) const {
    return 0.5 * (ScaledReal::exponential(k * z) * ScaledReal::from(xi_plus(k)) +
                  ScaledReal::exponential(-k * z) * ScaledReal::from(xi_minus(k)));
  }

  /// g_z - g at (s, k, z), assembled from the proof's nonpositive pieces so
  /// the corner tangencies keep their sign in double precision.
  ScaledReal g_monotone(double s, double k) const {
    const phplate::detail::RatioPairs rp = phplate::detail::ratio_pairs(k, z, sigma);
    const ScaledReal y_plus = dis8_plus(k), y_minus = dis8_plus(-k);
    const ScaledReal d0_plus = dis0_plus(k), d0_minus = dis0_plus(-k);
    const double tm = 1.0 - s, tp2 = 1.0 + s;
    const ScaledReal bracket_p =
        ScaledReal::from(-z * tm * tm * rp.p_plus) + tm * y_plus + d0_plus;
    const ScaledReal bracket_m =
        ScaledReal::from(-z * tp2 * tp2 * rp.p_minus) + tp2 * y_minus + d0_minus;
    return 0.5 * (ScaledReal::exponential(s * z) * bracket_p +
                  ScaledReal::exponential(-s * z) * bracket_m);
  }
};

namespace detail2 {

/// Naive g_z - g straight from the aux-function ratios; valid for moderate z,
/// used to cross-check the stable route.
inline double g_monotone_reference(double s, double k, double z, double sigma) {
  const AuxValues a = aux_values({s, k, z}, sigma);
  const FPair fp = f_pair(z, sigma);
  const FDerivs fd = f_derivs(z, sigma);
  const ScaledReal zeta{a.zeta, a.log_scale}, eta{a.eta, a.log_scale};
  const ScaledReal psi{a.psi, a.log_scale}, xi{a.xi, a.log_scale};
  const ScaledReal zeta_z{a.zeta_z, a.log_scale}, eta_z{a.eta_z, a.log_scale};
  const ScaledReal psi_z{a.psi_z, a.log_scale}, xi_z{a.xi_z, a.log_scale};

  const double a0 = (zeta / fp.f).to_double();
  const double a1 = z * (psi / fp.f).to_double();
  const double b0 = (eta / fp.fbar).to_double();
  const double b1 = z * (xi / fp.fbar).to_double();
  const double da0 = ((zeta_z * fp.f - zeta * fd.f) / (fp.f * fp.f)).to_double();
  const double da1 = (psi / fp.f).to_double() +
                     z * ((psi_z * fp.f - psi * fd.f) / (fp.f * fp.f)).to_double();
  const double db0 = ((eta_z * fp.fbar - eta * fd.fbar) / (fp.fbar * fp.fbar)).to_double();
  const double db1 = (xi / fp.fbar).to_double() +
                     z * ((xi_z * fp.fbar - xi * fd.fbar) / (fp.fbar * fp.fbar)).to_double();

  const double w = (da0 + da1) - (a0 + a1) + s * (b0 + 2.0 * b1 - db1) - s * s * a1;
  const double q = (db0 + db1) - (b0 + b1) + s * (a0 + 2.0 * a1 - da1) - s * s * b1;
  return w * std::cosh(s * z) + q * std::sinh(s * z);
}

inline std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> zs(n);
  if (n == 1) {
    zs[0] = lo;
    return zs;
  }
  const double r = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) zs[i] = lo * std::exp(r * i);
  zs.back() = hi;
  return zs;
}

inline std::vector<double> linear(double lo, double hi, int n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  v.front() = lo;
  v.back() = hi;
  return v;
}

/// Interior grid of (0, length): n points, endpoints excluded.
inline std::vector<double> open_grid(double length, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = length * static_cast<double>(i + 1) / (n + 1);
  return v;
}

struct Best {
  double margin = std::numeric_limits<double>::infinity();
  std::vector<double> arg;
  void consider(double m, std::initializer_list<double> a) {
    if (m < margin) {
      margin = m;
      arg.assign(a);
    }
  }
  void merge(const Best& o) {
    if (o.arg.empty()) return;
    if (o.margin < margin) {
      margin = o.margin;
      arg = o.arg;
    }
  }
};

}  // namespace detail2

/// upsilon_m(t) = sin(mt)/m^2 - sin((m+1)t)/(m+1)^2 - a_m sin(t) with
/// a_m = (m^{-3/2} - (m+1)^{-3/2})^2.
inline double upsilon(long m, double t) {
  const double md = static_cast<double>(m);
  const double am = std::pow(md, -1.5) - std::pow(md + 1.0, -1.5);
  return std::sin(md * t) / (md * md) - std::sin((md + 1.0) * t) / ((md + 1.0) * (md + 1.0)) -
         am * am * std::sin(t);
}

/// Row of the positivity-scheme constants table. cbar/xbar are only defined
/// for odd n >= 3 (NaN otherwise).
struct ConstantsRow {
  int n;
  double c_n, x_n;
  double cbar_n, xbar_n;
};

inline std::vector<ConstantsRow> constants_table(int n_max) {
  if (n_max < 3) throw std::domain_error("constants_table: n_max must be at least 3");
  std::vector<ConstantsRow> rows;
  const double pi2_6 = kPi * kPi / 6.0;
  double psum2 = 0.0, psum3 = 0.0;
  std::vector<double> tail2(n_max + 2);  // tail2[n] = sum_{m > n} m^{-2}
  std::vector<double> p3(n_max + 2);
  for (int n = 1; n <= n_max + 1; ++n) {
    psum2 += 1.0 / (static_cast<double>(n) * n);
    psum3 += 1.0 / (static_cast<double>(n) * n * n);
    tail2[n] = pi2_6 - psum2;
    p3[n] = psum3;
  }
  double odd_sum = 0.0;  // 1/2 + sum_{m odd, 3..n} a_m
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int n = 1; n <= n_max; ++n) {
    ConstantsRow row{n, tail2[n] / p3[n], 0.0, nan, nan};
    row.x_n = std::asin(row.c_n);
    if (n >= 3 && n % 2 == 1) {
      const double md = static_cast<double>(n);
      const double am = std::pow(md, -1.5) - std::pow(md + 1.0, -1.5);
      odd_sum += am * am;
      row.cbar_n = tail2[n + 1] / (0.5 + odd_sum);
      row.xbar_n = std::asin(row.cbar_n);
    }
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// check()
// ---------------------------------------------------------------------------

inline MarginReport check(InequalityId id, const VerifyGrid& grid, const PlateConfig& cfg) {
  cfg.validate();
  const double sigma = cfg.sigma;
  if (!(grid.z_min > 0.0) || !(grid.z_max >= grid.z_min))
    throw std::domain_error("check: invalid z range");
  MarginReport report;
  report.id = id;
  report.sigma = sigma;

  const std::vector<double> zs = detail2::log_spaced(grid.z_min, grid.z_max, grid.z_points);
  const std::vector<double> ks = detail2::linear(-1.0, 1.0, grid.k_points);
  const std::vector<double> ss = detail2::linear(-1.0, 1.0, grid.s_points);
  const std::vector<double> omegas = detail2::linear(-1.0, 1.0, grid.omega_points);

  auto z_sweep = [&](auto&& node_fn, std::uint64_t per_z, const char* desc) {
    std::vector<detail2::Best> locals(zs.size());
    detail::parallel_for(zs.size(), [&](std::size_t i) { node_fn(zs[i], locals[i]); });
    detail2::Best best;
    for (const auto& l : locals) best.merge(l);
    report.grid = desc;
    report.min_margin = best.margin;
    report.argmin = best.arg;
    report.evaluations = per_z * zs.size();
  };

  switch (id) {
    case InequalityId::DIS2:
      z_sweep(
          [&](double z, detail2::Best& best) {
            for (double om : omegas) {
              const double v = (2.0 * ScaledReal::cosh(om * z) -
                                (1.0 + sigma) * ScaledReal::sinh(om * z))
                                   .to_double();
              best.consider(v, {om, z});
            }
          },
          omegas.size(), "omega x z (linear x log)");
      break;

    case InequalityId::INEQVARIE:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            best.consider(q.h_plus, {z, 0});
            best.consider(q.h_minus, {z, 1});
            best.consider(q.h2_plus, {z, 2});
            best.consider(q.h2_minus, {z, 3});
          },
          4, "z (log); arg = (z, expression index)");
      break;

    case InequalityId::DIS1:
      z_sweep(
          [&](double z, detail2::Best& best) {
            for (double k : ks) {
              const phplate::detail::RatioPairs rp = phplate::detail::ratio_pairs(k, z, sigma);
              best.consider(rp.p_plus, {k, z, +1});
              best.consider(rp.p_minus, {k, z, -1});
            }
          },
          2 * ks.size(), "k x z; arg = (k, z, branch)");
      break;

    case InequalityId::G_MONOTONE:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            for (double k : ks)
              for (double s : ss) {
                const double margin = (-q.g_monotone(s, k)).to_double();
                best.consider(margin, {s, k, z});
              }
          },
          static_cast<std::uint64_t>(ks.size()) * ss.size(), "s x k x z; arg = (s, k, z)");
      break;

    case InequalityId::CHI_PLUS:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            for (double k : ks) best.consider(-q.chi_plus(k), {k, z});
          },
          ks.size(), "k x z");
      break;

    case InequalityId::CHI_MINUS:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            for (double k : ks) best.consider(-q.chi_minus(k), {k, z});
          },
          ks.size(), "k x z");
      break;

    case InequalityId::MU_POSITIVE:
      z_sweep(
          [&](double z, detail2::Best& best) {
            best.consider(ZQuantities(z, sigma).mu, {z});
          },
          1, "z (log)");
      break;

    case InequalityId::MU1_MU2:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            best.consider(q.mu1, {z, 1});
            best.consider(q.mu21, {z, 2});
          },
          2, "z (log); arg = (z, branch)");
      break;

    case InequalityId::MUBAR_NEGATIVE:
      z_sweep(
          [&](double z, detail2::Best& best) {
            best.consider(-ZQuantities(z, sigma).mubar, {z});
          },
          1, "z (log)");
      break;

    case InequalityId::XI_PLUS:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            for (double k : ks) best.consider(-q.xi_plus(k), {k, z});
          },
          ks.size(), "k x z");
      break;

    case InequalityId::XI_MINUS:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            for (double k : ks) best.consider(-q.xi_minus(k), {k, z});
          },
          ks.size(), "k x z");
      break;

    case InequalityId::VERTEX_PLUS:
      z_sweep(
          [&](double z, detail2::Best& best) {
            best.consider(ZQuantities(z, sigma).vertex_plus(), {z});
          },
          1, "z (log)");
      break;

    case InequalityId::VERTEX_MINUS:
      z_sweep(
          [&](double z, detail2::Best& best) {
            best.consider(-ZQuantities(z, sigma).vertex_minus(), {z});
          },
          1, "z (log)");
      break;

    case InequalityId::SIGMA_VARSIGMA:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            best.consider(-q.varsigma, {z, 0});
            best.consider(-q.varsigma_tilde, {z, 1});
            best.consider(-q.varsigma_sum, {z, 2});
          },
          3, "z (log); arg = (z, expression index)");
      break;

    case InequalityId::AF_F1:
      z_sweep(
          [&](double z, detail2::Best& best) {
            const ZQuantities q(z, sigma);
            best.consider(-q.af_plus, {z, +1});
            best.consider(-q.af_minus, {z, -1});
          },
          2, "z (log); arg = (z, branch)");
      break;

    case InequalityId::PARITY:
      z_sweep(
          [&](double z, detail2::Best& best) {
            for (double k : ks) {
              if (k < 0.0) continue;  // pairs (k, -k) checked once
              const AuxValues ap = aux_values({0.0, k, z}, sigma);
              const AuxValues am = aux_values({0.0, -k, z}, sigma);
              const double even[4][2] = {{ap.zeta, am.zeta},
                                         {ap.psi, am.psi},
                                         {ap.zeta_z, am.zeta_z},
                                         {ap.psi_z, am.psi_z}};
              const double odd[4][2] = {{ap.eta, am.eta},
                                        {ap.xi, am.xi},
                                        {ap.eta_z, am.eta_z},
                                        {ap.xi_z, am.xi_z}};
              double rel = 0.0;
              for (const auto& pair : even) {
                const double den = std::max(std::fabs(pair[0]), 1e-300);
                rel = std::max(rel, std::fabs(pair[1] - pair[0]) / den);
              }
              for (const auto& pair : odd) {
                const double den = std::max(std::fabs(pair[0]), 1e-300);
                rel = std::max(rel, std::fabs(pair[1] + pair[0]) / den);
              }
              best.consider(1e-12 - rel, {k, z});
            }
          },
          (ks.size() + 1) / 2, "k x z; margin = 1e-12 - parity residual");
      break;

    case InequalityId::SIN2: {
      detail2::Best best;
      std::uint64_t evals = 0;
      for (int n = 2; n <= grid.n_max; ++n) {
        const std::vector<double> pts = detail2::open_grid(kPi / (n + 1), grid.trig_points);
        std::vector<std::vector<double>> table(n + 1, std::vector<double>(pts.size()));
        for (int m = 1; m <= n; ++m)
          for (std::size_t i = 0; i < pts.size(); ++i)
            table[m][i] = std::sin(m * pts[i]);
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = 0; j < pts.size(); ++j) {
            const double base = table[1][i] * table[1][j];
            for (int m = 2; m <= n; ++m) {
              best.consider(table[m][i] * table[m][j] - base,
                            {static_cast<double>(n), static_cast<double>(m), pts[i], pts[j]});
              ++evals;
            }
          }
      }
      report.grid = "N x m x rho x x";
      report.min_margin = best.margin;
      report.argmin = best.arg;
      report.evaluations = evals;
      break;
    }

    case InequalityId::SIN3: {
      detail2::Best best;
      std::uint64_t evals = 0;
      for (int n = 3; n <= grid.n_max; ++n) {
        const std::vector<double> pts = detail2::open_grid(kPi / (n + 1), grid.trig_points);
        std::vector<std::vector<double>> table(n + 2, std::vector<double>(pts.size()));
        for (int m = 1; m <= n + 1; ++m)
          for (std::size_t i = 0; i < pts.size(); ++i)
            table[m][i] = std::sin(m * pts[i]);
        for (int m = 3; m <= n; ++m) {
          const double md = m;
          const double am = std::pow(md, -1.5) - std::pow(md + 1.0, -1.5);
          const double am2 = am * am, m3 = md * md * md, m13 = (md + 1) * (md + 1) * (md + 1);
          for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
              const double lhs = table[m][i] * table[m][j] / m3 -
                                 table[m + 1][i] * table[m + 1][j] / m13;
              best.consider(lhs - am2 * table[1][i] * table[1][j],
                            {static_cast<double>(n), md, pts[i], pts[j]});
              ++evals;
            }
        }
      }
      report.grid = "N x m x rho x x";
      report.min_margin = best.margin;
      report.argmin = best.arg;
      report.evaluations = evals;
      break;
    }

    case InequalityId::UPSILON_ZEROS: {
      detail2::Best best;
      std::uint64_t evals = 0;
      for (int m = 3; m <= grid.n_max; ++m) {
        const double lo = 2.0 * kPi / (2.0 * m + 1), hi = 3.0 * kPi / (2.0 * m);
        const double at_lo = upsilon(m, lo), at_hi = upsilon(m, hi);
        best.consider(at_lo, {static_cast<double>(m), lo});
        best.consider(-at_hi, {static_cast<double>(m), hi});
        evals += 2;
        // bisect the unique zero t1 inside the bracket
        double a = lo, b = hi;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (a + b);
          (upsilon(m, mid) > 0.0 ? a : b) = mid;
        }
        const double t1 = 0.5 * (a + b);
        const double top = 2.0 * kPi / (m + 1);
        const double guard = 1e-3 * t1;
        for (double t : detail2::open_grid(t1 - guard, 200)) {
          best.consider(upsilon(m, t), {static_cast<double>(m), t});
          ++evals;
        }
        for (double t : detail2::linear(t1 + guard, top, 200)) {
          best.consider(-upsilon(m, t), {static_cast<double>(m), t});
          ++evals;
        }
      }
      report.grid = "m x t; zero bracketing plus sign pattern";
      report.min_margin = best.margin;
      report.argmin = best.arg;
      report.evaluations = evals;
      break;
    }

    case InequalityId::CONSTANTS_CN: {
      detail2::Best best;
      const auto rows = constants_table(grid.n_max);
      for (const auto& row : rows) {
        if (row.n >= 2) best.consider(1.0 / row.n - row.c_n, {static_cast<double>(row.n), 0});
        if (row.n >= 3)
          best.consider(kPi / (row.n + 2) - row.x_n, {static_cast<double>(row.n), 1});
      }
      report.grid = "N = 2..n_max; C_N < 1/N and x_N < pi/(N+2)";
      report.min_margin = best.margin;
      report.argmin = best.arg;
      report.evaluations = rows.size() * 2;
      break;
    }

    case InequalityId::CONSTANTS_CNBAR: {
      detail2::Best best;
      const auto rows = constants_table(grid.n_max);
      std::uint64_t evals = 0;
      for (const auto& row : rows) {
        if (row.n < 3 || row.n % 2 == 0) continue;
        best.consider(std::sin(kPi / (row.n + 3)) - row.cbar_n, {static_cast<double>(row.n)});
        ++evals;
      }
      report.grid = "odd N = 3..n_max; Cbar_N < sin(pi/(N+3))";
      report.min_margin = best.margin;
      report.argmin = best.arg;
      report.evaluations = evals;
      break;
    }

    case InequalityId::SINE_LOWER: {
      detail2::Best best;
      const std::vector<double> pts = detail2::open_grid(kPi / 6.0, grid.trig_points);
      for (double x : pts) best.consider(std::sin(x) - 3.0 * x / kPi, {x});
      report.grid = "x in (0, pi/6)";
      report.min_margin = best.margin;
      report.argmin = best.arg;
      report.evaluations = pts.size();
      break;
    }
  }
  return report;
}

inline std::vector<MarginReport> check_all(const VerifyGrid& grid, const PlateConfig& cfg) {
  std::vector<MarginReport> reports;
  reports.reserve(kAllInequalityIds.size());
  for (InequalityId id : kAllInequalityIds) reports.push_back(check(id, grid, cfg));
  return reports;
}

/// The three Appendix sine results on their own grids.
inline std::vector<MarginReport> check_sin_lemmas(int n_max, const PlateConfig& cfg = {},
                                                  int trig_points = 500) {
  if (n_max < 3) throw std::domain_error("check_sin_lemmas: n_max must be at least 3");
  VerifyGrid grid;
  grid.n_max = n_max;
  grid.trig_points = trig_points;
  return {check(InequalityId::SIN2, grid, cfg), check(InequalityId::SIN3, grid, cfg),
          check(InequalityId::UPSILON_ZEROS, grid, cfg)};
}

}  // namespace phplate::verify

#endif  // PHPLATE_VERIFY_HPP
