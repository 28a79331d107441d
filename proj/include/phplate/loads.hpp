// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_LOADS_HPP
#define PHPLATE_LOADS_HPP

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "phplate/mode.hpp"
#include "phplate/plate.hpp"
#include "phplate/scaled.hpp"
#include "phplate/series.hpp"

namespace phplate {

/// Uniform load 1/(4 alpha eta) on [rho-alpha, rho+alpha] x [w-eta, w+eta];
/// the rectangle must sit strictly inside the plate.
struct BoxLoad {
  double rho;
  double w;
  double alpha;
  double eta;

  void validate(const PlateConfig& cfg) const {
    if (!(alpha > 0.0) || !(eta > 0.0))
      throw std::domain_error("BoxLoad: alpha and eta must be positive");
    if (!(rho - alpha > 0.0) || !(rho + alpha < kPi))
      throw std::domain_error("BoxLoad: x-support must lie inside (0, pi)");
    if (!(w - eta > -cfg.ell) || !(w + eta < cfg.ell))
      throw std::domain_error("BoxLoad: y-support must lie inside (-ell, ell)");
  }
};

/// Sine-transform coefficient of the box load in x:
/// f_m(y) = chi_{[w-eta, w+eta]}(y) / (pi eta) * sin(m alpha)/(m alpha) * sin(m rho).
inline double modal_load_coeff(long m, const BoxLoad& load, double y) {
  if (m < 1) throw std::domain_error("modal_load_coeff: m must be positive");
  if (std::fabs(y - load.w) > load.eta) return 0.0;
  const double ma = static_cast<double>(m) * load.alpha;
  return std::sin(ma) / ma * std::sin(static_cast<double>(m) * load.rho) / (kPi * load.eta);
}

namespace detail {

// Kernel K(u) = (1 + m|u|) e^{-m|u|} / (4 m^3), its derivatives, and the odd
// antiderivative P with P(0) = 0. Everything below is the closed form of the
// sliding average (1/2eta) * int_{y-w-eta}^{y-w+eta} K, giving the smoothed
// kernel and its first three derivatives.
inline double conv_kernel(double m, double u) {
  const double d = m * std::fabs(u);
  return (1.0 + d) * std::exp(-d) / (4.0 * m * m * m);
}
inline double conv_kernel_d1(double m, double u) {
  return -u * std::exp(-m * std::fabs(u)) / (4.0 * m);
}
inline double conv_kernel_d2(double m, double u) {
  const double d = m * std::fabs(u);
  return (d - 1.0) * std::exp(-d) / (4.0 * m);
}
inline double conv_antideriv(double m, double u) {
  const double au = std::fabs(u);
  const double v = (2.0 / m - std::exp(-m * au) * (au + 2.0 / m)) / (4.0 * m * m * m);
  return u >= 0.0 ? v : -v;
}

/// Scaled evaluation of the smoothed kernel; needed at y = +-ell where the
/// value is a clean multiple of e^{-m(ell -+ w)} far below double range for
/// large m.
inline ScaledReal phi_conv_scaled(long mi, double w, double eta, double y, int order) {
  if (!(eta > 0.0)) throw std::domain_error("phi_convolution: eta must be positive");
  if (order < 0 || order > 3) throw std::domain_error("phi_convolution: order must be 0..3");
  if (mi < 1) throw std::domain_error("phi_convolution: m must be positive");
  const double m = static_cast<double>(mi);
  const double a = y - w + eta, b = y - w - eta;
  const double inv = 1.0 / (2.0 * eta);
  const double m3 = 4.0 * m * m * m, m1 = 4.0 * m;

  if (b >= 0.0) {  // evaluation point right of the support
    const double e = std::exp(-2.0 * m * eta);
    double mant;
    switch (order) {
      case 0: mant = ((b + 2.0 / m) - e * (a + 2.0 / m)) / m3; break;
      case 1: mant = ((1.0 + m * a) * e - (1.0 + m * b)) / m3; break;
      case 2: mant = (b - a * e) / m1; break;
      default: mant = ((m * a - 1.0) * e - (m * b - 1.0)) / m1; break;
    }
    return {mant * inv, -m * b};
  }
  if (a <= 0.0) {  // left of the support
    const double c = -a, d = -b;  // 0 <= c < d
    const double e = std::exp(-2.0 * m * eta);
    double mant;
    switch (order) {
      case 0: mant = ((c + 2.0 / m) - e * (d + 2.0 / m)) / m3; break;
      case 1: mant = ((1.0 + m * c) - (1.0 + m * d) * e) / m3; break;
      case 2: mant = (c - d * e) / m1; break;
      default: mant = ((m * c - 1.0) - (m * d - 1.0) * e) / m1; break;
    }
    return {mant * inv, -m * c};
  }
  // inside the support: both contributions are order-one
  double v;
  switch (order) {
    case 0: v = conv_antideriv(m, a) - conv_antideriv(m, b); break;
    case 1: v = conv_kernel(m, a) - conv_kernel(m, b); break;
    case 2: v = conv_kernel_d1(m, a) - conv_kernel_d1(m, b); break;
    default: v = conv_kernel_d2(m, a) - conv_kernel_d2(m, b); break;
  }
  return ScaledReal::from(v * inv);
}

}  // namespace detail

/// Smoothed point kernel Phi_{m,w,eta}(y) and its y-derivatives up to the
/// third (the smoothing is C^3; the fourth derivative jumps at y = w +- eta).
inline double phi_convolution(long m, double w, double eta, double y, int order) {
  return detail::phi_conv_scaled(m, w, eta, y, order).to_double();
}

struct BoxCoeffs {
  ScaledReal c1, c2, c3, c4;
};

/// The four constants of the modal solution for a box load.
inline BoxCoeffs box_coeffs(long m, const BoxLoad& load, const PlateConfig& cfg) {
  cfg.validate();
  load.validate(cfg);
  if (m < 1) throw std::domain_error("box_coeffs: m must be positive");
  const double sigma = cfg.sigma, om = 1.0 - sigma, op = 1.0 + sigma;
  const double md = static_cast<double>(m);
  const double z = md * cfg.ell;
  const double m2 = md * md;

  const FPair fp = f_pair(z, sigma);
  const ScaledReal chz = ScaledReal::cosh(z), shz = ScaledReal::sinh(z);
  const ScaledReal am = op * shz - (om * z) * chz;
  const ScaledReal bm = 2.0 * chz + (om * z) * shz;
  const ScaledReal abar = op * chz - (om * z) * shz;
  const ScaledReal bbar = 2.0 * shz + (om * z) * chz;

  auto conv = [&](double y, int order) {
    return detail::phi_conv_scaled(m, load.w, load.eta, y, order);
  };
  const ScaledReal vp = (sigma * m2) * conv(cfg.ell, 0) - conv(cfg.ell, 2);
  const ScaledReal wp = ((sigma - 2.0) * m2) * conv(cfg.ell, 1) + conv(cfg.ell, 3);
  const ScaledReal vm = (sigma * m2) * conv(-cfg.ell, 0) - conv(-cfg.ell, 2);
  const ScaledReal wm = ((sigma - 2.0) * m2) * conv(-cfg.ell, 1) + conv(-cfg.ell, 3);

  const ScaledReal v_sum = vp + vm, v_dif = vp - vm;
  const ScaledReal w_sum = wp + wm, w_dif = wp - wm;

  return {(md * (am * v_sum) + bm * w_dif) / (2.0 * md * m2 * om) / fp.f,
          (md * (abar * v_dif) + bbar * w_sum) / (2.0 * md * m2 * om) / fp.fbar,
          (md * (chz * v_dif) - shz * w_sum) / (2.0 * m2) / fp.fbar,
          (md * (shz * v_sum) - chz * w_dif) / (2.0 * m2) / fp.f};
}

/// One modal term of the box-load solution: the four constants bound to
/// their load, evaluated as a function of y.
struct ModalProfile {
  long m;
  BoxLoad load;
  BoxCoeffs coeffs;

  static ModalProfile make(long m, const BoxLoad& load, const PlateConfig& cfg) {
    return {m, load, box_coeffs(m, load, cfg)};
  }

  /// c1 cosh(my) + c2 sinh(my) + c3 y cosh(my) + c4 y sinh(my) + Phi(y);
  /// equals the [w-eta, w+eta] average of phi_m(y, .)/(4 m^3).
  double bracket(double y) const {
    const double md = static_cast<double>(m);
    const ScaledReal chy = ScaledReal::cosh(md * y), shy = ScaledReal::sinh(md * y);
    const ScaledReal sum = coeffs.c1 * chy + coeffs.c2 * shy + (coeffs.c3 * y) * chy +
                           (coeffs.c4 * y) * shy +
                           detail::phi_conv_scaled(m, load.w, load.eta, y, 0);
    return sum.to_double();
  }

  /// Full modal coefficient including the load prefactor.
  double operator()(double y) const {
    const double md = static_cast<double>(m);
    const double ma = md * load.alpha;
    return 2.0 / kPi * (std::sin(ma) / ma) * std::sin(md * load.rho) * bracket(y);
  }
};

inline double box_profile(long m, const BoxLoad& load, double y, const PlateConfig& cfg) {
  return ModalProfile::make(m, load, cfg).bracket(y);
}

/// Deflection under a box load at q, truncated with a certified tail bound.
/// Converges to green_eval at ((rho, w), q) as alpha, eta -> 0.
inline SeriesValue solve_box(const BoxLoad& load, const Point& q, double tol,
                             const PlateConfig& cfg, long mode_cap = kDefaultModeCap) {
  cfg.validate();
  load.validate(cfg);
  q.validate(cfg);
  if (!(tol > 0.0)) throw std::domain_error("solve_box: tol must be positive");
  if (detail::on_hinged_edge(q.x)) return {0.0, 0.0, 0};

  detail::KahanSum sum;
  for (long m = 1; m <= mode_cap + 1; ++m) {
    const double md = static_cast<double>(m);
    const ModalProfile profile = ModalProfile::make(m, load, cfg);
    const double bracket = profile.bracket(q.y);
    if (m > 1 && bracket >= 0.0) {
      // bracket_m = (load-average of phi_m)/(4 m^3), so 4 m^3 bracket_m plays
      // the role of phi_{M+1} in the green-series bound. A noise-negative
      // bracket (value below the double floor) skips the stop check instead
      // of stopping on a spurious zero bound.
      const double avg_phi = 4.0 * md * md * md * bracket;
      const double bound = detail::green_tail_bound(avg_phi, m - 1);
      if (bound <= tol) return {sum.value(), bound, m - 1};
    }
    sum.add(profile(q.y) * std::sin(md * q.x));
  }
  throw ToleranceError("solve_box: tolerance unreachable within mode cap");
}

/// Load sampled on a uniform tensor grid covering [0, pi] x [-ell, ell].
struct GridLoad {
  std::vector<double> xs;      // ascending, uniform
  std::vector<double> ys;      // ascending, uniform
  std::vector<double> values;  // values[j * xs.size() + i]

  double at(std::size_t i, std::size_t j) const { return values[j * xs.size() + i]; }

  void validate(const PlateConfig& cfg) const {
    if (xs.size() < 2 || ys.size() < 2) throw std::domain_error("GridLoad: grid too small");
    if (values.size() != xs.size() * ys.size())
      throw std::domain_error("GridLoad: node/value count mismatch");
    auto uniform = [](const std::vector<double>& v) {
      const double h = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
      if (!(h > 0.0)) return false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (std::fabs(v[i + 1] - v[i] - h) > 1e-9 * std::max(1.0, std::fabs(h))) return false;
      return true;
    };
    if (!uniform(xs) || !uniform(ys))
      throw std::domain_error("GridLoad: nodes must be ascending and uniformly spaced");
    const double tol_x = 1e-6, tol_y = 1e-6 * std::max(1.0, cfg.ell);
    if (std::fabs(xs.front()) > tol_x || std::fabs(xs.back() - kPi) > tol_x)
      throw std::domain_error("GridLoad: x nodes must cover [0, pi]");
    if (std::fabs(ys.front() + cfg.ell) > tol_y || std::fabs(ys.back() - cfg.ell) > tol_y)
      throw std::domain_error("GridLoad: y nodes must cover [-ell, ell]");
    for (double v : values)
      if (!std::isfinite(v)) throw std::domain_error("GridLoad: values must be finite");
  }
};

/// Parses "x,y,value" CSV (header required) into a tensor grid.
inline GridLoad grid_load_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::domain_error("GridLoad CSV: empty input");
  auto strip = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };
  {
    std::stringstream h(line);
    std::string a, b, c;
    std::getline(h, a, ',');
    std::getline(h, b, ',');
    std::getline(h, c, ',');
    if (strip(a) != "x" || strip(b) != "y" || strip(c) != "value")
      throw std::domain_error("GridLoad CSV: header must be x,y,value");
  }
  struct Row {
    double x, y, v;
  };
  std::vector<Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    std::stringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    try {
      rows.push_back({std::stod(a), std::stod(b), std::stod(c)});
    } catch (const std::exception&) {
      throw std::domain_error("GridLoad CSV: bad row at line " + std::to_string(line_no));
    }
  }
  if (rows.empty()) throw std::domain_error("GridLoad CSV: no data rows");

  std::vector<double> xs, ys;
  for (const Row& r : rows) {
    xs.push_back(r.x);
    ys.push_back(r.y);
  }
  auto dedup = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(xs);
  dedup(ys);

  GridLoad g;
  g.xs = xs;
  g.ys = ys;
  g.values.assign(xs.size() * ys.size(), std::numeric_limits<double>::quiet_NaN());
  std::map<double, std::size_t> xi, yi;
  for (std::size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = i;
  for (std::size_t j = 0; j < ys.size(); ++j) yi[ys[j]] = j;
  for (const Row& r : rows) g.values[yi[r.y] * xs.size() + xi[r.x]] = r.v;
  for (double v : g.values)
    if (std::isnan(v)) throw std::domain_error("GridLoad CSV: rows do not form a full tensor grid");
  return g;
}

namespace detail {

/// Composite Simpson weights for n uniformly spaced nodes (step h); an odd
/// interval count is finished with the 3/8 rule on the last three intervals.
inline std::vector<double> simpson_weights(std::size_t n, double h) {
  std::vector<double> w(n, 0.0);
  if (n < 2) throw std::domain_error("quadrature needs at least two nodes");
  if (n == 2) {
    w[0] = w[1] = h / 2.0;
    return w;
  }
  std::size_t simpson_end = n - 1;           // node index ending the Simpson part
  const bool tail38 = (n - 1) % 2 != 0;      // odd interval count
  if (tail38) {
    if (n < 4) {  // exactly 3 intervals
      const double c = 3.0 * h / 8.0;
      w[0] = c;
      w[1] = w[2] = 3.0 * c;
      w[3] = c;
      return w;
    }
    simpson_end = n - 4;
  }
  for (std::size_t i = 0; i <= simpson_end; ++i) {
    double c = (i == 0 || i == simpson_end) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    w[i] += c * h / 3.0;
  }
  if (tail38) {
    const double c = 3.0 * h / 8.0;
    w[n - 4] += c;
    w[n - 3] += 3.0 * c;
    w[n - 2] += 3.0 * c;
    w[n - 1] += c;
  }
  return w;
}

}  // namespace detail

/// u(p) = int G_p(q) f(q) dq by tensor Simpson quadrature over the load grid.
/// If `quad_error` is given, it receives a refinement-based estimate of the
/// quadrature error (NaN when the grid cannot be coarsened).
inline double solve_grid_load(const GridLoad& f, const Point& p, double tol,
                              const PlateConfig& cfg, double* quad_error = nullptr,
                              long mode_cap = kDefaultModeCap) {
  cfg.validate();
  f.validate(cfg);
  p.validate(cfg);
  if (!(tol > 0.0)) throw std::domain_error("solve_grid_load: tol must be positive");
  if (quad_error) *quad_error = std::numeric_limits<double>::quiet_NaN();
  if (detail::on_hinged_edge(p.x)) return 0.0;

  const std::size_t nx = f.xs.size(), ny = f.ys.size();
  const double s = p.y / cfg.ell;

  struct Mesh {
    std::vector<std::size_t> ix, iy;  // node indices into the full grid
    std::vector<double> wx, wy;
  };
  auto make_mesh = [&](std::size_t stride) {
    Mesh mesh;
    for (std::size_t i = 0; i < nx; i += stride) mesh.ix.push_back(i);
    for (std::size_t j = 0; j < ny; j += stride) mesh.iy.push_back(j);
    mesh.wx = detail::simpson_weights(mesh.ix.size(), (f.xs[1] - f.xs[0]) * stride);
    mesh.wy = detail::simpson_weights(mesh.iy.size(), (f.ys[1] - f.ys[0]) * stride);
    return mesh;
  };

  auto integrate = [&](const Mesh& mesh) {
    const std::size_t mnx = mesh.ix.size(), mny = mesh.iy.size();
    // weighted |f| row sums for the tail bound
    std::vector<double> wabs(mny);
    for (std::size_t j = 0; j < mny; ++j) {
      double a = 0.0;
      for (std::size_t i = 0; i < mnx; ++i)
        a += mesh.wx[i] * std::fabs(f.at(mesh.ix[i], mesh.iy[j]));
      wabs[j] = a;
    }
    detail::KahanSum sum;
    for (long m = 1; m <= mode_cap + 1; ++m) {
      const double md = static_cast<double>(m);
      std::vector<double> phi_row(mny);
      for (std::size_t j = 0; j < mny; ++j)
        phi_row[j] =
            phi_scaled({s, f.ys[mesh.iy[j]] / cfg.ell, md * cfg.ell}, cfg.sigma).value;
      if (m > 1) {
        double weighted = 0.0;
        for (std::size_t j = 0; j < mny; ++j) weighted += mesh.wy[j] * phi_row[j] * wabs[j];
        const double md1 = md - 1.0;
        const double bound = weighted / (2.0 * kPi) / (2.0 * md1 * md1);
        if (bound <= tol) return sum.value();
      }
      double im = 0.0;
      for (std::size_t j = 0; j < mny; ++j) {
        double xacc = 0.0;
        for (std::size_t i = 0; i < mnx; ++i)
          xacc += mesh.wx[i] * f.at(mesh.ix[i], mesh.iy[j]) * std::sin(md * f.xs[mesh.ix[i]]);
        im += mesh.wy[j] * phi_row[j] * xacc;
      }
      sum.add(im * std::sin(md * p.x) / (2.0 * kPi * md * md * md));
    }
    throw ToleranceError("solve_grid_load: tolerance unreachable within mode cap");
  };

  const double full = integrate(make_mesh(1));
  if (quad_error && (nx - 1) % 2 == 0 && (ny - 1) % 2 == 0 && nx >= 5 && ny >= 5)
    *quad_error = std::fabs(full - integrate(make_mesh(2)));
  return full;
}

}  // namespace phplate

#endif  // PHPLATE_LOADS_HPP
