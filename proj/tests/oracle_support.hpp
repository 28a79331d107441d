// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Test-only oracles: adaptive Gauss-Kronrod quadrature, Gauss-Legendre rules,
// quad-precision (__float128) evaluations of the modal profiles, and the
// second-order finite-difference stencils used by the BVP residual checks.
// Everything here is independent of the production evaluation paths.

#ifndef PHPLATE_TESTS_ORACLE_SUPPORT_HPP
#define PHPLATE_TESTS_ORACLE_SUPPORT_HPP

#include <quadmath.h>

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod 15(7).
// ---------------------------------------------------------------------------

namespace gk {
// Kronrod-15 nodes/weights on [-1, 1] plus the embedded Gauss-7 weights.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> kWeightsK = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kWeightsG = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
}  // namespace gk

struct GKResult {
  double value;
  double error;
};

template <class F>
GKResult gauss_kronrod_15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double sum_k = 0.0, sum_g = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double x = gk::kNodes[i] * h;
    const double fv = f(c - x) + f(c + x);
    sum_k += gk::kWeightsK[i] * fv;
    if (i % 2 == 1) sum_g += gk::kWeightsG[i / 2] * fv;
  }
  const double f0 = f(c);
  sum_k += gk::kWeightsK[7] * f0;
  sum_g += gk::kWeightsG[3] * f0;
  return {sum_k * h, std::fabs((sum_k - sum_g) * h)};
}

/// Adaptive bisection until the summed Kronrod error estimate is below tol.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-14, int max_depth = 40) {
  struct Seg {
    double a, b;
    int depth;
  };
  std::vector<Seg> stack{{a, b, 0}};
  double total = 0.0;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    const GKResult r = gauss_kronrod_15(f, s.a, s.b);
    if (r.error <= tol * std::max(1.0, std::fabs(r.value)) || s.depth >= max_depth) {
      total += r.value;
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    stack.push_back({s.a, mid, s.depth + 1});
    stack.push_back({mid, s.b, s.depth + 1});
  }
  return total;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence.
// ---------------------------------------------------------------------------

struct GLRule {
  std::vector<double> nodes, weights;  // on [-1, 1]
};

inline GLRule gauss_legendre(int n) {
  GLRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

template <class F>
double gl_integrate(F&& f, double a, double b, const GLRule& rule) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(c + h * rule.nodes[i]);
  return sum * h;
}

// ---------------------------------------------------------------------------
// Quad-precision profile evaluations.
// ---------------------------------------------------------------------------

using quad = __float128;

inline double qd(quad v) { return static_cast<double>(v); }

struct QBox {
  quad rho, w, alpha, eta;
};

inline quad q_kernel(long m, quad u) {
  const quad d = m * fabsq(u);
  return (1.0Q + d) * expq(-d) / (4.0Q * m * m * m);
}
inline quad q_kernel_d1(long m, quad u) { return -u * expq(-m * fabsq(u)) / (4.0Q * m); }
inline quad q_kernel_d2(long m, quad u) {
  const quad d = m * fabsq(u);
  return (d - 1.0Q) * expq(-d) / (4.0Q * m);
}
inline quad q_antideriv(long m, quad u) {
  const quad au = fabsq(u);
  const quad v = (2.0Q / m - expq(-m * au) * (au + 2.0Q / m)) / (4.0Q * m * m * m);
  return u >= 0.0Q ? v : -v;
}

inline quad q_phi_conv(long m, quad w, quad eta, quad y, int order) {
  const quad a = y - w + eta, b = y - w - eta;
  const quad inv = 1.0Q / (2.0Q * eta);
  switch (order) {
    case 0: return (q_antideriv(m, a) - q_antideriv(m, b)) * inv;
    case 1: return (q_kernel(m, a) - q_kernel(m, b)) * inv;
    case 2: return (q_kernel_d1(m, a) - q_kernel_d1(m, b)) * inv;
    default: return (q_kernel_d2(m, a) - q_kernel_d2(m, b)) * inv;
  }
}

inline quad q_F(quad z, quad sigma) { return (3.0Q + sigma) / 2.0Q * sinhq(2.0Q * z) - z * (1.0Q - sigma); }
inline quad q_Fb(quad z, quad sigma) { return (3.0Q + sigma) / 2.0Q * sinhq(2.0Q * z) + z * (1.0Q - sigma); }

/// Modal coefficient of the box-load solution (the bracket of the modal
/// profile), in quad precision straight from the defining constants.
struct QProfile {
  long m;
  quad ell, sigma;
  QBox load;
  quad c1, c2, c3, c4;

  QProfile(long m_in, double ell_in, double sigma_in, double rho, double w, double alpha,
           double eta)
      : m(m_in), ell(ell_in), sigma(sigma_in), load{rho, w, alpha, eta} {
    const quad z = m * ell;
    const quad om = 1.0Q - sigma, op = 1.0Q + sigma;
    const quad ch = coshq(z), sh = sinhq(z);
    const quad am = op * sh - om * z * ch;
    const quad bm = 2.0Q * ch + om * z * sh;
    const quad abar = op * ch - om * z * sh;
    const quad bbar = 2.0Q * sh + om * z * ch;
    auto conv = [&](quad y, int order) { return q_phi_conv(m, load.w, load.eta, y, order); };
    const quad vp = sigma * m * m * conv(ell, 0) - conv(ell, 2);
    const quad wp = (sigma - 2.0Q) * m * m * conv(ell, 1) + conv(ell, 3);
    const quad vm = sigma * m * m * conv(-ell, 0) - conv(-ell, 2);
    const quad wm = (sigma - 2.0Q) * m * m * conv(-ell, 1) + conv(-ell, 3);
    const quad f = q_F(z, sigma), fb = q_Fb(z, sigma);
    c1 = (m * am * (vp + vm) + bm * (wp - wm)) / (2.0Q * m * m * m * om * f);
    c2 = (m * abar * (vp - vm) + bbar * (wp + wm)) / (2.0Q * m * m * m * om * fb);
    c3 = (m * ch * (vp - vm) - sh * (wp + wm)) / (2.0Q * m * m * fb);
    c4 = (m * sh * (vp + vm) - ch * (wp - wm)) / (2.0Q * m * m * f);
  }

  /// Full modal profile varphi_m(y) including the load prefactor.
  quad operator()(quad y) const {
    const quad z = m * y;
    const quad bracket = c1 * coshq(z) + c2 * sinhq(z) + c3 * y * coshq(z) +
                         c4 * y * sinhq(z) + q_phi_conv(m, load.w, load.eta, y, 0);
    const quad ma = m * load.alpha;
    return 2.0Q / M_PIq * (sinq(ma) / ma) * sinq(m * load.rho) * bracket;
  }

  quad forcing(quad y) const {
    if (fabsq(y - load.w) > load.eta) return 0.0Q;
    const quad ma = m * load.alpha;
    return (sinq(ma) / ma) * sinq(m * load.rho) / (M_PIq * load.eta);
  }
};

/// phi_m(y, w) in quad precision from the explicit mode formula.
inline quad q_phi_m(long m, quad y, quad w, quad ell, quad sigma) {
  const quad z = m * ell, r = m * y;
  const quad om = 1.0Q - sigma, op = 1.0Q + sigma;
  const quad chr = coshq(r), shr = sinhq(r), chz = coshq(z), shz = sinhq(z);
  const quad zeta = (4.0Q / om - z * op) * chr * chz + (op * op / om + 2.0Q * z) * chr * shz -
                    2.0Q * r * shr * chz + r * op * shr * shz;
  const quad eta = r * op * chr * chz - 2.0Q * r * chr * shz +
                   (op * op / om + 2.0Q * z) * shr * chz + (4.0Q / om - z * op) * shr * shz;
  const quad psi = (2.0Q + om * z) * chr * chz + (-op + z * om) * chr * shz -
                   r * om * shr * chz - r * om * shr * shz;
  const quad xi = -r * om * chr * chz - r * om * chr * shz + (-op + z * om) * shr * chz +
                  (2.0Q + om * z) * shr * shz;
  const quad f = q_F(z, sigma), fb = q_Fb(z, sigma);
  const quad mw = m * w;
  const quad g = coshq(mw) * (zeta / f + z * psi / f - mw * xi / fb) +
                 sinhq(mw) * (eta / fb + z * xi / fb - mw * psi / f);
  const quad d = fabsq(r - mw);
  return expq(-z) * g + (1.0Q + d) * expq(-d);
}

// ---------------------------------------------------------------------------
// Second-order finite-difference stencils (quad arithmetic).
// ---------------------------------------------------------------------------

template <class F>
quad fd4_central(F&& f, quad y, quad h) {
  return (f(y - 2.0Q * h) - 4.0Q * f(y - h) + 6.0Q * f(y) - 4.0Q * f(y + h) + f(y + 2.0Q * h)) /
         (h * h * h * h);
}

template <class F>
quad fd2_central(F&& f, quad y, quad h) {
  return (f(y - h) - 2.0Q * f(y) + f(y + h)) / (h * h);
}

/// One-sided stencils of second order; `dir` = +1 takes nodes to the right.
template <class F>
quad fd1_onesided(F&& f, quad y, quad h, int dir) {
  const quad d = dir;
  return d * (-3.0Q * f(y) + 4.0Q * f(y + d * h) - f(y + 2.0Q * d * h)) / (2.0Q * h);
}

template <class F>
quad fd2_onesided(F&& f, quad y, quad h, int dir) {
  const quad d = dir;
  return (2.0Q * f(y) - 5.0Q * f(y + d * h) + 4.0Q * f(y + 2.0Q * d * h) -
          f(y + 3.0Q * d * h)) /
         (h * h);
}

template <class F>
quad fd3_onesided(F&& f, quad y, quad h, int dir) {
  const quad d = dir;
  return d *
         (-2.5Q * f(y) + 9.0Q * f(y + d * h) - 12.0Q * f(y + 2.0Q * d * h) +
          7.0Q * f(y + 3.0Q * d * h) - 1.5Q * f(y + 4.0Q * d * h)) /
         (h * h * h);
}

// ---------------------------------------------------------------------------
// Quad evaluation of the varsigma pair from its defining assembly.
// ---------------------------------------------------------------------------

struct QVarsigma {
  quad assembled, assembled_bar;
};

inline QVarsigma q_varsigma(quad z, quad sigma) {
  const quad om = 1.0Q - sigma, op = 1.0Q + sigma, tp = 3.0Q + sigma;
  const quad f = q_F(z, sigma), fb = q_Fb(z, sigma);
  const quad fp = tp * coshq(2.0Q * z) - om;
  const quad fbp = tp * coshq(2.0Q * z) + om;
  const quad ch = coshq(z), sh = sinhq(z);
  QVarsigma v;
  v.assembled = ch * (2.0Q * op * op / om * f + fp * (z * tp - 4.0Q / om)) +
                sh * (8.0Q / om * f - fp * (z * tp + op * op / om));
  v.assembled_bar = ch * (8.0Q / om * fb - fbp * (z * tp + op * op / om)) +
                    sh * (2.0Q * op * op / om * fb + fbp * (z * tp - 4.0Q / om));
  return v;
}

}  // namespace oracle

#endif  // PHPLATE_TESTS_ORACLE_SUPPORT_HPP
