// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "phplate/hyperbolic.hpp"

using namespace phplate;
using Catch::Approx;

namespace {
std::vector<double> log_z_grid(double lo, double hi, int n) {
  std::vector<double> zs(n);
  const double r = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) zs[i] = lo * std::exp(r * i);
  return zs;
}
}  // namespace

TEST_CASE("F pair: small-z limit F(z)/z -> 2(1+sigma)") {
  for (double sigma : {0.0, 0.2, 0.49}) {
    const double z = 1e-9;
    CHECK(f_pair(z, sigma).f.to_double() / z == Approx(2.0 * (1.0 + sigma)).epsilon(1e-12));
  }
}

TEST_CASE("F pair: Fbar - F = 2 z (1-sigma)") {
  // beyond z ~ 18 the difference drops under the ulp of F itself, which is
  // why the library carries it algebraically; the identity is testable on
  // the representable range only
  for (double sigma : {0.0, 0.2, 0.4}) {
    for (double z : log_z_grid(1e-8, 8.0, 40)) {
      const FPair fp = f_pair(z, sigma);
      CHECK((fp.fbar - fp.f).to_double() ==
            Approx(2.0 * z * (1.0 - sigma)).epsilon(1e-10));
    }
  }
}

TEST_CASE("F pair: frozen closed-form values at z=1, sigma=0.2") {
  // independent oracle: direct closed form in plain double arithmetic
  const double want_f = 1.6 * std::sinh(2.0) - 0.8;
  const double want_fbar = 1.6 * std::sinh(2.0) + 0.8;
  const FPair fp = f_pair(1.0, 0.2);
  CHECK(fp.f.to_double() == Approx(want_f).epsilon(1e-14));
  CHECK(fp.fbar.to_double() == Approx(want_fbar).epsilon(1e-14));
  CHECK(fp.f.to_double() == Approx(5.002976652555230).epsilon(1e-14));
  CHECK(fp.fbar.to_double() == Approx(6.602976652555230).epsilon(1e-14));
}

TEST_CASE("F derivatives: limits and frozen value") {
  for (double sigma : {0.0, 0.2, 0.49}) {
    const FDerivs fd = f_derivs(1e-10, sigma);
    CHECK(fd.f.to_double() == Approx(2.0 + 2.0 * sigma).epsilon(1e-9));
    CHECK(fd.fbar.to_double() == Approx(4.0).epsilon(1e-9));
    // 2F - F' -> -2(1+sigma) at z -> 0
    const FPair fp = f_pair(1e-10, sigma);
    CHECK((2.0 * fp.f - fd.f).to_double() == Approx(-2.0 * (1.0 + sigma)).epsilon(1e-9));
  }
  // closed form 3.2 cosh(2) - 0.8
  const double want = 3.2 * std::cosh(2.0) - 0.8;
  CHECK(f_derivs(1.0, 0.2).f.to_double() == Approx(want).epsilon(1e-14));
  CHECK(f_derivs(1.0, 0.2).f.to_double() == Approx(11.239026211467621).epsilon(1e-14));
}

TEST_CASE("F pair: ordering Fbar > F > 0 over the working range") {
  for (double sigma : {0.0, 0.2, 0.4, 0.49}) {
    for (double z : log_z_grid(1e-3, 1e5, 120)) {
      const FPair fp = f_pair(z, sigma);
      CHECK(fp.f.mant > 0.0);
      // the mantissas share one exponent, so ordering is a mantissa compare;
      // strictness holds through the exact difference 2 z (1-sigma) > 0
      CHECK(fp.fbar.logexp == fp.f.logexp);
      CHECK(fp.fbar.mant >= fp.f.mant);
      CHECK(2.0 * z * (1.0 - sigma) > 0.0);
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(f_pair(0.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(f_pair(-1.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(f_pair(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(f_pair(1.0, 1.0 - 1e-9), std::domain_error);
  CHECK_THROWS_AS(aux_values({0.0, 0.0, 1.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(aux_values({0.0, 1.5, 1.0}, 0.2), std::domain_error);
  CHECK_THROWS_AS(aux_values({0.0, 0.0, -2.0}, 0.2), std::domain_error);
}

TEST_CASE("aux values vanish as required at k = 0") {
  for (double z : {1e-3, 0.7, 14.0, 900.0}) {
    const AuxValues a = aux_values({0.0, 0.0, z}, 0.3);
    CHECK(a.eta == 0.0);
    CHECK(a.xi == 0.0);
    CHECK(a.eta_z == 0.0);
    CHECK(a.xi_z == 0.0);
  }
}

TEST_CASE("parity: eta, xi and their derivatives are odd; zeta, psi even") {
  for (double sigma : {0.0, 0.2, 0.4}) {
    for (double z : log_z_grid(1e-3, 50.0, 25)) {
      for (double k : {0.1, 0.33, 0.9, 1.0}) {
        const AuxValues ap = aux_values({0.0, k, z}, sigma);
        const AuxValues am = aux_values({0.0, -k, z}, sigma);
        CHECK(am.zeta == Approx(ap.zeta).epsilon(1e-12));
        CHECK(am.psi == Approx(ap.psi).epsilon(1e-12));
        CHECK(am.zeta_z == Approx(ap.zeta_z).epsilon(1e-12));
        CHECK(am.psi_z == Approx(ap.psi_z).epsilon(1e-12));
        CHECK(am.eta == Approx(-ap.eta).epsilon(1e-12));
        CHECK(am.xi == Approx(-ap.xi).epsilon(1e-12));
        CHECK(am.eta_z == Approx(-ap.eta_z).epsilon(1e-12));
        CHECK(am.xi_z == Approx(-ap.xi_z).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("psi + xi cross-check against its single-frequency form") {
  // psi + xi = (2 + (1-s)(1-k) z) cosh((1+k)z) + (-(1+s) + z(1-s)(1-k)) sinh((1+k)z)
  for (double sigma : {0.0, 0.2, 0.4}) {
    for (double z : log_z_grid(1e-3, 3.0, 12)) {
      for (double k : {-1.0, -0.4, 0.0, 0.37, 1.0}) {
        const AuxValues a = aux_values({0.0, k, z}, sigma);
        const double lhs = a.scaled(a.psi) + a.scaled(a.xi);
        const double om = 1.0 - sigma, op = 1.0 + sigma;
        const double rhs = (2.0 + om * (1.0 - k) * z) * std::cosh((1.0 + k) * z) +
                           (-op + z * om * (1.0 - k)) * std::sinh((1.0 + k) * z);
        CHECK(lhs == Approx(rhs).epsilon(1e-11).margin(1e-280));
      }
    }
  }
}

TEST_CASE("aux derivative formulas agree with finite differences in z") {
  for (double sigma : {0.0, 0.2, 0.4}) {
    for (double z : {0.05, 0.9, 4.0}) {
      for (double k : {-0.8, 0.0, 0.6, 1.0}) {
        const double h = 1e-6 * (1.0 + z);
        const AuxValues lo = aux_values({0.0, k, z - h}, sigma);
        const AuxValues hi = aux_values({0.0, k, z + h}, sigma);
        const AuxValues mid = aux_values({0.0, k, z}, sigma);
        auto fd = [&](double f_lo, double s_lo, double f_hi, double s_hi) {
          return (f_hi * std::exp(s_hi) - f_lo * std::exp(s_lo)) / (2.0 * h);
        };
        CHECK(mid.scaled(mid.zeta_z) ==
              Approx(fd(lo.zeta, lo.log_scale, hi.zeta, hi.log_scale)).epsilon(1e-7));
        CHECK(mid.scaled(mid.psi_z) ==
              Approx(fd(lo.psi, lo.log_scale, hi.psi, hi.log_scale)).epsilon(1e-7));
        CHECK(mid.scaled(mid.eta_z) ==
              Approx(fd(lo.eta, lo.log_scale, hi.eta, hi.log_scale))
                  .epsilon(1e-7)
                  .margin(1e-12));
        CHECK(mid.scaled(mid.xi_z) ==
              Approx(fd(lo.xi, lo.log_scale, hi.xi, hi.log_scale))
                  .epsilon(1e-7)
                  .margin(1e-12));
      }
    }
  }
}

TEST_CASE("scaled-representation invariant over the full working range") {
  // mantissas stay inside [1e-300, 1e300] (or are exactly zero) and the
  // common scale never produces NaN, for z up to 1e5
  for (double sigma : {0.0, 0.49}) {
    for (double z : log_z_grid(1e-3, 1e5, 161)) {
      for (double k : {-1.0, -0.5, 0.0, 0.01, 0.99, 1.0}) {
        const AuxValues a = aux_values({0.0, k, z}, sigma);
        for (double v : {a.zeta, a.eta, a.psi, a.xi, a.zeta_z, a.eta_z, a.psi_z, a.xi_z}) {
          REQUIRE(std::isfinite(v));
          REQUIRE(std::fabs(v) <= 1e300);
          if (v != 0.0) REQUIRE(std::fabs(v) >= 1e-300);
        }
        REQUIRE(std::isfinite(a.log_scale));
      }
    }
  }
}

TEST_CASE("psi stays positive on [-1,1] x (0,50]") {
  for (double sigma : {0.0, 0.2, 0.4, 0.49}) {
    for (double z : log_z_grid(1e-3, 50.0, 60)) {
      for (int ik = 0; ik <= 40; ++ik) {
        const double k = -1.0 + ik * 0.05;
        const AuxValues a = aux_values({0.0, k, z}, sigma);
        REQUIRE(a.psi > 0.0);
      }
    }
  }
}
