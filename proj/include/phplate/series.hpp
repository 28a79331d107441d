// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef PHPLATE_SERIES_HPP
#define PHPLATE_SERIES_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "phplate/detail/parallel.hpp"
#include "phplate/mode.hpp"
#include "phplate/plate.hpp"

namespace phplate {

inline constexpr long kDefaultModeCap = 1'000'000;

/// A truncated series sum with a certified bound on the dropped tail.
/// Refining the tolerance shrinks tail_bound monotonically, and any
/// re-evaluation with more terms moves the value by at most tail_bound.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  long terms_used = 0;
};

namespace detail {

/// Neumaier-compensated accumulator. Tolerances down to 1e-13 can demand
/// ~1e6 modes; a naive running sum would accumulate more roundoff than the
/// certified truncation bound itself.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    comp += (std::fabs(sum) >= std::fabs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

/// Tail of sum_{m > M} phi_m / (2 pi m^3) given phi_{M+1}: the modes decrease
/// in m and |sin| <= 1, so the tail is below phi_{M+1}/(2 pi) * 1/(2 M^2)
/// (integral comparison for sum m^{-3}).
inline double green_tail_bound(double phi_next, long m_used) {
  const double md = static_cast<double>(m_used);
  return phi_next / (2.0 * kPi) / (2.0 * md * md);
}

inline bool on_hinged_edge(double x) { return x == 0.0 || x == kPi; }

}  // namespace detail

/// Green function G(p, q) = sum_m phi_m(y, w) sin(m rho) sin(m x) / (2 pi m^3)
/// truncated once the certified tail drops below `tol`.
inline SeriesValue green_eval(const Point& p, const Point& q, double tol, const PlateConfig& cfg,
                              long mode_cap = kDefaultModeCap) {
  cfg.validate();
  p.validate(cfg);
  q.validate(cfg);
  if (!(tol > 0.0)) throw std::domain_error("green_eval: tol must be positive");
  // Every term carries sin(m x) sin(m rho); exactly on a hinged edge the sum
  // is identically zero. No snapping for nearby points.
  if (detail::on_hinged_edge(p.x) || detail::on_hinged_edge(q.x)) return {0.0, 0.0, 0};

  const double s = p.y / cfg.ell, k = q.y / cfg.ell;
  detail::KahanSum sum;
  for (long m = 1; m <= mode_cap + 1; ++m) {
    const double md = static_cast<double>(m);
    const double phi = phi_scaled({s, k, md * cfg.ell}, cfg.sigma).value;
    if (m > 1) {
      const double bound = detail::green_tail_bound(phi, m - 1);
      if (bound <= tol) return {sum.value(), bound, m - 1};
    }
    sum.add(phi / (2.0 * kPi * md * md * md) * std::sin(md * p.x) * std::sin(md * q.x));
  }
  throw ToleranceError("green_eval: tolerance unreachable within mode cap");
}

/// Evaluation grid: nx interior x nodes, ny inclusive y nodes.
struct GridSpec {
  int nx = 101;
  int ny = 41;
};

inline std::vector<double> interior_x_nodes(int nx) {
  std::vector<double> xs(nx);
  for (int i = 0; i < nx; ++i) xs[i] = kPi * static_cast<double>(i + 1) / (nx + 1);
  return xs;
}

inline std::vector<double> inclusive_y_nodes(int ny, double ell) {
  std::vector<double> ys(ny);
  if (ny == 1) {
    ys[0] = 0.0;
    return ys;
  }
  for (int j = 0; j < ny; ++j)
    ys[j] = -ell + 2.0 * ell * static_cast<double>(j) / (ny - 1);
  return ys;
}

struct GreenField {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<SeriesValue> nodes;  // nodes[j * xs.size() + i]
};

/// G_p over a q-grid; the phi_m row values are shared across the x columns.
inline GreenField green_grid(const Point& p, const GridSpec& grid, double tol,
                             const PlateConfig& cfg, long mode_cap = kDefaultModeCap) {
  cfg.validate();
  p.validate(cfg);
  if (grid.nx < 1 || grid.ny < 1) throw std::domain_error("green_grid: empty grid");
  if (!(tol > 0.0)) throw std::domain_error("green_grid: tol must be positive");
  GreenField field;
  field.xs = interior_x_nodes(grid.nx);
  field.ys = inclusive_y_nodes(grid.ny, cfg.ell);
  field.nodes.assign(static_cast<std::size_t>(grid.nx) * grid.ny, SeriesValue{});

  if (detail::on_hinged_edge(p.x)) return field;

  const double s = p.y / cfg.ell;
  std::vector<int> row_failed(grid.ny, 0);
  detail::parallel_for(static_cast<std::size_t>(grid.ny), [&](std::size_t j) {
    const double k = field.ys[j] / cfg.ell;
    SeriesValue* row = field.nodes.data() + j * field.xs.size();
    std::vector<detail::KahanSum> sums(field.xs.size());
    long used = 0;
    double tail = 0.0;
    for (long m = 1; m <= mode_cap + 1; ++m) {
      const double md = static_cast<double>(m);
      const double phi = phi_scaled({s, k, md * cfg.ell}, cfg.sigma).value;
      if (m > 1) {
        tail = detail::green_tail_bound(phi, m - 1);
        if (tail <= tol) {
          used = m - 1;
          break;
        }
      }
      const double c = phi / (2.0 * kPi * md * md * md) * std::sin(md * p.x);
      for (std::size_t i = 0; i < field.xs.size(); ++i)
        sums[i].add(c * std::sin(md * field.xs[i]));
    }
    if (used == 0) {
      row_failed[j] = 1;
      return;
    }
    for (std::size_t i = 0; i < field.xs.size(); ++i) {
      row[i].value = sums[i].value();
      row[i].tail_bound = tail;
      row[i].terms_used = used;
    }
  });
  for (int j = 0; j < grid.ny; ++j)
    if (row_failed[j]) throw ToleranceError("green_grid: tolerance unreachable within mode cap");
  return field;
}

/// Result of the four-variable positivity sweep over (x, y, rho, w).
struct ScanReport {
  long modes = 0;                    // shared truncation order M
  double min_value = 0.0;            // smallest node value
  double min_margin = 0.0;           // smallest value - tail_bound
  std::array<double, 4> argmin{};    // x, y, rho, w attaining min_margin
  std::uint64_t evaluations = 0;
  bool certified = false;            // min_margin > 0 with every node above its tail
};

/// Scans G(x, y, rho, w) on nx interior x/rho nodes and ny inclusive y/w
/// nodes. The truncation order doubles until every node clears its own
/// certified tail bound (or m_max is hit).
inline ScanReport positivity_scan(const PlateConfig& cfg, int nx = 101, int ny = 41,
                                  long m_init = 400, long m_max = 6400) {
  cfg.validate();
  const std::vector<double> xs = interior_x_nodes(nx);
  const std::vector<double> ys = inclusive_y_nodes(ny, cfg.ell);

  ScanReport report;
  for (long m_order = m_init; m_order <= m_max; m_order *= 2) {
    // sin table: sx[i][m-1] = sin(m x_i)
    std::vector<std::vector<double>> sx(nx, std::vector<double>(m_order));
    for (int i = 0; i < nx; ++i)
      for (long m = 1; m <= m_order; ++m)
        sx[i][m - 1] = std::sin(static_cast<double>(m) * xs[i]);

    struct BlockResult {
      double min_value, min_margin;
      int arg_i, arg_r;
    };
    const std::size_t blocks = static_cast<std::size_t>(ny) * ny;
    std::vector<BlockResult> results(blocks);

    detail::parallel_for(blocks, [&](std::size_t b) {
      const int j = static_cast<int>(b / ny);
      const int t = static_cast<int>(b % ny);
      const double k = ys[j] / cfg.ell, s = ys[t] / cfg.ell;
      std::vector<double> v(m_order);
      for (long m = 1; m <= m_order; ++m) {
        const double md = static_cast<double>(m);
        v[m - 1] = phi_scaled({s, k, md * cfg.ell}, cfg.sigma).value /
                   (2.0 * kPi * md * md * md);
      }
      const double phi_next =
          phi_scaled({s, k, static_cast<double>(m_order + 1) * cfg.ell}, cfg.sigma).value;
      const double tail = detail::green_tail_bound(phi_next, m_order);

      std::vector<double> row(nx);
      BlockResult best{0.0, 0.0, -1, -1};
      bool first = true;
      std::vector<double> ci(m_order);
      for (int i = 0; i < nx; ++i) {
        const double* si = sx[i].data();
        for (long m = 0; m < m_order; ++m) ci[m] = v[m] * si[m];
        for (int r = 0; r < nx; ++r) {
          const double* sr = sx[r].data();
          double acc = 0.0;
          for (long m = 0; m < m_order; ++m) acc += ci[m] * sr[m];
          row[r] = acc;
        }
        for (int r = 0; r < nx; ++r) {
          const double margin = row[r] - tail;
          if (first || margin < best.min_margin) {
            best.min_margin = margin;
            best.arg_i = i;
            best.arg_r = r;
          }
          if (first || row[r] < best.min_value) best.min_value = row[r];
          first = false;
        }
      }
      results[b] = best;
    });

    report.modes = m_order;
    report.evaluations = blocks * static_cast<std::uint64_t>(nx) * nx;
    bool first = true;
    for (std::size_t b = 0; b < blocks; ++b) {
      const BlockResult& r = results[b];
      const int j = static_cast<int>(b / ny), t = static_cast<int>(b % ny);
      if (first || r.min_margin < report.min_margin) {
        report.min_margin = r.min_margin;
        report.argmin = {xs[r.arg_i], ys[j], xs[r.arg_r], ys[t]};
      }
      if (first || r.min_value < report.min_value) report.min_value = r.min_value;
      first = false;
    }
    report.certified = report.min_margin > 0.0 && report.min_value > 0.0;
    if (report.certified) return report;
  }
  return report;
}

}  // namespace phplate

#endif  // PHPLATE_SERIES_HPP
