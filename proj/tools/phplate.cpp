// Copyright (c) 2026 the phplate authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phplate/io.hpp"
#include "phplate/loads.hpp"
#include "phplate/mode.hpp"
#include "phplate/plate.hpp"
#include "phplate/series.hpp"
#include "phplate/verify.hpp"

namespace {

using phplate::io::fmt17;

constexpr int kExitDomainError = 2;
constexpr int kExitToleranceUnreachable = 3;
constexpr int kExitVerificationFailure = 4;

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);  // '\n' line endings on every platform
      if (!file) throw std::domain_error("cannot open output file: " + path);
      stream = &file;
    }
  }
  std::ostream& out() { return *stream; }
};

struct CommonOpts {
  double ell = 1.0;
  double sigma = 0.2;
  bool experimental_sigma = false;
  double tol = 1e-8;
  long mode_cap = phplate::kDefaultModeCap;
  std::string out_path;
  std::string format = "csv";

  phplate::PlateConfig config() const {
    phplate::PlateConfig cfg{ell, sigma, experimental_sigma};
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_tol = true) {
  cmd->add_option("--ell", o.ell, "plate half-width (domain (0,pi) x (-ell,ell))");
  cmd->add_option("--sigma", o.sigma, "Poisson ratio in [0,1)");
  cmd->add_flag("--experimental-sigma", o.experimental_sigma,
                "admit sigma in (-1,0) without positivity guarantees");
  if (with_tol) {
    cmd->add_option("--tol", o.tol, "certified series tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--mode-cap", o.mode_cap, "maximum number of series modes");
  }
  cmd->add_option("--out", o.out_path, "output path (default stdout)");
  cmd->add_option("--format", o.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit_rows(Output& output, const std::string& format,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj;
      for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
      arr.push_back(obj);
    }
    output.out() << arr.dump(2) << "\n";
    return;
  }
  std::ostream& os = output.out();
  for (std::size_t c = 0; c < columns.size(); ++c)
    os << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << fmt17(row[c]) << (c + 1 < row.size() ? "," : "\n");
  }
}

int run_phi(const CommonOpts& o, long m, const std::vector<double>& at, int grid_n) {
  const phplate::PlateConfig cfg = o.config();
  Output output(o.out_path);
  std::vector<std::vector<double>> rows;
  if (grid_n > 0) {
    const std::vector<double> ys = phplate::inclusive_y_nodes(grid_n, cfg.ell);
    for (double y : ys)
      for (double w : ys) rows.push_back({y, w, phplate::phi_m(m, y, w, cfg)});
  } else {
    if (at.size() != 2) throw std::domain_error("phi: pass --at y,w or --grid N");
    rows.push_back({at[0], at[1], phplate::phi_m(m, at[0], at[1], cfg)});
  }
  emit_rows(output, o.format, {"y", "w", "value"}, rows);
  return 0;
}

int run_green(const CommonOpts& o, double rho, double w, const std::vector<double>& at,
              int grid_n) {
  const phplate::PlateConfig cfg = o.config();
  const phplate::Point p{rho, w};
  Output output(o.out_path);
  std::vector<std::vector<double>> rows;
  if (grid_n > 0) {
    const auto field = phplate::green_grid(p, {grid_n, grid_n}, o.tol, cfg, o.mode_cap);
    for (std::size_t j = 0; j < field.ys.size(); ++j)
      for (std::size_t i = 0; i < field.xs.size(); ++i) {
        const auto& node = field.nodes[j * field.xs.size() + i];
        rows.push_back({field.xs[i], field.ys[j], node.value, node.tail_bound});
      }
  } else {
    if (at.size() != 2) throw std::domain_error("green: pass --at x,y or --grid N");
    const auto v = phplate::green_eval(p, {at[0], at[1]}, o.tol, cfg, o.mode_cap);
    rows.push_back({at[0], at[1], v.value, v.tail_bound});
  }
  emit_rows(output, o.format, {"x", "y", "value", "tail_bound"}, rows);
  return 0;
}

int run_solve(const CommonOpts& o, const std::string& load_kind, double rho, double w,
              double alpha, double eta, const std::string& file,
              const std::vector<double>& at) {
  const phplate::PlateConfig cfg = o.config();
  if (at.size() != 2) throw std::domain_error("solve: pass --at x,y");
  const phplate::Point q{at[0], at[1]};
  Output output(o.out_path);
  std::vector<std::vector<double>> rows;
  if (load_kind == "box") {
    const phplate::BoxLoad load{rho, w, alpha, eta};
    const auto v = phplate::solve_box(load, q, o.tol, cfg, o.mode_cap);
    rows.push_back({q.x, q.y, v.value, v.tail_bound});
  } else {
    std::ifstream in(file);
    if (!in) throw std::domain_error("solve: cannot open load file: " + file);
    const phplate::GridLoad load = phplate::grid_load_from_csv(in);
    double quad_error = 0.0;
    const double v = phplate::solve_grid_load(load, q, o.tol, cfg, &quad_error, o.mode_cap);
    rows.push_back({q.x, q.y, v, quad_error});
  }
  emit_rows(output, o.format, {"x", "y", "value", "error"}, rows);
  return 0;
}

int run_verify(const CommonOpts& o, bool all, const std::vector<std::string>& id_names,
               int n_max) {
  const phplate::PlateConfig cfg = o.config();
  phplate::verify::VerifyGrid grid;
  grid.n_max = n_max;
  std::vector<phplate::verify::InequalityId> ids;
  if (all || id_names.empty()) {
    ids.assign(phplate::verify::kAllInequalityIds.begin(),
               phplate::verify::kAllInequalityIds.end());
  } else {
    for (const auto& name : id_names) {
      const auto id = phplate::verify::inequality_from_string(name);
      if (!id) throw std::domain_error("verify: unknown inequality id: " + name);
      ids.push_back(*id);
    }
  }
  std::vector<phplate::verify::MarginReport> reports;
  reports.reserve(ids.size());
  for (auto id : ids) reports.push_back(phplate::verify::check(id, grid, cfg));

  Output output(o.out_path);
  output.out() << phplate::io::reports_json(reports).dump(2) << "\n";
  for (const auto& r : reports)
    if (!r.passed()) return kExitVerificationFailure;
  return 0;
}

int run_constants(const CommonOpts& o, int n_max) {
  Output output(o.out_path);
  const auto rows = phplate::verify::constants_table(n_max);
  auto cn_ok = [&](const phplate::verify::ConstantsRow& r) {
    bool ok = true;
    if (r.n >= 2) ok = ok && r.c_n < 1.0 / r.n;
    if (r.n >= 3) ok = ok && r.x_n < phplate::kPi / (r.n + 2);
    if (r.n >= 3 && r.n % 2 == 1) ok = ok && r.cbar_n < std::sin(phplate::kPi / (r.n + 3));
    return ok;
  };
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"N", r.n},
                     {"C_N", r.c_n},
                     {"x_N", r.x_n},
                     {"Cbar_N", r.cbar_n},
                     {"xbar_N", r.xbar_n},
                     {"bounds_ok", cn_ok(r)}});
    output.out() << arr.dump(2) << "\n";
  } else {
    std::ostream& os = output.out();
    os << "N,C_N,x_N,Cbar_N,xbar_N,bounds_ok\n";
    for (const auto& r : rows)
      os << r.n << "," << fmt17(r.c_n) << "," << fmt17(r.x_n) << "," << fmt17(r.cbar_n) << ","
         << fmt17(r.xbar_n) << "," << (cn_ok(r) ? 1 : 0) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phplate: partially hinged plate Green function evaluator and verifier"};
  app.require_subcommand(1);

  CommonOpts phi_opts, green_opts, solve_opts, verify_opts, const_opts;
  long phi_m_index = 1;
  std::vector<double> phi_at, green_at, solve_at;
  int phi_grid = 0, green_grid_n = 0;
  double green_rho = phplate::kPi / 2.0, green_w = 0.0;
  std::string solve_load = "box", solve_file;
  double solve_rho = phplate::kPi / 2.0, solve_w = 0.0, solve_alpha = 1e-4, solve_eta = 1e-4;
  bool verify_all = false;
  std::vector<std::string> verify_ids;
  int verify_n_max = 40, constants_n_max = 40;

  double phi_y = 0.0, phi_w = 0.0;
  CLI::App* phi = app.add_subcommand("phi", "evaluate the mode profile phi_m(y, w)");
  phi->add_option("--m", phi_m_index, "mode index (>= 1)")->required();
  phi->add_option("--at", phi_at, "evaluation point y,w")->delimiter(',')->expected(2);
  CLI::Option* phi_y_opt = phi->add_option("--y", phi_y, "evaluation y (with --w)");
  CLI::Option* phi_w_opt = phi->add_option("--w", phi_w, "load position w (with --y)");
  phi->add_option("--grid", phi_grid, "emit an N x N (y, w) surface");
  add_common(phi, phi_opts, false);

  CLI::App* green = app.add_subcommand("green", "evaluate the Green function G((rho,w),(x,y))");
  green->add_option("--rho", green_rho, "load x-position rho")->required();
  green->add_option("--w", green_w, "load y-position w")->required();
  green->add_option("--at", green_at, "evaluation point x,y")->delimiter(',')->expected(2);
  green->add_option("--grid", green_grid_n, "emit an N x N (x, y) field");
  add_common(green, green_opts);

  CLI::App* solve = app.add_subcommand("solve", "solve the plate equation for a load");
  solve->add_option("--load", solve_load, "load kind: box or csv")
      ->check(CLI::IsMember({"box", "csv"}));
  solve->add_option("--rho", solve_rho, "box center x");
  solve->add_option("--w", solve_w, "box center y");
  solve->add_option("--alpha", solve_alpha, "box half-width in x");
  solve->add_option("--eta", solve_eta, "box half-width in y");
  solve->add_option("--file", solve_file, "CSV load file (header x,y,value)");
  solve->add_option("--at", solve_at, "evaluation point x,y")->delimiter(',')->expected(2);
  add_common(solve, solve_opts);

  CLI::App* verify = app.add_subcommand("verify", "run the inequality margin reports");
  verify->add_flag("--all", verify_all, "check every inequality id");
  verify->add_option("--id", verify_ids, "inequality ids to check (repeatable)");
  verify->add_option("--n-max", verify_n_max, "N range for the sine/constants families");
  add_common(verify, verify_opts, false);

  CLI::App* constants = app.add_subcommand("constants", "positivity-scheme constants table");
  constants->add_option("--n-max", constants_n_max, "largest N in the table");
  add_common(constants, const_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (phi->parsed()) {
      if (phi_at.empty() && phi_y_opt->count() && phi_w_opt->count()) phi_at = {phi_y, phi_w};
      return run_phi(phi_opts, phi_m_index, phi_at, phi_grid);
    }
    if (green->parsed())
      return run_green(green_opts, green_rho, green_w, green_at, green_grid_n);
    if (solve->parsed())
      return run_solve(solve_opts, solve_load, solve_rho, solve_w, solve_alpha, solve_eta,
                       solve_file, solve_at);
    if (verify->parsed()) return run_verify(verify_opts, verify_all, verify_ids, verify_n_max);
    if (constants->parsed()) return run_constants(const_opts, constants_n_max);
  } catch (const phplate::ToleranceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitToleranceUnreachable;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
