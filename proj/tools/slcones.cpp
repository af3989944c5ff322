// Copyright 2026 The slcones Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "slcones/app/commands.hpp"
#include "slcones/error.hpp"

using namespace slcones;

int main(int argc, char** argv) {
  CLI::App cli{"S^1-invariant special Lagrangian T^2-cones: tables, spectra, bounds"};
  cli.require_subcommand(1);
  cli.fallthrough();

  app::CommandOptions options;
  double tol = 0;
  int grid = 0;
  double cutoff = 0;
  std::string format = "text";
  bool parallel = true;
  std::string tables = options.tables.string();
  auto* tol_opt = cli.add_option("--tol", tol, "table tolerance (default from the tables file, 0.005)");
  auto* grid_opt = cli.add_option(
      "--grid", grid, "bracket grid (table2: 512), sample count (sweep: 64), residual grid (verify: 24)");
  auto* cutoff_opt = cli.add_option("--cutoff", cutoff, "spectral cutoff (clifford: 2n+1)");
  cli.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cli.add_flag("--parallel,!--serial", parallel, "use OpenMP kernels (default on)");
  cli.add_option("--tables", tables, "reference table values")->capture_default_str();

  std::function<app::Report()> run;

  auto* table1 = cli.add_subcommand("table1", "areas and s-ind bounds of T(m,n)");
  table1->callback([&] { run = [&] { return app::cmd_table1(options); }; });

  auto* table2 = cli.add_subcommand("table2", "closure search and areas of u(0,J)");
  table2->callback([&] { run = [&] { return app::cmd_table2(options); }; });

  int clifford_n = 3;
  auto* clifford = cli.add_subcommand("clifford", "index and stability of the Clifford torus");
  clifford->add_option("n", clifford_n, "ambient complex dimension, 3..12")->required();
  clifford->callback([&] { run = [&] { return app::cmd_clifford(clifford_n, options); }; });

  std::string basis_file;
  int spectrum_clifford = 0;
  auto* spectrum = cli.add_subcommand("spectrum", "flat torus Laplace spectrum");
  auto* basis_opt = spectrum->add_option("--basis", basis_file, "lattice basis file");
  auto* spectrum_cl = spectrum->add_option("--clifford", spectrum_clifford, "Clifford torus in C^n");
  basis_opt->excludes(spectrum_cl);
  spectrum->require_option(1);
  spectrum->callback([&] {
    run = [&] {
      return basis_opt->count() ? app::cmd_spectrum_basis(basis_file, options)
                                : app::cmd_spectrum_clifford(spectrum_clifford, options);
    };
  });

  std::vector<int> tmn, u0j;
  int genus = 0;
  auto* bounds = cli.add_subcommand("bounds", "index and area certificates");
  auto* tmn_opt = bounds->add_option("--tmn", tmn, "m n")->expected(2);
  auto* u0j_opt = bounds->add_option("--u0j", u0j, "M N")->expected(2);
  auto* genus_opt = bounds->add_option("--genus", genus, "d, spectral genus 2d");
  tmn_opt->excludes(u0j_opt)->excludes(genus_opt);
  u0j_opt->excludes(genus_opt);
  bounds->require_option(1);
  bounds->callback([&] {
    run = [&] {
      if (tmn_opt->count()) return app::cmd_bounds_Tmn(tmn[0], tmn[1], options);
      if (u0j_opt->count()) return app::cmd_bounds_u0J(u0j[0], u0j[1], options);
      return app::cmd_bounds_genus(genus, options);
    };
  });

  std::string alpha_text;
  double J = 0;
  auto* verify = cli.add_subcommand("verify", "immersion invariants at one (alpha, J)");
  verify->add_option("--alpha", alpha_text, "alpha as p/q")->required();
  verify->add_option("--J", J, "J in [0, 1/(3 sqrt 3)]")->required();
  verify->callback([&] {
    run = [&] { return app::cmd_verify(parse_fraction(alpha_text), J, options); };
  });

  auto* sweep = cli.add_subcommand("sweep", "Theta and area along J as CSV");
  sweep->add_option("--alpha", alpha_text, "alpha as p/q")->required();
  sweep->callback([&] {
    run = [&] {
      if (options.format == app::Format::text) options.format = app::Format::csv;
      return app::cmd_sweep(parse_fraction(alpha_text), options);
    };
  });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e);
  }

  if (tol_opt->count()) options.tol = tol;
  if (grid_opt->count()) options.grid = grid;
  if (cutoff_opt->count()) options.cutoff = cutoff;
  options.format = *app::parse_format(format);
  options.exec = parallel ? Execution::parallel : Execution::serial;
  options.tables = tables;

  try {
    const app::Report report = run();
    std::fputs(app::render(report, options.format).c_str(), stdout);
    return report.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
