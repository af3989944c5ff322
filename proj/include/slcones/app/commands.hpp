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
#pragma once

#include <filesystem>
#include <optional>

#include "slcones/app/reference_tables.hpp"
#include "slcones/app/report.hpp"
#include "slcones/execution.hpp"
#include "slcones/rational.hpp"

namespace slcones::app {

struct CommandOptions {
  std::optional<double> tol;     // overrides the table-file area tolerance
  std::optional<int> grid;       // per-command default when unset
  std::optional<double> cutoff;  // spectral cutoff
  Format format = Format::text;
  Execution exec = Execution::parallel;
  std::filesystem::path tables = default_tables_path();
};

struct U0JTorus {
  double J = 0;
  double area = 0;
  double lattice_residual = 0;
  int roots_found = 0;
};

// Solves Theta(0, J) = 2 pi M/N and measures the resulting torus.
U0JTorus solve_u0J(int M, int N, int bracket_grid, Execution exec);

Report cmd_table1(const CommandOptions& options);
Report cmd_table2(const CommandOptions& options);
Report cmd_clifford(int n, const CommandOptions& options);
Report cmd_spectrum_clifford(int n, const CommandOptions& options);
// Basis file: one lattice vector per line, whitespace separated; '#' comments.
Report cmd_spectrum_basis(const std::filesystem::path& basis_file, const CommandOptions& options);
Report cmd_bounds_Tmn(int m, int n, const CommandOptions& options);
Report cmd_bounds_u0J(int M, int N, const CommandOptions& options);
Report cmd_bounds_genus(int d, const CommandOptions& options);
Report cmd_verify(const Fraction& alpha, double J, const CommandOptions& options);
Report cmd_sweep(const Fraction& alpha, const CommandOptions& options);

}  // namespace slcones::app
