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

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "slcones/execution.hpp"
#include "slcones/periodicity.hpp"
#include "slcones/torus.hpp"

namespace slcones::bounds {

// Restrictions to the torus of Re/Im z_i conj(z_j) (eigenvalue 6), of
// coordinate functions (eigenvalue 2), and of sum mu_i |z_i|^2 (eigenvalue 6).
enum class NodalFunction { G12, H12, G13, H13, G23, H23, ReZ1, ReZ2, ReZ3, ImZ2, Qmu };

inline constexpr std::array<NodalFunction, 11> kAllNodalFunctions = {
    NodalFunction::G12,  NodalFunction::H12,  NodalFunction::G13, NodalFunction::H13,
    NodalFunction::G23,  NodalFunction::H23,  NodalFunction::ReZ1, NodalFunction::ReZ2,
    NodalFunction::ReZ3, NodalFunction::ImZ2, NodalFunction::Qmu};

const char* to_string(NodalFunction f);
std::optional<NodalFunction> parse_nodal_function(std::string_view name);
int eigenvalue_of(NodalFunction f);
double evaluate(NodalFunction f, const torus::ComplexTriple& u, const torus::Triple& mu);

enum class Parity { even, odd };

struct NodalCount {
  NodalFunction function_id;
  int count = 0;
  Parity parity_case = Parity::even;
};

// Closed-form counts on T_{m,n}, 0 < m < n coprime.
std::vector<NodalCount> nodal_counts_Tmn(int m, int n);
// Closed-form counts of Qmu and ImZ2 on the alpha = 0 torus with closure M/N.
std::vector<NodalCount> nodal_counts_u0J(int M, int N);
int count_of(const std::vector<NodalCount>& counts, NodalFunction f);

// Cell-centred samples over [0, W) x [0, H), row-major in t. Crossing the top
// edge moves  columns to the left (the s-component of omega2).
struct SignGrid {
  int ns = 0;
  int nt = 0;
  int shift = 0;
  std::vector<double> values;
};

// 4-connected sign regions; cells with |f| < 1e-9 max|f| belong to none.
int count_sign_regions(const SignGrid& grid);

SignGrid sample_nodal_grid(const torus::Profile& profile,
                           const periodicity::PeriodLattice& lattice, NodalFunction f,
                           int resolution, Execution exec = Execution::parallel);

// Region count at resolution and 2*resolution; throws UnstableCountError if
// they differ.
int nodal_grid_count(const torus::Profile& profile, const periodicity::PeriodLattice& lattice,
                     NodalFunction f, int resolution, Execution exec = Execution::parallel);

}  // namespace slcones::bounds
