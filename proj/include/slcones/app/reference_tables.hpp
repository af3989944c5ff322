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
#include <vector>

#include "slcones/rational.hpp"

namespace slcones::app {

struct Table1Column {
  int m = 0;
  int n = 0;
  double area_over_4pi = 0;
  std::optional<double> linear_approx;
  int s_ind = 0;
  bool s_ind_exact = false;  // otherwise a lower bound
};

struct Table2Column {
  int M = 0;
  int N = 0;
  double area_over_4pi = 0;
  double J_times_3sqrt3 = 0;
  int s_ind = 0;
  Fraction lambda1_upper{1, 1};
};

struct Tolerances {
  double area_over_4pi = 0.005;
  double linear_approx = 0.005;
  double J_times_3sqrt3 = 0.002;
};

struct CliffordFacts {
  std::vector<int> strictly_stable;
  std::vector<int> legendrian_stable;
  std::vector<int> non_rigid;
};

struct ReferenceTables {
  int version = 0;
  Tolerances tolerances;
  std::vector<Table1Column> table1;
  std::vector<Table2Column> table2;
  CliffordFacts clifford;
};

std::filesystem::path default_tables_path();
ReferenceTables load_reference_tables(const std::filesystem::path& path);

}  // namespace slcones::app
