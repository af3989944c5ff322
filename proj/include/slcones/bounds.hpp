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

#include <string>
#include <utility>
#include <vector>

namespace slcones::bounds {

enum class Quantity { l_ind, s_ind, N1, N2, Area };
enum class Direction { lower, upper };

const char* to_string(Quantity q);
const char* to_string(Direction d);

// rule names the formula; params are everything needed to re-evaluate it.
struct Provenance {
  std::string rule;
  std::vector<std::pair<std::string, double>> params;

  double param(const std::string& key) const;
};

// Lower bounds read quantity >= value; upper bounds quantity < value.
// Area lower bounds are strict.
struct BoundCertificate {
  Quantity quantity = Quantity::N2;
  Direction direction = Direction::lower;
  double value = 0;
  Provenance provenance;
};

// Recomputes the value from the provenance alone.
double reproduce(const BoundCertificate& cert);

std::vector<BoundCertificate> index_lower_bounds_Tmn(int m, int n);
// M/N in (1/2, 1/sqrt 3), coprime, M >= 4, N >= 7.
std::vector<BoundCertificate> index_lower_bounds_u0J(int M, int N);
// Reference s-ind values for the three tabulated u_{0,J} tori.
std::vector<BoundCertificate> tabulated_s_ind_u0J(int M, int N);

// sum_{i<=kcut} (2i+1) e^{-i(i+1)t} + e^{-kcut(kcut+1)t}/t, for t > 2/(2 kcut+1)^2.
double heat_trace_S2_upper(double t, int kcut);
// 4 pi (1 + (N2 - 1) e^{-6t}) / heat_trace_S2_upper(t, kcut).
double area_lower_from_heat_trace(long N2, double t, int kcut);

double area_lower_from_N2(long N2);       // 4 pi (1/7 + (N2 - 1)/18)
double N2_upper_from_area(double area);   // 18 area/4pi - 11/7
double N1_upper_from_area(double area);   // 13 area/(8 pi) - 7/6

std::vector<BoundCertificate> genus_bounds(int d);

}  // namespace slcones::bounds
