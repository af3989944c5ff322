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

#include "slcones/periodicity.hpp"
#include "slcones/torus.hpp"

namespace slcones::area {

// Area of one period strip [0, 2 pi) x [0, T] divided by 2 pi, computed two
// ways: the elliptic closed form 2(y2 K/r + r E) and a trapezoid sum of the
// conformal factor over one period.
struct AreaEvaluation {
  double closed_form = 0;
  double quadrature = 0;
};

AreaEvaluation area_evaluations(const torus::FamilyParams& params);
// Closed form; throws QuadratureError if the two evaluations differ by > 1e-9.
double area_per_period(const torus::FamilyParams& params);

struct TorusArea {
  double area = 0;
  double over_4pi = 0;
};

// Area of the fundamental domain of the lattice: per-period area times
// omega1.s times the number of t-periods spanned by omega2.
double torus_area(const torus::Profile& profile, const periodicity::PeriodLattice& lattice);

// (m, n) = (0, 1) denotes the Clifford torus.
TorusArea area_Tmn(int m, int n);

struct AreaBounds {
  double lo = 0;
  double hi = 0;
};

// Bounds on Area/4pi for 0 < m < n coprime.
AreaBounds area_bounds_Tmn(int m, int n);

// Half the per-period area along J = 0 as a function of r = (1 + 2 alpha)^(1/2):
// (1 - r^2) K/(2r) + r E with k^2 = (1 + r^2)(3 - r^2)/(4 r^2); r in [1, sqrt 3].
double half_area_of_r(double r);
// Derivative of half_area_of_r for r^4 in (1, 9).
double dA_dr(double r);

double area_linear_approx(int m, int n);

struct Lambda1Bounds {
  double yang_yau = 0;  // 16 pi / Area
  double coarse = 0;    // 2/n for even n, 4/n for odd n
};

Lambda1Bounds lambda1_upper_Tmn(int m, int n);

}  // namespace slcones::area
