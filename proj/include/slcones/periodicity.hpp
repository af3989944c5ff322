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

#include <cstdint>
#include <optional>
#include <vector>

#include "slcones/execution.hpp"
#include "slcones/rational.hpp"
#include "slcones/torus.hpp"

namespace slcones::periodicity {

struct PlanePoint {
  double s = 0;
  double t = 0;
};

enum class LatticeCase {
  alpha0_J,  // alpha = 0, J > 0
  J0_mn,     // J = 0, alpha = m/n
  general,   // alpha = m/n, J > 0 with rational closure ratio
};

const char* to_string(LatticeCase c);

// omega1 is always horizontal; omega2.s is reduced into [0, omega1.s).
struct PeriodLattice {
  PlanePoint omega1;
  PlanePoint omega2;
  LatticeCase case_tag = LatticeCase::general;
  std::optional<Fraction> closure_ratio;  // Theta / 2 pi when J > 0
};

inline constexpr std::int64_t kClosureDenominatorCap = 10000;
inline constexpr double kClosureTolerance = 1e-8;

// Smallest-denominator M/N with |Theta N / 2 pi - M| < tolerance, N <= cap.
std::optional<Fraction> closure_ratio(double Theta,
                                      std::int64_t max_den = kClosureDenominatorCap,
                                      double tolerance = kClosureTolerance);

struct ThetaScan {
  std::vector<double> J;
  std::vector<double> Theta;
};

// Theta(alpha, J) at J = j/(grid+1) * Jmax, j = 1..grid.
ThetaScan scan_theta(double alpha, int grid, Execution exec = Execution::parallel);

// Every J in (0, Jmax) with Theta(alpha, J) = 2 pi M/N found by grid scan and
// bisection of each sign change; throws NotFoundError if none.
std::vector<double> find_J_for_ratio(double alpha, std::int64_t M, std::int64_t N,
                                     int bracket_grid = 512,
                                     Execution exec = Execution::parallel);

PeriodLattice period_lattice(const torus::Profile& profile);

// Largest |u(p + omega_i) - u(p)| over random sample points.
double lattice_residual(const torus::Profile& profile, const PeriodLattice& lattice,
                        int samples, std::uint64_t seed);

// Smallest-denominator rational in the open interval (lo, hi), ties broken by
// the smaller numerator.
Fraction smallest_denominator_rational(double lo, double hi);

}  // namespace slcones::periodicity
