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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "slcones/error.hpp"
#include "slcones/nodal.hpp"

using namespace slcones;
using namespace slcones::bounds;

namespace {

SignGrid checkerboard(int ns, int nt, int shift) {
  SignGrid g{ns, nt, shift, {}};
  for (int j = 0; j < nt; ++j) {
    for (int i = 0; i < ns; ++i) {
      const double s = (i + 0.5) / ns;
      const double t = (j + 0.5) / nt;
      g.values.push_back(std::sin(2 * M_PI * s) * std::sin(2 * M_PI * t));
    }
  }
  return g;
}

struct Torus {
  torus::Profile profile;
  periodicity::PeriodLattice lattice;
};

Torus tmn(int m, int n) {
  torus::Profile p(torus::build_family(Fraction(m, n), 0.0));
  auto l = periodicity::period_lattice(p);
  return {std::move(p), l};
}

}  // namespace

TEST_CASE("names and eigenvalue classes") {
  for (NodalFunction f : kAllNodalFunctions) {
    CHECK(parse_nodal_function(to_string(f)) == f);
  }
  CHECK(!parse_nodal_function("H14"));
  CHECK(eigenvalue_of(NodalFunction::H13) == 6);
  CHECK(eigenvalue_of(NodalFunction::Qmu) == 6);
  CHECK(eigenvalue_of(NodalFunction::ReZ1) == 2);
  CHECK(eigenvalue_of(NodalFunction::ImZ2) == 2);
}

TEST_CASE("quadratics from their definitions") {
  const torus::ComplexTriple u{std::complex<double>(0.3, 0.4), std::complex<double>(-0.5, 0.1),
                               std::complex<double>(0.2, -0.6)};
  const torus::Triple mu{-2, 3, -1};
  const auto p12 = u[0] * std::conj(u[1]);
  CHECK(evaluate(NodalFunction::G12, u, mu) == doctest::Approx(p12.real()));
  CHECK(evaluate(NodalFunction::H12, u, mu) == doctest::Approx(p12.imag()));
  CHECK(evaluate(NodalFunction::H23, u, mu) == doctest::Approx((u[1] * std::conj(u[2])).imag()));
  CHECK(evaluate(NodalFunction::ReZ3, u, mu) == doctest::Approx(0.2));
  CHECK(evaluate(NodalFunction::ImZ2, u, mu) == doctest::Approx(0.1));
  CHECK(evaluate(NodalFunction::Qmu, u, mu) ==
        doctest::Approx(-2 * 0.25 + 3 * 0.26 - 1 * 0.40));
}

TEST_CASE("closed-form counts") {
  const auto even = nodal_counts_Tmn(1, 2);
  CHECK(count_of(even, NodalFunction::H13) == 20);
  CHECK(count_of(even, NodalFunction::ReZ1) == 8);
  CHECK(count_of(even, NodalFunction::Qmu) == 4);
  CHECK(even.front().parity_case == Parity::even);
  const auto odd = nodal_counts_Tmn(1, 3);
  CHECK(count_of(odd, NodalFunction::H13) == 14);
  CHECK(count_of(odd, NodalFunction::Qmu) == 2);
  CHECK(odd.front().parity_case == Parity::odd);
  for (int n = 2; n <= 9; ++n) {
    for (int m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      for (const auto& c : nodal_counts_Tmn(m, n)) CHECK(c.count >= 2);
    }
  }
  CHECK_THROWS_AS(nodal_counts_Tmn(2, 4), DomainError);
  CHECK_THROWS_AS(nodal_counts_Tmn(3, 2), DomainError);
  const auto u = nodal_counts_u0J(4, 7);
  CHECK(count_of(u, NodalFunction::Qmu) == 14);
  CHECK(count_of(u, NodalFunction::ImZ2) == 8);
}

TEST_CASE("flood fill on synthetic grids") {
  CHECK(count_sign_regions(checkerboard(64, 64, 0)) == 4);
  // half-turn shear glues each sign class into one region
  CHECK(count_sign_regions(checkerboard(64, 64, 32)) == 2);
  SignGrid zero{8, 8, 0, std::vector<double>(64, 0.0)};
  CHECK(count_sign_regions(zero) == 0);
  // a row of zeros never bridges
  SignGrid bands{16, 16, 0, {}};
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) bands.values.push_back(j == 0 || j == 8 ? 0.0 : 1.0);
  }
  CHECK(count_sign_regions(bands) == 2);
  CHECK_THROWS_AS(count_sign_regions(SignGrid{4, 4, 0, {1.0}}), DomainError);
}

TEST_CASE("grid sampling is identical serially and in parallel") {
  const auto t = tmn(1, 3);
  const auto a = sample_nodal_grid(t.profile, t.lattice, NodalFunction::G23, 128, Execution::serial);
  const auto b = sample_nodal_grid(t.profile, t.lattice, NodalFunction::G23, 128, Execution::parallel);
  CHECK(a.values == b.values);
  CHECK(a.shift == 64);
  CHECK_THROWS_AS(sample_nodal_grid(t.profile, t.lattice, NodalFunction::G23, 32), DomainError);
}

TEST_CASE("grid oracle reproduces closed-form counts, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const auto t = tmn(m, n);
      for (const auto& c : nodal_counts_Tmn(m, n)) {
        CHECK_MESSAGE(nodal_grid_count(t.profile, t.lattice, c.function_id, 256) == c.count,
                      "T(", m, ",", n, ") ", to_string(c.function_id));
      }
    }
  }
  const auto t12 = tmn(1, 2);
  CHECK(nodal_grid_count(t12.profile, t12.lattice, NodalFunction::H13, 512) == 20);
  CHECK(nodal_grid_count(t12.profile, t12.lattice, NodalFunction::Qmu, 512) == 4);
}

TEST_CASE("grid oracle on u(0,J)") {
  const double J = periodicity::find_J_for_ratio(0.0, 4, 7)[0];
  const torus::Profile p(torus::build_family(Fraction(0), J));
  const auto l = periodicity::period_lattice(p);
  CHECK(nodal_grid_count(p, l, NodalFunction::Qmu, 512) == 14);
  CHECK(nodal_grid_count(p, l, NodalFunction::ImZ2, 512) == 8);
}

TEST_CASE("aliased grids are reported as unstable") {
  // 2000 bands of Qmu cannot be resolved by 64 or 128 rows
  const double J = periodicity::find_J_for_ratio(0.0, 553, 1000)[0];
  const torus::Profile p(torus::build_family(Fraction(0), J));
  const auto l = periodicity::period_lattice(p);
  CHECK_THROWS_AS(nodal_grid_count(p, l, NodalFunction::Qmu, 64), UnstableCountError);
}
