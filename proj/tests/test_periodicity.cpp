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
#include <random>

#include "slcones/elliptic.hpp"
#include "slcones/error.hpp"
#include "slcones/periodicity.hpp"

using namespace slcones;
using namespace slcones::periodicity;

namespace {

// Exhaustive smallest-denominator search.
Fraction brute_force_rational(double lo, double hi) {
  for (std::int64_t q = 1;; ++q) {
    for (std::int64_t p = static_cast<std::int64_t>(std::floor(lo * q)); p <= hi * q + 1; ++p) {
      const long double x = static_cast<long double>(p) / q;
      if (x > lo && x < hi) return Fraction(p, q);
    }
  }
}

double period_quarter(double k2) { return elliptic::complete_K(elliptic::Modulus::from_k2(k2)); }

}  // namespace

TEST_CASE("smallest-denominator rationals") {
  CHECK(smallest_denominator_rational(0.5, 1 / std::sqrt(3.0)) == Fraction(4, 7));
  CHECK(smallest_denominator_rational(2.0 / 3, std::sqrt(13.0 / 27)) == Fraction(9, 13));
  // 14/19 = 0.7368 lies below 3/4, so it is not in this interval
  CHECK(14.0 / 19 < 0.75);
  CHECK(smallest_denominator_rational(0.75, std::sqrt(7.0 / 12)) == Fraction(16, 21));
  CHECK(brute_force_rational(0.75, std::sqrt(7.0 / 12)) == Fraction(16, 21));
  CHECK(smallest_denominator_rational(0.2, 0.3) == Fraction(1, 4));
  CHECK_THROWS_AS(smallest_denominator_rational(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(smallest_denominator_rational(0.6, 0.5), DomainError);
}

TEST_CASE("Stern-Brocot agrees with brute force on random intervals") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> start(0.01, 3.0);
  std::uniform_real_distribution<double> width(1e-4, 0.2);
  for (int i = 0; i < 300; ++i) {
    const double lo = start(rng);
    const double hi = lo + width(rng);
    CHECK(smallest_denominator_rational(lo, hi) == brute_force_rational(lo, hi));
  }
}

TEST_CASE("closure ratio recognition") {
  const auto r = closure_ratio(2 * M_PI * 4 / 7);
  REQUIRE(r);
  CHECK(*r == Fraction(4, 7));
  CHECK(!closure_ratio(2 * M_PI * (std::sqrt(2.0) - 1)));
}

TEST_CASE("theta scan is identical serially and in parallel") {
  const auto a = scan_theta(0.3, 64, Execution::serial);
  const auto b = scan_theta(0.3, 64, Execution::parallel);
  CHECK(a.J == b.J);
  CHECK(a.Theta == b.Theta);
  CHECK(a.J.front() == doctest::Approx(torus::kJMax / 65));
}

TEST_CASE("J search for the alpha = 0 closures") {
  const struct {
    int M, N;
    double scaled_J;
  } rows[] = {{4, 7, 0.831}, {5, 9, 0.495}, {6, 11, 0.344}};
  for (const auto& row : rows) {
    const auto roots = find_J_for_ratio(0.0, row.M, row.N);
    REQUIRE(!roots.empty());
    CHECK(std::abs(roots[0] * 3 * std::sqrt(3.0) - row.scaled_J) < 2e-3);
    const auto c = torus::closure_angle(torus::build_family(0.0, roots[0]));
    CHECK(std::abs(c.Theta * row.N - 2 * M_PI * row.M) < 1e-8);
  }
  CHECK_THROWS_AS(find_J_for_ratio(0.0, 1, 3), NotFoundError);
  CHECK_THROWS_AS(find_J_for_ratio(0.0, 2, 4), DomainError);
}

TEST_CASE("J = 0 lattices") {
  const torus::Profile even(torus::build_family(Fraction(1, 2), 0.0));
  const auto le = period_lattice(even);
  CHECK(le.case_tag == LatticeCase::J0_mn);
  // k^2 = (n^2 - m^2)/(n(n + 2m)), r^2 = (n + 2m)/n
  CHECK(le.omega1.s == doctest::Approx(4 * M_PI));
  CHECK(le.omega2.s == 0);
  CHECK(le.omega2.t == doctest::Approx(4 * period_quarter(3.0 / 8) / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(lattice_residual(even, le, 10, 1) < 1e-7);

  const torus::Profile odd(torus::build_family(Fraction(1, 3), 0.0));
  const auto lo = period_lattice(odd);
  CHECK(lo.omega1.s == doctest::Approx(6 * M_PI));
  CHECK(lo.omega2.s == doctest::Approx(3 * M_PI));
  CHECK(lo.omega2.t ==
        doctest::Approx(2 * period_quarter(8.0 / 15) / std::sqrt(5.0 / 3)).epsilon(1e-12));
  CHECK(lattice_residual(odd, lo, 10, 2) < 1e-7);
}

TEST_CASE("alpha = 0 and general lattices pass the direct certificate") {
  const double J = find_J_for_ratio(0.0, 4, 7)[0];
  const torus::Profile u0(torus::build_family(Fraction(0), J));
  const auto l0 = period_lattice(u0);
  CHECK(l0.case_tag == LatticeCase::alpha0_J);
  REQUIRE(l0.closure_ratio);
  CHECK(*l0.closure_ratio == Fraction(4, 7));
  CHECK(lattice_residual(u0, l0, 10, 3) < 1e-7);

  const auto roots = find_J_for_ratio(0.5, 16, 21);
  const torus::Profile gen(torus::build_family(Fraction(1, 2), roots[0]));
  const auto lg = period_lattice(gen);
  CHECK(lg.case_tag == LatticeCase::general);
  CHECK(lg.omega1.s == doctest::Approx(4 * M_PI));
  CHECK(lg.omega2.t == doctest::Approx(21 * gen.period()));
  CHECK(lattice_residual(gen, lg, 10, 4) < 1e-7);
}

TEST_CASE("lattices are refused without closure") {
  CHECK_THROWS_AS(period_lattice(torus::Profile(torus::build_family(0.3, 0.05))),
                  NotDoublyPeriodicError);
  CHECK_THROWS_AS(period_lattice(torus::Profile(torus::build_family(Fraction(1, 2), 0.05))),
                  NotDoublyPeriodicError);
  CHECK_THROWS_AS(period_lattice(torus::Profile(torus::build_family(Fraction(0), 0.0))),
                  NotDoublyPeriodicError);
}
