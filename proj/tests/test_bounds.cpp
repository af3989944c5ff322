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
#include <map>
#include <numeric>

#include "slcones/area.hpp"
#include "slcones/bounds.hpp"
#include "slcones/error.hpp"

using namespace slcones;
using namespace slcones::bounds;

namespace {

double find(const std::vector<BoundCertificate>& certs, Quantity q, Direction d) {
  for (const auto& c : certs) {
    if (c.quantity == q && c.direction == d) return c.value;
  }
  FAIL("missing certificate");
  return 0;
}

double true_heat_trace(double t, int terms) {
  double sum = 0;
  for (int i = 0; i < terms; ++i) sum += (2 * i + 1) * std::exp(-i * (i + 1.0) * t);
  return sum;
}

}  // namespace

TEST_CASE("T(m,n) certificates follow the Courant arithmetic") {
  for (int n = 2; n <= 11; ++n) {
    for (int m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const auto certs = index_lower_bounds_Tmn(m, n);
      const bool even = (m * n) % 2 == 0;
      const double c6 = even ? 8 * n + 4 * m : 4 * n + 2 * m;
      CHECK(find(certs, Quantity::N1, Direction::lower) == (even ? 4 * n + 5 : 2 * n + 5));
      CHECK(find(certs, Quantity::l_ind, Direction::lower) == c6 - 2);
      CHECK(find(certs, Quantity::s_ind, Direction::lower) == c6 - 8);
      CHECK(find(certs, Quantity::N2, Direction::lower) == c6 + 6);
      const double cap = (even ? 36 : 18) * M_PI * n / std::sqrt(3.0) - 1;
      CHECK(find(certs, Quantity::N2, Direction::upper) == doctest::Approx(cap).epsilon(1e-14));
      for (const auto& c : certs) CHECK(reproduce(c) == c.value);
    }
  }
  const auto t12 = index_lower_bounds_Tmn(1, 2);
  CHECK(find(t12, Quantity::s_ind, Direction::lower) == 12);
  CHECK(find(t12, Quantity::l_ind, Direction::lower) == 18);
  CHECK(find(index_lower_bounds_Tmn(1, 3), Quantity::s_ind, Direction::lower) == 6);
  CHECK(find(index_lower_bounds_Tmn(1, 5), Quantity::s_ind, Direction::lower) == 14);
}

TEST_CASE("lower bounds never exceed upper bounds") {
  for (auto [m, n] : {std::pair{1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 7}, {5, 11}}) {
    const auto certs = index_lower_bounds_Tmn(m, n);
    const double area = area::area_Tmn(m, n).area;
    CHECK(find(certs, Quantity::N2, Direction::lower) < find(certs, Quantity::N2, Direction::upper));
    CHECK(find(certs, Quantity::N2, Direction::lower) < N2_upper_from_area(area));
    CHECK(find(certs, Quantity::N1, Direction::lower) < N1_upper_from_area(area));
    CHECK(N2_upper_from_area(area) < find(certs, Quantity::N2, Direction::upper));
  }
}

TEST_CASE("u(0,J) certificates") {
  const auto c47 = index_lower_bounds_u0J(4, 7);
  CHECK(find(c47, Quantity::s_ind, Direction::lower) == 6);
  CHECK(find(c47, Quantity::l_ind, Direction::lower) == 12);
  CHECK(find(c47, Quantity::N1, Direction::lower) == 13);
  CHECK(find(c47, Quantity::N2, Direction::lower) == 20);
  CHECK(find(index_lower_bounds_u0J(5, 9), Quantity::s_ind, Direction::lower) == 10);
  const auto tab = tabulated_s_ind_u0J(4, 7);
  REQUIRE(tab.size() == 1);
  CHECK(tab[0].value == 12);
  CHECK(tab[0].provenance.rule == "tabulated");
  CHECK(tabulated_s_ind_u0J(7, 13).empty());
  CHECK_THROWS_AS(index_lower_bounds_u0J(3, 7), DomainError);
  CHECK_THROWS_AS(index_lower_bounds_u0J(5, 8), DomainError);
  CHECK_THROWS_AS(index_lower_bounds_u0J(8, 14), DomainError);
  CHECK_THROWS_AS(index_lower_bounds_u0J(1, 2), DomainError);
}

TEST_CASE("heat trace upper bound") {
  for (int k = 1; k <= 8; ++k) {
    const double threshold = 2.0 / ((2 * k + 1) * (2 * k + 1));
    for (double t : {threshold * 1.01, 0.16, 0.3, 0.5, 1.0, 2.0}) {
      if (t <= threshold) continue;
      CHECK(heat_trace_S2_upper(t, k) >= true_heat_trace(t, 100000));
    }
    CHECK_THROWS_AS(heat_trace_S2_upper(threshold, k), DomainError);
  }
  CHECK(heat_trace_S2_upper(0.5, 4) < heat_trace_S2_upper(0.2, 4));
  CHECK(heat_trace_S2_upper(0.16, 6) <= heat_trace_S2_upper(0.16, 4));
  // the rounded constants 1/7 and 1/18 sit below the exact heat-kernel values
  CHECK(1 / heat_trace_S2_upper(0.16, 4) > 1.0 / 7);
  CHECK(std::exp(-0.96) / heat_trace_S2_upper(0.16, 4) > 1.0 / 18);
  for (long n2 = 1; n2 <= 300; ++n2) {
    CHECK(area_lower_from_heat_trace(n2, 0.16, 4) >= area_lower_from_N2(n2));
  }
}

TEST_CASE("area and eigenvalue count conversions") {
  CHECK(area_lower_from_N2(1) == doctest::Approx(4 * M_PI / 7));
  const double clifford = 4 * M_PI * M_PI / std::sqrt(3.0);
  CHECK(area_lower_from_N2(13) == doctest::Approx(10.17).epsilon(1e-3));
  CHECK(area_lower_from_N2(13) < clifford);
  for (long n2 = 1; n2 < 100; ++n2) {
    CHECK(N2_upper_from_area(area_lower_from_N2(n2)) == doctest::Approx(n2));
  }
  CHECK(N2_upper_from_area(4 * M_PI * 5.49) == doctest::Approx(97.2).epsilon(1e-3));
  CHECK(N1_upper_from_area(clifford) == doctest::Approx(10.6).epsilon(1e-2));
  CHECK(N1_upper_from_area(clifford) >= 7);
  CHECK(std::abs(N1_upper_from_area(8 * M_PI / 13 * 7 / 6)) < 1e-14);
  CHECK(N1_upper_from_area(4 * M_PI * 3.71) == doctest::Approx(22.9).epsilon(1e-2));
  CHECK_THROWS_AS(N2_upper_from_area(0), DomainError);
  CHECK_THROWS_AS(area_lower_from_N2(0), DomainError);
}

TEST_CASE("spectral genus bounds") {
  const auto g3 = genus_bounds(3);
  CHECK(find(g3, Quantity::l_ind, Direction::lower) == 7);
  CHECK(find(g3, Quantity::s_ind, Direction::lower) == 2);
  CHECK(find(g3, Quantity::Area, Direction::lower) == doctest::Approx(M_PI));
  CHECK(find(genus_bounds(6), Quantity::s_ind, Direction::lower) == 5);
  CHECK(find(genus_bounds(20), Quantity::l_ind, Direction::lower) == 10);
  CHECK_THROWS_AS(genus_bounds(2), DomainError);
}

TEST_CASE("certificates are reproducible from their provenance") {
  std::vector<BoundCertificate> all = index_lower_bounds_Tmn(2, 5);
  for (const auto& c : index_lower_bounds_u0J(6, 11)) all.push_back(c);
  for (const auto& c : genus_bounds(9)) all.push_back(c);
  for (const auto& c : all) {
    BoundCertificate copy{c.quantity, c.direction, -1, c.provenance};
    CHECK(reproduce(copy) == c.value);
  }
  BoundCertificate bogus;
  bogus.provenance.rule = "nonsense";
  CHECK_THROWS_AS(reproduce(bogus), DomainError);
  bogus.provenance.rule = "courant_l_ind";
  CHECK_THROWS_AS(reproduce(bogus), DomainError);
}
