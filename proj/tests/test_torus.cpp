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

#include "slcones/error.hpp"
#include "slcones/torus.hpp"

using namespace slcones;
using namespace slcones::torus;

namespace {

double product_of_squares(const FamilyParams& p, double gamma) {
  double out = 1;
  for (double mu : p.mu) out *= gamma * mu + 1.0 / 3;
  return out;
}

}  // namespace

TEST_CASE("family vectors") {
  const auto one = build_family(1.0, 0.0);
  CHECK(one.mu[0] == -3);
  CHECK(one.mu[1] == 3);
  CHECK(one.mu[2] == 0);
  const auto half = build_family(Fraction(1, 2), 0.0);
  CHECK(2 * half.mu[0] == -4);
  CHECK(2 * half.mu[1] == 5);
  CHECK(2 * half.mu[2] == -1);
  const auto zero = build_family(0.0, 0.0);
  CHECK(zero.mu[0] == -1);
  CHECK(zero.mu[1] == 2);
  CHECK(zero.mu[2] == -1);
  for (double a : {0.0, 0.3, 1.0}) {
    const auto p = build_family(a, 0.1);
    CHECK(std::abs(p.lambda[0] + p.lambda[1] + p.lambda[2]) < 1e-15);
    CHECK(std::abs(p.mu[0] + p.mu[1] + p.mu[2]) < 1e-15);
  }
  CHECK_THROWS_AS(build_family(1.1, 0.1), DomainError);
  CHECK_THROWS_AS(build_family(0.5, 0.2), DomainError);
  CHECK_THROWS_AS(build_family(0.5, -0.01), DomainError);
}

TEST_CASE("cubic roots by the trigonometric method") {
  // (x - 1)(x + 2)(x - 0.5)
  const auto r = real_cubic_roots(0.5, -2.5, 1.0);
  CHECK(r[0] == doctest::Approx(-2));
  CHECK(r[1] == doctest::Approx(0.5));
  CHECK(r[2] == doctest::Approx(1));
  CHECK_THROWS_AS(real_cubic_roots(0, 0, 1), DomainError);
}

TEST_CASE("gamma solves the profile ODE") {
  const auto p = build_family(0.4, 0.1);
  const auto sol = solve_gamma(p);
  CHECK(sol.roots[1] <= 0);
  CHECK(0 <= sol.roots[0]);
  CHECK(sol.roots[0] <= sol.roots[2]);
  CHECK(sol.gamma(0) == doctest::Approx(sol.roots[1]).epsilon(1e-14));
  CHECK(std::abs(sol.gamma(sol.T / 2) - sol.roots[0]) < 1e-12);
  for (int i = 0; i < 50; ++i) {
    const double t = 0.11 * i;
    const double g = sol.gamma(t);
    const double lhs = 0.25 * sol.gamma_dot(t) * sol.gamma_dot(t) + p.J * p.J;
    CHECK(std::abs(lhs - product_of_squares(p, g)) < 1e-9);
    const double h = 1e-6;
    const double fd = (sol.gamma(t + h) - sol.gamma(t - h)) / (2 * h);
    CHECK(std::abs(fd - sol.gamma_dot(t)) < 1e-7);
  }
}

TEST_CASE("gamma is T-periodic across the parameter rectangle") {
  for (double a : {0.0, 0.2, 0.5, 0.8, 0.95}) {
    for (double j : {0.01, 0.05, 0.1, 0.15, 0.19}) {
      const auto sol = solve_gamma(build_family(a, j));
      for (double t : {0.0, 0.3, 1.7}) {
        CHECK(std::abs(sol.gamma(t + sol.T) - sol.gamma(t)) < 1e-9);
      }
    }
  }
}

TEST_CASE("degenerate families are refused by the elliptic solver") {
  CHECK_THROWS_AS(solve_gamma(build_family(1.0, 0.1)), DegenerateFamilyError);
  CHECK_THROWS_AS(solve_gamma(build_family(0.5, kJMax)), DegenerateFamilyError);
  CHECK_THROWS_AS(solve_gamma(build_family(0.0, 0.0)), DegenerateFamilyError);
  CHECK(Profile(build_family(1.0, 0.1)).kind() == ProfileKind::clifford);
  CHECK(Profile(build_family(0.5, kJMax)).kind() == ProfileKind::constant);
  CHECK(Profile(build_family(0.5, 1e-9)).kind() == ProfileKind::closed_form);
}

TEST_CASE("k^2 approaches (1 - alpha^2)/(1 + 2 alpha) as J -> 0") {
  const auto sol = solve_gamma(build_family(0.5, 1e-6));
  CHECK(std::abs(sol.modulus.k2() - 0.375) < 1e-4);
  CHECK(std::abs(sol.r * sol.r - 2.0) < 1e-4);
}

TEST_CASE("profile invariants at random t") {
  const Profile profile(build_family(0.3, 0.05));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pick(-20, 20);
  const auto& p = profile.params();
  for (int i = 0; i < 100; ++i) {
    const auto st = profile.at(pick(rng));
    double sum = 0;
    for (int c = 0; c < 3; ++c) {
      sum += st.R[c] * st.R[c];
      CHECK(st.R[c] > 0);
      CHECK(std::abs(st.R[c] * st.R[c] - (st.gamma * p.mu[c] + 1.0 / 3)) < 1e-14);
      CHECK(std::abs(std::abs(st.z[c]) - st.R[c]) < 1e-14);
    }
    CHECK(std::abs(sum - 1) < 1e-14);
    const double angle = st.theta[0] + st.theta[1] + st.theta[2];
    CHECK(std::abs(st.R[0] * st.R[1] * st.R[2] * std::cos(angle) - p.J) < 1e-8);
    CHECK(std::abs(profile.gamma_dot(st.t) - 2 * p.J * std::tan(angle)) < 1e-7);
  }
  CHECK(profile.at(0).theta[0] == 0);
}

TEST_CASE("theta derivative equals J mu_i / R_i^2") {
  const Profile profile(build_family(0.6, 0.12));
  const auto& p = profile.params();
  for (double t : {0.2, 1.0, 3.3, 7.9}) {
    const double h = 1e-5;
    const auto plus = profile.at(t + h);
    const auto minus = profile.at(t - h);
    const auto mid = profile.at(t);
    for (int c = 0; c < 3; ++c) {
      const double fd = (plus.theta[c] - minus.theta[c]) / (2 * h);
      CHECK(std::abs(fd - p.J * p.mu[c] / (mid.R[c] * mid.R[c])) < 1e-7);
    }
  }
}

TEST_CASE("immersion is unit, Legendrian and conformal") {
  for (auto [a, j] : {std::pair{0.5, 0.08}, {0.0, 0.12}, {0.9, 0.03}, {1.0, 0.1}, {0.4, kJMax}}) {
    const auto res = immersion_residuals(Profile(build_family(a, j)), 20);
    CHECK(res.unit_norm < 1e-12);
    CHECK(res.legendrian < 1e-7);
    CHECK(res.conformal < 1e-6);
    CHECK(res.radii_sum < 1e-12);
    CHECK(res.cos_identity < 1e-8);
    CHECK(res.gamma_dot < 1e-8);
  }
}

TEST_CASE("conformal factor from the y-cubic") {
  const auto p = build_family(0.4, 0.1);
  const auto sol = solve_gamma(p);
  const auto cf = conformal_factor(p);
  CHECK(cf.y_roots[1] <= 0);
  CHECK(0 <= cf.y_roots[0]);
  CHECK(cf.y_roots[0] <= cf.y_roots[2]);
  CHECK(std::abs(cf.r_y - sol.r) < 1e-9);
  CHECK(std::abs(cf.k_y.k() - sol.modulus.k()) < 1e-9);
  const double P = p.mu_product();
  for (int i = 0; i < 40; ++i) {
    const double t = 0.17 * i;
    const double y = cf.y(t);
    CHECK(y > 0);
    CHECK(std::abs(y - conformal_y(p, sol, t)) < 1e-12);
    const double h = 1e-6;
    const double ydot = (cf.y(t + h) - cf.y(t - h)) / (2 * h);
    const double g = sol.gamma(t);
    CHECK(std::abs(ydot * ydot - 4 * P * P * (product_of_squares(p, g) - p.J * p.J)) < 1e-8);
  }
  const auto flat = conformal_factor(build_family(0.5, 0.0));
  CHECK(std::abs(flat.y_roots[0] - 0.75) < 1e-12);
}

TEST_CASE("closure angles") {
  const auto c = closure_angle(build_family(0.3, 0.07));
  CHECK(std::abs(c.theta_T[0] + c.theta_T[1] + c.theta_T[2]) < 1e-8);
  CHECK(c.Theta == doctest::Approx(c.theta_T[1] - 0.3 * c.theta_T[0]));
  const auto near_zero = closure_angle(build_family(0.0, 1e-4));
  CHECK(std::abs(near_zero.theta_T[1] - M_PI) < 2e-2);
  const auto near_max = closure_angle(build_family(0.5, 0.999 * kJMax));
  CHECK(std::abs(near_max.Theta - 2 * M_PI * std::sqrt(7.0 / 12)) < 1e-2);
  CHECK_THROWS_AS(closure_angle(build_family(0.5, 0.0)), DomainError);
  CHECK_THROWS_AS(closure_from(Profile(build_family(0.5, 1e-9))), DomainError);
}

TEST_CASE("closed form J = 0 profile is the J -> 0 limit") {
  for (double a : {0.25, 0.5}) {
    const Profile limit(build_family(a, 0.0));
    const Profile near(build_family(a, 1e-6));
    const double T = limit.period();
    for (int i = 0; i < 40; ++i) {
      const double t = (i + 0.5) * T / 40;
      const auto x = limit.at(t);
      const auto y = near.at(t);
      for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(x.R[c] - y.R[c]) < 1e-4);
        if (x.R[c] > 1e-2) CHECK(std::abs(x.z[c] - y.z[c]) < 1e-4);
      }
    }
  }
}
