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
#include "slcones/area.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "slcones/error.hpp"

namespace slcones::area {
namespace {

using torus::FamilyParams;
using torus::Profile;

constexpr double kPi = std::numbers::pi;

double trapezoid_periodic(const Profile& profile, const FamilyParams& params) {
  const double T = profile.period();
  const double P = params.mu_product();
  const double shift = params.lambda_norm2() / 3.0;
  auto y = [&](double t) { return -P * profile.gamma(t) + shift; };
  int n = 16;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += y(T * j / n);
  double value = T * sum / n;
  while (n < (1 << 20)) {
    double odd = 0.0;
    for (int j = 0; j < n; ++j) odd += y(T * (2 * j + 1) / (2.0 * n));
    sum += odd;
    n *= 2;
    const double refined = T * sum / n;
    const bool done = std::abs(refined - value) <= 1e-14 * std::abs(refined);
    value = refined;
    if (done) break;
  }
  return value;
}

void check_coprime(int m, int n) {
  if (n < 1 || m < 0 || m > n || std::gcd(m, n) != 1) {
    throw DomainError("(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                      ") must satisfy 0 <= m <= n and gcd(m, n) = 1");
  }
}

}  // namespace

AreaEvaluation area_evaluations(const FamilyParams& params) {
  const Profile profile(params);
  const double alpha = params.alpha;
  AreaEvaluation out;
  switch (profile.kind()) {
    case torus::ProfileKind::clifford:
      out.closed_form = 2.0 * kPi / std::sqrt(3.0);
      out.quadrature = trapezoid_periodic(profile, params);
      return out;
    case torus::ProfileKind::constant:
      out.closed_form = 2.0 * kPi / 3.0 * std::sqrt(1.0 + alpha + alpha * alpha);
      out.quadrature = trapezoid_periodic(profile, params);
      return out;
    case torus::ProfileKind::closed_form: {
      if (!std::isfinite(profile.period())) {
        out.closed_form = out.quadrature = 2.0;
        return out;
      }
      const double r = std::sqrt(1.0 + 2.0 * alpha);
      out.closed_form = 2.0 * half_area_of_r(r);
      out.quadrature = trapezoid_periodic(profile, params);
      return out;
    }
    case torus::ProfileKind::general: {
      const auto& sol = profile.gamma_solution();
      const double y2 = -params.mu_product() * sol.roots[2] + params.lambda_norm2() / 3.0;
      const double E = elliptic::complete_E(sol.modulus);
      out.closed_form = 2.0 * (y2 * sol.quarter / sol.r + sol.r * E);
      out.quadrature = trapezoid_periodic(profile, params);
      return out;
    }
  }
  return out;
}

double area_per_period(const FamilyParams& params) {
  const AreaEvaluation e = area_evaluations(params);
  if (std::abs(e.closed_form - e.quadrature) > 1e-9) {
    throw QuadratureError("closed-form and quadrature areas disagree: " +
                          std::to_string(e.closed_form) + " vs " + std::to_string(e.quadrature));
  }
  return e.closed_form;
}

double torus_area(const torus::Profile& profile, const periodicity::PeriodLattice& lattice) {
  if (!std::isfinite(profile.period())) throw DomainError("profile has no finite period");
  return area_per_period(profile.params()) * lattice.omega1.s * lattice.omega2.t / profile.period();
}

TorusArea area_Tmn(int m, int n) {
  check_coprime(m, n);
  TorusArea out;
  if (m == 0) {
    out.area = 4.0 * kPi * kPi / std::sqrt(3.0);
  } else {
    const double A = area_per_period(torus::build_family(Fraction(m, n), 0.0));
    const double strips = (static_cast<long>(m) * n) % 2 == 0 ? 4.0 * n : 2.0 * n;
    out.area = strips * kPi * A;
  }
  out.over_4pi = out.area / (4.0 * kPi);
  return out;
}

AreaBounds area_bounds_Tmn(int m, int n) {
  check_coprime(m, n);
  if (m == 0 || m == n) throw DomainError("area bounds need 0 < m < n");
  if ((static_cast<long>(m) * n) % 2 == 0) return {2.0 * n, 2.0 * kPi * n / std::sqrt(3.0)};
  return {1.0 * n, kPi * n / std::sqrt(3.0)};
}

double half_area_of_r(double r) {
  const double r2 = r * r;
  if (!(r >= 1.0 && r2 <= 3.0 * (1.0 + 1e-15))) {
    throw DomainError("half_area_of_r needs r in [1, sqrt 3]");
  }
  if (r == 1.0) return 1.0;
  const double k2 = (1.0 + r2) * std::max(0.0, 3.0 - r2) / (4.0 * r2);
  const double kp2 = (r2 - 1.0) * (r2 + 3.0) / (4.0 * r2);
  const auto mod = elliptic::Modulus::from_k2(k2 / (k2 + kp2), kp2 / (k2 + kp2));
  return (1.0 - r2) * elliptic::complete_K(mod) / (2.0 * r) + r * elliptic::complete_E(mod);
}

double dA_dr(double r) {
  const double r2 = r * r;
  if (!(r > 1.0 && r2 < 3.0)) throw DomainError("dA_dr needs r^4 in (1, 9)");
  const double k2 = (1.0 + r2) * (3.0 - r2) / (4.0 * r2);
  const double kp2 = (r2 - 1.0) * (r2 + 3.0) / (4.0 * r2);
  const auto mod = elliptic::Modulus::from_k2(k2 / (k2 + kp2), kp2 / (k2 + kp2));
  const double E = elliptic::complete_E(mod);
  const double first = (1.0 + r2) / (3.0 + r2) * E;
  double second;
  if (std::abs(r2 - 3.0) < 1e-4) {
    // (K - E)/(3 - r^2) from the series K - E = pi/2 (k^2/2 + 3k^4/16 + 15k^6/128).
    const double c = (1.0 + r2) / (4.0 * r2);
    second = (r2 - 1.0) * 0.5 * kPi * c * (0.5 + 3.0 * k2 / 16.0 + 15.0 * k2 * k2 / 128.0);
  } else {
    second = (r2 - 1.0) / (3.0 - r2) * (elliptic::complete_K(mod) - E);
  }
  return first + second;
}

double area_linear_approx(int m, int n) {
  check_coprime(m, n);
  const double slope = 2.0 * kPi / std::sqrt(3.0) - 2.0;
  if ((static_cast<long>(m) * n) % 2 == 0) return 2.0 * n + slope * m;
  return n + slope * m / 2.0;
}

Lambda1Bounds lambda1_upper_Tmn(int m, int n) {
  Lambda1Bounds out;
  out.yang_yau = 16.0 * kPi / area_Tmn(m, n).area;
  out.coarse = n % 2 == 0 ? 2.0 / n : 4.0 / n;
  return out;
}

}  // namespace slcones::area
