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
#include "slcones/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "slcones/error.hpp"

namespace slcones::periodicity {
namespace {

using torus::Profile;
using torus::ProfileKind;

constexpr double kPi = std::numbers::pi;

double theta_at(double alpha, double J) {
  return torus::closure_angle(torus::build_family(alpha, J)).Theta;
}

double bisect(double alpha, double target, double a, double fa, double b) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = theta_at(alpha, mid) - target;
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
    if (std::abs(fm) < 1e-13) return mid;
  }
  return 0.5 * (a + b);
}

}  // namespace

const char* to_string(LatticeCase c) {
  switch (c) {
    case LatticeCase::alpha0_J:
      return "alpha0_J";
    case LatticeCase::J0_mn:
      return "J0_mn";
    case LatticeCase::general:
      return "general";
  }
  return "?";
}

std::optional<Fraction> closure_ratio(double Theta, std::int64_t max_den, double tolerance) {
  const double x = Theta / (2.0 * kPi);
  for (std::int64_t N = 1; N <= max_den; ++N) {
    const double scaled = x * static_cast<double>(N);
    const double M = std::round(scaled);
    if (std::abs(scaled - M) < tolerance) return Fraction(static_cast<std::int64_t>(M), N);
  }
  return std::nullopt;
}

ThetaScan scan_theta(double alpha, int grid, Execution exec) {
  if (grid < 2) throw DomainError("theta scan needs at least two grid points");
  ThetaScan scan;
  scan.J.resize(grid);
  scan.Theta.resize(grid);
  for (int j = 0; j < grid; ++j) scan.J[j] = torus::kJMax * (j + 1) / (grid + 1);
  if (exec == Execution::serial) {
    for (int j = 0; j < grid; ++j) scan.Theta[j] = theta_at(alpha, scan.J[j]);
    return scan;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (int j = 0; j < grid; ++j) {
    try {
      scan.Theta[j] = theta_at(alpha, scan.J[j]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return scan;
}

std::vector<double> find_J_for_ratio(double alpha, std::int64_t M, std::int64_t N,
                                     int bracket_grid, Execution exec) {
  if (N <= 0 || std::gcd(M, N) != 1) throw DomainError("closure ratio M/N must be reduced");
  const double target = 2.0 * kPi * static_cast<double>(M) / static_cast<double>(N);
  const ThetaScan scan = scan_theta(alpha, bracket_grid, exec);
  std::vector<double> roots;
  for (int j = 0; j + 1 < bracket_grid; ++j) {
    const double fa = scan.Theta[j] - target;
    const double fb = scan.Theta[j + 1] - target;
    if (fa == 0.0) {
      roots.push_back(scan.J[j]);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      const double J = bisect(alpha, target, scan.J[j], fa, scan.J[j + 1]);
      if (std::abs(theta_at(alpha, J) - target) < 1e-10) roots.push_back(J);
    }
  }
  if (scan.Theta.back() == target) roots.push_back(scan.J.back());
  if (roots.empty()) {
    const auto [lo, hi] = std::minmax_element(scan.Theta.begin(), scan.Theta.end());
    std::ostringstream msg;
    msg.precision(12);
    msg << "no J with Theta/2pi = " << M << "/" << N << " for alpha = " << alpha
        << "; observed Theta/2pi in [" << *lo / (2.0 * kPi) << ", " << *hi / (2.0 * kPi) << "]";
    throw NotFoundError(msg.str());
  }
  return roots;
}

PeriodLattice period_lattice(const Profile& profile) {
  const auto& params = profile.params();
  if (!params.alpha_exact) {
    throw NotDoublyPeriodicError("alpha must be carried as an exact fraction");
  }
  const std::int64_t m = params.alpha_exact->num();
  const std::int64_t n = params.alpha_exact->den();
  PeriodLattice lattice;
  if (profile.kind() == ProfileKind::closed_form) {
    if (m == 0) throw NotDoublyPeriodicError("alpha = 0, J = 0: the profile has no finite period");
    const double T = profile.period();
    lattice.case_tag = LatticeCase::J0_mn;
    lattice.omega1 = {2.0 * kPi * n, 0.0};
    if ((m * n) % 2 == 0) {
      lattice.omega2 = {0.0, 2.0 * T};
    } else {
      lattice.omega2 = {kPi * n, T};
    }
    return lattice;
  }
  const torus::ClosureData closure = torus::closure_from(profile);
  const auto ratio = closure_ratio(closure.Theta);
  if (!ratio) {
    throw NotDoublyPeriodicError("Theta/2pi is not within 1e-8 of a rational with denominator <= 1e4");
  }
  const std::int64_t N = ratio->den();
  const std::int64_t h = std::gcd(n, N);
  const double n_red = static_cast<double>(n / h);
  const double N_red = static_cast<double>(N / h);
  lattice.case_tag = m == 0 ? LatticeCase::alpha0_J : LatticeCase::general;
  lattice.closure_ratio = ratio;
  lattice.omega1 = {2.0 * kPi * n_red, 0.0};
  double shift = std::fmod(-N_red * closure.theta_T[0], lattice.omega1.s);
  if (shift < 0.0) shift += lattice.omega1.s;
  lattice.omega2 = {shift, N_red * profile.period()};
  return lattice;
}

double lattice_residual(const Profile& profile, const PeriodLattice& lattice, int samples,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> s_dist(0.0, lattice.omega1.s);
  std::uniform_real_distribution<double> t_dist(0.0, lattice.omega2.t);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = s_dist(rng);
    const double t = t_dist(rng);
    const auto base = profile.immersion(s, t);
    for (const PlanePoint& w : {lattice.omega1, lattice.omega2}) {
      const auto moved = profile.immersion(s + w.s, t + w.t);
      for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(moved[c] - base[c]));
    }
  }
  return worst;
}

Fraction smallest_denominator_rational(double lo, double hi) {
  if (!(lo < hi)) throw DomainError("empty interval");
  if (!(lo > 0.0)) throw DomainError("interval must lie in (0, inf)");
  using wide = long double;
  // Endpoints are open; rationals within a few ulps of an endpoint count as
  // the endpoint itself (double(2/3) lies just below 2/3).
  const wide slack = 4.0L * std::numeric_limits<double>::epsilon();
  const wide a = static_cast<wide>(lo) * (1.0L + slack);
  const wide b = static_cast<wide>(hi) * (1.0L - slack);
  if (!(a < b)) throw DomainError("empty interval");
  std::int64_t pl = 0, ql = 1, pr = 1, qr = 0;
  for (int step = 0; step < 256; ++step) {
    const std::int64_t pm = pl + pr;
    const std::int64_t qm = ql + qr;
    if (pm <= a * qm) {
      // Walk right: largest k with (pl + k pr)/(ql + k qr) <= lo.
      auto k = static_cast<std::int64_t>(std::floor((a * ql - pl) / (pr - a * qr)));
      k = std::max<std::int64_t>(k, 1);
      while (k > 1 && pl + k * pr > a * (ql + k * qr)) --k;
      pl += k * pr;
      ql += k * qr;
    } else if (pm >= b * qm) {
      auto k = static_cast<std::int64_t>(std::floor((pr - b * qr) / (b * ql - pl)));
      k = std::max<std::int64_t>(k, 1);
      while (k > 1 && pr + k * pl < b * (qr + k * ql)) --k;
      pr += k * pl;
      qr += k * ql;
    } else {
      return Fraction(pm, qm);
    }
    if (ql > (std::int64_t{1} << 60) || qr > (std::int64_t{1} << 60)) break;
  }
  throw DomainError("interval too narrow for 64-bit Stern-Brocot descent");
}

}  // namespace slcones::periodicity
