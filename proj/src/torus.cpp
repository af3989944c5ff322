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
#include "slcones/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "quadrature.hpp"
#include "slcones/error.hpp"

namespace slcones::torus {
namespace {

using elliptic::jacobi_sn_cn_dn;
using elliptic::Modulus;

constexpr double kPi = std::numbers::pi;

void check_rectangle(double alpha, double J) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(J >= 0.0 && J <= kJMax * (1.0 + 1e-14))) {
    throw DomainError("(alpha, J) = (" + std::to_string(alpha) + ", " + std::to_string(J) +
                      ") outside [0,1] x [0, 1/(3 sqrt 3)]");
  }
}

// Root of the monotone h(delta) = target on [lo, hi], Newton safeguarded by
// bisection.
template <class H, class DH>
double monotone_root(H&& h, DH&& dh, double target, double lo, double hi, double guess) {
  const bool increasing = h(hi) > h(lo);
  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = h(x) - target;
    if (fx == 0.0) return x;
    if ((fx < 0.0) == increasing) {
      lo = x;
    } else {
      hi = x;
    }
    const double slope = dh(x);
    double next = slope != 0.0 ? x - fx / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x) ||
        hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) {
      return next;
    }
    x = next;
  }
  return x;
}

// Offset d of the root near a J = 0 root, where
// P d (d + a)(d + b) = J^2 and a, b are signed gaps to the other two roots.
double offset_root(double P, double a, double b, double J2, double lo, double hi, double guess) {
  auto h = [=](double d) { return P * d * (d + a) * (d + b); };
  auto dh = [=](double d) { return P * ((d + a) * (d + b) + d * (d + b) + d * (d + a)); };
  return monotone_root(h, dh, J2, lo, hi, guess);
}

double sum_sq(const Triple& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

Triple closed_form_theta(double t, double r, double quarter) {
  // J -> 0+ limit of the lifted angles: theta1 drops by pi at every zero of
  // cn, theta2 rises by pi/2 just after 0 and by pi at every zero of sn.
  if (t == 0.0) return {0.0, 0.0, 0.0};
  const double x = std::abs(r * t);
  const double sign = t > 0.0 ? 1.0 : -1.0;
  double cn_zeros = 0.0;
  double sn_zeros = 0.0;
  if (std::isfinite(quarter)) {
    cn_zeros = std::floor((x + quarter) / (2.0 * quarter));
    sn_zeros = std::floor(x / (2.0 * quarter));
  }
  return {-sign * kPi * cn_zeros, sign * (0.5 * kPi + kPi * sn_zeros), 0.0};
}

}  // namespace

double FamilyParams::lambda_norm2() const { return sum_sq(lambda); }

FamilyParams build_family(double alpha, double J) {
  check_rectangle(alpha, J);
  FamilyParams p;
  p.alpha = alpha;
  p.J = J;
  p.lambda = {1.0, alpha, -1.0 - alpha};
  p.mu = {-1.0 - 2.0 * alpha, 2.0 + alpha, alpha - 1.0};
  return p;
}

FamilyParams build_family(const Fraction& alpha, double J) {
  FamilyParams p = build_family(alpha.value(), J);
  p.alpha_exact = alpha;
  return p;
}

double GammaSolution::gamma(double t) const {
  const auto j = jacobi_sn_cn_dn(r * t, modulus, quarter);
  return roots[1] + gap12 * j.sn * j.sn;
}

double GammaSolution::gamma_dot(double t) const {
  const auto j = jacobi_sn_cn_dn(r * t, modulus, quarter);
  return 2.0 * gap12 * r * j.sn * j.cn * j.dn;
}

Triple real_cubic_roots(double a, double b, double c) {
  const double Q = (a * a - 3.0 * b) / 9.0;
  const double R = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
  const double Q3 = Q * Q * Q;
  if (Q < 0.0 || R * R > Q3 * (1.0 + 1e-9) + 1e-300) {
    throw DomainError("cubic does not have three real roots");
  }
  const double ratio = Q3 > 0.0 ? std::clamp(R / std::sqrt(Q3), -1.0, 1.0) : 0.0;
  const double phase = std::acos(ratio);
  const double scale = -2.0 * std::sqrt(Q);
  Triple x = {scale * std::cos(phase / 3.0) - a / 3.0,
              scale * std::cos((phase + 2.0 * kPi) / 3.0) - a / 3.0,
              scale * std::cos((phase - 2.0 * kPi) / 3.0) - a / 3.0};
  std::sort(x.begin(), x.end());
  return x;
}

GammaSolution solve_gamma(const FamilyParams& params) {
  const double alpha = params.alpha;
  const double J = params.J;
  if (alpha > 1.0 - kRootCollision) {
    throw DegenerateFamilyError("alpha = 1: the profile cubic degenerates (Clifford torus)");
  }
  const double P = params.mu_product();
  // J = 0 roots -1/(3 mu_i) and their exact gaps.
  const double base1 = 1.0 / (3.0 * (1.0 + 2.0 * alpha));
  const double base2 = -1.0 / (3.0 * (2.0 + alpha));
  const double base3 = 1.0 / (3.0 * (1.0 - alpha));
  const double g12 = (1.0 + alpha) / ((1.0 + 2.0 * alpha) * (2.0 + alpha));
  const double g32 = 1.0 / ((1.0 - alpha) * (2.0 + alpha));
  const double g31 = alpha / ((1.0 - alpha) * (1.0 + 2.0 * alpha));
  const double J2 = J * J;

  const double e2 = params.mu[0] * params.mu[1] + params.mu[0] * params.mu[2] +
                    params.mu[1] * params.mu[2];
  Triple estimate{base1, base2, base3};
  try {
    const Triple sorted = real_cubic_roots(e2 / (3.0 * P), 0.0, (1.0 / 27.0 - J2) / P);
    estimate = {sorted[1], sorted[0], sorted[2]};
  } catch (const DomainError&) {
    // near a double root; the bracketed refinement below still converges
  }

  const double d2 = offset_root(P, -g12, -g32, J2, 0.0, -base2, estimate[1] - base2);
  const double d1 = offset_root(P, g12, -g31, J2, -base1, 0.0, estimate[0] - base1);
  double hi3 = std::max(1e-300, estimate[2] - base3);
  while (P * hi3 * (hi3 + g32) * (hi3 + g31) < J2) hi3 *= 2.0;
  const double d3 = offset_root(P, g32, g31, J2, 0.0, hi3, estimate[2] - base3);

  GammaSolution sol;
  sol.offsets = {d1, d2, d3};
  sol.roots = {base1 + d1, base2 + d2, base3 + d3};
  sol.gap12 = g12 + d1 - d2;
  sol.gap31 = g31 + d3 - d1;
  if (sol.gap12 < kRootCollision) {
    throw DegenerateFamilyError("J = 1/(3 sqrt 3): roots Gamma1 and Gamma2 collide");
  }
  if (!(sol.gap31 > kRootCollision)) {
    throw DegenerateFamilyError("alpha = 0, J = 0: modulus k = 1, no finite period");
  }
  const double gap32 = sol.gap32();
  sol.r = std::sqrt(P * gap32);
  sol.modulus = Modulus::from_k2(sol.gap12 / gap32, sol.gap31 / gap32);
  sol.quarter = elliptic::complete_K(sol.modulus);
  sol.T = 2.0 * sol.quarter / sol.r;
  return sol;
}

double conformal_y(const FamilyParams& params, const GammaSolution& sol, double t) {
  return -params.mu_product() * sol.gamma(t) + params.lambda_norm2() / 3.0;
}

double ConformalFactor::y(double t) const {
  const auto j = jacobi_sn_cn_dn(r_y * t, k_y);
  return y_roots[2] - (y_roots[2] - y_roots[0]) * j.sn * j.sn;
}

ConformalFactor conformal_factor(const FamilyParams& params) {
  if (params.alpha > 1.0 - kRootCollision || params.J > kJMax * (1.0 - kRootCollision)) {
    throw DegenerateFamilyError("conformal factor is constant on the Clifford family");
  }
  const Triple& l = params.lambda;
  const double P = params.mu_product();
  const double c = l[0] * l[0] * l[1] * l[1] * l[2] * l[2] + params.J * params.J * P * P;
  const Triple y = real_cubic_roots(-0.5 * params.lambda_norm2(), 0.0, c);
  ConformalFactor cf;
  cf.y_roots = {y[1], y[0], y[2]};
  const double upper = y[2] - y[1];
  const double lower = y[1] - y[0];
  cf.r_y = std::sqrt(y[2] - y[0]);
  cf.k_y = Modulus::from_k2(upper / (upper + lower), lower / (upper + lower));
  return cf;
}

Profile::Profile(FamilyParams params) : params_(std::move(params)) {
  const double alpha = params_.alpha;
  const double J = params_.J;
  const Triple& mu = params_.mu;
  if (J < kClosedFormJ) {
    kind_ = ProfileKind::closed_form;
    cf_r_ = std::sqrt(1.0 + 2.0 * alpha);
    const double k2 = (1.0 - alpha * alpha) / (1.0 + 2.0 * alpha);
    const double kp2 = alpha * (2.0 + alpha) / (1.0 + 2.0 * alpha);
    cf_coeff_ = {std::sqrt((mu[1] - mu[0]) / (3.0 * mu[1])),
                 std::sqrt((mu[0] - mu[1]) / (3.0 * mu[0])),
                 std::sqrt((mu[1] - mu[2]) / (3.0 * mu[1]))};
    if (kp2 > 0.0) {
      cf_modulus_ = Modulus::from_k2(k2 / (k2 + kp2), kp2 / (k2 + kp2));
      cf_quarter_ = elliptic::complete_K(*cf_modulus_);
      period_ = 2.0 * cf_quarter_ / cf_r_;
      theta_period_ = {-kPi, kPi, 0.0};
    } else {
      cf_quarter_ = std::numeric_limits<double>::infinity();
      period_ = std::numeric_limits<double>::infinity();
      theta_period_ = {-0.5 * kPi, kPi, -0.5 * kPi};
    }
    return;
  }
  const double p = 1.0 + alpha + alpha * alpha;
  kind_ = ProfileKind::constant;
  if (J <= kJMax * (1.0 - kRootCollision)) {
    if (alpha > 1.0 - kRootCollision) {
      kind_ = ProfileKind::clifford;
      clifford_amp_ = std::sqrt((1.0 / 27.0 - J * J) / 3.0);
      period_ = kPi / std::sqrt(3.0);
    } else {
      try {
        sol_ = solve_gamma(params_);
        kind_ = ProfileKind::general;
        period_ = sol_->T;
      } catch (const DegenerateFamilyError&) {
        kind_ = ProfileKind::constant;
      }
    }
  }
  if (kind_ == ProfileKind::constant) {
    period_ = kPi / std::sqrt(p);
    for (int i = 0; i < 3; ++i) theta_period_[i] = 3.0 * J * mu[i] * period_;
    return;
  }
  const Triple half = theta_integral(0.5 * period_);
  for (int i = 0; i < 3; ++i) theta_period_[i] = 2.0 * half[i];
}

const GammaSolution& Profile::gamma_solution() const {
  if (!sol_) throw DegenerateFamilyError("profile has no elliptic gamma solution");
  return *sol_;
}

Triple Profile::radii_sq(double tau) const {
  const Triple& mu = params_.mu;
  switch (kind_) {
    case ProfileKind::general: {
      const GammaSolution& s = *sol_;
      const auto j = jacobi_sn_cn_dn(s.r * tau, s.modulus, s.quarter);
      const double cn2 = j.cn * j.cn;
      const double sn2 = j.sn * j.sn;
      const double d1 = -s.offsets[0];
      const double alpha = params_.alpha;
      return {-mu[0] * (s.gap12 * cn2 + d1), mu[1] * (s.offsets[1] + s.gap12 * sn2),
              -mu[2] * (s.gap12 * cn2 + d1) + alpha / (1.0 + 2.0 * alpha)};
    }
    default: {
      const double g = gamma(tau);
      return {g * mu[0] + 1.0 / 3.0, g * mu[1] + 1.0 / 3.0, g * mu[2] + 1.0 / 3.0};
    }
  }
}

Triple Profile::theta_integral(double tau) const {
  Triple out{};
  for (int i = 0; i < 3; ++i) {
    const double rate = params_.J * params_.mu[i];
    if (rate == 0.0) continue;
    out[i] = detail::integrate([&](double t) { return rate / radii_sq(t)[i]; }, 0.0, tau,
                               "angle integral");
  }
  return out;
}

Triple Profile::theta_reduced(double tau) const {
  if (tau <= 0.5 * period_) return theta_integral(tau);
  const Triple tail = theta_integral(period_ - tau);
  return {theta_period_[0] - tail[0], theta_period_[1] - tail[1], theta_period_[2] - tail[2]};
}

double Profile::gamma(double t) const {
  switch (kind_) {
    case ProfileKind::general:
      return sol_->gamma(t);
    case ProfileKind::clifford:
      return -clifford_amp_ * std::cos(2.0 * std::sqrt(3.0) * t);
    case ProfileKind::constant:
      return 0.0;
    case ProfileKind::closed_form: {
      const double alpha = params_.alpha;
      const double base2 = -1.0 / (3.0 * (2.0 + alpha));
      const double g12 = (1.0 + alpha) / ((1.0 + 2.0 * alpha) * (2.0 + alpha));
      const double sn = cf_modulus_ ? jacobi_sn_cn_dn(cf_r_ * t, *cf_modulus_, cf_quarter_).sn
                                    : std::tanh(cf_r_ * t);
      return base2 + g12 * sn * sn;
    }
  }
  return 0.0;
}

double Profile::gamma_dot(double t) const {
  switch (kind_) {
    case ProfileKind::general:
      return sol_->gamma_dot(t);
    case ProfileKind::clifford:
      return 2.0 * std::sqrt(3.0) * clifford_amp_ * std::sin(2.0 * std::sqrt(3.0) * t);
    case ProfileKind::constant:
      return 0.0;
    case ProfileKind::closed_form: {
      const double alpha = params_.alpha;
      const double g12 = (1.0 + alpha) / ((1.0 + 2.0 * alpha) * (2.0 + alpha));
      double sn, cn, dn;
      if (cf_modulus_) {
        const auto j = jacobi_sn_cn_dn(cf_r_ * t, *cf_modulus_, cf_quarter_);
        sn = j.sn, cn = j.cn, dn = j.dn;
      } else {
        sn = std::tanh(cf_r_ * t);
        cn = dn = 1.0 / std::cosh(cf_r_ * t);
      }
      return 2.0 * g12 * cf_r_ * sn * cn * dn;
    }
  }
  return 0.0;
}

ProfileState Profile::at(double t) const {
  ProfileState state;
  state.t = t;
  state.gamma = gamma(t);
  if (kind_ == ProfileKind::closed_form) {
    double sn, cn, dn;
    if (cf_modulus_) {
      const auto j = jacobi_sn_cn_dn(cf_r_ * t, *cf_modulus_, cf_quarter_);
      sn = j.sn, cn = j.cn, dn = j.dn;
    } else {
      sn = std::tanh(cf_r_ * t);
      cn = dn = 1.0 / std::cosh(cf_r_ * t);
    }
    state.z = {cf_coeff_[0] * cn, std::complex<double>(0.0, cf_coeff_[1] * sn), cf_coeff_[2] * dn};
    for (int i = 0; i < 3; ++i) state.R[i] = std::abs(state.z[i]);
    state.theta = closed_form_theta(t, cf_r_, cf_quarter_);
    return state;
  }
  if (kind_ == ProfileKind::constant) {
    for (int i = 0; i < 3; ++i) {
      state.R[i] = std::sqrt(1.0 / 3.0);
      state.theta[i] = 3.0 * params_.J * params_.mu[i] * t;
    }
  } else {
    const double laps = std::floor(t / period_);
    const double tau = t - laps * period_;
    const Triple r2 = radii_sq(tau);
    const Triple th = theta_reduced(tau);
    for (int i = 0; i < 3; ++i) {
      state.R[i] = std::sqrt(r2[i]);
      state.theta[i] = th[i] + laps * theta_period_[i];
    }
  }
  for (int i = 0; i < 3; ++i) state.z[i] = std::polar(state.R[i], state.theta[i]);
  return state;
}

ComplexTriple Profile::immersion(double s, const ProfileState& state) const {
  ComplexTriple u;
  for (int i = 0; i < 3; ++i) u[i] = std::polar(1.0, params_.lambda[i] * s) * state.z[i];
  return u;
}

ComplexTriple Profile::immersion(double s, double t) const { return immersion(s, at(t)); }

ProfileState profile_at(const Profile& profile, double t) { return profile.at(t); }

ComplexTriple immersion_at(const Profile& profile, double s, double t) {
  return profile.immersion(s, t);
}

ImmersionResiduals immersion_residuals(const Profile& profile, int grid) {
  if (grid < 2) throw DomainError("residual grid needs at least 2 points per side");
  constexpr double h = 1e-5;
  const double J = profile.params().J;
  const double t_span = std::min(profile.period(), 8.0);
  ImmersionResiduals worst;
  auto raise = [](double& slot, double v) { slot = std::max(slot, std::abs(v)); };
  for (int j = 0; j < grid; ++j) {
    const double t = (j + 0.5) * t_span / grid;
    const auto state = profile.at(t);
    const auto minus = profile.at(t - h);
    const auto plus = profile.at(t + h);
    raise(worst.radii_sum, state.R[0] * state.R[0] + state.R[1] * state.R[1] +
                               state.R[2] * state.R[2] - 1.0);
    const auto triple = state.z[0] * state.z[1] * state.z[2];
    raise(worst.cos_identity, triple.real() - J);
    raise(worst.gamma_dot, profile.gamma_dot(t) * triple.real() - 2.0 * J * triple.imag());
    for (int i = 0; i < grid; ++i) {
      const double s = (i + 0.5) * 2.0 * std::numbers::pi / grid;
      const auto u = profile.immersion(s, state);
      const auto us_p = profile.immersion(s + h, state);
      const auto us_m = profile.immersion(s - h, state);
      const auto ut_p = profile.immersion(s, plus);
      const auto ut_m = profile.immersion(s, minus);
      std::complex<double> contact_s, contact_t, cross;
      double norm = 0, speed_s = 0, speed_t = 0;
      for (int k = 0; k < 3; ++k) {
        const auto us = (us_p[k] - us_m[k]) / (2 * h);
        const auto ut = (ut_p[k] - ut_m[k]) / (2 * h);
        norm += std::norm(u[k]);
        contact_s += std::conj(u[k]) * us;
        contact_t += std::conj(u[k]) * ut;
        speed_s += std::norm(us);
        speed_t += std::norm(ut);
        cross += std::conj(us) * ut;
      }
      raise(worst.unit_norm, norm - 1.0);
      raise(worst.legendrian, contact_s.imag());
      raise(worst.legendrian, contact_t.imag());
      raise(worst.conformal, speed_s - speed_t);
      raise(worst.conformal, cross.real());
    }
  }
  return worst;
}

ClosureData closure_from(const Profile& profile) {
  if (profile.kind() == ProfileKind::closed_form) {
    throw DomainError("closure angle needs J >= 1e-8; smaller J uses the J = 0 closed form");
  }
  ClosureData out;
  out.theta_T = profile.theta_period();
  out.Theta = out.theta_T[1] - profile.params().alpha * out.theta_T[0];
  return out;
}

ClosureData closure_angle(const FamilyParams& params) {
  if (!(params.J > 0.0)) throw DomainError("closure angle requires J > 0");
  return closure_from(Profile(params));
}

}  // namespace slcones::torus
