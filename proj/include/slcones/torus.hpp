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

#include <array>
#include <complex>
#include <optional>

#include "slcones/elliptic.hpp"
#include "slcones/rational.hpp"

namespace slcones::torus {

using Triple = std::array<double, 3>;
using ComplexTriple = std::array<std::complex<double>, 3>;

// Upper end of the J range, 1/(3 sqrt 3).
inline constexpr double kJMax = 0.19245008972987525484;
// Below this J the profile uses the explicit J = 0 solution.
inline constexpr double kClosedFormJ = 1e-8;
inline constexpr double kRootCollision = 1e-12;

// One member (alpha, J) of the S^1-invariant family. lambda is the diagonal
// of the skew generator A = i diag(lambda); mu = (1,1,1) x lambda.
struct FamilyParams {
  double alpha = 0.0;
  double J = 0.0;
  std::optional<Fraction> alpha_exact;
  Triple lambda{};
  Triple mu{};

  double mu_product() const { return mu[0] * mu[1] * mu[2]; }
  double lambda_norm2() const;
};

FamilyParams build_family(double alpha, double J);
FamilyParams build_family(const Fraction& alpha, double J);

// Roots of the profile cubic, stored with their offsets from the J = 0 roots
// -1/(3 mu_i) so that small radii keep full relative precision.
struct GammaSolution {
  Triple roots{};    // Gamma1, Gamma2, Gamma3
  Triple offsets{};  // Gamma_i + 1/(3 mu_i)
  double gap12 = 0;  // Gamma1 - Gamma2
  double gap31 = 0;  // Gamma3 - Gamma1
  double r = 0;
  elliptic::Modulus modulus = elliptic::Modulus::from_k(0.0);
  double quarter = 0;  // K(k)
  double T = 0;

  double gap32() const { return gap12 + gap31; }
  double gamma(double t) const;
  double gamma_dot(double t) const;
};

GammaSolution solve_gamma(const FamilyParams& params);

struct ProfileState {
  double t = 0;
  double gamma = 0;
  Triple R{};
  Triple theta{};
  ComplexTriple z{};
};

struct ConformalFactor {
  Triple y_roots{};  // y1, y2, y3 with y2 <= 0 <= y1 <= y3
  double r_y = 0;
  elliptic::Modulus k_y = elliptic::Modulus::from_k(0.0);

  double y(double t) const;
};

ConformalFactor conformal_factor(const FamilyParams& params);
// y = -mu1 mu2 mu3 gamma + |lambda|^2 / 3 along the gamma solution.
double conformal_y(const FamilyParams& params, const GammaSolution& sol, double t);

struct ClosureData {
  Triple theta_T{};
  double Theta = 0;  // theta2(T) - alpha theta1(T)
};

enum class ProfileKind {
  general,      // elliptic gamma, angles by quadrature
  closed_form,  // J = 0: (c1 cn, i c2 sn, c3 dn)
  clifford,     // alpha = 1: trigonometric gamma
  constant,     // J = 1/(3 sqrt 3): gamma = 0
};

// Evaluates R_i, theta_i, z_i along t. Angles are continuous lifts extended
// by theta(t + T) = theta(t) + theta(T).
class Profile {
 public:
  explicit Profile(FamilyParams params);

  ProfileKind kind() const { return kind_; }
  const FamilyParams& params() const { return params_; }
  // Basic period T; +inf for the alpha = 0, J = 0 limit.
  double period() const { return period_; }
  const Triple& theta_period() const { return theta_period_; }
  // Throws DegenerateFamilyError unless kind() == general.
  const GammaSolution& gamma_solution() const;

  ProfileState at(double t) const;
  double gamma(double t) const;
  double gamma_dot(double t) const;
  ComplexTriple immersion(double s, double t) const;
  ComplexTriple immersion(double s, const ProfileState& state) const;

 private:
  Triple radii_sq(double tau) const;
  Triple theta_integral(double tau) const;
  Triple theta_reduced(double tau) const;

  FamilyParams params_;
  ProfileKind kind_;
  std::optional<GammaSolution> sol_;
  double period_ = 0;
  Triple theta_period_{};
  // closed form data
  double cf_r_ = 0;
  std::optional<elliptic::Modulus> cf_modulus_;
  double cf_quarter_ = 0;
  Triple cf_coeff_{};
  // clifford amplitude |Gamma2|
  double clifford_amp_ = 0;
};

ProfileState profile_at(const Profile& profile, double t);
ComplexTriple immersion_at(const Profile& profile, double s, double t);

ClosureData closure_angle(const FamilyParams& params);
ClosureData closure_from(const Profile& profile);

// Worst residuals over a grid x grid sample of [0, 2 pi) x [0, min(T, 8)),
// derivatives by central differences with step 1e-5.
struct ImmersionResiduals {
  double unit_norm = 0;      // | |u|^2 - 1 |
  double legendrian = 0;     // |Im <u_s, u>|, |Im <u_t, u>|
  double conformal = 0;      // | |u_s|^2 - |u_t|^2 |, |Re <u_s, u_t>|
  double radii_sum = 0;      // | sum R_i^2 - 1 |
  double cos_identity = 0;   // | Re(z1 z2 z3) - J |
  double gamma_dot = 0;      // | gamma' Re(z1 z2 z3) - 2 J Im(z1 z2 z3) |
};

ImmersionResiduals immersion_residuals(const Profile& profile, int grid);

// Sorted real roots of x^3 + a x^2 + b x + c by the trigonometric method.
// Throws DomainError when the cubic has a complex pair.
Triple real_cubic_roots(double a, double b, double c);

}  // namespace slcones::torus
