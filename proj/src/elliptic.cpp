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
#include "slcones/elliptic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "slcones/error.hpp"

namespace slcones::elliptic {
namespace {

constexpr int kMaxAgmSteps = 64;
constexpr double kLandenStop = 1e-12;

void require_open_unit(const Modulus& m, const char* what) {
  if (!(m.k() > 0.0)) {
    throw DomainError(std::string(what) + ": requires 0 < k < 1");
  }
}

}  // namespace

Modulus Modulus::from_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("modulus k must lie in [0,1), got " + std::to_string(k));
  }
  return Modulus(k, k * k, (1.0 - k) * (1.0 + k));
}

Modulus Modulus::from_k2(double k2, double kprime2) {
  if (!(k2 >= 0.0 && kprime2 > 0.0) ||
      std::abs(k2 + kprime2 - 1.0) > 8 * std::numeric_limits<double>::epsilon()) {
    throw DomainError("modulus k^2 must lie in [0,1) with k^2 + k'^2 = 1");
  }
  return Modulus(std::sqrt(k2), k2, kprime2);
}

double complete_K(const Modulus& m) {
  double a = 1.0;
  double b = std::sqrt(m.kprime2());
  for (int i = 0; i < kMaxAgmSteps && a - b > 1e-16 * a; ++i) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return std::numbers::pi / (a + b);
}

double complete_E(const Modulus& m) {
  // E = K (1 - sum_n 2^{n-1} c_n^2) along the AGM sequence.
  double a = 1.0;
  double b = std::sqrt(m.kprime2());
  double c = m.k();
  double weight = 0.5;
  double sum = weight * c * c;
  for (int i = 0; i < kMaxAgmSteps && c > 1e-17 * a; ++i) {
    const double next = 0.5 * (a + b);
    c = c * c / (4.0 * next);
    b = std::sqrt(a * b);
    a = next;
    weight *= 2.0;
    sum += weight * c * c;
  }
  const double K = std::numbers::pi / (2.0 * a);
  return K * (1.0 - sum);
}

double complete_E(double k) {
  if (k == 1.0) return 1.0;
  return complete_E(Modulus::from_k(k));
}

double dE_dk(const Modulus& m) {
  require_open_unit(m, "dE_dk");
  return (complete_E(m) - complete_K(m)) / m.k();
}

double dK_dk(const Modulus& m) {
  require_open_unit(m, "dK_dk");
  const double K = complete_K(m);
  const double E = complete_E(m);
  return (E - m.kprime2() * K) / (m.k() * m.kprime2());
}

JacobiTriple jacobi_sn_cn_dn(double u, const Modulus& m) {
  return jacobi_sn_cn_dn(u, m, complete_K(m));
}

JacobiTriple jacobi_sn_cn_dn(double u, const Modulus& m, double quarter_period) {
  const double K = quarter_period;
  double x = std::fmod(u, 4.0 * K);
  if (x < 0.0) x += 4.0 * K;
  double sn_sign = 1.0;
  double cn_sign = 1.0;
  if (x > 2.0 * K) {
    x -= 2.0 * K;
    sn_sign = -1.0;
    cn_sign = -1.0;
  }
  if (x > K) {
    x = 2.0 * K - x;
    cn_sign = -cn_sign;
  }

  std::array<double, kMaxAgmSteps + 1> a{};
  std::array<double, kMaxAgmSteps + 1> c{};
  a[0] = 1.0;
  c[0] = m.k();
  double b = std::sqrt(m.kprime2());
  int depth = 0;
  while (depth < kMaxAgmSteps && c[depth] > kLandenStop * a[depth]) {
    a[depth + 1] = 0.5 * (a[depth] + b);
    c[depth + 1] = 0.5 * (a[depth] - b);
    b = std::sqrt(a[depth] * b);
    ++depth;
  }
  double phi = std::ldexp(a[depth] * x, depth);
  for (int level = depth; level > 0; --level) {
    phi = 0.5 * (phi + std::asin(c[level] / a[level] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(m.kprime2() + m.k2() * cn * cn);
  return {sn_sign * sn, cn_sign * cn, dn};
}

}  // namespace slcones::elliptic
