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

namespace slcones::elliptic {

struct Tolerances {
  double value_abs = 1e-12;
  double cross_validation = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

// Elliptic modulus 0 <= k < 1 with its complement kept separately so that
// k' stays accurate when k is close to 1.
class Modulus {
 public:
  static Modulus from_k(double k);
  // k2 and kprime2 must sum to one; callers that know the complement
  // exactly (e.g. from root gaps) pass it here.
  static Modulus from_k2(double k2, double kprime2);
  static Modulus from_k2(double k2) { return from_k2(k2, 1.0 - k2); }

  double k() const { return k_; }
  double k2() const { return k2_; }
  double kprime2() const { return kprime2_; }

 private:
  Modulus(double k, double k2, double kprime2)
      : k_(k), k2_(k2), kprime2_(kprime2) {}
  double k_;
  double k2_;
  double kprime2_;
};

double complete_K(const Modulus& m);
double complete_E(const Modulus& m);
// Also accepts k = 1, where E = 1.
double complete_E(double k);

// dE/dk = (E - K)/k and dK/dk = (E - k'^2 K)/(k k'^2); 0 < k < 1.
double dE_dk(const Modulus& m);
double dK_dk(const Modulus& m);

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Argument is reduced to [0, K] first, then the descending Landen (AGM)
// sequence runs until the modulus falls below 1e-12.
JacobiTriple jacobi_sn_cn_dn(double u, const Modulus& m);
// Same, with K(m) supplied by the caller to skip recomputing it.
JacobiTriple jacobi_sn_cn_dn(double u, const Modulus& m, double quarter_period);

}  // namespace slcones::elliptic
