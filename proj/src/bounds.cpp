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
#include "slcones/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "slcones/area.hpp"
#include "slcones/error.hpp"
#include "slcones/nodal.hpp"

namespace slcones::bounds {
namespace {

using std::numbers::pi;

constexpr int kAmbient = 3;
constexpr int kForcedEigenvalue6 = 7;  // dim SU(3) - dim T^1
constexpr int kForcedEigenvalue2 = 6;  // real coordinate functions

BoundCertificate make(Quantity q, Direction d, Provenance p) {
  BoundCertificate cert{q, d, 0.0, std::move(p)};
  cert.value = reproduce(cert);
  return cert;
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::l_ind:
      return "l_ind";
    case Quantity::s_ind:
      return "s_ind";
    case Quantity::N1:
      return "N1";
    case Quantity::N2:
      return "N2";
    case Quantity::Area:
      return "Area";
  }
  return "?";
}

const char* to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

double Provenance::param(const std::string& key) const {
  for (const auto& [name, value] : params) {
    if (name == key) return value;
  }
  throw DomainError("provenance of " + rule + " lacks " + key);
}

double reproduce(const BoundCertificate& cert) {
  const auto& p = cert.provenance;
  const std::string& rule = p.rule;
  // Courant: c nodal domains leave c - 2 nonzero eigenvalues strictly below.
  if (rule == "courant_l_ind") return p.param("nodal_domains") - 2;
  if (rule == "courant_N1") {
    return 1 + (p.param("nodal_domains") - 2) + p.param("forced_multiplicity");
  }
  if (rule == "courant_N2") {
    return 1 + (p.param("nodal_domains") - 2) + p.param("forced_multiplicity");
  }
  if (rule == "courant_s_ind") {
    const double n2 = 1 + (p.param("nodal_domains") - 2) + p.param("forced_multiplicity");
    return n2 - p.param("b0") - 2 * p.param("n_ambient") - p.param("forced_multiplicity");
  }
  if (rule == "area_cap_N2") return 18 * p.param("area_over_4pi_upper") - 1;
  if (rule == "heat_trace_N2") return N2_upper_from_area(p.param("area"));
  if (rule == "heat_trace_N1") return N1_upper_from_area(p.param("area"));
  if (rule == "heat_trace_area") return area_lower_from_N2(std::lround(p.param("N2")));
  if (rule == "genus_l_ind") return std::max(std::ceil(p.param("d") / 2), 7.0);
  if (rule == "genus_s_ind") {
    const double d = p.param("d");
    return std::max(std::ceil(3 * d / 2 - 8), d - 1);
  }
  if (rule == "genus_area") return p.param("d") * pi / 3;
  if (rule == "tabulated") return p.param("value");
  throw DomainError("unknown certificate rule " + rule);
}

std::vector<BoundCertificate> index_lower_bounds_Tmn(int m, int n) {
  const auto counts = nodal_counts_Tmn(m, n);
  int c2 = 0;
  int c6 = 0;
  for (const auto& c : counts) {
    int& best = eigenvalue_of(c.function_id) == 2 ? c2 : c6;
    best = std::max(best, c.count);
  }
  const double mm = m;
  const double nn = n;
  auto courant = [&](const char* rule, int c, int forced) {
    return Provenance{rule,
                      {{"m", mm},
                       {"n", nn},
                       {"nodal_domains", double(c)},
                       {"forced_multiplicity", double(forced)},
                       {"b0", 1.0},
                       {"n_ambient", double(kAmbient)}}};
  };
  const auto box = area::area_bounds_Tmn(m, n);
  return {
      make(Quantity::N1, Direction::lower, courant("courant_N1", c2, kForcedEigenvalue2)),
      make(Quantity::l_ind, Direction::lower, courant("courant_l_ind", c6, kForcedEigenvalue6)),
      make(Quantity::N2, Direction::lower, courant("courant_N2", c6, kForcedEigenvalue6)),
      make(Quantity::s_ind, Direction::lower, courant("courant_s_ind", c6, kForcedEigenvalue6)),
      make(Quantity::N2, Direction::upper,
           Provenance{"area_cap_N2", {{"m", mm}, {"n", nn}, {"area_over_4pi_upper", box.hi}}}),
  };
}

std::vector<BoundCertificate> index_lower_bounds_u0J(int M, int N) {
  if (M < 4 || N < 7 || std::gcd(M, N) != 1 || !(2 * M > N) ||
      !(static_cast<double>(M) / N < 1 / std::sqrt(3.0))) {
    throw DomainError("ratio " + std::to_string(M) + "/" + std::to_string(N) +
                      " outside (1/2, 1/sqrt 3) or not reduced");
  }
  const auto counts = nodal_counts_u0J(M, N);
  const int c6 = count_of(counts, NodalFunction::Qmu);
  const int c2 = count_of(counts, NodalFunction::ImZ2);
  auto courant = [&](const char* rule, int c, int forced) {
    return Provenance{rule,
                      {{"M", double(M)},
                       {"N", double(N)},
                       {"nodal_domains", double(c)},
                       {"forced_multiplicity", double(forced)},
                       {"b0", 1.0},
                       {"n_ambient", double(kAmbient)}}};
  };
  return {
      make(Quantity::N1, Direction::lower, courant("courant_N1", c2, kForcedEigenvalue2)),
      make(Quantity::l_ind, Direction::lower, courant("courant_l_ind", c6, kForcedEigenvalue6)),
      make(Quantity::N2, Direction::lower, courant("courant_N2", c6, kForcedEigenvalue6)),
      make(Quantity::s_ind, Direction::lower, courant("courant_s_ind", c6, kForcedEigenvalue6)),
  };
}

std::vector<BoundCertificate> tabulated_s_ind_u0J(int M, int N) {
  struct Row {
    int M, N, s_ind;
  };
  constexpr Row rows[] = {{4, 7, 12}, {5, 9, 16}, {6, 11, 20}};
  for (const auto& row : rows) {
    if (row.M == M && row.N == N) {
      return {make(Quantity::s_ind, Direction::lower,
                   Provenance{"tabulated",
                              {{"M", double(M)}, {"N", double(N)}, {"value", double(row.s_ind)}}})};
    }
  }
  return {};
}

double heat_trace_S2_upper(double t, int kcut) {
  if (kcut < 0 || !(t > 2.0 / ((2.0 * kcut + 1) * (2.0 * kcut + 1)))) {
    throw DomainError("heat trace tail bound needs t > 2/(2 kcut + 1)^2");
  }
  double sum = 0.0;
  for (int i = 0; i <= kcut; ++i) sum += (2 * i + 1) * std::exp(-i * (i + 1.0) * t);
  return sum + std::exp(-kcut * (kcut + 1.0) * t) / t;
}

double area_lower_from_heat_trace(long N2, double t, int kcut) {
  if (N2 < 1) throw DomainError("N2 must be at least 1");
  return 4 * pi * (1 + (N2 - 1) * std::exp(-6 * t)) / heat_trace_S2_upper(t, kcut);
}

double area_lower_from_N2(long N2) {
  if (N2 < 1) throw DomainError("N2 must be at least 1");
  return 4 * pi * (1.0 / 7 + (N2 - 1) / 18.0);
}

double N2_upper_from_area(double area) {
  if (!(area > 0)) throw DomainError("area must be positive");
  return 18 * area / (4 * pi) - 11.0 / 7;
}

double N1_upper_from_area(double area) {
  if (!(area > 0)) throw DomainError("area must be positive");
  return 13 / (8 * pi) * area - 7.0 / 6;
}

std::vector<BoundCertificate> genus_bounds(int d) {
  if (d < 3) throw DomainError("spectral genus bounds need d >= 3");
  const Provenance p{"", {{"d", double(d)}}};
  auto with_rule = [&](const char* rule) {
    Provenance q = p;
    q.rule = rule;
    return q;
  };
  return {
      make(Quantity::l_ind, Direction::lower, with_rule("genus_l_ind")),
      make(Quantity::s_ind, Direction::lower, with_rule("genus_s_ind")),
      make(Quantity::Area, Direction::lower, with_rule("genus_area")),
  };
}

}  // namespace slcones::bounds
