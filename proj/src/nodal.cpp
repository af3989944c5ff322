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
#include "slcones/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numeric>
#include <string>

#include "slcones/error.hpp"

namespace slcones::bounds {
namespace {

using torus::ComplexTriple;

constexpr const char* kNames[] = {"G12",  "H12",  "G13",  "H13",  "G23", "H23",
                                  "ReZ1", "ReZ2", "ReZ3", "ImZ2", "Qmu"};

std::complex<double> pair_product(const ComplexTriple& u, int i, int j) {
  return u[i] * std::conj(u[j]);
}

}  // namespace

const char* to_string(NodalFunction f) { return kNames[static_cast<int>(f)]; }

std::optional<NodalFunction> parse_nodal_function(std::string_view name) {
  for (NodalFunction f : kAllNodalFunctions) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

int eigenvalue_of(NodalFunction f) {
  switch (f) {
    case NodalFunction::ReZ1:
    case NodalFunction::ReZ2:
    case NodalFunction::ReZ3:
    case NodalFunction::ImZ2:
      return 2;
    default:
      return 6;
  }
}

double evaluate(NodalFunction f, const ComplexTriple& u, const torus::Triple& mu) {
  switch (f) {
    case NodalFunction::G12:
      return pair_product(u, 0, 1).real();
    case NodalFunction::H12:
      return pair_product(u, 0, 1).imag();
    case NodalFunction::G13:
      return pair_product(u, 0, 2).real();
    case NodalFunction::H13:
      return pair_product(u, 0, 2).imag();
    case NodalFunction::G23:
      return pair_product(u, 1, 2).real();
    case NodalFunction::H23:
      return pair_product(u, 1, 2).imag();
    case NodalFunction::ReZ1:
      return u[0].real();
    case NodalFunction::ReZ2:
      return u[1].real();
    case NodalFunction::ReZ3:
      return u[2].real();
    case NodalFunction::ImZ2:
      return u[1].imag();
    case NodalFunction::Qmu:
      return mu[0] * std::norm(u[0]) + mu[1] * std::norm(u[1]) + mu[2] * std::norm(u[2]);
  }
  return 0.0;
}

std::vector<NodalCount> nodal_counts_Tmn(int m, int n) {
  if (!(0 < m && m < n) || std::gcd(m, n) != 1) {
    throw DomainError("nodal counts need coprime 0 < m < n");
  }
  const bool even = (static_cast<long>(m) * n) % 2 == 0;
  const Parity parity = even ? Parity::even : Parity::odd;
  const int full[] = {8 * n - 8 * m, 8 * n - 8 * m, 8 * n + 4 * m, 8 * n + 4 * m,
                      4 * n + 8 * m, 4 * n + 8 * m, 4 * n,         4 * m,
                      2 * m + 2 * n, 4 * m,         4};
  std::vector<NodalCount> out;
  for (NodalFunction f : kAllNodalFunctions) {
    const int c = full[static_cast<int>(f)];
    out.push_back({f, even ? c : c / 2, parity});
  }
  return out;
}

std::vector<NodalCount> nodal_counts_u0J(int M, int N) {
  if (M <= 0 || N <= 0 || std::gcd(M, N) != 1) throw DomainError("closure ratio M/N must be reduced");
  const Parity parity = M % 2 == 0 ? Parity::even : Parity::odd;
  return {{NodalFunction::Qmu, 2 * N, parity}, {NodalFunction::ImZ2, 2 * M, parity}};
}

int count_of(const std::vector<NodalCount>& counts, NodalFunction f) {
  for (const auto& c : counts) {
    if (c.function_id == f) return c.count;
  }
  throw DomainError(std::string("no closed-form count for ") + to_string(f));
}

int count_sign_regions(const SignGrid& grid) {
  const int ns = grid.ns;
  const int nt = grid.nt;
  if (ns <= 0 || nt <= 0 || grid.values.size() != static_cast<std::size_t>(ns) * nt) {
    throw DomainError("malformed sign grid");
  }
  double scale = 0.0;
  for (double v : grid.values) scale = std::max(scale, std::abs(v));
  const double zero = 1e-9 * scale;
  auto sign_at = [&](int cell) {
    const double v = grid.values[cell];
    return std::abs(v) < zero || v == 0.0 ? 0 : (v > 0 ? 1 : -1);
  };
  auto wrap = [ns](int i) { return ((i % ns) + ns) % ns; };

  std::vector<int> label(grid.values.size(), -1);
  std::vector<int> stack;
  int regions = 0;
  for (int start = 0; start < ns * nt; ++start) {
    const int sign = sign_at(start);
    if (sign == 0 || label[start] >= 0) continue;
    label[start] = regions;
    stack.push_back(start);
    while (!stack.empty()) {
      const int cell = stack.back();
      stack.pop_back();
      const int row = cell / ns;
      const int col = cell % ns;
      int next[4] = {row * ns + wrap(col + 1), row * ns + wrap(col - 1), 0, 0};
      next[2] = row + 1 < nt ? (row + 1) * ns + col : wrap(col - grid.shift);
      next[3] = row > 0 ? (row - 1) * ns + col : (nt - 1) * ns + wrap(col + grid.shift);
      for (int nb : next) {
        if (label[nb] < 0 && sign_at(nb) == sign) {
          label[nb] = regions;
          stack.push_back(nb);
        }
      }
    }
    ++regions;
  }
  return regions;
}

SignGrid sample_nodal_grid(const torus::Profile& profile,
                           const periodicity::PeriodLattice& lattice, NodalFunction f,
                           int resolution, Execution exec) {
  if (resolution < 64) throw DomainError("nodal grid resolution must be at least 64");
  const double W = lattice.omega1.s;
  const double H = lattice.omega2.t;
  SignGrid grid;
  grid.ns = resolution;
  grid.nt = resolution;
  grid.shift = static_cast<int>(std::lround(lattice.omega2.s / W * resolution)) % resolution;
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);

  const auto& lambda = profile.params().lambda;
  const auto& mu = profile.params().mu;
  std::vector<ComplexTriple> phases(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double s = (i + 0.5) * W / resolution;
    for (int c = 0; c < 3; ++c) phases[i][c] = std::polar(1.0, lambda[c] * s);
  }
  auto fill_row = [&](int j) {
    const auto state = profile.at((j + 0.5) * H / resolution);
    for (int i = 0; i < resolution; ++i) {
      ComplexTriple u;
      for (int c = 0; c < 3; ++c) u[c] = phases[i][c] * state.z[c];
      grid.values[static_cast<std::size_t>(j) * resolution + i] = evaluate(f, u, mu);
    }
  };
  if (exec == Execution::serial) {
    for (int j = 0; j < resolution; ++j) fill_row(j);
    return grid;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (int j = 0; j < resolution; ++j) {
    try {
      fill_row(j);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

int nodal_grid_count(const torus::Profile& profile, const periodicity::PeriodLattice& lattice,
                     NodalFunction f, int resolution, Execution exec) {
  const int coarse = count_sign_regions(sample_nodal_grid(profile, lattice, f, resolution, exec));
  const int fine = count_sign_regions(sample_nodal_grid(profile, lattice, f, 2 * resolution, exec));
  if (coarse != fine) {
    throw UnstableCountError(std::string(to_string(f)) + ": " + std::to_string(coarse) +
                             " regions at resolution " + std::to_string(resolution) + " but " +
                             std::to_string(fine) + " at " + std::to_string(2 * resolution));
  }
  return fine;
}

}  // namespace slcones::bounds
