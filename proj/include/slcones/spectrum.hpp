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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slcones/execution.hpp"

namespace slcones::spectrum {

struct SpectralEntry {
  double value = 0;
  std::int64_t multiplicity = 0;
};

// Sorted eigenvalues with multiplicity, complete up to cutoff.
struct FlatSpectrum {
  std::vector<SpectralEntry> entries;
  double cutoff = 0;
  std::string source;

  // Eigenvalues counted with multiplicity in [lo, hi] (closed) or (lo, hi).
  std::int64_t count_closed(double lo, double hi) const;
  std::int64_t count_open(double lo, double hi) const;
  std::int64_t multiplicity_of(double value) const;
};

// Rows are vectors; a k-dimensional lattice needs k rows of equal length.
using Basis = std::vector<std::vector<double>>;

struct EnumerationOptions {
  std::int64_t point_budget = 100'000'000;
  double cluster_tolerance = 1e-9;
  Execution exec = Execution::parallel;
};

// Spectrum 4 pi^2 |x|^2, x in the dual lattice of the lattice spanned by
// basis, by Fincke-Pohst enumeration of the ball of radius sqrt(cutoff)/2pi.
FlatSpectrum flat_torus_spectrum(const Basis& basis, double cutoff,
                                 const EnumerationOptions& options = {});
// Same, given a basis of the dual lattice directly.
FlatSpectrum flat_torus_spectrum_dual(const Basis& dual_basis, double cutoff,
                                      const EnumerationOptions& options = {});

// V_i = (n e_i - sum_j e_j) / (2 pi sqrt n), i = 1..n-1.
Basis clifford_dual_basis(int n);

// n sum k_i^2 - (sum k_i)^2 over k in Z^{n-1}, in exact integer arithmetic.
FlatSpectrum clifford_spectrum(int n, double cutoff, Execution exec = Execution::parallel);

// Round S^dim: k(k + dim - 1) with harmonic-polynomial multiplicities.
FlatSpectrum sphere_spectrum(int dim, int kmax);

// Clifford eigenvalue (p + q) n - (p - q)^2.
double lambda_pq(int n, int p, int q);

struct IndexReport {
  int n_ambient = 0;
  int dim_G = 0;
  int b0 = 0;
  std::map<double, std::int64_t> N_of;  // beta -> N(beta)
  std::map<double, std::int64_t> m_of;  // alpha -> m(alpha)
  std::vector<double> D_elements;       // alpha^{+-} of every eigenvalue <= cutoff
  std::int64_t l_ind = 0;
  std::int64_t s_ind = 0;
  std::int64_t mult_2n = 0;

  std::int64_t forced_2n() const;  // dim SU(n) - dim G
  bool strictly_stable() const { return s_ind == 0; }
  bool legendrian_stable() const { return l_ind == 2 * n_ambient; }
  bool rigid() const { return mult_2n == forced_2n(); }
};

// N(beta) = #eigenvalues in [0, beta(beta + n - 2)] for beta >= 0; zero on
// (2 - n, 0).
std::int64_t N_sigma(const FlatSpectrum& spec, int n_ambient, double beta);

IndexReport index_report(const FlatSpectrum& spec, int n_ambient, int dim_G, int b0);

// Header "eigenvalue,multiplicity,cumulative_N", LF endings.
std::string to_csv(const FlatSpectrum& spec);

}  // namespace slcones::spectrum
