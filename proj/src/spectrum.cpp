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
#include "slcones/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>

#include "slcones/error.hpp"

namespace slcones::spectrum {
namespace {

constexpr double kPi = std::numbers::pi;
// Values within this relative slack of the cutoff still count as inside.
constexpr double kCutoffSlack = 1e-9;

bool near(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

Eigen::MatrixXd to_matrix(const Basis& basis) {
  if (basis.size() < 1) throw DomainError("empty basis");
  const auto dim = basis.front().size();
  Eigen::MatrixXd m(basis.size(), dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != dim) throw DomainError("basis vectors have different lengths");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = basis[i][j];
  }
  return m;
}

// Enumerates x in Z^k with x^T Q x <= bound, Q = R^T R, R upper triangular.
class BallEnumerator {
 public:
  BallEnumerator(const Eigen::MatrixXd& R, double bound, std::int64_t budget,
                 std::atomic<std::int64_t>& visited)
      : R_(R), k_(static_cast<int>(R.rows())), bound_(bound), budget_(budget),
        visited_(visited), x_(k_, 0) {}

  // Fixes the last coordinate and enumerates the rest.
  void run_with_leading(std::int64_t lead, std::vector<double>& out) {
    const int top = k_ - 1;
    x_[top] = lead;
    const double d = R_(top, top) * static_cast<double>(lead);
    if (d * d > bound_) return;
    if (top == 0) {
      out.push_back(d * d);
      return;
    }
    descend(top - 1, d * d, out);
    flush();
  }

  std::int64_t leading_range() const {
    return static_cast<std::int64_t>(std::floor(std::sqrt(bound_) / R_(k_ - 1, k_ - 1) + 1e-9));
  }

 private:
  void descend(int i, double partial, std::vector<double>& out) {
    double center = 0.0;
    for (int j = i + 1; j < k_; ++j) center -= R_(i, j) * static_cast<double>(x_[j]);
    center /= R_(i, i);
    const double room = bound_ - partial;
    if (room < 0.0) return;
    const double half = std::sqrt(room) / R_(i, i);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - half - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(center + half + 1e-9));
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (++local_visits_ >= 4096) flush();
      const double d = R_(i, i) * (static_cast<double>(v) - center);
      const double value = partial + d * d;
      if (value > bound_) continue;
      x_[i] = v;
      if (i == 0) {
        out.push_back(value);
      } else {
        descend(i - 1, value, out);
      }
    }
  }

  void flush() {
    if (visited_.fetch_add(local_visits_) + local_visits_ > budget_) {
      throw BudgetExceededError("lattice enumeration exceeds the point budget of " +
                                std::to_string(budget_) + "; lower the cutoff");
    }
    local_visits_ = 0;
  }

  const Eigen::MatrixXd& R_;
  int k_;
  double bound_;
  std::int64_t budget_;
  std::atomic<std::int64_t>& visited_;
  std::vector<std::int64_t> x_;
  std::int64_t local_visits_ = 0;
};

FlatSpectrum cluster(std::vector<double> values, double cutoff, double tol, std::string source) {
  std::sort(values.begin(), values.end());
  FlatSpectrum spec;
  spec.cutoff = cutoff;
  spec.source = std::move(source);
  std::size_t i = 0;
  while (i < values.size()) {
    const double start = values[i];
    double sum = 0.0;
    std::size_t j = i;
    while (j < values.size() && values[j] - start <= tol * std::max(1.0, std::abs(start))) {
      sum += values[j];
      ++j;
    }
    const double mean = sum / static_cast<double>(j - i);
    spec.entries.push_back({start == 0.0 ? 0.0 : mean, static_cast<std::int64_t>(j - i)});
    i = j;
  }
  return spec;
}

FlatSpectrum spectrum_from_dual_gram(const Eigen::MatrixXd& dual_gram, double cutoff,
                                     const EnumerationOptions& options, std::string source) {
  if (!(cutoff > 0.0)) throw DomainError("cutoff must be positive");
  const Eigen::MatrixXd Q = 4.0 * kPi * kPi * dual_gram;
  Eigen::LLT<Eigen::MatrixXd> llt(Q);
  if (llt.info() != Eigen::Success) throw DomainError("basis is not linearly independent");
  const Eigen::MatrixXd R = llt.matrixU();
  const double bound = cutoff * (1.0 + kCutoffSlack);

  std::atomic<std::int64_t> visited{0};
  const std::int64_t range = BallEnumerator(R, bound, options.point_budget, visited).leading_range();
  const auto slots = static_cast<std::int64_t>(2 * range + 1);
  std::vector<std::vector<double>> parts(slots);
  if (options.exec == Execution::serial) {
    BallEnumerator walker(R, bound, options.point_budget, visited);
    for (std::int64_t s = 0; s < slots; ++s) walker.run_with_leading(s - range, parts[s]);
  } else {
    std::exception_ptr failure;
#pragma omp parallel
    {
      BallEnumerator walker(R, bound, options.point_budget, visited);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t s = 0; s < slots; ++s) {
        try {
          walker.run_with_leading(s - range, parts[s]);
        } catch (...) {
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<double> values;
  for (auto& p : parts) values.insert(values.end(), p.begin(), p.end());
  return cluster(std::move(values), cutoff, options.cluster_tolerance, std::move(source));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Exact enumeration of n sum k^2 - (sum k)^2 <= cap over Z^{n-1}.
class CliffordEnumerator {
 public:
  CliffordEnumerator(int n, std::int64_t cap) : n_(n), dims_(n - 1), cap_(cap) {}

  void run_with_leading(std::int64_t lead, std::map<std::int64_t, std::int64_t>& counts) {
    if (lower_bound(lead, lead * lead, dims_ - 1) > 0) return;
    descend(1, lead, lead * lead, counts);
  }

  std::int64_t leading_range() const {
    std::int64_t k = 0;
    while (lower_bound(k + 1, (k + 1) * (k + 1), dims_ - 1) <= 0) ++k;
    return k;
  }

 private:
  // Positive iff every completion of the partial assignment exceeds cap:
  // the minimum over reals is n s2 - n s^2/(n - r) with r coordinates left.
  std::int64_t lower_bound(std::int64_t s, std::int64_t s2, int remaining) const {
    const std::int64_t m = n_ - remaining;
    return n_ * s2 * m - n_ * s * s - cap_ * m;
  }

  void descend(int level, std::int64_t s, std::int64_t s2,
               std::map<std::int64_t, std::int64_t>& counts) {
    if (level == dims_) {
      ++counts[n_ * s2 - s * s];
      return;
    }
    const int remaining = dims_ - level - 1;
    const std::int64_t start =
        static_cast<std::int64_t>(std::llround(static_cast<double>(s) / (n_ - remaining - 1)));
    for (std::int64_t v = start;; ++v) {
      if (lower_bound(s + v, s2 + v * v, remaining) > 0) break;
      descend(level + 1, s + v, s2 + v * v, counts);
    }
    for (std::int64_t v = start - 1;; --v) {
      if (lower_bound(s + v, s2 + v * v, remaining) > 0) break;
      descend(level + 1, s + v, s2 + v * v, counts);
    }
  }

  int n_;
  int dims_;
  std::int64_t cap_;
};

}  // namespace

std::int64_t FlatSpectrum::count_closed(double lo, double hi) const {
  std::int64_t total = 0;
  for (const auto& e : entries) {
    if ((e.value >= lo || near(e.value, lo)) && (e.value <= hi || near(e.value, hi))) {
      total += e.multiplicity;
    }
  }
  return total;
}

std::int64_t FlatSpectrum::count_open(double lo, double hi) const {
  std::int64_t total = 0;
  for (const auto& e : entries) {
    if (e.value > lo && e.value < hi && !near(e.value, lo) && !near(e.value, hi)) {
      total += e.multiplicity;
    }
  }
  return total;
}

std::int64_t FlatSpectrum::multiplicity_of(double value) const {
  for (const auto& e : entries) {
    if (near(e.value, value)) return e.multiplicity;
  }
  return 0;
}

FlatSpectrum flat_torus_spectrum(const Basis& basis, double cutoff,
                                 const EnumerationOptions& options) {
  const Eigen::MatrixXd B = to_matrix(basis);
  if (B.rows() < 2 || B.rows() > 11 || B.cols() < B.rows()) {
    throw DomainError("flat torus basis needs 2..11 vectors of dimension >= their count");
  }
  const Eigen::MatrixXd gram = B * B.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) throw DomainError("basis is not linearly independent");
  return spectrum_from_dual_gram(lu.inverse(), cutoff, options, "lattice basis");
}

FlatSpectrum flat_torus_spectrum_dual(const Basis& dual_basis, double cutoff,
                                      const EnumerationOptions& options) {
  const Eigen::MatrixXd B = to_matrix(dual_basis);
  if (B.rows() < 2 || B.rows() > 11 || B.cols() < B.rows()) {
    throw DomainError("flat torus basis needs 2..11 vectors of dimension >= their count");
  }
  return spectrum_from_dual_gram(B * B.transpose(), cutoff, options, "dual lattice basis");
}

Basis clifford_dual_basis(int n) {
  if (n < 2) throw DomainError("clifford_dual_basis needs n >= 2");
  const double scale = 1.0 / (2.0 * kPi * std::sqrt(static_cast<double>(n)));
  Basis out(n - 1, std::vector<double>(n, -scale));
  for (int i = 0; i < n - 1; ++i) out[i][i] = (n - 1) * scale;
  return out;
}

FlatSpectrum clifford_spectrum(int n, double cutoff, Execution exec) {
  if (n < 3 || n > 12) throw DomainError("clifford_spectrum needs 3 <= n <= 12");
  if (!(cutoff >= 0.0)) throw DomainError("cutoff must be nonnegative");
  const auto cap = static_cast<std::int64_t>(std::floor(cutoff + 1e-9));
  const std::int64_t range = CliffordEnumerator(n, cap).leading_range();
  const auto slots = 2 * range + 1;
  std::vector<std::map<std::int64_t, std::int64_t>> parts(slots);
  if (exec == Execution::serial) {
    CliffordEnumerator walker(n, cap);
    for (std::int64_t s = 0; s < slots; ++s) walker.run_with_leading(s - range, parts[s]);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < slots; ++s) {
      CliffordEnumerator walker(n, cap);
      walker.run_with_leading(s - range, parts[s]);
    }
  }
  std::map<std::int64_t, std::int64_t> counts;
  for (const auto& p : parts) {
    for (const auto& [value, mult] : p) counts[value] += mult;
  }
  FlatSpectrum spec;
  spec.cutoff = cutoff;
  spec.source = "clifford n=" + std::to_string(n);
  for (const auto& [value, mult] : counts) spec.entries.push_back({static_cast<double>(value), mult});
  return spec;
}

FlatSpectrum sphere_spectrum(int dim, int kmax) {
  if (dim < 2) throw DomainError("sphere_spectrum needs dim >= 2");
  if (kmax < 0) throw DomainError("kmax must be nonnegative");
  FlatSpectrum spec;
  spec.source = "sphere S^" + std::to_string(dim);
  for (int k = 0; k <= kmax; ++k) {
    const double value = static_cast<double>(k) * (k + dim - 1);
    const std::int64_t mult = binomial(dim + k, k) - binomial(dim + k - 2, k - 2);
    spec.entries.push_back({value, mult});
  }
  spec.cutoff = static_cast<double>(kmax) * (kmax + dim - 1);
  return spec;
}

double lambda_pq(int n, int p, int q) {
  if (p < 0 || q < 0 || p + q > n - 1) throw DomainError("lambda_pq needs p, q >= 0 and p + q <= n - 1");
  return static_cast<double>((p + q) * n - (p - q) * (p - q));
}

std::int64_t N_sigma(const FlatSpectrum& spec, int n_ambient, double beta) {
  const double n2 = n_ambient - 2.0;
  const double level = beta * (beta + n2);
  if (beta >= 0.0) {
    if (level > spec.cutoff * (1.0 + kCutoffSlack)) {
      throw IncompleteSpectrumError("spectrum is not complete up to " + std::to_string(level));
    }
    return spec.count_closed(0.0, level);
  }
  if (beta > -n2) return 0;
  if (level > spec.cutoff * (1.0 + kCutoffSlack)) {
    throw IncompleteSpectrumError("spectrum is not complete up to " + std::to_string(level));
  }
  // alpha^- = -(n-2)/2 - sqrt((n-2)^2/4 + lambda) lies in (beta, 0) iff lambda < level.
  return -spec.count_open(-1.0, level);
}

std::int64_t IndexReport::forced_2n() const {
  return static_cast<std::int64_t>(n_ambient) * n_ambient - 1 - dim_G;
}

IndexReport index_report(const FlatSpectrum& spec, int n_ambient, int dim_G, int b0) {
  const double two_n = 2.0 * n_ambient;
  if (spec.cutoff < two_n * (1.0 - kCutoffSlack)) {
    throw IncompleteSpectrumError("index report needs the spectrum complete up to 2n = " +
                                  std::to_string(static_cast<int>(two_n)));
  }
  IndexReport report;
  report.n_ambient = n_ambient;
  report.dim_G = dim_G;
  report.b0 = b0;
  for (double beta : {0.0, 1.0, 2.0}) report.N_of[beta] = N_sigma(spec, n_ambient, beta);
  for (double a : {0.0, 1.0, 2.0}) {
    report.m_of[a] = spec.multiplicity_of(a * (a + n_ambient - 2.0));
  }
  const double half = 0.5 * (n_ambient - 2.0);
  for (const auto& e : spec.entries) {
    const double root = std::sqrt(half * half + e.value);
    report.D_elements.push_back(-half - root);
    report.D_elements.push_back(-half + root);
  }
  std::sort(report.D_elements.begin(), report.D_elements.end());
  report.l_ind = spec.count_open(0.0, two_n);
  report.mult_2n = spec.multiplicity_of(two_n);
  report.s_ind = report.N_of[2.0] - b0 - 2 * n_ambient - report.forced_2n();
  return report;
}

std::string to_csv(const FlatSpectrum& spec) {
  std::string out = "eigenvalue,multiplicity,cumulative_N\n";
  std::int64_t cumulative = 0;
  char buf[64];
  for (const auto& e : spec.entries) {
    cumulative += e.multiplicity;
    std::snprintf(buf, sizeof buf, "%.12g", e.value);
    out += buf;
    out += "," + std::to_string(e.multiplicity) + "," + std::to_string(cumulative) + "\n";
  }
  return out;
}

}  // namespace slcones::spectrum
