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
// Serial vs OpenMP timings of the parallel kernels, with a result check.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "slcones/nodal.hpp"
#include "slcones/periodicity.hpp"
#include "slcones/spectrum.hpp"
#include "slcones/torus.hpp"

namespace {

using namespace slcones;
using Clock = std::chrono::steady_clock;

double seconds(const std::function<void()>& job, int repeats) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    job();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
  }
  return best;
}

template <class Kernel, class Same>
void compare(const char* name, Kernel kernel, Same same, int repeats = 3) {
  decltype(kernel(Execution::serial)) serial_out, parallel_out;
  const double ts = seconds([&] { serial_out = kernel(Execution::serial); }, repeats);
  const double tp = seconds([&] { parallel_out = kernel(Execution::parallel); }, repeats);
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, ts / tp,
              same(serial_out, parallel_out) ? "same" : "DIFFERENT");
}

bool same_spectrum(const spectrum::FlatSpectrum& a, const spectrum::FlatSpectrum& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].value != b.entries[i].value ||
        a.entries[i].multiplicity != b.entries[i].multiplicity) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  compare("clifford spectrum n=9 c=200",
          [](Execution e) { return spectrum::clifford_spectrum(9, 200.0, e); }, same_spectrum);

  const auto dual = spectrum::clifford_dual_basis(6);
  compare("flat enumeration n=6 c=300",
          [&](Execution e) {
            spectrum::EnumerationOptions opts;
            opts.exec = e;
            return spectrum::flat_torus_spectrum_dual(dual, 300.0, opts);
          },
          same_spectrum);

  compare("theta scan alpha=0.3 grid=256",
          [](Execution e) { return periodicity::scan_theta(0.3, 256, e).Theta; },
          [](const auto& a, const auto& b) { return a == b; });

  const torus::Profile profile(torus::build_family(Fraction(1, 2), 0.0));
  const auto lattice = periodicity::period_lattice(profile);
  compare("nodal sampling T(1,2) 2048",
          [&](Execution e) {
            return bounds::sample_nodal_grid(profile, lattice, bounds::NodalFunction::H13, 2048, e)
                .values;
          },
          [](const auto& a, const auto& b) { return a == b; });
  return 0;
}
