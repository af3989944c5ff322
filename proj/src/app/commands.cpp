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
#include "slcones/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "slcones/area.hpp"
#include "slcones/bounds.hpp"
#include "slcones/error.hpp"
#include "slcones/periodicity.hpp"
#include "slcones/spectrum.hpp"
#include "slcones/torus.hpp"

namespace slcones::app {
namespace {

using std::numbers::pi;

constexpr double kResidualLimit = 1e-6;
constexpr double kLatticeLimit = 1e-7;
constexpr std::uint64_t kLatticeSeed = 20260101;

std::string tmn_label(int m, int n) { return fmt::format("T({},{})", m, n); }
std::string ratio_label(int M, int N) { return fmt::format("{}/{}", M, N); }

bool contains(const std::vector<int>& list, int value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

double s_ind_bound(const std::vector<bounds::BoundCertificate>& certs) {
  for (const auto& c : certs) {
    if (c.quantity == bounds::Quantity::s_ind && c.direction == bounds::Direction::lower) {
      return c.value;
    }
  }
  throw NotFoundError("no s_ind certificate");
}

// Largest lower bound <= smallest upper bound, per quantity.
void add_consistency_rows(Report& report) {
  std::map<bounds::Quantity, std::pair<double, double>> range;
  for (const auto& c : report.certificates) {
    auto [it, fresh] = range.try_emplace(c.quantity, -std::numeric_limits<double>::infinity(),
                                         std::numeric_limits<double>::infinity());
    if (c.direction == bounds::Direction::lower) {
      it->second.first = std::max(it->second.first, c.value);
    } else {
      it->second.second = std::min(it->second.second, c.value);
    }
  }
  for (const auto& [q, lohi] : range) {
    if (!std::isfinite(lohi.first) || !std::isfinite(lohi.second)) continue;
    report.rows.push_back(checked_row(fmt::format("{} lower <= upper", bounds::to_string(q)),
                                      lohi.second - lohi.first, lohi.first <= lohi.second,
                                      fmt::format("{} vs {}", format_number(lohi.first),
                                                  format_number(lohi.second))));
  }
}

DataTable spectrum_table(const spectrum::FlatSpectrum& spec) {
  DataTable table{{"eigenvalue", "multiplicity", "cumulative_N"}, {}};
  std::int64_t cumulative = 0;
  for (const auto& e : spec.entries) {
    cumulative += e.multiplicity;
    table.rows.push_back({fmt::format("{:.12g}", e.value), std::to_string(e.multiplicity),
                          std::to_string(cumulative)});
  }
  return table;
}

void add_index_rows(Report& report, const spectrum::IndexReport& idx) {
  report.rows.push_back(checked_row("N(1)", double(idx.N_of.at(1.0)), true));
  report.rows.push_back(checked_row("N(2)", double(idx.N_of.at(2.0)), true));
  report.rows.push_back(checked_row("l_ind", double(idx.l_ind), true));
  report.rows.push_back(checked_row("s_ind", double(idx.s_ind), true));
  report.rows.push_back(checked_row("mult(2n)", double(idx.mult_2n), true));
  report.rows.push_back(checked_row("forced mult(2n)", double(idx.forced_2n()), true));
}

}  // namespace

U0JTorus solve_u0J(int M, int N, int bracket_grid, Execution exec) {
  const auto roots = periodicity::find_J_for_ratio(0.0, M, N, bracket_grid, exec);
  U0JTorus out;
  out.roots_found = static_cast<int>(roots.size());
  out.J = roots.front();
  const torus::Profile profile(torus::build_family(Fraction(0), out.J));
  const auto lattice = periodicity::period_lattice(profile);
  out.area = area::torus_area(profile, lattice);
  out.lattice_residual = periodicity::lattice_residual(profile, lattice, 10, kLatticeSeed);
  return out;
}

Report cmd_table1(const CommandOptions& options) {
  const auto tables = load_reference_tables(options.tables);
  const double tol = options.tol.value_or(tables.tolerances.area_over_4pi);
  const double tol_linear = options.tol.value_or(tables.tolerances.linear_approx);
  Report report;
  report.title = "Table 1: tori T(m,n) with small area";
  for (const auto& col : tables.table1) {
    const std::string tag = tmn_label(col.m, col.n);
    const auto a = area::area_Tmn(col.m, col.n);
    report.rows.push_back(compared_row("Area/4pi " + tag, a.over_4pi, col.area_over_4pi, tol));
    if (col.linear_approx) {
      report.rows.push_back(compared_row("linear approx " + tag,
                                         area::area_linear_approx(col.m, col.n),
                                         *col.linear_approx, tol_linear));
    }
    if (col.s_ind_exact) {
      // the Clifford torus: exact index from its flat spectrum
      const auto spec = spectrum::clifford_spectrum(3, 7.0, options.exec);
      const auto idx = spectrum::index_report(spec, 3, 2, 1);
      report.rows.push_back(compared_row("s-ind " + tag, double(idx.s_ind), col.s_ind, 0.0));
    } else {
      const auto certs = bounds::index_lower_bounds_Tmn(col.m, col.n);
      report.rows.push_back(compared_row("s-ind lower " + tag, s_ind_bound(certs), col.s_ind, 0.0));
      const auto box = area::area_bounds_Tmn(col.m, col.n);
      report.rows.push_back(checked_row("area bracket " + tag, a.over_4pi,
                                        box.lo < a.over_4pi && a.over_4pi < box.hi,
                                        fmt::format("bracket {} .. {}", format_number(box.lo),
                                                    format_number(box.hi))));
    }
  }
  return report;
}

Report cmd_table2(const CommandOptions& options) {
  const auto tables = load_reference_tables(options.tables);
  const double tol = options.tol.value_or(tables.tolerances.area_over_4pi);
  const int grid = options.grid.value_or(512);
  Report report;
  report.title = "Table 2: tori u(0,J) with small area";
  for (const auto& col : tables.table2) {
    const std::string tag = ratio_label(col.M, col.N);
    const auto torus = solve_u0J(col.M, col.N, grid, options.exec);
    const double over_4pi = torus.area / (4 * pi);
    report.rows.push_back(compared_row("J*3sqrt3 " + tag, torus.J * 3 * std::sqrt(3.0),
                                       col.J_times_3sqrt3, tables.tolerances.J_times_3sqrt3));
    report.rows.push_back(compared_row("Area/4pi " + tag, over_4pi, col.area_over_4pi, tol));
    report.rows.push_back(checked_row("lattice residual " + tag, torus.lattice_residual,
                                      torus.lattice_residual <= kLatticeLimit));
    const double yang_yau = 16 * pi / torus.area;
    report.rows.push_back(checked_row("lambda1 bound " + tag, yang_yau,
                                      yang_yau < col.lambda1_upper.value(),
                                      "16 pi/Area < " + col.lambda1_upper.str()));
    const auto certs = bounds::index_lower_bounds_u0J(col.M, col.N);
    const double courant = s_ind_bound(certs);
    report.rows.push_back(checked_row("s-ind lower " + tag, courant, true,
                                      fmt::format("tabulated >= {}", col.s_ind)));
    report.certificates.insert(report.certificates.end(), certs.begin(), certs.end());
    for (const auto& c : bounds::tabulated_s_ind_u0J(col.M, col.N)) report.certificates.push_back(c);
    if (courant != col.s_ind) {
      report.notes.push_back(fmt::format(
          "{}: nodal-count s-ind bound 2N-8 = {} differs from the tabulated >= {}", tag,
          format_number(courant), col.s_ind));
    }
    if (torus.roots_found > 1) {
      report.notes.push_back(fmt::format("{}: {} roots in J; the smallest is used", tag,
                                         torus.roots_found));
    }
  }
  return report;
}

Report cmd_clifford(int n, const CommandOptions& options) {
  if (n < 3 || n > 12) throw DomainError("clifford n must lie in [3, 12]");
  const auto tables = load_reference_tables(options.tables);
  const double cutoff = options.cutoff.value_or(2.0 * n + 1);
  const auto spec = spectrum::clifford_spectrum(n, cutoff, options.exec);
  const auto idx = spectrum::index_report(spec, n, n - 1, 1);
  Report report;
  report.title = fmt::format("Clifford torus T^{} in S^{}", n - 1, 2 * n - 1);
  add_index_rows(report, idx);
  auto classify = [&](const char* label, bool computed, bool expected) {
    report.rows.push_back(compared_row(label, computed ? 1.0 : 0.0, expected ? 1.0 : 0.0, 0.0));
  };
  classify("strictly stable", idx.strictly_stable(), contains(tables.clifford.strictly_stable, n));
  classify("Legendrian stable", idx.legendrian_stable(),
           contains(tables.clifford.legendrian_stable, n));
  classify("rigid", idx.rigid(), !contains(tables.clifford.non_rigid, n));
  if (n > 3) {
    const double witness = 2.0 * (n - 2);
    report.rows.push_back(checked_row("eigenvalue 2(n-2) present", witness,
                                      spec.multiplicity_of(witness) > 0, "lies in (n-1, 2n)"));
  }
  for (int p = 0; p <= n - 1; ++p) {
    for (int q = 0; q <= std::min(p, n - 1 - p); ++q) {
      if (spectrum::lambda_pq(n, p, q) == 2.0 * n && !(p == 1 && q == 1)) {
        report.notes.push_back(fmt::format("lambda({},{}) = 2n adds to the 2n eigenspace", p, q));
      }
    }
  }
  report.table = spectrum_table(spec);
  return report;
}

Report cmd_spectrum_clifford(int n, const CommandOptions& options) {
  if (n < 2) throw DomainError("clifford n must be at least 2");
  const double cutoff = options.cutoff.value_or(2.0 * n + 1);
  const auto spec = spectrum::clifford_spectrum(n, cutoff, options.exec);
  Report report;
  report.title = fmt::format("spectrum of the Clifford torus, n = {}, cutoff {}", n,
                             format_number(cutoff));
  if (cutoff >= 2.0 * n) add_index_rows(report, spectrum::index_report(spec, n, n - 1, 1));
  report.table = spectrum_table(spec);
  return report;
}

Report cmd_spectrum_basis(const std::filesystem::path& basis_file, const CommandOptions& options) {
  std::ifstream in(basis_file);
  if (!in) throw NotFoundError("cannot open basis file " + basis_file.string());
  spectrum::Basis basis;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<double> row;
    double v;
    while (fields >> v) row.push_back(v);
    if (!fields.eof()) throw DomainError("non-numeric entry in basis file: " + line);
    if (!row.empty()) basis.push_back(std::move(row));
  }
  if (!options.cutoff) throw DomainError("spectrum --basis needs --cutoff");
  spectrum::EnumerationOptions enumeration;
  enumeration.exec = options.exec;
  const auto spec = spectrum::flat_torus_spectrum(basis, *options.cutoff, enumeration);
  Report report;
  report.title = fmt::format("flat torus spectrum from {}, cutoff {}", basis_file.string(),
                             format_number(*options.cutoff));
  report.table = spectrum_table(spec);
  return report;
}

Report cmd_bounds_Tmn(int m, int n, const CommandOptions&) {
  Report report;
  report.title = "index bounds for " + tmn_label(m, n);
  report.certificates = bounds::index_lower_bounds_Tmn(m, n);
  const double area = area::area_Tmn(m, n).area;
  for (const char* rule : {"heat_trace_N2", "heat_trace_N1"}) {
    bounds::BoundCertificate cert;
    cert.quantity = rule == std::string("heat_trace_N2") ? bounds::Quantity::N2 : bounds::Quantity::N1;
    cert.direction = bounds::Direction::upper;
    cert.provenance = {rule, {{"m", double(m)}, {"n", double(n)}, {"area", area}}};
    cert.value = bounds::reproduce(cert);
    report.certificates.push_back(cert);
  }
  add_consistency_rows(report);
  return report;
}

Report cmd_bounds_u0J(int M, int N, const CommandOptions&) {
  Report report;
  report.title = "index bounds for u(0,J) with closure " + ratio_label(M, N);
  report.certificates = bounds::index_lower_bounds_u0J(M, N);
  const auto tabulated = bounds::tabulated_s_ind_u0J(M, N);
  report.certificates.insert(report.certificates.end(), tabulated.begin(), tabulated.end());
  if (!tabulated.empty()) {
    report.notes.push_back(fmt::format(
        "s_ind: nodal count gives >= {}, the reference table lists >= {}; both kept",
        format_number(s_ind_bound(report.certificates)), format_number(tabulated.front().value)));
  }
  add_consistency_rows(report);
  return report;
}

Report cmd_bounds_genus(int d, const CommandOptions&) {
  Report report;
  report.title = fmt::format("spectral genus {} bounds", 2 * d);
  report.certificates = bounds::genus_bounds(d);
  return report;
}

Report cmd_verify(const Fraction& alpha, double J, const CommandOptions& options) {
  const auto params = torus::build_family(alpha, J);
  const torus::Profile profile(params);
  const int grid = options.grid.value_or(24);
  Report report;
  static constexpr const char* kKinds[] = {"general", "closed_form", "clifford", "constant"};
  report.title = fmt::format("invariants at alpha = {}, J = {}", alpha.str(), format_number(J));
  report.notes.push_back(std::string("profile: ") + kKinds[static_cast<int>(profile.kind())]);

  const auto res = torus::immersion_residuals(profile, grid);
  auto residual = [&](const char* label, double value) {
    report.rows.push_back(checked_row(label, value, value < kResidualLimit));
  };
  residual("unit norm", res.unit_norm);
  residual("Legendrian", res.legendrian);
  residual("conformal", res.conformal);
  residual("sum R^2 = 1", res.radii_sum);
  residual("R1R2R3 cos(sum theta) = J", res.cos_identity);
  residual("gamma' identity", res.gamma_dot);

  const auto areas = area::area_evaluations(params);
  const double gap = std::abs(areas.closed_form - areas.quadrature);
  report.rows.push_back(checked_row("area closed form vs quadrature", gap, gap <= 1e-9));
  report.rows.push_back(checked_row("area per period / 2pi", areas.closed_form, true));
  report.rows.push_back(checked_row("period T", profile.period(), true));

  if (profile.kind() != torus::ProfileKind::closed_form) {
    const auto closure = torus::closure_from(profile);
    const auto& th = closure.theta_T;
    const double sum = th[0] + th[1] + th[2];
    report.rows.push_back(checked_row("sum theta(T)", sum, std::abs(sum) < 1e-8));
    report.rows.push_back(checked_row("Theta", closure.Theta, true));
  }
  try {
    const auto lattice = periodicity::period_lattice(profile);
    const double r = periodicity::lattice_residual(profile, lattice, 10, kLatticeSeed);
    report.rows.push_back(checked_row("lattice residual", r, r <= kLatticeLimit,
                                      periodicity::to_string(lattice.case_tag)));
  } catch (const NotDoublyPeriodicError& e) {
    report.notes.push_back(e.what());
  } catch (const DomainError& e) {
    report.notes.push_back(e.what());
  }
  return report;
}

Report cmd_sweep(const Fraction& alpha, const CommandOptions& options) {
  const int grid = options.grid.value_or(64);
  const auto scan = periodicity::scan_theta(alpha.value(), grid, options.exec);
  Report report;
  report.title = "Theta and area per period along J at alpha = " + alpha.str();
  DataTable table{{"J", "Theta", "area_per_period"}, {}};
  for (std::size_t i = 0; i < scan.J.size(); ++i) {
    const double a = area::area_per_period(torus::build_family(alpha, scan.J[i]));
    table.rows.push_back({fmt::format("{:.12g}", scan.J[i]), fmt::format("{:.12g}", scan.Theta[i]),
                          fmt::format("{:.12g}", a)});
  }
  report.table = table;
  return report;
}

}  // namespace slcones::app
