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
#include "slcones/app/reference_tables.hpp"

#include <fstream>

#include <json.hpp>

#include "slcones/error.hpp"

namespace slcones::app {

std::filesystem::path default_tables_path() { return SLCONES_DEFAULT_TABLES; }

ReferenceTables load_reference_tables(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open table file " + path.string());
  ReferenceTables out;
  try {
    const auto doc = nlohmann::json::parse(in);
    out.version = doc.at("version").get<int>();
    const auto& tol = doc.at("tolerances");
    out.tolerances.area_over_4pi = tol.at("area_over_4pi").get<double>();
    out.tolerances.linear_approx = tol.at("linear_approx").get<double>();
    out.tolerances.J_times_3sqrt3 = tol.at("J_times_3sqrt3").get<double>();
    for (const auto& col : doc.at("table1")) {
      Table1Column c;
      c.m = col.at("m").get<int>();
      c.n = col.at("n").get<int>();
      c.area_over_4pi = col.at("area_over_4pi").get<double>();
      if (!col.at("linear_approx").is_null()) c.linear_approx = col["linear_approx"].get<double>();
      c.s_ind = col.at("s_ind").get<int>();
      c.s_ind_exact = col.value("s_ind_exact", false);
      out.table1.push_back(c);
    }
    for (const auto& col : doc.at("table2")) {
      Table2Column c;
      c.M = col.at("M").get<int>();
      c.N = col.at("N").get<int>();
      c.area_over_4pi = col.at("area_over_4pi").get<double>();
      c.J_times_3sqrt3 = col.at("J_times_3sqrt3").get<double>();
      c.s_ind = col.at("s_ind").get<int>();
      const auto& l1 = col.at("lambda1_upper");
      c.lambda1_upper = Fraction(l1.at(0).get<std::int64_t>(), l1.at(1).get<std::int64_t>());
      out.table2.push_back(c);
    }
    const auto& cl = doc.at("clifford");
    out.clifford.strictly_stable = cl.at("strictly_stable").get<std::vector<int>>();
    out.clifford.legendrian_stable = cl.at("legendrian_stable").get<std::vector<int>>();
    out.clifford.non_rigid = cl.at("non_rigid").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed table file " + path.string() + ": " + e.what());
  }
  return out;
}

}  // namespace slcones::app
