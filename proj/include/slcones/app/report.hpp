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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slcones/bounds.hpp"

namespace slcones::app {

enum class Format { text, csv, json };

std::optional<Format> parse_format(std::string_view name);

struct ReportRow {
  std::string label;
  double computed = 0;
  std::optional<double> reference;
  std::optional<double> abs_err;
  bool pass = false;
  std::string note;
};

// pass iff |computed - expected| <= tolerance.
ReportRow compared_row(std::string label, double computed, double expected, double tolerance);
ReportRow checked_row(std::string label, double computed, bool pass, std::string note = {});

struct DataTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;
  std::vector<bounds::BoundCertificate> certificates;
  std::optional<DataTable> table;
  std::vector<std::string> notes;

  bool all_pass() const;
};

// csv emits the data table if present, else the rows, else the certificates.
std::string render(const Report& report, Format format);

std::string format_number(double value);

}  // namespace slcones::app
