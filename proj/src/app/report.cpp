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
#include "slcones/app/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>
#include <json.hpp>

namespace slcones::app {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + '\n';
}

std::string params_text(const bounds::Provenance& p) {
  std::string out;
  for (const auto& [key, value] : p.params) {
    if (!out.empty()) out += ';';
    out += key + '=' + format_number(value);
  }
  return out;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

ordered_json number_or_null(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json certificate_json(const bounds::BoundCertificate& cert) {
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : cert.provenance.params) params[key] = value;
  return {{"quantity", bounds::to_string(cert.quantity)},
          {"direction", bounds::to_string(cert.direction)},
          {"value", cert.value},
          {"provenance", {{"rule", cert.provenance.rule}, {"params", params}}}};
}

std::string render_text(const Report& report) {
  std::string out = "== " + report.title + " ==\n";
  if (!report.rows.empty()) {
    std::size_t width = 5;
    for (const auto& row : report.rows) width = std::max(width, row.label.size());
    out += fmt::format("{:<{}}  {:>18}  {:>12}  {:>10}  {}\n", "label", width, "computed", "reference",
                       "abs_err", "result");
    for (const auto& row : report.rows) {
      out += fmt::format("{:<{}}  {:>18}  {:>12}  {:>10}  {}", row.label, width,
                         format_number(row.computed), optional_number(row.reference),
                         row.abs_err ? fmt::format("{:.2e}", *row.abs_err) : "",
                         row.pass ? "PASS" : "FAIL");
      if (!row.note.empty()) out += "  (" + row.note + ")";
      out += '\n';
    }
  }
  if (!report.certificates.empty()) {
    out += "certificates:\n";
    for (const auto& cert : report.certificates) {
      out += fmt::format("  {:<5} {} {:>12}  [{}: {}]\n", bounds::to_string(cert.quantity),
                         cert.direction == bounds::Direction::lower ? ">=" : "< ",
                         format_number(cert.value), cert.provenance.rule,
                         params_text(cert.provenance));
    }
  }
  if (report.table) {
    std::vector<std::size_t> widths;
    for (const auto& h : report.table->header) widths.push_back(h.size());
    for (const auto& row : report.table->rows) {
      for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], row[i].size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s += fmt::format("{:>{}}", cells[i], widths[i] + 2);
      }
      return s + '\n';
    };
    out += line(report.table->header);
    for (const auto& row : report.table->rows) out += line(row);
  }
  for (const auto& note : report.notes) out += "note: " + note + '\n';
  out += report.all_pass() ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

std::string render_csv(const Report& report) {
  std::string out;
  if (report.table) {
    out += join_csv(report.table->header);
    for (const auto& row : report.table->rows) out += join_csv(row);
  } else if (!report.rows.empty()) {
    out += join_csv({"label", "computed", "reference", "abs_err", "pass", "note"});
    for (const auto& row : report.rows) {
      out += join_csv({row.label, format_number(row.computed), optional_number(row.reference),
                       optional_number(row.abs_err), row.pass ? "true" : "false", row.note});
    }
  } else {
    out += join_csv({"quantity", "direction", "value", "rule", "params"});
    for (const auto& cert : report.certificates) {
      out += join_csv({bounds::to_string(cert.quantity), bounds::to_string(cert.direction),
                       format_number(cert.value), cert.provenance.rule,
                       params_text(cert.provenance)});
    }
  }
  return out;
}

std::string render_json(const Report& report) {
  ordered_json doc;
  doc["title"] = report.title;
  doc["pass"] = report.all_pass();
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"label", row.label},
                    {"computed", row.computed},
                    {"reference", number_or_null(row.reference)},
                    {"abs_err", number_or_null(row.abs_err)},
                    {"pass", row.pass},
                    {"note", row.note}});
  }
  doc["rows"] = rows;
  ordered_json certs = ordered_json::array();
  for (const auto& cert : report.certificates) certs.push_back(certificate_json(cert));
  doc["certificates"] = certs;
  if (report.table) {
    doc["table"] = {{"header", report.table->header}, {"rows", report.table->rows}};
  }
  doc["notes"] = report.notes;
  return doc.dump(2) + '\n';
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.10g}", value);
}

ReportRow compared_row(std::string label, double computed, double expected, double tolerance) {
  const double err = std::abs(computed - expected);
  return {std::move(label), computed, expected, err, err <= tolerance, {}};
}

ReportRow checked_row(std::string label, double computed, bool pass, std::string note) {
  return {std::move(label), computed, std::nullopt, std::nullopt, pass, std::move(note)};
}

bool Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::text:
      return render_text(report);
    case Format::csv:
      return render_csv(report);
    case Format::json:
      return render_json(report);
  }
  return {};
}

}  // namespace slcones::app
