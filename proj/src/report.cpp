// Copyright 2026 The fracgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fracgap/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "fracgap/errors.hpp"

namespace fracgap::report {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw DomainError("unknown format '" + s + "'");
}

std::vector<std::string> ReportRow::keys() const {
  std::vector<std::string> k;
  k.reserve(cells_.size());
  for (const auto& c : cells_) k.push_back(c.first);
  return k;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvVisitor {
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(std::uint64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return quote_csv(v); }
};

struct JsonVisitor {
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(std::uint64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : "null"; }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
};

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_object(const ReportRow& row) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : row.cells()) {
    if (!first) out += ',';
    first = false;
    out += json_string(k);
    out += ':';
    out += json_value(v);
  }
  out += '}';
  return out;
}

}  // namespace

std::string csv_cell(const Value& v) { return std::visit(CsvVisitor{}, v); }
std::string json_value(const Value& v) { return std::visit(JsonVisitor{}, v); }

ReportWriter::ReportWriter(std::ostream& out, Format format, std::string schema,
                           std::vector<std::string> columns)
    : out_(out), format_(format), schema_(std::move(schema)), columns_(std::move(columns)) {
  if (format_ == Format::csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out_ << ',';
      out_ << quote_csv(columns_[i]);
    }
    out_ << '\n';
  } else {
    out_ << "{\"schema\":" << json_string(schema_) << ",\"columns\":[";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out_ << ',';
      out_ << json_string(columns_[i]);
    }
    out_ << "],\"rows\":[";
  }
}

void ReportWriter::write(const ReportRow& row) {
  if (row.keys() != columns_) {
    throw std::logic_error("report row does not match schema " + schema_);
  }
  if (format_ == Format::csv) {
    bool first = true;
    for (const auto& cell : row.cells()) {
      if (!first) out_ << ',';
      first = false;
      out_ << csv_cell(cell.second);
    }
    out_ << '\n';
  } else {
    if (rows_) out_ << ',';
    out_ << '\n' << json_object(row);
  }
  ++rows_;
}

void ReportWriter::finish(const Envelope& env) {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::json) {
    out_ << "\n],\"summary\":" << json_object(env.summary)
         << ",\"subcommand\":" << json_string(env.subcommand)
         << ",\"parameters\":" << json_object(env.parameters)
         << ",\"version\":" << json_string(env.version)
         << ",\"wall_time_s\":" << format_double(env.wall_time_s) << "}\n";
  }
  out_.flush();
}

}  // namespace fracgap::report
