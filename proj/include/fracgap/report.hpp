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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace fracgap::report {

enum class Format { csv, json };

Format parse_format(const std::string& s);

using Value = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

/// Ordered column -> value map. Doubles are written with 17 significant digits.
class ReportRow {
 public:
  template <class T>
  ReportRow& set(std::string key, const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      cells_.emplace_back(std::move(key), Value{v});
    } else if constexpr (std::is_floating_point_v<T>) {
      cells_.emplace_back(std::move(key), Value{static_cast<double>(v)});
    } else if constexpr (std::is_integral_v<T> && std::is_signed_v<T>) {
      cells_.emplace_back(std::move(key), Value{static_cast<std::int64_t>(v)});
    } else if constexpr (std::is_integral_v<T>) {
      cells_.emplace_back(std::move(key), Value{static_cast<std::uint64_t>(v)});
    } else if constexpr (std::is_same_v<T, Value>) {
      cells_.emplace_back(std::move(key), v);
    } else {
      cells_.emplace_back(std::move(key), Value{std::string(v)});
    }
    return *this;
  }

  const std::vector<std::pair<std::string, Value>>& cells() const { return cells_; }
  std::vector<std::string> keys() const;
  bool empty() const { return cells_.empty(); }

 private:
  std::vector<std::pair<std::string, Value>> cells_;
};

/// "%.17g"; nan / inf / -inf spelled out.
std::string format_double(double v);
std::string csv_cell(const Value& v);
std::string json_value(const Value& v);

struct Envelope {
  std::string subcommand;
  ReportRow parameters;
  ReportRow summary;
  std::string version;
  double wall_time_s = 0.0;
};

/// Streams one report. CSV: header row then one line per row, LF endings,
/// RFC-4180 quoting. JSON: one document with the rows plus the metadata
/// envelope. Every row must carry exactly the schema's columns in order.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, Format format, std::string schema,
               std::vector<std::string> columns);

  void write(const ReportRow& row);
  void finish(const Envelope& env);

  std::size_t rows_written() const { return rows_; }

 private:
  std::ostream& out_;
  Format format_;
  std::string schema_;
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

}  // namespace fracgap::report
