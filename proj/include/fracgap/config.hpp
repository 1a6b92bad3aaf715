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

#include <cstddef>
#include <cstdint>

namespace fracgap {

/// Numerical tolerances and budgets shared by every module.
struct Tolerances {
  // FuncSpec validation.
  double roundtrip_rel = 1e-9;
  double fd_rel = 1e-6;
  double fd_step_rel = 1e-5;

  // Breakpoints may land outside [a, b] by this much (relative to b) from rounding.
  double breakpoint_slack_rel = 1e-12;
  std::uint64_t breakpoint_cap = 100'000'000;

  double quad_tol = 1e-10;
  int quad_max_depth = 60;

  double li_tol = 1e-12;
};

struct SieveConfig {
  std::uint64_t max_limit = 1'000'000'000;
  std::size_t memory_budget_bytes = std::size_t{1} << 31;
  // Bytes of odd-only bitset per segment; 256 KiB fits a typical L2.
  std::size_t segment_bytes = 256 * 1024;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace fracgap
