/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidlcp/benchcli/runner.hpp"

namespace rigidlcp::bench {

struct ComparisonRow {
  std::string label;
  Index lcp_variables = 0;  // largest over the run
  double wall_mean = 0.0;
  double wall_stddev = 0.0;
  double pivots_mean = 0.0;
  std::size_t pivots_max = 0;
  std::size_t failures = 0;
};

struct Comparison {
  std::string scenario;
  int steps = 0;
  std::vector<RunReport> reports;
  std::vector<ComparisonRow> rows;
};

/// Runs each config. All must share scenario and step count (ConfigError
/// otherwise).
Comparison compare_models(const std::vector<ScenarioConfig>& cfgs);

ComparisonRow summarize(const RunReport& r);

/// Aligned text table and CSV ("# rigidlcp-comparison v1").
void write_comparison_table(std::ostream& os, const Comparison& c);
void write_comparison_csv(std::ostream& os, const Comparison& c);

}  // namespace rigidlcp::bench
