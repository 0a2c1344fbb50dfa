/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/benchcli/compare.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rigidlcp::bench {

ComparisonRow summarize(const RunReport& r) {
  ComparisonRow row;
  row.label = label(r.config);
  row.lcp_variables = r.max_lcp_variables();
  row.wall_mean = r.wall_mean();
  row.wall_stddev = r.wall_stddev();
  row.pivots_mean = r.pivots_per_solve_mean();
  row.pivots_max = r.pivots_per_solve_max();
  row.failures = r.failures.size();
  return row;
}

Comparison compare_models(const std::vector<ScenarioConfig>& cfgs) {
  if (cfgs.empty()) throw ConfigError("config", "nothing to compare");
  for (const ScenarioConfig& c : cfgs) {
    if (c.scenario != cfgs.front().scenario)
      throw ConfigError("scenario", "compared runs use different scenarios (" + to_string(cfgs.front().scenario) +
                                        " and " + to_string(c.scenario) + ")");
    if (c.steps != cfgs.front().steps)
      throw ConfigError("steps", "compared runs use different step counts");
  }
  Comparison out;
  out.scenario = to_string(cfgs.front().scenario);
  out.steps = cfgs.front().steps;
  for (const ScenarioConfig& c : cfgs) {
    out.reports.push_back(run_scenario(c));
    out.rows.push_back(summarize(out.reports.back()));
  }
  return out;
}

void write_comparison_table(std::ostream& os, const Comparison& c) {
  std::size_t width = 12;
  for (const ComparisonRow& r : c.rows) width = std::max(width, r.label.size() + 2);
  os << c.scenario << ", " << c.steps << " steps\n";
  os << std::left << std::setw(static_cast<int>(width)) << "model/solver" << std::right << std::setw(10)
     << "variables" << std::setw(26) << "wall/step [ms] mean+-sd" << std::setw(14) << "pivots mean"
     << std::setw(12) << "pivots max" << std::setw(10) << "failures" << '\n';
  for (const ComparisonRow& r : c.rows) {
    std::ostringstream wall;
    wall << std::fixed << std::setprecision(4) << 1e3 * r.wall_mean << " +- " << 1e3 * r.wall_stddev;
    std::ostringstream pivots;
    pivots << std::fixed << std::setprecision(2) << r.pivots_mean;
    os << std::left << std::setw(static_cast<int>(width)) << r.label << std::right << std::setw(10)
       << r.lcp_variables << std::setw(26) << wall.str() << std::setw(14) << pivots.str()
       << std::setw(12) << r.pivots_max << std::setw(10) << r.failures << '\n';
  }
}

void write_comparison_csv(std::ostream& os, const Comparison& c) {
  const auto precision = os.precision(17);
  os << "# rigidlcp-comparison v1\n"
     << "scenario,steps,label,lcp_variables,wall_mean,wall_stddev,pivots_mean,pivots_max,failures\n";
  for (const ComparisonRow& r : c.rows)
    os << c.scenario << ',' << c.steps << ',' << r.label << ',' << r.lcp_variables << ',' << r.wall_mean << ','
       << r.wall_stddev << ',' << r.pivots_mean << ',' << r.pivots_max << ',' << r.failures << '\n';
  os.precision(precision);
}

}  // namespace rigidlcp::bench
