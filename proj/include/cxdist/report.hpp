#pragma once

#include <string>
#include <vector>

#include "cxdist/io.hpp"

namespace cxd {

// Exact counts next to floating reference curves. Ratios are reported, never judged.
struct ReportOptions {
  std::vector<std::string> tables;  // empty: all of report_tables()
  std::size_t grid_max = 30;        // grids k = 3..grid_max
  std::size_t random_max = 12;      // random point sets of 4..random_max points, step 4
  std::int64_t bound = 20;          // coordinate bound for random points
  std::size_t isotropic_max = 12;
  std::uint64_t seed = 1;
  std::uint64_t triple_cap = kDefaultTripleCap;
  unsigned threads = 1;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // integers, doubles or strings
};

const std::vector<std::string>& report_tables();

// Throws std::invalid_argument for an unknown table name.
std::vector<Table> run_report(const ReportOptions& options);

Json to_json(const std::vector<Table>& tables);
// Each table is a "# name" line, a header and its rows; tables are separated by a blank line.
std::string to_csv(const std::vector<Table>& tables);

// printf-style "%.6g"; the only floating formatting used in outputs.
std::string format_double(double v);

}  // namespace cxd
