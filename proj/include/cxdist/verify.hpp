#pragma once

#include <string>
#include <vector>

#include "cxdist/io.hpp"

namespace cxd {

struct VerifyOptions {
  std::vector<std::string> suites;                         // empty: every suite the dataset supports
  std::size_t quadruple_cap = kDefaultQuadrupleCap;        // largest |P| for the |P|^4 enumerations
  std::uint64_t triple_cap = kDefaultTripleCap;
  unsigned threads = 1;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t cases = 0;
  std::string note;  // skip reason or failure summary
  Json witness;      // the first counterexample found, null when none
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  Json to_json() const;
};

// Suites: "points" (distances and the quadruple identity), "esgk" (the line
// family of the points; uses the dataset's own lines when present), "lines"
// (rich points, surfaces and the counting inequalities).
const std::vector<std::string>& verify_suites();

// Throws std::invalid_argument for an unknown suite or one the dataset cannot feed.
VerifyReport run_verify(const Dataset& data, const VerifyOptions& options = {});

const char* to_string(CheckStatus s);

}  // namespace cxd
