#pragma once

#include "homleib/diagnostics.hpp"
#include "homleib/io.hpp"

namespace homleib {

// Full analysis of one algebra: validity, J, decomposition, connections,
// global decomposition, J-side diagnostics and the simplicity verdict,
// plus (optionally) the re-verification battery for every structural law.
//
// The run never throws for mathematical failures: structured errors are
// captured in the report (`ok` false, `error` set) so a report is always
// produced.  `violations` collects failures of statements that are theorems
// under hypotheses the input satisfies — on a valid input it stays empty.
struct Report {
  json body;                            // deterministic, schema_version 1
  bool decomposed = false;
  bool check_all_ran = false;
  std::vector<std::string> violations;  // theorem-level failures
  std::optional<std::string> expected_failure;  // structured decompose error, if any
};

Report build_report(const ParsedAlgebra& pa, bool check_all);

// Human-readable rendering of the same content.
std::string report_to_text(const Report& r);

}  // namespace homleib
