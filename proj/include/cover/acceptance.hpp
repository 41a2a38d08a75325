#pragma once
// Release checklist: the ten-point verification suite exercising every
// module against its oracles.  Shared by the `acceptance` test binary and
// the `covertool accept` subcommand.

#include <iosfwd>
#include <string>
#include <vector>

namespace cover {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // counts checked / violation description
  double seconds = 0.0;  // wall time of the criterion
};

// Runs all ten criteria in order; progress notes go to `log` when non-null.
// Never throws: a criterion that raises is reported as failed.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

// True iff every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace cover
