#pragma once

// The acceptance criteria.  Each criterion checks one tabulated or law-based
// property of the pipeline end to end and reports pass/fail with timing; a
// tick budget turns runaway computations into an inconclusive verdict
// instead of a hang.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pbt {

struct CritConfig {
  std::uint64_t budget = 0;  // Groebner ticks per criterion, 0 = unlimited
  int workers = 1;
  unsigned seed = 1;
};

struct CritResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool inconclusive = false;  // budget ran out before a verdict
  double seconds = 0.0;
  std::vector<std::string> detail;
};

std::vector<int> criteria_ids();
std::string criterion_name(int id);
double criterion_time_cap(int id);

CritResult run_criterion(int id, const CritConfig& cfg);

// Constraint-table rows realized across one admissible sweep, keyed by the
// column pattern as stored in the table.
std::map<std::string, std::vector<int>> sweep_coverage(long long p, int f, int kmax);

}  // namespace pbt
