// Runs every acceptance criterion with an unlimited budget and prints one
// verdict line per criterion.  Exits nonzero when any criterion misses.

#include <cstdio>

#include "pbt/criteria.hh"

int main() {
  pbt::CritConfig cfg;
  bool ok = true;
  for (int id : pbt::criteria_ids()) {
    pbt::CritResult res = pbt::run_criterion(id, cfg);
    const char* verdict =
        res.pass ? "PASS" : res.inconclusive ? "INCONCLUSIVE" : "FAIL";
    std::printf("criterion %d (%s): %s (%.1fs)\n", id, res.name.c_str(), verdict,
                res.seconds);
    for (const auto& d : res.detail) std::printf("  %s\n", d.c_str());
    std::fflush(stdout);
    ok = ok && res.pass;
  }
  return ok ? 0 : 1;
}
