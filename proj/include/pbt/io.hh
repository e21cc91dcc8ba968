#pragma once

// JSON-backed data tables (golden rows, constraint tables, frozen fibers)
// and the JSON views used by the command-line tool.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pbt/models.hh"

namespace pbt {

// Data directory: PBT_DATA_DIR environment variable when set, otherwise the
// compiled-in default.
std::string data_dir();
std::string data_file(const std::string& name);

struct CdmRow {
  std::string label;
  std::string gene;
  std::vector<VertexTyping> typing;
  std::vector<std::string> vars;  // coordinates of the tabulated presentation
  std::vector<std::string> inv;   // tabulated generators
  std::vector<std::string> psat;  // tabulated saturated generators
  std::string match;              // exact | after-normalize | sat-only
  bool sat_noop = false;
  std::string note;
};
std::vector<CdmRow> load_cdm_rows(const std::string& path);

struct F1Case {
  std::string label;
  Perm s = Perm::id;
  long long k = 1;
  Wt w = Wt::t_eta;
  Framing framing = Framing::full;
  std::vector<std::string> sat;  // tabulated saturated generators
  bool sat_noop = false;
  int p_power = 0;               // p^power lies in I plus the 2x2 minors
  std::vector<std::string> radical;
};
std::vector<F1Case> load_f1_cases(const std::string& path);

// One admissible row of a column constraint table; "*" entries match
// anything, the digit fields take "0", "1", "neg", "ge2".
struct ConstraintRow {
  std::string s_next, orient, sigma, z_next, w, type, vh, vl;
};
using ConstraintTable = std::map<std::string, std::vector<ConstraintRow>>;
ConstraintTable load_constraints(const std::string& path);

struct FiberFreeze {
  long long p = 0;
  int f = 0;
  int kmax = 0;
  std::vector<Triple> triples;
  std::vector<std::string> genes;  // rendered, parallel to triples
  // per column pattern, the table rows realized somewhere in the sweep
  std::map<std::string, std::vector<int>> coverage;
};
FiberFreeze load_fiber(const std::string& path);

nlohmann::json triple_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j);
nlohmann::json model_json(const Model& m);

}  // namespace pbt
