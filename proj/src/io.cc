#include "pbt/io.hh"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace pbt {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::vector<std::string> str_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("PBT_DATA_DIR")) return env;
#ifdef PBT_DATA_DIR
  return PBT_DATA_DIR;
#else
  return "data";
#endif
}

std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

std::vector<CdmRow> load_cdm_rows(const std::string& path) {
  json j = load_json(path);
  std::vector<CdmRow> out;
  for (const auto& row : j) {
    CdmRow r;
    r.label = row.at("label").get<std::string>();
    r.gene = row.at("gene").get<std::string>();
    for (const auto& t : row.at("typing"))
      r.typing.push_back({vtype_parse(t.at(0).get<std::string>()),
                          wt_parse(t.at(1).get<std::string>())});
    r.vars = str_list(row.at("vars"));
    r.inv = str_list(row.at("inv"));
    r.psat = str_list(row.at("psat"));
    r.match = row.at("match").get<std::string>();
    r.sat_noop = row.at("sat_noop").get<bool>();
    if (row.contains("note")) r.note = row.at("note").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<F1Case> load_f1_cases(const std::string& path) {
  json j = load_json(path);
  std::vector<F1Case> out;
  for (const auto& row : j) {
    F1Case c;
    c.label = row.at("label").get<std::string>();
    c.s = perm_parse(row.at("s").get<std::string>());
    c.k = row.at("k").get<long long>();
    c.w = wt_parse(row.at("w").get<std::string>());
    c.framing = framing_parse(row.at("framing").get<std::string>());
    c.sat = str_list(row.at("sat"));
    c.sat_noop = row.at("sat_noop").get<bool>();
    c.p_power = row.at("p_power").get<int>();
    c.radical = str_list(row.at("radical"));
    out.push_back(std::move(c));
  }
  return out;
}

ConstraintTable load_constraints(const std::string& path) {
  json j = load_json(path);
  ConstraintTable out;
  for (const auto& [col, rows] : j.items()) {
    std::vector<ConstraintRow> list;
    for (const auto& row : rows) {
      ConstraintRow r;
      r.s_next = row.at(0).get<std::string>();
      r.orient = row.at(1).get<std::string>();
      r.sigma = row.at(2).get<std::string>();
      r.z_next = row.at(3).get<std::string>();
      r.w = row.at(4).get<std::string>();
      r.type = row.at(5).get<std::string>();
      r.vh = row.at(6).get<std::string>();
      r.vl = row.at(7).get<std::string>();
      list.push_back(std::move(r));
    }
    out[col] = std::move(list);
  }
  return out;
}

FiberFreeze load_fiber(const std::string& path) {
  json j = load_json(path);
  FiberFreeze fz;
  fz.p = j.at("p").get<long long>();
  fz.f = j.at("f").get<int>();
  fz.kmax = j.at("kmax").get<int>();
  for (const auto& row : j.at("triples")) {
    fz.triples.push_back(triple_from_json(row));
    fz.genes.push_back(row.at("gene").get<std::string>());
  }
  if (j.contains("coverage"))
    for (auto it = j["coverage"].begin(); it != j["coverage"].end(); ++it)
      fz.coverage[it.key()] = it.value().get<std::vector<int>>();
  return fz;
}

json triple_json(const Triple& t) {
  json j;
  j["p"] = t.tau.p;
  j["f"] = t.tau.f;
  json s = json::array(), k = json::array(), w = json::array();
  for (int i = 0; i < t.tau.f; ++i) {
    s.push_back(perm_name(t.tau.s[i]));
    k.push_back(k_of(t.tau, i));
    w.push_back(wt_name(t.w[i]));
  }
  j["s"] = s;
  j["k"] = k;
  j["w"] = w;
  return j;
}

Triple triple_from_json(const json& j) {
  Triple t;
  t.tau.p = j.at("p").get<long long>();
  t.tau.f = j.at("f").get<int>();
  for (const auto& e : j.at("s")) t.tau.s.push_back(perm_parse(e.get<std::string>()));
  for (const auto& e : j.at("k")) t.tau.mu.push_back({e.get<long long>(), 0});
  for (const auto& e : j.at("w")) t.w.push_back(wt_parse(e.get<std::string>()));
  if (static_cast<int>(t.tau.s.size()) != t.tau.f ||
      static_cast<int>(t.tau.mu.size()) != t.tau.f ||
      static_cast<int>(t.w.size()) != t.tau.f)
    throw std::runtime_error("triple entries disagree with f");
  return t;
}

json model_json(const Model& m) {
  json j;
  j["ring"] = m.ring.vars;
  j["gens"] = to_strings(m.ring, m.gens);
  json ty = json::array();
  for (const auto& v : m.typing)
    ty.push_back(json::array({vtype_name(v.type), wt_name(v.w)}));
  j["typing"] = ty;
  j["framing"] = framing_name(m.framing);
  j["stage"] = m.stage;
  j["log"] = m.log;
  return j;
}

}  // namespace pbt
