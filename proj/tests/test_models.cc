#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "pbt/io.hh"
#include "pbt/models.hh"

using namespace pbt;

namespace {

std::vector<VertexTyping> typing(std::initializer_list<std::pair<VType, Wt>> xs) {
  std::vector<VertexTyping> out;
  for (auto [t, w] : xs) out.push_back({t, w});
  return out;
}

Triple triple(long long p, std::vector<Perm> s, std::vector<long long> k,
              std::vector<Wt> w) {
  Triple t;
  t.tau.p = p;
  t.tau.f = static_cast<int>(k.size());
  t.tau.s = std::move(s);
  t.tau.mu.resize(t.tau.f);
  for (int j = 0; j < t.tau.f; ++j) t.tau.mu[j] = {k[static_cast<size_t>(j)], 0};
  t.w = std::move(w);
  return t;
}

Model bare_model(Ring r, std::vector<std::string> gens) {
  Model m;
  m.ring = std::move(r);
  m.gens = parse_polys(m.ring, gens);
  return m;
}

}  // namespace

TEST_CASE("vertex classification") {
  CHECK(classify_vertex(Wt::t_eta, Perm::id, 1) == VType::tII);
  CHECK(classify_vertex(Wt::w0_t_eta, Perm::id, 1) == VType::tII);
  CHECK(classify_vertex(Wt::t_w0eta, Perm::w0, 1) == VType::tII);
  CHECK(classify_vertex(Wt::t_eta, Perm::w0, 1) == VType::tI);
  CHECK(classify_vertex(Wt::w0_t_eta, Perm::w0, 1) == VType::tI);
  CHECK(classify_vertex(Wt::t_w0eta, Perm::id, 1) == VType::tI);
  CHECK(classify_vertex(Wt::t_eta, Perm::w0, 2) == VType::tII);
  CHECK(classify_vertex(Wt::t_w0eta, Perm::id, 3) == VType::tII);
  CHECK(classify_vertex(Wt::t_eta, Perm::id, 0) == VType::t0);
  CHECK_THROWS_AS(classify_vertex(Wt::t_eta, Perm::w0, 0), std::invalid_argument);
  CHECK(vtype_parse("II") == VType::tII);
  CHECK(vtype_name(VType::t0) == "0");

  Triple t = triple(5, {Perm::id, Perm::w0}, {0, 1}, {Wt::t_eta, Wt::t_eta});
  auto ty = typings_of(t);
  CHECK(ty[0] == VertexTyping{VType::t0, Wt::t_eta});
  CHECK(ty[1] == VertexTyping{VType::tI, Wt::t_eta});
}

TEST_CASE("fragmentation") {
  auto one = fragmentation(typing({{VType::tII, Wt::t_eta},
                                   {VType::t0, Wt::t_eta},
                                   {VType::t0, Wt::w0_t_eta}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].in == 0);
  CHECK(one[0].out == 0);
  CHECK(one[0].interior == std::vector<int>{1, 2});

  auto two = fragmentation(typing({{VType::tII, Wt::t_eta},
                                   {VType::t0, Wt::t_eta},
                                   {VType::tII, Wt::t_eta}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].in == 0);
  CHECK(two[0].out == 2);
  CHECK(two[0].interior.empty());
  CHECK(two[1].in == 2);
  CHECK(two[1].out == 0);
  CHECK(two[1].interior == std::vector<int>{1});

  auto solo = fragmentation(typing({{VType::tI, Wt::t_eta}}));
  REQUIRE(solo.size() == 1);
  CHECK(solo[0].in == 0);
  CHECK(solo[0].out == 0);
  CHECK(solo[0].interior.empty());

  CHECK_THROWS_WITH(fragmentation(typing({{VType::t0, Wt::t_eta}})), "irregular type");
}

TEST_CASE("local matrices") {
  auto ty = typing({{VType::tI, Wt::t_eta}});
  Ring r = model_ring(ty, Framing::full);
  CHECK(r.vars == std::vector<std::string>{"X0", "Y0", "Z0", "a0", "b0", "c0", "d0", "p"});

  PolyMat i2 = initial_mat(r, VType::tII, 0);
  CHECK(i2.rows == 2);
  CHECK(i2.cols == 1);
  CHECK(i2.at(0, 0) == parse_poly(r, "1"));
  CHECK(i2.at(1, 0) == parse_poly(r, "-X0"));

  PolyMat f2 = final_mat(r, VType::tII, Wt::t_eta, 0);
  CHECK(f2.rows == 1);
  CHECK(f2.at(0, 0) == parse_poly(r, "Y0"));
  CHECK(f2.at(0, 1) == parse_poly(r, "-p"));
  CHECK(final_mat(r, VType::tII, Wt::w0_t_eta, 0).at(0, 0) == parse_poly(r, "-p"));
  CHECK(final_mat(r, VType::tII, Wt::t_w0eta, 0).at(0, 0).is_zero());

  PolyMat i1 = initial_mat(r, VType::tI, 0);
  CHECK(i1.at(0, 0) == parse_poly(r, "Y0"));
  CHECK(i1.at(1, 1) == parse_poly(r, "p - Y0"));
  PolyMat f1 = final_mat(r, VType::tI, Wt::t_w0eta, 0);
  CHECK(f1.at(0, 1) == parse_poly(r, "X0"));
  CHECK(f1.at(1, 0) == parse_poly(r, "Z0"));

  PolyMat tr = transition_mat(r, Wt::t_eta, 0);
  CHECK(tr.at(0, 0) == parse_poly(r, "1"));
  CHECK(tr.at(1, 0) == parse_poly(r, "-X0"));
  CHECK(tr.at(1, 1) == parse_poly(r, "p"));
  CHECK(transition_mat(r, Wt::w0_t_eta, 0).at(0, 1) == parse_poly(r, "-1"));
  CHECK(transition_mat(r, Wt::t_w0eta, 0).at(0, 1) == parse_poly(r, "-X0"));

  CHECK(kappa_mat(r, Framing::none, 0).at(0, 0) == parse_poly(r, "1"));
  CHECK(kappa_mat(r, Framing::full, 0).at(0, 1) == parse_poly(r, "b0"));
  CHECK(kappa_mat(r, Framing::full, 1).at(0, 1).is_zero());
  CHECK(vertex_quadric(r, 0) == parse_poly(r, "(p - Y0)*Y0 - X0*Z0"));

  Ring rd = model_ring(ty, Framing::diag);
  CHECK(rd.vars == std::vector<std::string>{"X0", "Y0", "Z0", "a0", "d0", "p"});
  CHECK(kappa_mat(rd, Framing::diag, 0).at(1, 1) == parse_poly(rd, "d0"));
  CHECK(kappa_mat(rd, Framing::diag, 0).at(0, 1).is_zero());

  CHECK_THROWS_AS(initial_mat(r, VType::t0, 0), std::invalid_argument);
  CHECK_THROWS_AS(final_mat(r, VType::t0, Wt::t_eta, 0), std::invalid_argument);
}

TEST_CASE("model ring layout") {
  auto ty = typing({{VType::tII, Wt::t_eta},
                    {VType::t0, Wt::t_eta},
                    {VType::tI, Wt::t_w0eta}});
  CHECK(model_ring(ty, Framing::none).vars ==
        std::vector<std::string>{"X0", "X1", "X2", "Y0", "Y2", "Z2", "p"});
  CHECK(model_ring(ty, Framing::full).vars ==
        std::vector<std::string>{"X0", "X1", "X2", "Y0", "Y2", "Z2", "a0", "b0", "c0",
                                 "d0", "p"});
  CHECK(model_ring(ty, Framing::all).vars ==
        std::vector<std::string>{"X0", "X1", "X2", "Y0", "Y2", "Z2", "a0", "b0", "c0",
                                 "d0", "a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2",
                                 "p"});
}

TEST_CASE("naive model of a single full circle") {
  auto ty = typing({{VType::tII, Wt::t_eta},
                    {VType::t0, Wt::t_w0eta},
                    {VType::t0, Wt::w0_t_eta}});
  Model m = naive_model(ty, Framing::none);
  CHECK(m.stage == "naive");
  CHECK(m.ring.vars == std::vector<std::string>{"X0", "X1", "X2", "Y0", "p"});
  REQUIRE(m.gens.size() == 1);
  CHECK(m.gens[0] == parse_poly(m.ring, "p*X0*Y0 + (p + X1*Y0)*(p + X0*X2)"));
}

TEST_CASE("normalization drops a split variable and absorbs p-multiples") {
  auto ty = typing({{VType::tII, Wt::t_eta},
                    {VType::t0, Wt::w0_t_eta},
                    {VType::tII, Wt::t_eta}});
  Model m = naive_model(ty, Framing::none);
  CHECK(m.ring.vars == std::vector<std::string>{"X0", "X1", "X2", "Y0", "Y2", "p"});
  REQUIRE(m.gens.size() == 2);
  CHECK(m.gens[0] == parse_poly(m.ring, "Y2 + p*X0"));
  CHECK(m.gens[1] == parse_poly(m.ring, "p^2 + X2*Y0 + p*X1*X2"));

  Model n = normalize(m);
  CHECK(n.stage == "normalized");
  CHECK(n.ring.vars == std::vector<std::string>{"X0", "X1", "X2", "Y0", "p"});
  REQUIRE(n.gens.size() == 1);
  CHECK(n.gens[0] == parse_poly(n.ring, "X2*Y0 + p^2"));
  CHECK(n.log.size() >= 2);

  Model s = saturated_model(n);
  CHECK(s.stage == "saturated");
  CHECK(ideal_equal(s.ring, s.gens, n.gens));
}

TEST_CASE("normalization leaves shared variables alone") {
  Ring r;
  r.vars = {"X0", "X1", "Y0", "p"};
  Model m = bare_model(r, {"Y0 + p*X0", "Y0*X1 + p"});
  m.typing = typing({{VType::tII, Wt::t_eta}});
  Model n = normalize(m);
  CHECK(n.ring.vars == r.vars);
  REQUIRE(n.gens.size() == 2);
  CHECK(n.gens[0] == parse_poly(r, "Y0 + p*X0"));
  CHECK(n.gens[1] == parse_poly(r, "Y0*X1 + p"));
}

TEST_CASE("completion point") {
  auto ty = typing({{VType::tI, Wt::t_eta}});
  Model m = naive_model(ty, Framing::full);
  auto pt = completion_point(m);
  CHECK(to_strings(m.ring, pt) ==
        std::vector<std::string>{"p", "X0", "Y0", "Z0", "a0 - 1", "d0 - 1", "b0", "c0"});
}

TEST_CASE("deformation presentation, one type II vertex") {
  Triple t = triple(11, {Perm::id}, {1}, {Wt::w0_t_eta});
  Model m = deformation_presentation(t, Framing::none);
  CHECK(m.stage == "saturated");
  CHECK(m.ring.vars == std::vector<std::string>{"X0", "Y0", "p"});
  REQUIRE(m.gens.size() == 1);
  CHECK(m.gens[0] == parse_poly(m.ring, "X0*Y0 + p"));
  CHECK(embdim_pair(m) == std::pair<int, int>{2, 2});
}

TEST_CASE("singular locus bookkeeping") {
  auto ty = typing({{VType::tI, Wt::w0_t_eta}});
  Model m = naive_model(ty, Framing::full);
  auto cols = singular_columns(m);
  std::vector<std::string> names;
  for (int c : cols) names.push_back(m.ring.vars[static_cast<size_t>(c)]);
  CHECK(names == std::vector<std::string>{"a0", "b0", "c0", "d0", "X0", "Y0", "Z0"});

  auto si = singular_ideal(m, 2);
  CHECK(si.size() > m.gens.size());
  for (size_t i = 0; i < m.gens.size(); ++i) CHECK(si[i] == m.gens[i]);
}

TEST_CASE("model comparison") {
  Ring r;
  r.vars = {"X0", "Y0", "Z0", "p"};
  Model a = bare_model(r, {"X0 + p"});
  Model b = bare_model(r, {"p - X0"});
  CHECK(compare_models(a, a).verdict == "equal");
  auto res = compare_models(a, b);
  CHECK(res.verdict == "equal-after-substitution");

  Model c = bare_model(r, {"X0*Y0 + p"});
  CHECK(compare_models(a, c).verdict == "distinct");

  Ring r2;
  r2.vars = {"X1", "Y0", "Z0", "p"};
  Model d = bare_model(r2, {"X1 + p"});
  CHECK(compare_models(a, d).verdict == "inconclusive");
}

TEST_CASE("framing names") {
  CHECK(framing_parse("none") == Framing::none);
  CHECK(framing_parse("all") == Framing::all);
  CHECK(framing_name(Framing::diag) == "diag");
  CHECK_THROWS_AS(framing_parse("half"), std::invalid_argument);
}

TEST_CASE("shape json round trip") {
  Triple t = triple(23, {Perm::id, Perm::w0}, {1, 2}, {Wt::w0_t_eta, Wt::t_eta});
  auto j = triple_json(t);
  Triple u = triple_from_json(j);
  CHECK(u.tau.p == 23);
  CHECK(u.tau.f == 2);
  CHECK(u.tau.s == t.tau.s);
  CHECK(u.tau.mu == t.tau.mu);
  CHECK(u.w == t.w);

  Model m = naive_model(t, Framing::none);
  auto mj = model_json(m);
  CHECK(mj.at("stage") == "naive");
  CHECK(mj.at("ring").size() == m.ring.vars.size());
  CHECK(mj.at("gens").size() == m.gens.size());
}
