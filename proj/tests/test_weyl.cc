#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <stdexcept>

#include "pbt/weyl.hh"

using namespace pbt;

namespace {

TameType tame(long long p, std::vector<Perm> s, std::vector<long long> k) {
  TameType t;
  t.p = p;
  t.f = static_cast<int>(k.size());
  t.s = std::move(s);
  t.mu.resize(t.f);
  for (int j = 0; j < t.f; ++j) t.mu[j] = {k[static_cast<size_t>(j)], 0};
  return t;
}

Triple triple(long long p, std::vector<Perm> s, std::vector<long long> k,
              std::vector<Wt> w) {
  Triple t;
  t.tau = tame(p, std::move(s), std::move(k));
  t.w = std::move(w);
  return t;
}

}  // namespace

TEST_CASE("translation group law") {
  WElt x{Perm::w0, 1, 2}, y{Perm::w0, 3, 5};
  CHECK(wmul(x, y) == WElt{Perm::id, 5, 6});
  WElt e{Perm::id, 0, 0};
  CHECK(wmul(e, x) == x);
  CHECK(wmul(x, e) == WElt{Perm::w0, 1, 2});
  WElt z{Perm::id, 1, 0};
  CHECK(wmul(wmul(x, y), z) == wmul(x, wmul(y, z)));
}

TEST_CASE("permutation helpers") {
  CHECK(pmul(Perm::w0, Perm::w0) == Perm::id);
  CHECK(papply(Perm::w0, 1) == 2);
  CHECK(papply(Perm::id, 2) == 2);
  CHECK(papply_pair(Perm::w0, std::array<int, 2>{7, 9}) == std::array<int, 2>{9, 7});
  CHECK(perm_parse("w0") == Perm::w0);
  CHECK(perm_name(Perm::id) == "id");
  CHECK_THROWS_AS(perm_parse("s2"), std::invalid_argument);
}

TEST_CASE("shape elements") {
  CHECK(shape_element(Wt::t_eta, Perm::id, 2) == WElt{Perm::id, 3, 0});
  CHECK(shape_element(Wt::w0_t_eta, Perm::id, 2) == WElt{Perm::w0, 3, 0});
  CHECK(shape_element(Wt::t_w0eta, Perm::id, 2) == WElt{Perm::id, 2, 1});
  CHECK(shape_element(Wt::t_eta, Perm::w0, 2) == WElt{Perm::w0, 2, 1});
  CHECK(shape_element(Wt::w0_t_eta, Perm::w0, 2) == WElt{Perm::id, 2, 1});
  CHECK(shape_element(Wt::t_w0eta, Perm::w0, 2) == WElt{Perm::w0, 3, 0});

  CHECK(shape_perm(Wt::t_eta, Perm::id) == Perm::id);
  CHECK(shape_perm(Wt::w0_t_eta, Perm::id) == Perm::w0);
  CHECK(shape_perm(Wt::t_w0eta, Perm::id) == Perm::id);
  CHECK(shape_perm(Wt::w0_t_eta, Perm::w0) == Perm::id);

  for (Wt w : {Wt::t_eta, Wt::w0_t_eta, Wt::t_w0eta})
    for (Perm s : {Perm::id, Perm::w0})
      CHECK(shape_element(w, s, 1).w == shape_perm(w, s));
}

TEST_CASE("shape names") {
  CHECK(wt_parse("t_eta") == Wt::t_eta);
  CHECK(wt_parse("w0_t_eta") == Wt::w0_t_eta);
  CHECK(wt_parse("t_w0eta") == Wt::t_w0eta);
  CHECK(wt_name(Wt::t_w0eta) == "t_w0eta");
  CHECK_THROWS_AS(wt_parse("eta"), std::invalid_argument);
}

TEST_CASE("type characters") {
  TameType t = tame(5, {Perm::id}, {3});
  Characters ch = type_characters(t);
  CHECK(ch.gamma == 3);
  CHECK(ch.gamma_prime == 0);
  CHECK(ch.h == 15);

  TameType u = tame(5, {Perm::w0, Perm::w0}, {2, 1});
  Characters cu = type_characters(u);
  CHECK(cu.gamma == 2);
  CHECK(cu.gamma_prime == 5);
  CHECK(cu.h == 55);

  CHECK(s_product(u) == Perm::id);
  CHECK(s_product(tame(5, {Perm::w0}, {1})) == Perm::w0);
  CHECK(k_of(u, 0) == 2);
  CHECK(k_of(u, 1) == 1);
}

TEST_CASE("rotate_triple relabels cyclically") {
  Triple t = triple(5, {Perm::id, Perm::w0, Perm::w0}, {1, 2, 3},
                    {Wt::t_eta, Wt::w0_t_eta, Wt::t_w0eta});
  Triple r1 = rotate_triple(t, 1);
  CHECK(r1.tau.s == std::vector<Perm>{Perm::w0, Perm::w0, Perm::id});
  CHECK(k_of(r1.tau, 0) == 2);
  CHECK(k_of(r1.tau, 2) == 1);
  CHECK(r1.w == std::vector<Wt>{Wt::w0_t_eta, Wt::t_w0eta, Wt::t_eta});
  Triple r3 = rotate_triple(t, 3);
  CHECK(r3.tau.s == t.tau.s);
  CHECK(r3.w == t.w);
  Triple rm = rotate_triple(t, -1);
  CHECK(rm.w == std::vector<Wt>{Wt::t_w0eta, Wt::t_eta, Wt::w0_t_eta});
}

TEST_CASE("small presentation") {
  auto sp = small_presentation(5, 1, 1, 0);
  CHECK(sp.twist == 0);
  CHECK(sp.tau.s == std::vector<Perm>{Perm::id});
  CHECK(k_of(sp.tau, 0) == 1);

  auto sw = small_presentation(5, 1, 0, 1);
  CHECK(sw.twist == 0);
  CHECK(k_of(sw.tau, 0) == 1);

  auto st = small_presentation(5, 1, 3, 1);
  CHECK(st.twist == 1);
  CHECK(k_of(st.tau, 0) == 2);

  CHECK_THROWS_AS(small_presentation(5, 1, 1, 1), std::invalid_argument);

  // recovered characters match up to the twist and a possible swap
  auto check_round = [](long long p, int f, const Int& g, const Int& gp) {
    auto s = small_presentation(p, f, g, gp);
    Characters ch = type_characters(s.tau);
    Int N = int_pow(Int(p), f) - 1;
    Int a = mod_nonneg(ch.gamma + s.twist - g, N);
    Int b = mod_nonneg(ch.gamma_prime + s.twist - gp, N);
    Int c = mod_nonneg(ch.gamma + s.twist - gp, N);
    Int d = mod_nonneg(ch.gamma_prime + s.twist - g, N);
    CHECK(((a == 0 && b == 0) || (c == 0 && d == 0)));
    CHECK(s_product(s.tau) == Perm::id);
  };
  check_round(5, 2, 7, 2);
  check_round(7, 2, 11, 40);
  check_round(11, 3, 123, 401);
}

TEST_CASE("orientation") {
  CHECK(orientation(tame(11, {Perm::id}, {1})) == std::vector<Perm>{Perm::id});
  CHECK(orientation(tame(11, {Perm::w0}, {1})) ==
        std::vector<Perm>{Perm::w0, Perm::id});
  CHECK(orientation(tame(5, {Perm::w0, Perm::id}, {1, 2})) ==
        std::vector<Perm>{Perm::w0, Perm::w0, Perm::id, Perm::id});
  CHECK_THROWS_AS(orientation(tame(5, {Perm::id}, {0})), std::runtime_error);
}

TEST_CASE("sigma prefixes") {
  Triple t = triple(5, {Perm::id, Perm::id, Perm::id}, {1, 1, 1},
                    {Wt::t_eta, Wt::w0_t_eta, Wt::t_eta});
  CHECK(sigma_prefix(t) == std::vector<Perm>{Perm::id, Perm::w0, Perm::w0});
}

TEST_CASE("vprime pairs") {
  Triple a = triple(11, {Perm::id}, {1}, {Wt::w0_t_eta});
  CHECK(vprime_tuple(a) == std::vector<std::array<long long, 2>>{{2, 0}});
  Triple b = triple(11, {Perm::id}, {2}, {Wt::w0_t_eta});
  CHECK(vprime_tuple(b) == std::vector<std::array<long long, 2>>{{3, 0}});
  Triple c = triple(11, {Perm::id}, {1}, {Wt::t_w0eta});
  CHECK(vprime_tuple(c) == std::vector<std::array<long long, 2>>{{1, 1}});
  Triple d = triple(11, {Perm::w0}, {1}, {Wt::w0_t_eta});
  CHECK(vprime_tuple(d) == std::vector<std::array<long long, 2>>{{0, 0}});
}
