#include "pbt/algebra.hh"

#include <algorithm>
#include <cctype>
#include <map>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbt {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// ---------------------------------------------------------------------------
// budget

namespace {
thread_local bool g_budget_active = false;
thread_local std::uint64_t g_budget_limit = 0;
thread_local std::uint64_t g_budget_used = 0;
}  // namespace

BudgetScope::BudgetScope(std::uint64_t ticks)
    : prev_active_(g_budget_active), prev_limit_(g_budget_limit), prev_used_(g_budget_used) {
  g_budget_active = true;
  g_budget_limit = ticks;
  g_budget_used = 0;
}

BudgetScope::~BudgetScope() {
  g_budget_active = prev_active_;
  g_budget_limit = prev_limit_;
  g_budget_used = prev_used_;
}

void BudgetScope::charge(std::uint64_t n) {
  if (!g_budget_active) return;
  g_budget_used += n;
  if (g_budget_used > g_budget_limit) throw BudgetExhausted();
}

bool BudgetScope::active() { return g_budget_active; }
std::uint64_t BudgetScope::used() { return g_budget_used; }

// ---------------------------------------------------------------------------
// ring and monomials

int Ring::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

int total_degree(const Expv& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool mono_divides(const Expv& a, const Expv& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expv mono_mul(const Expv& a, const Expv& b) {
  Expv r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Expv mono_div(const Expv& a, const Expv& b) {
  Expv r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Expv mono_lcm(const Expv& a, const Expv& b) {
  Expv r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Expv& a, const Expv& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

// degrevlex on the index range [lo, hi)
int cmp_block(const Expv& a, const Expv& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int mono_cmp(const Ring& r, const Expv& a, const Expv& b) {
  int n = r.nvars();
  if (r.front > 0) {
    int c = cmp_block(a, b, 0, r.front);
    if (c != 0) return c;
    return cmp_block(a, b, r.front, n);
  }
  return cmp_block(a, b, 0, n);
}

// ---------------------------------------------------------------------------
// polynomial basics

bool Poly::operator==(const Poly& o) const {
  if (t.size() != o.t.size()) return false;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i].c != o.t[i].c || t[i].m != o.t[i].m) return false;
  return true;
}

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Ring& r, const Int& c) {
  Poly p;
  if (c != 0) p.t.push_back({c, Expv(r.nvars(), 0)});
  return p;
}

Poly poly_var(const Ring& r, int var, int e) {
  Poly p;
  Expv m(r.nvars(), 0);
  m[var] = e;
  p.t.push_back({Int(1), std::move(m)});
  return p;
}

Poly poly_term(const Ring& r, const Int& c, const Expv& m) {
  (void)r;
  Poly p;
  if (c != 0) p.t.push_back({c, m});
  return p;
}

Poly poly_from_terms(const Ring& r, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [&](const Term& a, const Term& b) { return mono_cmp(r, a.m, b.m) > 0; });
  Poly p;
  for (auto& t : ts) {
    if (t.c == 0) continue;
    if (!p.t.empty() && p.t.back().m == t.m) {
      p.t.back().c += t.c;
      if (p.t.back().c == 0) p.t.pop_back();
    } else {
      p.t.push_back(std::move(t));
    }
  }
  return p;
}

Poly add(const Ring& r, const Poly& a, const Poly& b) {
  Poly p;
  p.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = mono_cmp(r, a.t[i].m, b.t[j].m);
    if (c > 0) {
      p.t.push_back(a.t[i++]);
    } else if (c < 0) {
      p.t.push_back(b.t[j++]);
    } else {
      Int s = a.t[i].c + b.t[j].c;
      if (s != 0) p.t.push_back({std::move(s), a.t[i].m});
      ++i;
      ++j;
    }
  }
  while (i < a.t.size()) p.t.push_back(a.t[i++]);
  while (j < b.t.size()) p.t.push_back(b.t[j++]);
  return p;
}

Poly neg(Poly a) {
  for (auto& t : a.t) t.c = -t.c;
  return a;
}

Poly sub(const Ring& r, const Poly& a, const Poly& b) { return add(r, a, neg(b)); }

Poly mul_term(const Ring& r, const Poly& a, const Int& c, const Expv& m) {
  (void)r;
  Poly p;
  if (c == 0) return p;
  p.t.reserve(a.t.size());
  for (const auto& t : a.t) p.t.push_back({t.c * c, mono_mul(t.m, m)});
  return p;
}

Poly mul_int(Poly a, const Int& c) {
  if (c == 0) return Poly{};
  for (auto& t : a.t) t.c *= c;
  return a;
}

Poly mul(const Ring& r, const Poly& a, const Poly& b) {
  std::vector<Term> acc;
  acc.reserve(a.t.size() * b.t.size());
  for (const auto& x : a.t)
    for (const auto& y : b.t) acc.push_back({x.c * y.c, mono_mul(x.m, y.m)});
  return poly_from_terms(r, std::move(acc));
}

Poly pow(const Ring& r, const Poly& a, int e) {
  Poly p = poly_const(r, 1);
  for (int i = 0; i < e; ++i) p = mul(r, p, a);
  return p;
}

Int content(const Poly& a) {
  Int g = 0;
  for (const auto& t : a.t) {
    g = gcd(g, abs(t.c));
    if (g == 1) break;
  }
  return g;
}

Poly primitive(Poly a) {
  if (a.is_zero()) return a;
  Int g = content(a);
  if (a.lt().c < 0) g = -g;
  if (g != 1)
    for (auto& t : a.t) t.c /= g;
  return a;
}

int degree_in(const Poly& a, int var) {
  int d = 0;
  for (const auto& t : a.t) d = std::max(d, static_cast<int>(t.m[var]));
  return d;
}

Poly derivative(const Ring& r, const Poly& a, int var) {
  std::vector<Term> acc;
  for (const auto& t : a.t) {
    if (t.m[var] == 0) continue;
    Term u{t.c * t.m[var], t.m};
    u.m[var] -= 1;
    acc.push_back(std::move(u));
  }
  return poly_from_terms(r, std::move(acc));
}

bool uses_var(const Poly& a, int var) {
  for (const auto& t : a.t)
    if (t.m[var] > 0) return true;
  return false;
}

Poly substitute(const Ring& r, const Poly& a, int var, const Poly& value) {
  if (uses_var(value, var)) throw std::invalid_argument("substitute: value uses target variable");
  int d = degree_in(a, var);
  std::vector<Poly> powers(d + 1);
  powers[0] = poly_const(r, 1);
  for (int i = 1; i <= d; ++i) powers[i] = mul(r, powers[i - 1], value);
  Poly res;
  for (const auto& t : a.t) {
    int e = t.m[var];
    Expv m = t.m;
    m[var] = 0;
    res = add(r, res, mul_term(r, powers[e], t.c, m));
  }
  return res;
}

Poly divide_exact(const Ring& r, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  Poly rem = a, q;
  while (!rem.is_zero()) {
    const Term& lr = rem.lt();
    const Term& lb = b.lt();
    if (!mono_divides(lb.m, lr.m) || lr.c % lb.c != 0)
      throw std::runtime_error("divide_exact: not divisible");
    Term t{lr.c / lb.c, mono_div(lr.m, lb.m)};
    q.t.push_back(t);
    rem = sub(r, rem, mul_term(r, b, t.c, t.m));
  }
  return poly_from_terms(r, std::move(q.t));
}

Poly map_vars(const Ring& dst, const Poly& a, const std::vector<int>& map) {
  std::vector<Term> acc;
  acc.reserve(a.t.size());
  for (const auto& t : a.t) {
    Expv m(dst.nvars(), 0);
    for (size_t i = 0; i < t.m.size(); ++i) {
      if (t.m[i] == 0) continue;
      if (map[i] < 0) throw std::runtime_error("map_vars: dropped variable still in use");
      m[map[i]] += t.m[i];
    }
    acc.push_back({t.c, std::move(m)});
  }
  return poly_from_terms(dst, std::move(acc));
}

// ---------------------------------------------------------------------------
// parsing and printing

namespace {

struct Parser {
  const Ring& ring;
  std::string_view s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + what);
  }

  Poly expr() {
    skip();
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Poly acc = term();
    if (negate) acc = neg(acc);
    for (;;) {
      skip();
      if (eat('+')) {
        acc = add(ring, acc, term());
      } else if (eat('-')) {
        acc = sub(ring, acc, term());
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip();
      if (eat('*'))
        acc = mul(ring, acc, factor());
      else
        return acc;
    }
  }

  Poly factor() {
    Poly b = base();
    skip();
    if (eat('^')) {
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) fail("expected exponent");
      int e = std::stoi(std::string(s.substr(start, pos - start)));
      if (e > 1000) fail("exponent too large");
      return pow(ring, b, e);
    }
    return b;
  }

  Poly base() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return poly_const(ring, Int(std::string(s.substr(start, pos - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_' || s[pos] == '@'))
        ++pos;
      std::string name(s.substr(start, pos - start));
      int idx = ring.index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return poly_var(ring, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const Ring& r, std::string_view text) {
  Parser p{r, text};
  Poly res = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return res;
}

std::vector<Poly> parse_polys(const Ring& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(r, t));
  return out;
}

std::string to_string(const Ring& r, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < a.t.size(); ++i) {
    const Term& t = a.t[i];
    bool negative = t.c < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Int mag = abs(t.c);
    bool is_const = total_degree(t.m) == 0;
    bool wrote = false;
    if (mag != 1 || is_const) {
      out += mag.str();
      wrote = true;
    }
    for (int v = 0; v < r.nvars(); ++v) {
      if (t.m[v] == 0) continue;
      if (wrote) out += "*";
      out += r.vars[v];
      if (t.m[v] > 1) out += "^" + std::to_string(t.m[v]);
      wrote = true;
    }
  }
  return out;
}

std::vector<std::string> to_strings(const Ring& r, const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_string(r, p));
  return out;
}

// ---------------------------------------------------------------------------
// normal form

namespace {

void strip_joint_content(Poly& h, std::vector<Term>& tail) {
  Int g = content(h);
  for (const auto& t : tail) {
    g = gcd(g, abs(t.c));
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& t : h.t) t.c /= g;
  for (auto& t : tail) t.c /= g;
}

}  // namespace

Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& G) {
  Poly h = f;
  std::vector<Term> tail;  // accumulated irreducible terms, descending
  int steps = 0;
  while (!h.is_zero()) {
    BudgetScope::charge();
    const Term& lh = h.lt();
    const Poly* red = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && mono_divides(g.lt().m, lh.m)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      tail.push_back(lh);
      h.t.erase(h.t.begin());
      continue;
    }
    Int a = red->lt().c, b = lh.c;
    Int d = gcd(abs(a), abs(b));
    Int scale = a / d;  // multiply h (and tail) by this
    Int coef = b / d;   // subtract coef * m * red
    if (scale < 0) {
      scale = -scale;
      coef = -coef;
    }
    Expv m = mono_div(lh.m, red->lt().m);
    h = sub(r, mul_int(std::move(h), scale), mul_term(r, *red, coef, m));
    if (scale != 1)
      for (auto& t : tail) t.c *= scale;
    if (++steps % 8 == 0) strip_joint_content(h, tail);
  }
  Poly res;
  res.t = std::move(tail);
  return primitive(std::move(res));
}

// ---------------------------------------------------------------------------
// Buchberger with sugar selection and Gebauer-Moller pair pruning

namespace {

struct PairRec {
  int i, j;
  Expv l;
  int sugar;
  int ldeg;
};

struct GBState {
  const Ring& ring;
  std::vector<Poly> G;
  std::vector<int> sugar;
  std::vector<PairRec> P;

  explicit GBState(const Ring& r) : ring(r) {}

  PairRec make_pair(int i, int j) const {
    Expv l = mono_lcm(G[i].lt().m, G[j].lt().m);
    int si = sugar[i] + total_degree(l) - total_degree(G[i].lt().m);
    int sj = sugar[j] + total_degree(l) - total_degree(G[j].lt().m);
    return PairRec{i, j, std::move(l), std::max(si, sj), 0};
  }

  void add_element(Poly g, int sug) {
    int t = static_cast<int>(G.size());
    G.push_back(std::move(g));
    sugar.push_back(sug);
    const Expv& lmt = G[t].lt().m;

    // prune old pairs (chain criterion)
    std::vector<PairRec> kept;
    kept.reserve(P.size());
    for (auto& pr : P) {
      if (mono_divides(lmt, pr.l)) {
        Expv lit = mono_lcm(G[pr.i].lt().m, lmt);
        Expv ljt = mono_lcm(G[pr.j].lt().m, lmt);
        if (lit != pr.l && ljt != pr.l) continue;
      }
      kept.push_back(std::move(pr));
    }
    P = std::move(kept);

    // candidate new pairs
    std::vector<PairRec> C;
    C.reserve(t);
    for (int i = 0; i < t; ++i) C.push_back(make_pair(i, t));

    // drop candidates whose lcm is a proper multiple of another candidate's
    std::vector<bool> drop(C.size(), false);
    for (size_t a = 0; a < C.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = 0; b < C.size(); ++b) {
        if (a == b || drop[b]) continue;
        if (C[b].l != C[a].l && mono_divides(C[b].l, C[a].l)) {
          drop[a] = true;
          break;
        }
      }
    }
    // among equal lcms: if any member has coprime leading monomials the whole
    // class goes; otherwise keep the lowest index
    for (size_t a = 0; a < C.size(); ++a) {
      if (drop[a]) continue;
      bool coprime_in_class = false;
      for (size_t b = 0; b < C.size(); ++b) {
        if (drop[b] && C[b].l != C[a].l) continue;
        if (C[b].l == C[a].l && mono_coprime(G[C[b].i].lt().m, lmt)) {
          coprime_in_class = true;
          break;
        }
      }
      if (coprime_in_class) {
        for (size_t b = 0; b < C.size(); ++b)
          if (C[b].l == C[a].l) drop[b] = true;
        continue;
      }
      for (size_t b = a + 1; b < C.size(); ++b)
        if (!drop[b] && C[b].l == C[a].l) drop[b] = true;
    }
    for (size_t a = 0; a < C.size(); ++a) {
      if (!drop[a]) {
        C[a].ldeg = total_degree(C[a].l);
        P.push_back(std::move(C[a]));
      }
    }
  }

  // deterministic selection: min (sugar, lcm degree, lcm order, i, j)
  size_t select() const {
    size_t best = 0;
    for (size_t k = 1; k < P.size(); ++k) {
      const PairRec& a = P[k];
      const PairRec& b = P[best];
      int c;
      if (a.sugar != b.sugar) {
        c = a.sugar < b.sugar ? -1 : 1;
      } else if (a.ldeg != b.ldeg) {
        c = a.ldeg < b.ldeg ? -1 : 1;
      } else {
        c = mono_cmp(ring, a.l, b.l);
        if (c == 0) c = a.i != b.i ? (a.i < b.i ? -1 : 1) : (a.j < b.j ? -1 : (a.j > b.j ? 1 : 0));
      }
      if (c < 0) best = k;
    }
    return best;
  }
};

Poly s_polynomial(const Ring& r, const Poly& f, const Poly& g, const Expv& l) {
  Int a = f.lt().c, b = g.lt().c;
  Int d = gcd(abs(a), abs(b));
  return sub(r, mul_term(r, f, b / d, mono_div(l, f.lt().m)),
             mul_term(r, g, a / d, mono_div(l, g.lt().m)));
}

std::vector<Poly> reduce_basis(const Ring& r, std::vector<Poly> G) {
  // minimalize
  std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
    int c = mono_cmp(r, a.lt().m, b.lt().m);
    if (c != 0) return c < 0;
    return a.nterms() < b.nterms();
  });
  std::vector<Poly> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& m : minimal) {
      if (mono_divides(m.lt().m, g.lt().m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // tail-reduce each against the others
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(r, minimal[i], others);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Poly& a, const Poly& b) { return mono_cmp(r, a.lt().m, b.lt().m) > 0; });
  return minimal;
}

}  // namespace

std::vector<Poly> groebner_basis(const Ring& r, std::vector<Poly> F) {
  GBState st(r);
  for (auto& f : F) {
    Poly g = primitive(std::move(f));
    if (g.is_zero()) continue;
    Poly h = normal_form(r, g, st.G);
    if (!h.is_zero()) st.add_element(std::move(h), total_degree(g.lt().m));
  }
  while (!st.P.empty()) {
    BudgetScope::charge(4);
    size_t k = st.select();
    PairRec pr = std::move(st.P[k]);
    st.P.erase(st.P.begin() + static_cast<std::ptrdiff_t>(k));
    Poly s = s_polynomial(r, st.G[pr.i], st.G[pr.j], pr.l);
    Poly h = normal_form(r, s, st.G);
    if (!h.is_zero()) st.add_element(std::move(h), pr.sugar);
  }
  return reduce_basis(r, std::move(st.G));
}

bool gb_contains(const Ring& r, const std::vector<Poly>& gb, const Poly& f) {
  return normal_form(r, f, gb).is_zero();
}

bool ideal_contains(const Ring& r, const std::vector<Poly>& gens, const Poly& f) {
  return gb_contains(r, groebner_basis(r, gens), f);
}

bool ideal_contains_all(const Ring& r, const std::vector<Poly>& gens,
                        const std::vector<Poly>& fs) {
  auto gb = groebner_basis(r, gens);
  for (const auto& f : fs)
    if (!gb_contains(r, gb, f)) return false;
  return true;
}

bool ideal_equal(const Ring& r, const std::vector<Poly>& A, const std::vector<Poly>& B) {
  auto ga = groebner_basis(r, A);
  auto gb = groebner_basis(r, B);
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// elimination, saturation, radical membership

std::pair<Ring, std::vector<Poly>> eliminate(const Ring& r, const std::vector<Poly>& gens,
                                             const std::vector<std::string>& drop) {
  std::vector<bool> dropped(r.vars.size(), false);
  for (const auto& name : drop) {
    int i = r.index_of(name);
    if (i < 0) throw std::invalid_argument("eliminate: unknown variable " + name);
    dropped[i] = true;
  }
  Ring ext;
  std::vector<int> fwd(r.vars.size(), -1);
  for (size_t i = 0; i < r.vars.size(); ++i)
    if (dropped[i]) {
      fwd[i] = ext.nvars();
      ext.vars.push_back(r.vars[i]);
    }
  ext.front = ext.nvars();
  for (size_t i = 0; i < r.vars.size(); ++i)
    if (!dropped[i]) {
      fwd[i] = ext.nvars();
      ext.vars.push_back(r.vars[i]);
    }

  std::vector<Poly> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(map_vars(ext, g, fwd));
  auto gb = groebner_basis(ext, std::move(lifted));

  Ring out;
  out.vars.reserve(r.vars.size() - drop.size());
  for (size_t i = 0; i < r.vars.size(); ++i)
    if (!dropped[i]) out.vars.push_back(r.vars[i]);
  std::vector<int> back(ext.nvars(), -1);
  for (size_t i = 0; i < r.vars.size(); ++i)
    if (!dropped[i]) back[fwd[i]] = out.index_of(r.vars[i]);

  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.t)
      for (int v = 0; v < ext.front && pure; ++v)
        if (t.m[v] > 0) pure = false;
    if (pure) kept.push_back(map_vars(out, g, back));
  }
  return {std::move(out), groebner_basis(out, std::move(kept))};
}

namespace {

const char* kSatVar = "@t";

// Extends r by the auxiliary variable, most significant, as a 1-block
// elimination order; fills fwd with the embedding of r's variables.
Ring extend_front(const Ring& r, std::vector<int>& fwd) {
  Ring ext;
  ext.vars.push_back(kSatVar);
  ext.front = 1;
  fwd.assign(r.vars.size(), -1);
  for (size_t i = 0; i < r.vars.size(); ++i) {
    fwd[i] = ext.nvars();
    ext.vars.push_back(r.vars[i]);
  }
  return ext;
}

std::vector<Poly> project_no_aux(const Ring& ext, const Ring& r, const std::vector<Poly>& gb) {
  std::vector<int> back(ext.nvars(), -1);
  for (int i = 1; i < ext.nvars(); ++i) back[i] = i - 1;
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.t)
      if (t.m[0] > 0) {
        pure = false;
        break;
      }
    if (pure) kept.push_back(map_vars(r, g, back));
  }
  return kept;
}

}  // namespace

std::vector<Poly> saturate(const Ring& r, const std::vector<Poly>& gens, const Poly& f) {
  if (r.index_of(kSatVar) >= 0) throw std::invalid_argument("saturate: reserved variable in ring");
  std::vector<int> fwd;
  Ring ext = extend_front(r, fwd);
  std::vector<Poly> lifted;
  lifted.reserve(gens.size() + 1);
  for (const auto& g : gens) lifted.push_back(map_vars(ext, g, fwd));
  Poly tf = mul(ext, poly_var(ext, 0), map_vars(ext, f, fwd));
  lifted.push_back(sub(ext, tf, poly_const(ext, 1)));
  auto gb = groebner_basis(ext, std::move(lifted));
  return groebner_basis(r, project_no_aux(ext, r, gb));
}

std::vector<Poly> colon(const Ring& r, const std::vector<Poly>& gens, const Poly& f) {
  if (r.index_of(kSatVar) >= 0) throw std::invalid_argument("colon: reserved variable in ring");
  // I : (f) = (I cap (f)) / f, intersection via t*I + (1-t)*(f)
  std::vector<int> fwd;
  Ring ext = extend_front(r, fwd);
  Poly t = poly_var(ext, 0);
  Poly one_minus_t = sub(ext, poly_const(ext, 1), t);
  std::vector<Poly> lifted;
  for (const auto& g : gens) lifted.push_back(mul(ext, t, map_vars(ext, g, fwd)));
  lifted.push_back(mul(ext, one_minus_t, map_vars(ext, f, fwd)));
  auto gb = groebner_basis(ext, std::move(lifted));
  auto inter = project_no_aux(ext, r, gb);
  Poly fp = primitive(f);
  std::vector<Poly> out;
  out.reserve(inter.size());
  for (const auto& g : inter) out.push_back(divide_exact(r, primitive(g), fp));
  return groebner_basis(r, std::move(out));
}

std::vector<Poly> saturate_colon(const Ring& r, const std::vector<Poly>& gens, const Poly& f) {
  auto cur = groebner_basis(r, gens);
  for (;;) {
    auto next = colon(r, cur, f);
    if (next.size() == cur.size()) {
      bool same = true;
      for (size_t i = 0; i < cur.size() && same; ++i) same = next[i] == cur[i];
      if (same) return cur;
    }
    cur = std::move(next);
  }
}

bool radical_contains(const Ring& r, const std::vector<Poly>& gens, const Poly& f) {
  if (r.index_of(kSatVar) >= 0)
    throw std::invalid_argument("radical_contains: reserved variable in ring");
  std::vector<int> fwd;
  Ring ext = extend_front(r, fwd);
  std::vector<Poly> lifted;
  lifted.reserve(gens.size() + 1);
  for (const auto& g : gens) lifted.push_back(map_vars(ext, g, fwd));
  Poly tf = mul(ext, poly_var(ext, 0), map_vars(ext, f, fwd));
  lifted.push_back(sub(ext, tf, poly_const(ext, 1)));
  auto gb = groebner_basis(ext, std::move(lifted));
  return gb.size() == 1 && gb[0].nterms() == 1 && total_degree(gb[0].lt().m) == 0;
}

// ---------------------------------------------------------------------------
// matrices and minors

PolyMat mat_mul(const Ring& r, const PolyMat& x, const PolyMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  PolyMat z;
  z.rows = x.rows;
  z.cols = y.cols;
  z.a.assign(static_cast<size_t>(z.rows) * z.cols, Poly{});
  for (int i = 0; i < z.rows; ++i)
    for (int j = 0; j < z.cols; ++j) {
      Poly acc;
      for (int k = 0; k < x.cols; ++k) acc = add(r, acc, mul(r, x.at(i, k), y.at(k, j)));
      z.at(i, j) = std::move(acc);
    }
  return z;
}

Poly mat_det(const Ring& r, const PolyMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_det: not square");
  int n = x.rows;
  if (n == 0) return poly_const(r, 1);
  if (n == 1) return x.at(0, 0);
  Poly acc;
  for (int j = 0; j < n; ++j) {
    if (x.at(0, j).is_zero()) continue;
    PolyMat mm;
    mm.rows = mm.cols = n - 1;
    mm.a.reserve(static_cast<size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) mm.a.push_back(x.at(i, k));
    Poly term = mul(r, x.at(0, j), mat_det(r, mm));
    acc = (j % 2 == 0) ? add(r, acc, term) : sub(r, acc, term);
  }
  return acc;
}

PolyMat jacobian(const Ring& r, const std::vector<Poly>& gens, const std::vector<int>& vars) {
  PolyMat j;
  j.rows = static_cast<int>(gens.size());
  j.cols = static_cast<int>(vars.size());
  j.a.reserve(static_cast<size_t>(j.rows) * j.cols);
  for (const auto& g : gens)
    for (int v : vars) j.a.push_back(derivative(r, g, v));
  return j;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

void for_each_minor(const Ring& r, const PolyMat& x, int c,
                    const std::function<bool(const Poly&)>& fn) {
  if (c <= 0 || c > x.rows || c > x.cols) return;
  auto rows = first_combination(c);
  do {
    auto cols = first_combination(c);
    do {
      PolyMat mm;
      mm.rows = mm.cols = c;
      mm.a.reserve(static_cast<size_t>(c) * c);
      for (int i : rows)
        for (int j : cols) mm.a.push_back(x.at(i, j));
      if (!fn(mat_det(r, mm))) return;
    } while (next_combination(cols, x.cols));
  } while (next_combination(rows, x.rows));
}

std::vector<Poly> minors(const Ring& r, const PolyMat& x, int c) {
  std::vector<Poly> out;
  for_each_minor(r, x, c, [&](const Poly& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// misc

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  int w = std::min(workers, n);
  std::vector<std::exception_ptr> errs(static_cast<size_t>(w));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(w));
  for (int k = 0; k < w; ++k) {
    threads.emplace_back([&, k]() {
      try {
        for (int i = k; i < n; i += w) fn(i);
      } catch (...) {
        errs[static_cast<size_t>(k)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

Int int_pow(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace pbt
