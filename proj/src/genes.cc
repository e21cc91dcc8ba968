#include "pbt/genes.hh"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pbt {

std::string sym_name(Sym s) {
  switch (s) {
    case Sym::A: return "A";
    case Sym::B: return "B";
    case Sym::AB: return "AB";
    case Sym::O: return "O";
  }
  throw std::logic_error("sym_name");
}

Sym sym_parse(const std::string& name) {
  if (name == "A") return Sym::A;
  if (name == "B") return Sym::B;
  if (name == "AB") return Sym::AB;
  if (name == "O") return Sym::O;
  throw std::invalid_argument("unknown gene entry: " + name);
}

std::string render_gene(const Gene& g) {
  int n = static_cast<int>(g.size());
  int f = n / 2;
  std::string out;
  for (int j = 0; j < n; ++j) {
    if (j == f) out += "/ ";
    out += sym_name(g[j]);
    if (j + 1 < n) out += " ";
  }
  return out;
}

Gene parse_gene(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t)
    if (t != "/") toks.push_back(t);
  Gene g;
  g.reserve(toks.size());
  for (const auto& s : toks) g.push_back(sym_parse(s));
  if (g.empty() || g.size() % 2 != 0) throw std::invalid_argument("gene must have 2f entries");
  return g;
}

Int digits_value(const std::vector<long long>& v, long long p) {
  Int acc = 0;
  for (long long d : v) acc = acc * p + d;
  return acc;
}

std::vector<long long> base_digits(const Int& m, long long p, int f) {
  int n = 2 * f;
  Int top = int_pow(Int(p), n) - 1;
  Int x = mod_nonneg(m, top);
  if (x == 0) throw std::invalid_argument("base_digits: zero value");
  std::vector<long long> v(n, 0);
  for (int j = n - 1; j >= 0; --j) {
    v[j] = static_cast<long long>(x % p);
    x /= p;
  }
  return v;
}

Int value_from_gh(long long p, int f, const Int& gamma, const Int& h) {
  Int pf = int_pow(Int(p), f);
  Int sum = 0, pw = 1;
  for (int j = 0; j < f; ++j) {
    sum += pw;
    pw *= p;
  }
  if (mod_nonneg(h, pf + 1) == 0)
    throw std::invalid_argument("value_from_gh: h is divisible by p^f + 1");
  if (mod_nonneg(h - 2 * gamma - sum, pf - 1) == 0)
    throw std::invalid_argument("value_from_gh: irregular pair");
  Int m = mod_nonneg(h - (pf + 1) * (h - gamma - sum), pf * pf - 1);
  if (m == 0) throw std::invalid_argument("value_from_gh: zero value");
  return m;
}

bool gene_valid(const Gene& g, std::string* why) {
  int n = static_cast<int>(g.size());
  int f = n / 2;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (n == 0 || n % 2 != 0) return fail("gene must have 2f entries");
  bool any_o = false, any_change = false;
  for (int j = 0; j < n; ++j) {
    Sym cur = g[j], nxt = g[(j + 1) % n];
    if (nxt == Sym::O && !(cur == Sym::AB || cur == Sym::O))
      return fail("entry before O must be AB or O");
    if (nxt != Sym::O && cur == Sym::AB) return fail("AB must be followed by O");
    if (cur == Sym::O) any_o = true;
    if (cur != nxt) any_change = true;
  }
  if (!any_o && !any_change) return fail("constant gene without O");
  for (int j = 0; j < f; ++j)
    if (g[j] == Sym::O && g[j + f] == Sym::O) return fail("zero deformation ring");
  return true;
}

Gene gene_from_digits(const std::vector<long long>& v) {
  int n = static_cast<int>(v.size());
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("digit vector must have 2f entries");
  for (long long d : v)
    if (d < 0) throw std::invalid_argument("digits must be nonnegative");

  // first settle which positions carry O: v >= 2 yes, v == 0 no, v == 1
  // copies the next position; an all-ones vector is the all-O gene
  std::vector<int> is_o(n, -1);
  bool all_ones = true;
  for (int j = 0; j < n; ++j) {
    if (v[j] >= 2)
      is_o[j] = 1;
    else if (v[j] == 0)
      is_o[j] = 0;
    if (v[j] != 1) all_ones = false;
  }
  if (all_ones) {
    is_o.assign(n, 1);
  } else {
    for (int pass = 0; pass < 2; ++pass)
      for (int j = n - 1; j >= 0; --j)
        if (is_o[j] < 0 && is_o[(j + 1) % n] >= 0) is_o[j] = is_o[(j + 1) % n];
  }

  Gene g(n);
  for (int j = 0; j < n; ++j) {
    bool next_o = is_o[(j + 1) % n] == 1;
    if (v[j] >= 2)
      g[j] = Sym::O;
    else if (v[j] == 1)
      g[j] = next_o ? Sym::O : Sym::B;
    else
      g[j] = next_o ? Sym::AB : Sym::A;
  }
  std::string why;
  if (!gene_valid(g, &why)) throw std::runtime_error(why == "zero deformation ring"
                                                         ? "zero deformation ring"
                                                         : "invalid gene: " + why);
  return g;
}

Gene rotate_gene(const Gene& g, int r) {
  int n = static_cast<int>(g.size());
  Gene out(n);
  for (int j = 0; j < n; ++j) out[j] = g[(j + r % n + n) % n];
  return out;
}

Gene swap_gene(const Gene& g) {
  Gene out = g;
  for (auto& s : out) {
    if (s == Sym::A)
      s = Sym::B;
    else if (s == Sym::B)
      s = Sym::A;
  }
  return out;
}

bool gene_equivalent(const Gene& a, const Gene& b) {
  if (a.size() != b.size()) return false;
  int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r) {
    Gene g = rotate_gene(a, r);
    if (g == b || swap_gene(g) == b) return true;
  }
  return false;
}

Gene gene_class_rep(const Gene& g) {
  Gene best = g;
  int n = static_cast<int>(g.size());
  for (int r = 0; r < n; ++r) {
    Gene x = rotate_gene(g, r);
    if (x < best) best = x;
    Gene y = swap_gene(x);
    if (y < best) best = y;
  }
  return best;
}

Gene gene_of_triple(const Triple& t) {
  int f = t.tau.f;
  auto vp = vprime_tuple(t);
  long long p = t.tau.p;
  Int m = 0;
  // value = sum_j v'_j p^{2f-1-j}, with vp[j] = (v'_{j+f}, v'_j)
  for (int j = 0; j < f; ++j) {
    m += Int(vp[j][1]) * int_pow(Int(p), 2 * f - 1 - j);
    m += Int(vp[j][0]) * int_pow(Int(p), f - 1 - j);
  }
  Int top = int_pow(Int(p), 2 * f) - 1;
  m = mod_nonneg(m, top);
  if (m == 0) throw std::runtime_error("gene_of_triple: zero value");
  return gene_from_digits(base_digits(m, p, f));
}

std::vector<Cluster> clusters(const Gene& g) {
  std::string why;
  if (!gene_valid(g, &why)) throw std::runtime_error(why);
  int n = static_cast<int>(g.size());
  int f = n / 2;

  bool any_o = false;
  for (auto s : g) any_o |= s == Sym::O;
  if (!any_o) return {};

  // ends of maximal cyclic O-runs
  std::vector<int> ends;
  for (int b = 0; b < n; ++b)
    if (g[b] == Sym::O && g[(b + 1) % n] != Sym::O) ends.push_back(b);
  for (int b : ends) {
    int a = b;
    while (g[(a - 1 + n) % n] == Sym::O) a = (a - 1 + n) % n;
    if (g[(a - 1 + n) % n] != Sym::AB)
      throw std::runtime_error("invalid gene: O-run not preceded by AB");
  }

  std::vector<int> anchors;
  for (int b : ends) anchors.push_back(b % f);
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  if (anchors.size() != ends.size())
    throw std::runtime_error("invalid gene: colliding cluster anchors");

  std::vector<Cluster> out;
  int cnt = static_cast<int>(anchors.size());
  for (int i = 0; i < cnt; ++i) {
    int a = anchors[i], b = anchors[(i + 1) % cnt];
    int span = ((b - a) % f + f) % f;
    if (span == 0) span = f;
    out.push_back(Cluster{a, a + span});
  }
  return out;
}

std::vector<Triple> enumerate_admissible(long long p, int f, int kmax) {
  long long bound = std::min<long long>(kmax, (p + 1) / 2);
  Int pf = int_pow(Int(p), f);
  std::vector<Triple> out;

  std::vector<long long> k(f, 0);
  for (;;) {
    for (long long mask = 0; mask < (1LL << f); ++mask) {
      std::vector<Perm> s(f);
      int par = 0;
      bool ok = true;
      for (int j = 0; j < f; ++j) {
        bool sw = (mask >> j) & 1;
        s[j] = sw ? Perm::w0 : Perm::id;
        par ^= sw;
        if (k[j] == 0 && sw) ok = false;
      }
      if (!ok || par != 0) continue;
      TameType tau;
      tau.p = p;
      tau.f = f;
      tau.s = s;
      tau.mu.resize(f);
      for (int j = 0; j < f; ++j) tau.mu[j] = {k[j], 0};
      Characters ch = type_characters(tau);
      if (mod_nonneg(ch.gamma - ch.gamma_prime, pf - 1) == 0) continue;
      if (mod_nonneg(ch.h, pf + 1) == 0) continue;

      std::vector<int> wsel(f, 0);
      for (;;) {
        int odd = 0;
        for (int j = 0; j < f; ++j)
          if (static_cast<Wt>(wsel[j]) == Wt::w0_t_eta) odd ^= 1;
        if (odd == 1) {
          Triple t;
          t.tau = tau;
          t.w.resize(f);
          for (int j = 0; j < f; ++j) t.w[j] = static_cast<Wt>(wsel[j]);
          Perm zp = Perm::id;
          for (int j = 0; j < f; ++j) zp = pmul(zp, shape_perm(t.w[j], tau.s[j]));
          if (zp == Perm::w0) out.push_back(std::move(t));
        }
        int j = 0;
        while (j < f && wsel[j] == 2) wsel[j++] = 0;
        if (j == f) break;
        ++wsel[j];
      }
    }
    int j = 0;
    while (j < f && k[j] == bound) k[j++] = 0;
    if (j == f) break;
    ++k[j];
  }
  return out;
}

std::vector<Triple> enumerate_fiber(const Gene& g, long long p, int kmax) {
  int f = static_cast<int>(g.size()) / 2;
  std::vector<Triple> out;
  for (auto& t : enumerate_admissible(p, f, kmax)) {
    Gene gt;
    try {
      gt = gene_of_triple(t);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (gene_equivalent(gt, g)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace pbt
