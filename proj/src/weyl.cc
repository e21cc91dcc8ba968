#include "pbt/weyl.hh"

#include <stdexcept>

namespace pbt {

WElt wmul(const WElt& x, const WElt& y) {
  // w t_a * w' t_b = ww' t_{w'^{-1}(a) + b}; transpositions are involutions
  std::array<long long, 2> a{x.a, x.b};
  a = papply_pair(y.w, a);
  return WElt{pmul(x.w, y.w), a[0] + y.a, a[1] + y.b};
}

Perm s_product(const TameType& t) {
  Perm r = Perm::id;
  for (auto s : t.s) r = pmul(r, s);
  return r;
}

long long k_of(const TameType& t, int j) { return t.mu[j][0] - t.mu[j][1]; }

Triple rotate_triple(const Triple& t, int r) {
  int f = t.tau.f;
  Triple out = t;
  for (int j = 0; j < f; ++j) {
    int src = ((j + r) % f + f) % f;
    out.tau.s[j] = t.tau.s[src];
    out.tau.mu[j] = t.tau.mu[src];
    out.w[j] = t.w[src];
  }
  return out;
}

Characters type_characters(const TameType& t) {
  // sigma_j = s_0 s_1 ... s_{f-1-j}
  int f = t.f;
  std::vector<Perm> sigma(f, Perm::id);
  for (int j = 0; j < f; ++j) {
    Perm acc = Perm::id;
    for (int i = 0; i <= f - 1 - j; ++i) acc = pmul(acc, t.s[i]);
    sigma[j] = acc;
  }
  Int pj = 1, gamma = 0, gamma_prime = 0;
  for (int j = 0; j < f; ++j) {
    const auto& m = t.mu[(f - j) % f];
    gamma += pj * m[sigma[j] == Perm::id ? 0 : 1];
    gamma_prime += pj * m[sigma[j] == Perm::id ? 1 : 0];
    pj *= t.p;
  }
  Int h = gamma_prime + int_pow(Int(t.p), f) * gamma;
  return Characters{gamma, gamma_prime, h};
}

SmallPresentation small_presentation(long long p, int f, const Int& gamma,
                                     const Int& gamma_prime) {
  Int N = int_pow(Int(p), f) - 1;
  if (mod_nonneg(gamma - gamma_prime, N) == 0)
    throw std::invalid_argument("small_presentation: irregular pair");
  long long kmax = (p + 1) / 2;

  // bounded exhaustive search, deterministic order
  std::vector<std::vector<Perm>> svecs;
  for (long long mask = 0; mask < (1LL << f); ++mask) {
    std::vector<Perm> s(f);
    int par = 0;
    for (int j = 0; j < f; ++j) {
      s[j] = (mask >> j) & 1 ? Perm::w0 : Perm::id;
      par ^= (mask >> j) & 1;
    }
    if (par == 0) svecs.push_back(std::move(s));
  }
  std::vector<long long> k(f, 0);
  for (;;) {
    for (const auto& s : svecs) {
      bool ok = true;
      for (int j = 0; j < f && ok; ++j)
        if (k[j] == 0 && s[j] != Perm::id) ok = false;
      if (!ok) continue;
      TameType tau;
      tau.p = p;
      tau.f = f;
      tau.s = s;
      tau.mu.resize(f);
      for (int j = 0; j < f; ++j) tau.mu[j] = {k[j], 0};
      Characters ch = type_characters(tau);
      for (int swap = 0; swap < 2; ++swap) {
        const Int& first = swap ? ch.gamma_prime : ch.gamma;
        const Int& second = swap ? ch.gamma : ch.gamma_prime;
        Int n = mod_nonneg(gamma - first, N);
        if (mod_nonneg(second + n - gamma_prime, N) == 0)
          return SmallPresentation{std::move(tau), n};
      }
    }
    // odometer over k-vectors
    int j = 0;
    while (j < f && k[j] == kmax) k[j++] = 0;
    if (j == f) break;
    ++k[j];
  }
  throw std::runtime_error("small_presentation: no small presentation found");
}

WElt shape_element(Wt wt, Perm s, long long k) {
  if (s == Perm::id) {
    switch (wt) {
      case Wt::t_eta: return WElt{Perm::id, k + 1, 0};
      case Wt::w0_t_eta: return WElt{Perm::w0, k + 1, 0};
      case Wt::t_w0eta: return WElt{Perm::id, k, 1};
    }
  } else {
    switch (wt) {
      case Wt::t_eta: return WElt{Perm::w0, k, 1};
      case Wt::w0_t_eta: return WElt{Perm::id, k, 1};
      case Wt::t_w0eta: return WElt{Perm::w0, k + 1, 0};
    }
  }
  throw std::logic_error("shape_element");
}

Perm shape_perm(Wt wt, Perm s) { return pmul(s, wt == Wt::w0_t_eta ? Perm::w0 : Perm::id); }

std::vector<Perm> orientation(const TameType& t) {
  int f = t.f;
  int r = s_product(t) == Perm::id ? 1 : 2;
  int n = r * f;
  std::vector<std::array<long long, 2>> alpha(n);
  for (int kp = 0; kp < n; ++kp) {
    Perm acc = Perm::id;
    for (int mp = 0; mp < kp; ++mp) acc = pmul(acc, t.s[((f - 1 - mp) % f + f) % f]);
    alpha[kp] = papply_pair(acc, t.mu[(f - kp % f) % f]);
  }
  std::vector<Perm> out(n);
  Int P(t.p);
  for (int jp = 0; jp < n; ++jp) {
    Int a1 = 0, a2 = 0, pw = 1;
    for (int ip = 0; ip < n; ++ip) {
      const auto& al = alpha[((ip - jp) % n + n) % n];
      a1 += pw * al[0];
      a2 += pw * al[1];
      pw *= P;
    }
    if (a1 == a2) throw std::runtime_error("orientation: balanced type");
    out[jp] = a1 > a2 ? Perm::id : Perm::w0;
  }
  return out;
}

std::vector<Perm> sigma_prefix(const Triple& t) {
  int f = t.tau.f;
  std::vector<Perm> out(f, Perm::id);
  Perm acc = Perm::id;
  for (int j = 1; j < f; ++j) {
    acc = pmul(acc, shape_perm(t.w[j], t.tau.s[j]));
    out[j] = acc;
  }
  return out;
}

std::vector<std::array<long long, 2>> vprime_tuple(const Triple& t) {
  int f = t.tau.f;
  auto orient = orientation(t.tau);
  auto sigma = sigma_prefix(t);
  std::vector<std::array<long long, 2>> out(f);
  for (int j = 0; j < f; ++j) {
    int jn = (j + 1) % f;
    Wt wt = t.w[jn];
    Perm sn = t.tau.s[jn];
    Perm so = orient[j];
    long long k = k_of(t.tau, jn);
    std::array<long long, 2> pr;
    bool to_eta = wt != Wt::t_w0eta;
    if (sn == Perm::id && so == Perm::id)
      pr = to_eta ? std::array<long long, 2>{k + 1, 0} : std::array<long long, 2>{k, 1};
    else if (sn == Perm::id && so == Perm::w0)
      pr = to_eta ? std::array<long long, 2>{1, -k} : std::array<long long, 2>{0, 1 - k};
    else if (sn == Perm::w0 && so == Perm::id)
      pr = to_eta ? std::array<long long, 2>{k, 1} : std::array<long long, 2>{k + 1, 0};
    else
      pr = to_eta ? std::array<long long, 2>{0, 1 - k} : std::array<long long, 2>{1, -k};
    out[j] = papply_pair(sigma[j], pr);
  }
  return out;
}

std::string wt_name(Wt w) {
  switch (w) {
    case Wt::t_eta: return "t_eta";
    case Wt::w0_t_eta: return "w0_t_eta";
    case Wt::t_w0eta: return "t_w0eta";
  }
  throw std::logic_error("wt_name");
}

Wt wt_parse(const std::string& name) {
  if (name == "t_eta") return Wt::t_eta;
  if (name == "w0_t_eta") return Wt::w0_t_eta;
  if (name == "t_w0eta") return Wt::t_w0eta;
  throw std::invalid_argument("unknown shape letter: " + name);
}

std::string perm_name(Perm s) { return s == Perm::id ? "id" : "w0"; }

Perm perm_parse(const std::string& name) {
  if (name == "id") return Perm::id;
  if (name == "w0") return Perm::w0;
  throw std::invalid_argument("unknown permutation: " + name);
}

}  // namespace pbt
