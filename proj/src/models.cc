#include "pbt/models.hh"

#include <algorithm>
#include <stdexcept>

namespace pbt {

namespace {

std::string nm(const char* base, int j) { return base + std::to_string(j); }

Poly V(const Ring& r, const std::string& n) {
  int i = r.index_of(n);
  if (i < 0) throw std::logic_error("missing variable " + n);
  return poly_var(r, i);
}

Poly K(const Ring& r, long long c) { return poly_const(r, c); }

PolyMat mk(int rows, int cols, std::vector<Poly> es) {
  PolyMat m;
  m.rows = rows;
  m.cols = cols;
  m.a = std::move(es);
  return m;
}

// a with var replaced by var - s (s free of var)
Poly shift_var(const Ring& r, const Poly& a, int var, const Poly& s) {
  Poly shifted = sub(r, poly_var(r, var), s);
  Poly out = poly_zero();
  for (const Term& t : a.t) {
    Expv m = t.m;
    int e = m[var];
    m[var] = 0;
    Poly piece = poly_term(r, t.c, m);
    if (e > 0) piece = mul(r, piece, pow(r, shifted, e));
    out = add(r, out, piece);
  }
  return out;
}

// simultaneous substitution var i -> images[i]
Poly apply_map(const Ring& r, const Poly& a, const std::vector<Poly>& images) {
  Poly out = poly_zero();
  for (const Term& t : a.t) {
    Poly piece = poly_const(r, t.c);
    for (size_t i = 0; i < t.m.size(); ++i)
      if (t.m[i] != 0) piece = mul(r, piece, pow(r, images[i], t.m[i]));
    out = add(r, out, piece);
  }
  return out;
}

}  // namespace

std::string vtype_name(VType t) {
  switch (t) {
    case VType::t0: return "0";
    case VType::tI: return "I";
    case VType::tII: return "II";
  }
  throw std::logic_error("vtype_name");
}

VType vtype_parse(const std::string& name) {
  if (name == "0") return VType::t0;
  if (name == "I") return VType::tI;
  if (name == "II") return VType::tII;
  throw std::invalid_argument("unknown vertex type: " + name);
}

VType classify_vertex(Wt w, Perm s, long long k) {
  if (k == 0) {
    if (s != Perm::id) throw std::invalid_argument("classify_vertex: k = 0 needs s = id");
    return VType::t0;
  }
  if (k > 1) return VType::tII;
  if (w == Wt::t_w0eta) return s == Perm::w0 ? VType::tII : VType::tI;
  return s == Perm::id ? VType::tII : VType::tI;
}

std::vector<VertexTyping> typings_of(const Triple& t) {
  std::vector<VertexTyping> out(t.tau.f);
  for (int j = 0; j < t.tau.f; ++j)
    out[j] = {classify_vertex(t.w[j], t.tau.s[j], k_of(t.tau, j)), t.w[j]};
  return out;
}

std::vector<Fragment> fragmentation(const std::vector<VertexTyping>& ty) {
  int f = static_cast<int>(ty.size());
  std::vector<int> nz;
  for (int j = 0; j < f; ++j)
    if (ty[j].type != VType::t0) nz.push_back(j);
  if (nz.empty()) throw std::runtime_error("irregular type");

  std::vector<Fragment> out;
  for (int i : nz) {
    int o = i;
    do {
      o = (o - 1 + f) % f;
    } while (ty[o].type == VType::t0 && o != i);
    Fragment fr;
    fr.in = i;
    fr.out = o;
    for (int l = (o + 1) % f; l != i; l = (l + 1) % f) fr.interior.push_back(l);
    out.push_back(std::move(fr));
  }
  return out;
}

std::string framing_name(Framing fr) {
  switch (fr) {
    case Framing::none: return "none";
    case Framing::diag: return "diag";
    case Framing::full: return "full";
    case Framing::all: return "all";
  }
  throw std::logic_error("framing_name");
}

Framing framing_parse(const std::string& name) {
  if (name == "none") return Framing::none;
  if (name == "diag") return Framing::diag;
  if (name == "full") return Framing::full;
  if (name == "all") return Framing::all;
  throw std::invalid_argument("unknown framing: " + name);
}

bool is_model_var(const std::string& name) {
  return !name.empty() && (name[0] == 'X' || name[0] == 'Y' || name[0] == 'Z');
}

PolyMat initial_mat(const Ring& r, VType t, int j) {
  Poly p = V(r, "p");
  switch (t) {
    case VType::tII:
      return mk(2, 1, {K(r, 1), neg(V(r, nm("X", j)))});
    case VType::tI: {
      Poly Y = V(r, nm("Y", j));
      return mk(2, 2,
                {Y, neg(V(r, nm("X", j))), neg(V(r, nm("Z", j))), sub(r, p, Y)});
    }
    case VType::t0: break;
  }
  throw std::invalid_argument("initial_mat: type 0 vertex");
}

PolyMat final_mat(const Ring& r, VType t, Wt w, int j) {
  Poly p = V(r, "p");
  if (t == VType::tII) {
    Poly Y = V(r, nm("Y", j));
    switch (w) {
      case Wt::t_eta: return mk(1, 2, {Y, neg(p)});
      case Wt::w0_t_eta: return mk(1, 2, {neg(p), Y});
      case Wt::t_w0eta: return mk(1, 2, {poly_zero(), K(r, 1)});
    }
  }
  if (t == VType::tI) {
    Poly X = V(r, nm("X", j));
    Poly Y = V(r, nm("Y", j));
    Poly Z = V(r, nm("Z", j));
    Poly pY = sub(r, p, Y);
    switch (w) {
      case Wt::t_eta: return mk(2, 2, {pY, neg(Z), neg(X), Y});
      case Wt::w0_t_eta: return mk(2, 2, {Y, neg(X), neg(Z), pY});
      case Wt::t_w0eta: return mk(2, 2, {pY, X, Z, Y});
    }
  }
  throw std::invalid_argument("final_mat: type 0 vertex");
}

PolyMat transition_mat(const Ring& r, Wt w, int j) {
  Poly p = V(r, "p");
  Poly X = V(r, nm("X", j));
  switch (w) {
    case Wt::t_eta: return mk(2, 2, {K(r, 1), poly_zero(), neg(X), p});
    case Wt::w0_t_eta: return mk(2, 2, {poly_zero(), K(r, -1), neg(p), X});
    case Wt::t_w0eta: return mk(2, 2, {p, neg(X), poly_zero(), K(r, 1)});
  }
  throw std::logic_error("transition_mat");
}

PolyMat kappa_mat(const Ring& r, Framing fr, int j) {
  bool framed = fr == Framing::all || (j == 0 && fr != Framing::none);
  if (!framed) return mk(2, 2, {K(r, 1), poly_zero(), poly_zero(), K(r, 1)});
  if (fr == Framing::diag)
    return mk(2, 2, {V(r, nm("a", j)), poly_zero(), poly_zero(), V(r, nm("d", j))});
  return mk(2, 2,
            {V(r, nm("a", j)), V(r, nm("b", j)), V(r, nm("c", j)), V(r, nm("d", j))});
}

Poly vertex_quadric(const Ring& r, int j) {
  Poly p = V(r, "p");
  Poly Y = V(r, nm("Y", j));
  return sub(r, mul(r, sub(r, p, Y), Y), mul(r, V(r, nm("X", j)), V(r, nm("Z", j))));
}

std::vector<Poly> fragment_ideal(const Ring& r, const std::vector<VertexTyping>& ty,
                                 const Fragment& fr, Framing framing) {
  PolyMat acc = final_mat(r, ty[fr.out].type, ty[fr.out].w, fr.out);
  acc = mat_mul(r, acc, kappa_mat(r, framing, fr.out));
  for (int l : fr.interior) {
    acc = mat_mul(r, acc, transition_mat(r, ty[l].w, l));
    acc = mat_mul(r, acc, kappa_mat(r, framing, l));
  }
  acc = mat_mul(r, acc, initial_mat(r, ty[fr.in].type, fr.in));
  return acc.a;
}

Ring model_ring(const std::vector<VertexTyping>& ty, Framing fr) {
  int f = static_cast<int>(ty.size());
  Ring r;
  for (int j = 0; j < f; ++j) r.vars.push_back(nm("X", j));
  for (int j = 0; j < f; ++j)
    if (ty[j].type != VType::t0) r.vars.push_back(nm("Y", j));
  for (int j = 0; j < f; ++j)
    if (ty[j].type == VType::tI) r.vars.push_back(nm("Z", j));
  int framed_upto = fr == Framing::all ? f : (fr == Framing::none ? 0 : 1);
  for (int j = 0; j < framed_upto; ++j) {
    r.vars.push_back(nm("a", j));
    if (fr != Framing::diag) r.vars.push_back(nm("b", j));
    if (fr != Framing::diag) r.vars.push_back(nm("c", j));
    r.vars.push_back(nm("d", j));
  }
  r.vars.push_back("p");
  return r;
}

Model naive_model(const std::vector<VertexTyping>& ty, Framing fr) {
  Model m;
  m.typing = ty;
  m.framing = fr;
  m.stage = "naive";
  m.ring = model_ring(ty, fr);
  for (const Fragment& fg : fragmentation(ty)) {
    std::string desc = "fragment (" + std::to_string(fg.in);
    for (auto it = fg.interior.rbegin(); it != fg.interior.rend(); ++it)
      desc += ", " + std::to_string(*it);
    desc += ", " + std::to_string(fg.out) + ")";
    m.log.push_back(desc);
    auto es = fragment_ideal(m.ring, ty, fg, fr);
    m.gens.insert(m.gens.end(), es.begin(), es.end());
  }
  for (size_t j = 0; j < ty.size(); ++j)
    if (ty[j].type == VType::tI)
      m.gens.push_back(vertex_quadric(m.ring, static_cast<int>(j)));
  return m;
}

Model naive_model(const Triple& t, Framing fr) { return naive_model(typings_of(t), fr); }

std::vector<Poly> completion_point(const Model& m) {
  const Ring& r = m.ring;
  std::vector<Poly> out;
  out.push_back(V(r, "p"));
  for (const auto& v : r.vars)
    if (is_model_var(v)) out.push_back(V(r, v));
  for (int j = 0;; ++j) {
    int ai = r.index_of(nm("a", j));
    if (ai < 0) break;
    out.push_back(sub(r, poly_var(r, ai), K(r, 1)));
    out.push_back(sub(r, V(r, nm("d", j)), K(r, 1)));
    int bi = r.index_of(nm("b", j));
    if (bi >= 0) {
      out.push_back(poly_var(r, bi));
      out.push_back(V(r, nm("c", j)));
    }
  }
  return out;
}

Model normalize(const Model& m0) {
  Model m = m0;
  m.stage = "normalized";
  bool changed = true;
  while (changed) {
    changed = false;

    // rule (a): a generator carrying a bare unit term in a model variable
    // nothing else uses splits that variable off
    for (int v = 0; v < m.ring.nvars() && !changed; ++v) {
      if (!is_model_var(m.ring.vars[v])) continue;
      for (size_t gi = 0; gi < m.gens.size() && !changed; ++gi) {
        const Poly& g = m.gens[gi];
        bool bare = false, other = false;
        for (const Term& t : g.t) {
          if (t.m[v] == 0) continue;
          if (!bare && t.m[v] == 1 && total_degree(t.m) == 1 && (t.c == 1 || t.c == -1))
            bare = true;
          else
            other = true;
        }
        if (!bare || other) continue;
        for (size_t gj = 0; gj < m.gens.size() && !other; ++gj)
          if (gj != gi && uses_var(m.gens[gj], v)) other = true;
        if (other) continue;

        Ring nr;
        nr.vars = m.ring.vars;
        nr.vars.erase(nr.vars.begin() + v);
        std::vector<int> map(m.ring.nvars());
        for (int i = 0, k = 0; i < m.ring.nvars(); ++i) map[i] = i == v ? -1 : k++;
        std::vector<Poly> ng;
        for (size_t gj = 0; gj < m.gens.size(); ++gj)
          if (gj != gi) ng.push_back(map_vars(nr, m.gens[gj], map));
        m.log.push_back("normalize: split off " + m.ring.vars[v] + " along " +
                        to_string(m.ring, g));
        m.ring = std::move(nr);
        m.gens = std::move(ng);
        changed = true;
      }
    }
    if (changed) continue;

    // rule (b): shift a variable by a multiple of p when that strictly
    // lowers the global term count
    int pv = m.ring.index_of("p");
    for (int v = 0; v < m.ring.nvars() && !changed; ++v) {
      if (!is_model_var(m.ring.vars[v])) continue;
      for (size_t gi = 0; gi < m.gens.size() && !changed; ++gi) {
        const Poly& g = m.gens[gi];
        if (degree_in(g, v) != 1) continue;
        Poly coef = derivative(m.ring, g, v);
        for (const Term& ct : coef.t) {
          if (!(ct.c == 1 || ct.c == -1)) continue;
          Expv cp = ct.m;
          cp[pv] += 1;
          std::vector<Term> quo;
          for (const Term& t : g.t)
            if (t.m[v] == 0 && mono_divides(cp, t.m))
              quo.push_back({ct.c * t.c, mono_div(t.m, ct.m)});
          if (quo.empty()) continue;
          Poly s = poly_from_terms(m.ring, std::move(quo));

          long long before = 0, after = 0;
          for (const Poly& q : m.gens) before += q.nterms();
          std::vector<Poly> ng;
          ng.reserve(m.gens.size());
          for (const Poly& q : m.gens) ng.push_back(shift_var(m.ring, q, v, s));
          for (const Poly& q : ng) after += q.nterms();
          if (after >= before) continue;

          m.log.push_back("normalize: " + m.ring.vars[v] + " -> " + m.ring.vars[v] +
                          " - (" + to_string(m.ring, s) + ")");
          m.gens = std::move(ng);
          changed = true;
          break;
        }
      }
    }
  }
  return m;
}

Model saturated_model(const Model& m0) {
  Model m = m0;
  m.stage = "saturated";
  m.gens = saturate(m.ring, m.gens, V(m.ring, "p"));
  m.log.push_back("saturated by p");
  return m;
}

std::vector<int> singular_columns(const Model& m) {
  const Ring& r = m.ring;
  std::vector<int> cols;
  std::vector<char> taken(r.vars.size(), 0);
  std::vector<int> outs;
  for (const Fragment& fg : fragmentation(m.typing)) outs.push_back(fg.out);
  std::sort(outs.begin(), outs.end());
  outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
  const char* frame[] = {"a", "b", "c", "d"};
  for (int o : outs)
    for (const char* base : frame) {
      int i = r.index_of(nm(base, o));
      if (i >= 0 && !taken[i]) {
        cols.push_back(i);
        taken[i] = 1;
      }
    }
  int pv = r.index_of("p");
  for (int i = 0; i < r.nvars(); ++i)
    if (i != pv && !taken[i]) cols.push_back(i);
  return cols;
}

std::vector<Poly> singular_ideal(const Model& m, int c) {
  PolyMat J = jacobian(m.ring, m.gens, singular_columns(m));
  std::vector<Poly> out = m.gens;
  auto mins = minors(m.ring, J, c);
  out.insert(out.end(), mins.begin(), mins.end());
  return out;
}

Model deformation_presentation(const Triple& t, Framing fr) {
  return saturated_model(normalize(naive_model(t, fr)));
}

int embdim(const Ring& r, const std::vector<Poly>& gens) {
  std::vector<Poly> F = gens;
  for (int i = 0; i < r.nvars(); ++i)
    for (int j = i; j < r.nvars(); ++j)
      F.push_back(mul(r, poly_var(r, i), poly_var(r, j)));
  auto gb = groebner_basis(r, std::move(F));
  int lin = 0;
  for (const Poly& g : gb)
    if (total_degree(g.lt().m) == 1) ++lin;
  return r.nvars() - lin;
}

std::pair<int, int> embdim_pair(const Model& m) {
  int e1 = embdim(m.ring, m.gens);
  std::vector<Poly> withp = m.gens;
  withp.push_back(V(m.ring, "p"));
  return {e1, embdim(m.ring, withp)};
}

CompareResult compare_models(const Model& a, const Model& b) {
  CompareResult res;
  std::vector<std::string> va = a.ring.vars, vb = b.ring.vars;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) {
    auto ea = embdim_pair(a), eb = embdim_pair(b);
    if (ea != eb) {
      res.verdict = "distinct";
      res.log.push_back("embedding dimensions (" + std::to_string(ea.first) + ", " +
                        std::to_string(ea.second) + ") vs (" + std::to_string(eb.first) +
                        ", " + std::to_string(eb.second) + ")");
    } else {
      res.verdict = "inconclusive";
      res.log.push_back("variable sets differ");
    }
    return res;
  }

  std::vector<int> map(b.ring.nvars());
  for (int i = 0; i < b.ring.nvars(); ++i) map[i] = a.ring.index_of(b.ring.vars[i]);
  std::vector<Poly> bg;
  bg.reserve(b.gens.size());
  for (const Poly& g : b.gens) bg.push_back(map_vars(a.ring, g, map));

  auto ea = embdim_pair(a);
  Model btr;
  btr.ring = a.ring;
  btr.gens = bg;
  auto eb = embdim_pair(btr);
  if (ea != eb) {
    res.verdict = "distinct";
    res.log.push_back("embedding dimensions (" + std::to_string(ea.first) + ", " +
                      std::to_string(ea.second) + ") vs (" + std::to_string(eb.first) +
                      ", " + std::to_string(eb.second) + ")");
    return res;
  }

  if (ideal_equal(a.ring, a.gens, bg)) {
    res.verdict = "equal";
    return res;
  }

  const Ring& r = a.ring;
  std::vector<int> zverts;
  std::vector<int> xz;
  for (int i = 0; i < r.nvars(); ++i) {
    if (r.vars[i][0] == 'Z') zverts.push_back(std::stoi(r.vars[i].substr(1)));
    if (r.vars[i][0] == 'X' || r.vars[i][0] == 'Z') xz.push_back(i);
  }
  Poly pp = V(r, "p");
  long long nsw = 1LL << zverts.size(), nsg = 1LL << xz.size();
  long long total = 0;
  for (long long sw = 0; sw < nsw; ++sw) {
    for (long long sg = 0; sg < nsg; ++sg) {
      if (sw == 0 && sg == 0) continue;
      if (++total > 1024) {
        res.verdict = "inconclusive";
        res.log.push_back("coordinate-change search truncated");
        return res;
      }
      std::vector<Poly> images(r.nvars());
      for (int i = 0; i < r.nvars(); ++i) images[i] = poly_var(r, i);
      std::string desc;
      for (size_t t = 0; t < zverts.size(); ++t) {
        if (!((sw >> t) & 1)) continue;
        int j = zverts[t];
        int xi = r.index_of(nm("X", j)), zi = r.index_of(nm("Z", j)),
            yi = r.index_of(nm("Y", j));
        images[xi] = poly_var(r, zi);
        images[zi] = poly_var(r, xi);
        images[yi] = sub(r, pp, poly_var(r, yi));
        desc += " swap" + std::to_string(j);
      }
      for (size_t t = 0; t < xz.size(); ++t) {
        if (!((sg >> t) & 1)) continue;
        images[xz[t]] = neg(images[xz[t]]);
        desc += " -" + r.vars[xz[t]];
      }
      std::vector<Poly> mapped;
      mapped.reserve(bg.size());
      for (const Poly& g : bg) mapped.push_back(apply_map(r, g, images));
      if (ideal_equal(r, a.gens, mapped)) {
        res.verdict = "equal-after-substitution";
        res.log.push_back("coordinate change:" + desc);
        return res;
      }
    }
  }

  res.verdict = "inconclusive";
  res.log.push_back("no matching coordinate change found");
  return res;
}

}  // namespace pbt
