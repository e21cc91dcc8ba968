#pragma once

// Deformation models: vertex typing, fragmentation of the embedding circle,
// the local matrices, the naive model, term-count normalization, saturation
// by p, singular loci, and comparison of presentations.

#include <string>
#include <utility>
#include <vector>

#include "pbt/algebra.hh"
#include "pbt/genes.hh"
#include "pbt/weyl.hh"

namespace pbt {

// Vertex types: 0 for k = 0, otherwise I or II depending on the shape letter
// and the reflection.
enum class VType : std::uint8_t { t0 = 0, tI = 1, tII = 2 };

std::string vtype_name(VType t);
VType vtype_parse(const std::string& name);

struct VertexTyping {
  VType type = VType::t0;
  Wt w = Wt::t_eta;
  bool operator==(const VertexTyping&) const = default;
};

VType classify_vertex(Wt w, Perm s, long long k);
std::vector<VertexTyping> typings_of(const Triple& t);

// A fragment is a maximal descending path between vertices of nonzero type:
// it enters at `in`, passes the type-0 interior vertices, and exits at
// `out`.  The interior is stored in equation order, ascending cyclically
// from out + 1 to in - 1.  When only one vertex has nonzero type the
// fragment runs the whole circle and the interior has f - 1 vertices.
struct Fragment {
  int in = 0;
  std::vector<int> interior;
  int out = 0;
  bool operator==(const Fragment&) const = default;
};

// Fragments by ascending in-vertex.  Throws when every vertex has type 0.
std::vector<Fragment> fragmentation(const std::vector<VertexTyping>& ty);

// Which vertices carry a frame: none, the 2-torus at vertex 0, all of GL2 at
// vertex 0, or all of GL2 at every vertex.
enum class Framing : std::uint8_t { none = 0, diag = 1, full = 2, all = 3 };

std::string framing_name(Framing fr);
Framing framing_parse(const std::string& name);

struct Model {
  Ring ring;
  std::vector<Poly> gens;
  std::vector<VertexTyping> typing;
  Framing framing = Framing::none;
  std::string stage;  // naive | normalized | saturated
  std::vector<std::string> log;
};

// X, Y, Z coordinates; excludes the frame entries and p.
bool is_model_var(const std::string& name);

// Local matrices over the model ring; j is the vertex index.
PolyMat initial_mat(const Ring& r, VType t, int j);
PolyMat final_mat(const Ring& r, VType t, Wt w, int j);
PolyMat transition_mat(const Ring& r, Wt w, int j);  // type 0 vertices
PolyMat kappa_mat(const Ring& r, Framing fr, int j);
Poly vertex_quadric(const Ring& r, int j);  // (p - Y_j) Y_j - X_j Z_j

// Entries of the matrix equation of one fragment: the final matrix of the
// out vertex, then transition matrices ascending through the interior, then
// the initial matrix of the in vertex, with the frame matrix following every
// final and transition factor.
std::vector<Poly> fragment_ideal(const Ring& r, const std::vector<VertexTyping>& ty,
                                 const Fragment& fr, Framing framing);

// Model ring: X_j for every vertex, Y_j for types I and II, Z_j for type I,
// then the frame entries, then p last.
Ring model_ring(const std::vector<VertexTyping>& ty, Framing fr);

// All fragment equations plus one quadric per type-I vertex.
Model naive_model(const std::vector<VertexTyping>& ty, Framing fr);
Model naive_model(const Triple& t, Framing fr);

// The maximal ideal at which the presentation completes: p, the model
// variables, and per framed vertex a_j - 1, d_j - 1, b_j, c_j.
std::vector<Poly> completion_point(const Model& m);

// Term-count reduction.  Rule (a) removes a generator that splits off a
// model variable nothing else uses; rule (b) shifts a variable by a multiple
// of p when that strictly lowers the global term count.
Model normalize(const Model& m);

// Saturation of the generators by p.
Model saturated_model(const Model& m);

// The generators together with the c x c minors of their Jacobian with
// respect to every variable except p; frame columns of the out vertices come
// first, the remaining variables follow in ring order.
std::vector<Poly> singular_ideal(const Model& m, int c);
// The Jacobian column order used by singular_ideal.
std::vector<int> singular_columns(const Model& m);

// classify, fragment, naive model, normalize, saturate
Model deformation_presentation(const Triple& t, Framing fr);

// Embedding dimension of R/I at the origin: nvars minus the number of
// independent linear forms in I + m^2.
int embdim(const Ring& r, const std::vector<Poly>& gens);
// (embdim of R/I, embdim of R/(I + p)).
std::pair<int, int> embdim_pair(const Model& m);

struct CompareResult {
  std::string verdict;  // equal | equal-after-substitution | distinct | inconclusive
  std::vector<std::string> log;
};

// Same variable set required; embedding dimensions decide "distinct", ideal
// equality decides "equal", then a bounded search over coordinate changes
// (X_j <-> Z_j with Y_j -> p - Y_j at type-I vertices, sign flips on X and Z
// variables) decides "equal-after-substitution".
CompareResult compare_models(const Model& a, const Model& b);

}  // namespace pbt
