#pragma once

// Extended affine Weyl combinatorics for GL2 over an unramified base of
// degree f: tame inertial types in their small normal form, the three
// admissible shape letters per embedding, character exponents, orientation
// permutations, and the v'-pairs that feed the gene construction.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pbt/algebra.hh"

namespace pbt {

enum class Perm : std::uint8_t { id = 0, w0 = 1 };

inline Perm pmul(Perm a, Perm b) { return a == b ? Perm::id : Perm::w0; }
// action on {1, 2}
inline int papply(Perm s, int i) { return s == Perm::id ? i : 3 - i; }
template <typename T>
std::array<T, 2> papply_pair(Perm s, const std::array<T, 2>& v) {
  return s == Perm::id ? v : std::array<T, 2>{v[1], v[0]};
}

// w * t_{(a,b)} in the extended affine Weyl group of GL2
struct WElt {
  Perm w = Perm::id;
  long long a = 0, b = 0;
  bool operator==(const WElt&) const = default;
};

WElt wmul(const WElt& x, const WElt& y);

enum class Wt : std::uint8_t { t_eta = 0, w0_t_eta = 1, t_w0eta = 2 };

// Tame inertial type of niveau f in lowest-alcove coordinates: tau(s, mu)
// with mu_j = (mu_{j,1}, mu_{j,2}).  Small normal form keeps mu_j = (k_j, 0),
// 0 <= k_j <= (p+1)/2, and s_j = id whenever k_j = 0.
struct TameType {
  long long p = 3;
  int f = 1;
  std::vector<Perm> s;
  std::vector<std::array<long long, 2>> mu;
};

// A type together with a shape letter per embedding.
struct Triple {
  TameType tau;
  std::vector<Wt> w;
};

Perm s_product(const TameType& t);
long long k_of(const TameType& t, int j);  // mu[j][0] - mu[j][1]

// Cyclic relabeling of the embeddings: entry j of the result is entry
// (j + r) mod f of the input.
Triple rotate_triple(const Triple& t, int r);

// Exponents of the characters attached to the type: gamma and gamma' are
// niveau-f exponents (mod p^f - 1 is the caller's business), h is the
// niveau-2f pairing exponent, h = gamma' + p^f * gamma.
struct Characters {
  Int gamma, gamma_prime, h;
};
Characters type_characters(const TameType& t);

// Small presentation of a regular pair of niveau-f exponents: a small tame
// type (product(s) = id) and a twist n with
//   {gamma_c + n, gamma'_c + n} = {gamma, gamma'}  (mod p^f - 1).
// Throws if the pair is irregular or admits no small presentation.
struct SmallPresentation {
  TameType tau;
  Int twist;
};
SmallPresentation small_presentation(long long p, int f, const Int& gamma,
                                     const Int& gamma_prime);

// The element z~_j attached to one embedding's (w~, s, k).
WElt shape_element(Wt wt, Perm s, long long k);
// Its finite part z_j.
Perm shape_perm(Wt wt, Perm s);

// Orientation permutations by the strict-dominance characterization.  Length
// f when product(s) = id, else 2f.  Throws on a balanced (irregular) type.
std::vector<Perm> orientation(const TameType& t);

// Sigma_j = z_1 z_2 ... z_j for j = 0..f-1 (Sigma_0 = id).
std::vector<Perm> sigma_prefix(const Triple& t);

// (v'_{j+f}, v'_j) for j = 0..f-1.
std::vector<std::array<long long, 2>> vprime_tuple(const Triple& t);

std::string wt_name(Wt w);
Wt wt_parse(const std::string& name);
std::string perm_name(Perm s);
Perm perm_parse(const std::string& name);

}  // namespace pbt
