#pragma once

// Genes: cyclic words of length 2f over {A, B, AB, O} subject to the four
// admissibility conditions, their digit encoding, the gene of a triple, the
// equivalence (rotation and global A/B swap), cluster decompositions, and
// fiber enumeration.

#include <string>
#include <vector>

#include "pbt/algebra.hh"
#include "pbt/weyl.hh"

namespace pbt {

enum class Sym : std::uint8_t { A = 0, B = 1, AB = 2, O = 3 };

using Gene = std::vector<Sym>;  // size 2f; entries X_0 .. X_{2f-1}

std::string sym_name(Sym s);
Sym sym_parse(const std::string& name);

// text form: "X_0 .. X_{f-1} / X_f .. X_{2f-1}", entries space separated
std::string render_gene(const Gene& g);
Gene parse_gene(const std::string& text);

// digits: v[j] is the coefficient of p^{2f-1-j}, so v[0] is the most
// significant digit of the value
Int digits_value(const std::vector<long long>& v, long long p);
std::vector<long long> base_digits(const Int& m, long long p, int f);

// the digit value attached to a pair of exponents; throws when h is
// divisible by p^f + 1 or the pair is irregular, or when the value is zero
Int value_from_gh(long long p, int f, const Int& gamma, const Int& h);

// solves the digit rules; throws "zero deformation ring" when the gene has a
// column (O; O) and "invalid gene" when the rules are unsatisfiable
Gene gene_from_digits(const std::vector<long long>& v);

// the four admissibility conditions; returns false and fills `why`
bool gene_valid(const Gene& g, std::string* why = nullptr);

Gene rotate_gene(const Gene& g, int r);  // X'_j = X_{(j+r) mod 2f}
Gene swap_gene(const Gene& g);           // A <-> B everywhere
bool gene_equivalent(const Gene& a, const Gene& b);
// lexicographically least representative of the equivalence orbit
Gene gene_class_rep(const Gene& g);

Gene gene_of_triple(const Triple& t);

// cluster decomposition: vertex arcs [start, end] with end unwrapped
// (start < end <= start + f); a single anchor yields the whole circle
struct Cluster {
  int start;
  int end;
  bool operator==(const Cluster&) const = default;
};
std::vector<Cluster> clusters(const Gene& g);

// all small triples of niveau f passing the admissibility filters
std::vector<Triple> enumerate_admissible(long long p, int f, int kmax);
// those whose gene is equivalent to g
std::vector<Triple> enumerate_fiber(const Gene& g, long long p, int kmax);

}  // namespace pbt
