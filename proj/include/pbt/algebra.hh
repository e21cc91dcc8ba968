#pragma once

// Exact multivariate polynomial arithmetic over arbitrary-precision integers,
// with a Groebner engine sized for the small elimination and saturation jobs
// the model pipeline needs.  Coefficients are integers; ideal-theoretic
// operations (membership, equality, elimination, saturation) are taken over
// the fraction field, which is what reduction to a canonical primitive basis
// computes.  The prime is an ordinary ring variable, conventionally named "p"
// and placed least significant in the term order.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbt {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// budget

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("computation budget exhausted") {}
};

// RAII tick budget for the Groebner engine.  Scopes nest; the innermost
// active scope is charged.  With no active scope work is unlimited.
class BudgetScope {
 public:
  explicit BudgetScope(std::uint64_t ticks);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

  static void charge(std::uint64_t n = 1);  // throws BudgetExhausted
  static bool active();
  static std::uint64_t used();

 private:
  bool prev_active_;
  std::uint64_t prev_limit_;
  std::uint64_t prev_used_;
};

// ---------------------------------------------------------------------------
// ring and term order

// Variables are listed most significant first; by convention "p" is last.
// `front` > 0 selects a block order eliminating the first `front` variables:
// degrevlex on the front block, ties broken by degrevlex on the rest.
struct Ring {
  std::vector<std::string> vars;
  int front = 0;

  int nvars() const { return static_cast<int>(vars.size()); }
  int index_of(std::string_view name) const;  // -1 if absent
  bool operator==(const Ring&) const = default;
};

using Expv = std::vector<std::int32_t>;

int total_degree(const Expv& e);
bool mono_divides(const Expv& a, const Expv& b);  // a | b
Expv mono_mul(const Expv& a, const Expv& b);
Expv mono_div(const Expv& a, const Expv& b);  // assumes b | a
Expv mono_lcm(const Expv& a, const Expv& b);
bool mono_coprime(const Expv& a, const Expv& b);

// -1, 0, +1 for a < b, a == b, a > b under the ring's order.
int mono_cmp(const Ring& r, const Expv& a, const Expv& b);

// ---------------------------------------------------------------------------
// polynomials

struct Term {
  Int c;
  Expv m;
};

// Terms are kept sorted descending under the owning ring's order, with no
// zero coefficients.  The zero polynomial has no terms.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
  int nterms() const { return static_cast<int>(t.size()); }
  bool operator==(const Poly&) const;
};

Poly poly_zero();
Poly poly_const(const Ring& r, const Int& c);
Poly poly_var(const Ring& r, int var, int e = 1);
Poly poly_term(const Ring& r, const Int& c, const Expv& m);
Poly poly_from_terms(const Ring& r, std::vector<Term> ts);  // sorts and merges

Poly add(const Ring& r, const Poly& a, const Poly& b);
Poly sub(const Ring& r, const Poly& a, const Poly& b);
Poly neg(Poly a);
Poly mul(const Ring& r, const Poly& a, const Poly& b);
Poly mul_term(const Ring& r, const Poly& a, const Int& c, const Expv& m);
Poly mul_int(Poly a, const Int& c);
Poly pow(const Ring& r, const Poly& a, int e);

Int content(const Poly& a);
// Divides out the content and makes the leading coefficient positive.
Poly primitive(Poly a);

int degree_in(const Poly& a, int var);
Poly derivative(const Ring& r, const Poly& a, int var);
// Substitute `value` for variable `var` (value may not involve `var`).
Poly substitute(const Ring& r, const Poly& a, int var, const Poly& value);
bool uses_var(const Poly& a, int var);
// Exact division by a nonzero polynomial; throws if not divisible.
Poly divide_exact(const Ring& r, const Poly& a, const Poly& b);

// Maps a polynomial through a variable embedding: var i of the source ring
// becomes variable map[i] of the destination ring.
Poly map_vars(const Ring& dst, const Poly& a, const std::vector<int>& map);

// ---------------------------------------------------------------------------
// parsing and printing

// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := base ('^' uint)?
//          base := uint | name | '(' expr ')'
Poly parse_poly(const Ring& r, std::string_view text);
std::vector<Poly> parse_polys(const Ring& r, const std::vector<std::string>& texts);
std::string to_string(const Ring& r, const Poly& a);
std::vector<std::string> to_strings(const Ring& r, const std::vector<Poly>& ps);

// ---------------------------------------------------------------------------
// Groebner engine

// Fully reduced pseudo normal form of f against G (not required to be a
// basis).  The result is primitive with positive leading coefficient, or
// zero; it is zero iff f reduces to zero against G.
Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& G);

// Reduced Groebner basis, canonical: elements primitive with positive
// leading coefficients, sorted descending by leading monomial.  Equal ideals
// yield identical bases.
std::vector<Poly> groebner_basis(const Ring& r, std::vector<Poly> F);

bool ideal_contains(const Ring& r, const std::vector<Poly>& gens, const Poly& f);
bool ideal_contains_all(const Ring& r, const std::vector<Poly>& gens,
                        const std::vector<Poly>& fs);
bool ideal_equal(const Ring& r, const std::vector<Poly>& A, const std::vector<Poly>& B);

// Membership of f in the ideal generated by `gb` when `gb` is already a
// Groebner basis (skips recomputation).
bool gb_contains(const Ring& r, const std::vector<Poly>& gb, const Poly& f);

// Elimination of the named variables: returns the contracted ring (same
// relative order among the surviving variables) and generators of the
// elimination ideal.
std::pair<Ring, std::vector<Poly>> eliminate(const Ring& r, const std::vector<Poly>& gens,
                                             const std::vector<std::string>& drop);

// Saturation I : f^infty via the extended-ring trick (t*f - 1 with t most
// significant, then elimination).  Result lives in the original ring.
std::vector<Poly> saturate(const Ring& r, const std::vector<Poly>& gens, const Poly& f);

// Saturation by iterated colon ideals: I : f, (I : f) : f, ... until stable.
// Independent of `saturate`; used as its oracle.
std::vector<Poly> saturate_colon(const Ring& r, const std::vector<Poly>& gens, const Poly& f);

// Ideal quotient I : (f), computed through the module-free intersection
// trick.  Returned as generators.
std::vector<Poly> colon(const Ring& r, const std::vector<Poly>& gens, const Poly& f);

// Membership of f in the radical of I (Rabinowitsch).
bool radical_contains(const Ring& r, const std::vector<Poly>& gens, const Poly& f);

// ---------------------------------------------------------------------------
// matrices, Jacobians, minors

struct PolyMat {
  int rows = 0, cols = 0;
  std::vector<Poly> a;  // row major

  Poly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

PolyMat mat_mul(const Ring& r, const PolyMat& x, const PolyMat& y);
Poly mat_det(const Ring& r, const PolyMat& x);

PolyMat jacobian(const Ring& r, const std::vector<Poly>& gens, const std::vector<int>& vars);

// All c x c minors of x, rows and columns chosen in lexicographic order of
// index combinations (deterministic).
std::vector<Poly> minors(const Ring& r, const PolyMat& x, int c);

// Streams the c x c minors in the same deterministic order; return false
// from the callback to stop early.
void for_each_minor(const Ring& r, const PolyMat& x, int c,
                    const std::function<bool(const Poly&)>& fn);

// ---------------------------------------------------------------------------
// misc

// Runs fn(0..n-1), chunked over `workers` threads (sequential when <= 1).
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

Int int_pow(const Int& b, int e);
Int mod_nonneg(const Int& a, const Int& m);  // representative in [0, m)

}  // namespace pbt
