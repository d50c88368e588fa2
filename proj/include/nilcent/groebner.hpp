#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilcent/poly.hpp"

namespace nilcent {

struct GroebnerOptions {
  /// Maximum number of S-pair reductions before giving up.
  size_t max_pairs = 1'000'000;
  /// Maximum size of a standard monomial basis handled by FGLM.
  size_t max_quotient_dim = 20'000;
};

template <class F>
struct GroebnerResult {
  bool complete = false;
  std::vector<Poly<F>> basis;  // reduced and monic when complete
  size_t pairs = 0;
  std::string reason;
};

/// Buchberger's algorithm with the product and chain criteria (Gebauer-Moeller
/// update) and normal pair selection. The order is taken from the inputs.
template <class F>
GroebnerResult<F> buchberger(std::vector<Poly<F>> gens, const GroebnerOptions& opt = {});

/// Remainder of p on division by g (full reduction).
template <class F>
Poly<F> normal_form(const Poly<F>& p, const std::vector<Poly<F>>& g);

/// Whether every S-polynomial of g reduces to zero.
template <class F>
bool is_groebner_basis(const std::vector<Poly<F>>& g);

/// Interreduction: no leading monomial of an output divides that of another; same ideal.
template <class F>
std::vector<Poly<F>> reduce_set(std::vector<Poly<F>> p);

/// Monomials outside the leading ideal, or empty optional if there are more than `limit`.
template <class F>
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly<F>>& g, size_t nvars, size_t limit);

/// Converts a reduced Groebner basis of a zero-dimensional ideal to the lex order.
template <class F>
GroebnerResult<F> fglm_to_lex(const std::vector<Poly<F>>& g, size_t nvars, const GroebnerOptions& opt = {});

/// Outcome of a root search for a univariate polynomial over Q(zeta).
struct RootSearch {
  std::vector<Cyclotomic> roots;  // distinct roots found
  UPoly<Cyclotomic> rest;         // factor without roots found (monic), degree 0 when fully split
  bool complete() const { return rest.degree() <= 0; }
};
/// Roots of p in cyclotomic fields up to the configured conductor bound, using
/// rational roots, roots of unity, binomials x^m - c, even substitutions and
/// quadratic formulas with Gauss-sum square roots.
RootSearch cyclotomic_roots(const UPoly<Cyclotomic>& p);
/// sqrt(q) for rational q as a cyclotomic number, if the conductor stays within the bound.
std::optional<Cyclotomic> cyclotomic_sqrt(const Rational& q);

/// A polynomial system with designated variables.
struct PolySystem {
  VarRegistry vars;
  std::vector<QPoly> polys;
  MonoOrder order = MonoOrder::DegRevLex;
  /// (variable, auxiliary) pairs standing for a * t = 1.
  std::vector<std::pair<size_t, size_t>> inverses;

  /// Adds a fresh auxiliary a_t with a_t * t - 1 = 0.
  size_t add_inverse(size_t var);
  std::string str() const;
};

struct SolutionSet {
  enum class Status { Solved, Unsat, Inconclusive };
  Status status = Status::Unsat;
  std::vector<std::vector<Cyclotomic>> solutions;  // indexed by variable
  std::string reason;

  bool inconclusive() const { return status == Status::Inconclusive; }
};

/// All solutions of a zero-dimensional system (Groebner basis, FGLM, lex
/// back-substitution). Positive-dimensional ideals and roots outside the
/// supported fields give Inconclusive. Every returned solution is checked
/// against the input polynomials.
SolutionSet solve_zero_dim(const PolySystem& sys, const GroebnerOptions& opt = {});

/// Same for polynomials with cyclotomic coefficients.
SolutionSet solve_zero_dim(const VarRegistry& vars, const std::vector<KPoly>& polys, const GroebnerOptions& opt = {});

/// Factor-and-reduce splitting: returns branches whose zero sets cover that of p.
/// Branches containing a nonzero constant are dropped. Factorization uses
/// monomial content, univariate root splitting over Q and square-free parts.
std::vector<std::vector<QPoly>> factor_split(const std::vector<QPoly>& p, size_t max_branches = 4096);

/// factor_split followed by solve_zero_dim on each branch; solutions are merged.
SolutionSet solve_with_splitting(const PolySystem& sys, const GroebnerOptions& opt = {});

}  // namespace nilcent
