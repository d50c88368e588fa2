#pragma once

#include <string>
#include <vector>

#include "nilcent/conjugacy.hpp"
#include "nilcent/group.hpp"
#include "nilcent/sl2.hpp"

namespace nilcent {

/// c1 = z(h,e,f), c2 = z(c1), their derived parts, the centre t = z(c1) and
/// c = c1' + c2' + t, with its Killing complement.
struct CentralizerPair {
  Sl2Triple triple;
  Subspace c1, c2, c1d, c2d, t, c, perp;
  size_t d() const { return t.size(); }
};

/// Throws std::logic_error when one of the structural identities fails.
CentralizerPair centralizer_pair(const LieAlgebra& g, const Sl2Triple& t);

/// V = c^perp as a c-module: canonical generators of c' (c1' nodes first, then c2'),
/// a basis of t, and one highest weight vector per irreducible summand.
struct ModuleDecomposition {
  CanonicalGenerators gens;      // of c' = c1' + c2'
  size_t rank1 = 0;              // number of nodes belonging to c1'
  std::string type1, type2;      // "0" for a zero algebra
  std::vector<QVec> torus;       // h_{s+1}, ..., h_{s+d}
  std::vector<QVec> highest;     // v_j, first nonzero coordinate 1
  std::vector<Subspace> summands;  // basis of V_j
  /// words[j][k]: y-indices applied in order to v_j giving summands[j][k]
  std::vector<std::vector<std::vector<size_t>>> words;
  std::vector<std::vector<Rational>> nu;  // nu[i][j], i < s + d
  size_t s() const { return gens.rank(); }
  size_t m() const { return highest.size(); }
};

/// Decomposes V; the torus basis is an integral basis of the lattice dual to the torus
/// weights. Throws when V is not multiplicity free.
ModuleDecomposition killing_complement(const LieAlgebra& g, const CentralizerPair& cp);
/// Replaces the torus basis (rows of `change` in terms of the current basis) and recomputes nu.
void change_torus_basis(const LieAlgebra& g, ModuleDecomposition& md, const QMatrix& change);
/// Reorders the summands: new summand j is old summand order[j].
void reorder_summands(ModuleDecomposition& md, const std::vector<size_t>& order);

/// An automorphism of c1' or c2', given by the images of its canonical generators.
struct GeneratorImages {
  std::vector<KVec> h, x, y;
};

struct RestrictionCandidates {
  std::vector<GeneratorImages> theta;  // diagram automorphisms of c1' (one empty entry when c1' = 0)
  std::vector<GeneratorImages> eta;    // Z_{Aut(c2')}(h,e,f)
  std::vector<std::vector<int>> theta_perm;  // node permutation of each theta
  std::vector<std::vector<int>> eta_outer;   // diagram coset of each eta
  bool inconclusive = false;
  std::string reason;
};
RestrictionCandidates restriction_candidates(const LieAlgebra& g, const CentralizerPair& cp,
                                             const ModuleDecomposition& md, const ConjugacyOptions& opt = {});

/// Barred data for one (theta, eta): images of the c' generators and the vectors v-bar_j.
struct BarredData {
  std::vector<KVec> h, x, y;
  std::vector<KVec> v;
  std::vector<std::vector<Cyclotomic>> mu;  // eigenvalue of h-bar_i on v-bar_j, i < s
};
BarredData barred_data(const LieAlgebra& g, const ModuleDecomposition& md, const GeneratorImages& theta,
                       const GeneratorImages& eta);

/// Permutations pi with h-bar_i v-bar_{pi(j)} = nu_ij v-bar_{pi(j)} for i < s.
std::vector<std::vector<size_t>> permutation_candidates(const ModuleDecomposition& md, const BarredData& bd);

/// The matrix a with sigma(h_{s+i}) = sum_k a_ik h_{s+k}, or nullopt when no solution exists.
std::optional<QMatrix> torus_restriction(const ModuleDecomposition& md, const std::vector<size_t>& pi);

/// Smallest indices i_1 < ... < i_d whose torus weights are linearly independent.
std::vector<size_t> pinned_indices(const ModuleDecomposition& md);

struct ExtensionResult {
  SolutionSet::Status status = SolutionSet::Status::Unsat;
  std::vector<Automorphism> sigmas;
  size_t equations = 0;
  std::string reason;
};
/// All (theta, eta, pi)-extensions with lambda pinned to 1 on pinned_indices; each one certified.
ExtensionResult extension_solve(const LieAlgebra& g, const ModuleDecomposition& md, const BarredData& bd,
                                const std::vector<size_t>& pi, const QMatrix& a, const GroebnerOptions& opt = {});

struct ExtensionStatus {
  size_t u = 0, v = 0;
  std::vector<size_t> pi;
  std::string status;  // "no-torus-solution", "unsat", "solved", "outer", "inconclusive"
  size_t solutions = 0;
  std::string reason;
};

struct DoubleCentralizerResult {
  CentralizerPair cp;
  ModuleDecomposition md;
  std::vector<ExtensionStatus> statuses;
  std::vector<KMatrix> candidates;  // all inner extensions found
  FiniteGroup group;                // modulo Z_G(h,e,f)°
  bool inconclusive = false;
  std::string reason;
};

/// Component group of Z_G(h,e,f), G = Aut(g)°, via the double centralizer. A nonzero budget
/// bounds the number of (u, v, pi) triples examined; running out makes the result inconclusive.
DoubleCentralizerResult component_group_doublecent(const LieAlgebra& g, const Sl2Triple& t,
                                                   const ConjugacyOptions& opt = {}, size_t budget = 0);

/// Whether two weight tables agree up to reordering of summands, Cartan symmetries of c1'
/// and c2', and an invertible change of basis of t. Rows are (w1; w2; w3) with w2 the torus part.
struct WeightRow {
  std::vector<long long> w1;
  std::vector<Rational> w2;
  std::vector<long long> w3;
};
bool same_weight_table(const std::vector<WeightRow>& a, const std::vector<WeightRow>& b, const CartanMatrix& c1,
                       const CartanMatrix& c2);
std::vector<WeightRow> weight_rows(const ModuleDecomposition& md);

/// A summand order and torus change (for change_torus_basis) that turn a weight table into a
/// reference table exactly: semisimple parts as written, torus parts through an invertible matrix.
struct TableAlignment {
  std::vector<size_t> order;
  QMatrix change;
};
std::vector<TableAlignment> table_alignments(const ModuleDecomposition& md, const std::vector<WeightRow>& ref);

/// A row of the reference tables shipped in data/tables.
struct TableRow {
  std::string label, c1, c2, group;
  size_t d = 0;
  std::vector<WeightRow> weights;
};
std::vector<TableRow> load_table(const std::string& path);
/// Rows for `algebra` from the data directory (empty when no table is shipped).
std::vector<TableRow> builtin_table(const std::string& algebra);

}  // namespace nilcent
