#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcent/groebner.hpp"
#include "nilcent/liealg.hpp"
#include "nilcent/sl2.hpp"

namespace nilcent {

/// Row-wise sparse rational matrix.
struct SparseQMatrix {
  std::vector<std::vector<std::pair<size_t, Rational>>> rows;
  SparseQMatrix() = default;
  explicit SparseQMatrix(const QMatrix& m);
  template <class F>
  std::vector<Poly<F>> apply(const std::vector<Poly<F>>& v) const;
};

/// A connected reductive subgroup R of Aut(g) with split Lie algebra, in the
/// parametrization by Bruhat cells U H w' U_w.
class CellGroup {
 public:
  struct Cell {
    std::vector<int> word;           // applied first to last
    std::vector<size_t> inversions;  // positive roots sent to negative roots
    QMatrix wdot, wdot_inv;
    SparseQMatrix wdot_sparse, wdot_inv_sparse;
  };

  /// Derived part given by canonical generators (rank may be 0), torus by a basis of
  /// its Cartan subalgebra consisting of elements with integral eigenvalues on g.
  CellGroup(const LieAlgebra& g, const CanonicalGenerators& derived, std::vector<QVec> cochar);

  const LieAlgebra& algebra() const { return *g_; }
  size_t num_positive() const { return xpos_.size(); }
  size_t torus_rank() const { return cochar_.size(); }
  const std::vector<QVec>& cochar() const { return cochar_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<QVec>& positive_root_vectors() const { return xpos_; }
  /// Root system of the derived part (rank 0 when the group is a torus).
  const RootSystem& roots() const { return rs_; }
  std::string type() const { return type_; }
  /// w' for a simple root of the derived part.
  const QMatrix& sdot(size_t i) const { return sdot_[i]; }
  /// Weights of the torus eigenbasis of g on the cocharacters.
  const std::vector<std::vector<long long>>& weights() const { return weights_; }

  /// Indeterminates for a cell: t_1..t_k, u_1..u_n, s_1..s_m, a_1..a_k (a_i t_i = 1).
  struct Params {
    VarRegistry vars;
    std::vector<size_t> t, u, s, a;
  };
  Params params(const Cell& c) const;

  /// g(v) for the generic element g = u h w' u_w of the cell.
  template <class F>
  std::vector<Poly<F>> apply(const Cell& c, const Params& p, std::vector<Poly<F>> v) const;
  /// g^{-1}(v) for the generic element of the cell.
  template <class F>
  std::vector<Poly<F>> apply_inverse(const Cell& c, const Params& p, std::vector<Poly<F>> v) const;
  /// (h w' u_w)(v), the part of g to the right of u.
  template <class F>
  std::vector<Poly<F>> apply_lower(const Cell& c, const Params& p, std::vector<Poly<F>> v) const;
  /// u(v) or u^{-1}(v).
  template <class F>
  std::vector<Poly<F>> apply_upper(const Params& p, std::vector<Poly<F>> v, bool inverse) const;

  /// The element of the cell at a parameter point.
  KMatrix element(const Cell& c, const Params& p, const std::vector<Cyclotomic>& point) const;
  /// Torus element prod h_k(t_k) as a matrix.
  KMatrix torus_element(const std::vector<Cyclotomic>& t) const;

 private:
  template <class F>
  std::vector<Poly<F>> torus_apply(const Params& p, std::vector<Poly<F>> v, bool inverse) const;
  template <class F>
  std::vector<Poly<F>> root_exp(size_t root, size_t var, std::vector<Poly<F>> v, bool negate) const;

  const LieAlgebra* g_;
  RootSystem rs_;
  std::string type_;
  std::vector<QVec> xpos_;
  std::vector<QMatrix> adpos_;
  std::vector<SparseQMatrix> adpos_sparse_;
  std::vector<QMatrix> sdot_;
  std::vector<QVec> cochar_;
  bool diagonal_ = true;
  QMatrix p_, pinv_;  // torus eigenbasis (columns) when the ambient basis is not one
  SparseQMatrix p_sparse_, pinv_sparse_;
  std::vector<std::vector<long long>> weights_;
  std::vector<Cell> cells_;
};

/// Reductive part of z_g(h) for h in the standard Cartan subalgebra of a Chevalley
/// model: roots vanishing on h, simple system inherited from the positive roots of g,
/// torus parametrized by the simple coroots.
CellGroup centralizer_cell_group(const LieAlgebra& model, const CoVec& h);
/// Identity component of the group with Lie algebra ad c, c reductive in g and split.
CellGroup reductive_cell_group(const LieAlgebra& g, const Subspace& c);

/// w'_alpha_i(t) = exp(t ad x_i) exp(-t^{-1} ad y_i) exp(t ad x_i) for canonical generators.
QMatrix weyl_representative(const LieAlgebra& g, const QVec& x, const QVec& y);

/// tau with tau(h1) = h2 built from simple reflections, or nullopt if h1, h2 are
/// not Weyl conjugate (Chevalley models; h given in simple coroot coordinates).
std::optional<QMatrix> conjugate_cartan_pair(const LieAlgebra& model, const CoVec& h1, const CoVec& h2);

struct CellStatus {
  std::vector<int> word;
  SolutionSet::Status status = SolutionSet::Status::Unsat;
  size_t solutions = 0;
  std::string reason;
};

/// Result of an enumeration over the cells.
struct StabilizerResult {
  bool inconclusive = false;
  std::vector<KMatrix> elements;
  std::vector<CellStatus> cells;
  std::string reason;
};

/// Polynomial system asserting g(src_k) = tgt_k for the generic element g of a cell.
struct CellSystem {
  CellGroup::Params params;
  std::vector<KPoly> polys;
};
CellSystem bruhat_system(const CellGroup& grp, const CellGroup::Cell& cell, const std::vector<QVec>& src,
                         const std::vector<KVec>& tgt);

struct ConjugacyOptions {
  GroebnerOptions groebner;
  /// Stop after the first solution (conjugator search).
  bool first_only = false;
  /// Also require g = g^{-1}.
  bool involutions_only = false;
};

/// All g in R with g(src_k) = tgt_k (finitely many), searched cell by cell.
StabilizerResult solve_in_cells(const CellGroup& grp, const std::vector<QVec>& src, const std::vector<KVec>& tgt,
                                const ConjugacyOptions& opt = {});

/// Triple with h in the standard Cartan subalgebra plus the inner automorphism used to move it.
struct CartanTriple {
  Sl2Triple t;
  QMatrix alpha;  // alpha(original) = t
  CoVec h;
};
CartanTriple triple_in_cartan(const LieAlgebra& model, const Sl2Triple& t);

/// sigma in G with sigma(t1) = t2 (triples of the same orbit); certified.
KMatrix find_conjugator(const LieAlgebra& model, const Sl2Triple& t1, const Sl2Triple& t2, const ConjugacyOptions& opt = {});

/// All elements of Z_G(h,e,f) when z_g(h,e,f) = 0.
StabilizerResult finite_stabilizer(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt = {});
/// Elements of order at most 2 in Z_G(h,e,f).
StabilizerResult order2_search(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt = {});
/// Elements of Z_A(h,e,f) outside G, A = Aut(g): phi * sigma for diagram automorphisms sigma.
StabilizerResult outer_stabilizer(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt = {});

enum class Membership { Yes, No, Inconclusive };
/// Whether sigma lies in the connected group R with Lie algebra ad c1. `tests` is a set of
/// elements on which sigma is compared with elements of R (defaults to a generating set of g).
/// Rational sigma of finite order is reduced to a maximal torus of R inside its fixed points;
/// everything else goes through in_identity_component_cells.
Membership in_identity_component(const LieAlgebra& g, const KMatrix& sigma, const Subspace& c1,
                                 const std::vector<QVec>& tests = {}, const ConjugacyOptions& opt = {});
/// Same test by scanning every Bruhat cell of R.
Membership in_identity_component_cells(const LieAlgebra& g, const KMatrix& sigma, const Subspace& c1,
                                       const std::vector<QVec>& tests = {}, const ConjugacyOptions& opt = {});

/// Whether A fixes every vector of the list.
bool fixes(const KMatrix& a, const std::vector<QVec>& vs);

}  // namespace nilcent
