#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilcent/linalg.hpp"
#include "nilcent/rootsys.hpp"

namespace nilcent {

using SparseVec = std::vector<std::pair<uint32_t, Rational>>;
/// A subspace given by a list of basis vectors in ambient coordinates.
using Subspace = std::vector<QVec>;

/// Root data attached to an algebra whose basis is a Chevalley-type basis:
/// positive root vectors (height order), negative root vectors, then h_1..h_l.
struct ChevalleyData {
  RootSystem rs;
  /// For each positive root: the simple root i and predecessor root index with
  /// x_r = [x_i, x_pred] / x_div and y_r = [y_i, y_pred] / y_div. Simple roots have simple == -1.
  struct Step {
    int simple = -1;
    size_t pred = 0;
    Rational x_div = 1;
    Rational y_div = 1;
  };
  std::vector<Step> steps;

  size_t npos() const { return rs.num_positive(); }
  size_t root_basis(size_t root_idx) const { return root_idx; }
  size_t cartan_basis(size_t i) const { return 2 * npos() + i; }
  size_t x_basis(size_t i) const;  // basis index of x_{alpha_i}
  size_t y_basis(size_t i) const { return npos() + x_basis(i); }
  /// Root index of a basis element, or nullopt for Cartan elements.
  std::optional<size_t> basis_root(size_t b) const { return b < 2 * npos() ? std::optional<size_t>(b) : std::nullopt; }
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string label, size_t dim, std::vector<SparseVec> table);

  /// Chevalley model of the semisimple algebra with the given type label (cached).
  static std::shared_ptr<const LieAlgebra> from_type(const std::string& label);

  const std::string& label() const { return label_; }
  size_t dim() const { return dim_; }
  const SparseVec& bracket_basis(size_t i, size_t j) const { return table_[i * dim_ + j]; }

  template <class F>
  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const auto& sv = table_[i * dim_ + j];
        if (sv.empty()) continue;
        F c = x[i] * y[j];
        for (const auto& [k, v] : sv) out[k] += c * F(v);
      }
    }
    return out;
  }

  /// Matrix of ad x (column j is [x, b_j]).
  template <class F>
  Matrix<F> ad(const Vec<F>& x) const {
    Matrix<F> m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j)
        for (const auto& [k, v] : table_[i * dim_ + j]) m(k, j) += x[i] * F(v);
    }
    return m;
  }

  /// Gram matrix of the Killing form (cached).
  const QMatrix& killing_matrix() const;
  template <class F>
  F killing(const Vec<F>& x, const Vec<F>& y) const {
    const QMatrix& k = killing_matrix();
    F s;
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j)
        if (!y[j].is_zero() && !k(i, j).is_zero()) s += x[i] * y[j] * F(k(i, j));
    }
    return s;
  }

  bool has_chevalley() const { return chev_ != nullptr; }
  const ChevalleyData& chevalley() const;
  void set_chevalley(ChevalleyData d);

  QVec basis_vector(size_t i) const { return unit_vec<Rational>(dim_, i); }
  /// Basis vector for root index r (Chevalley algebras only).
  QVec root_vector(size_t r) const { return basis_vector(chevalley().root_basis(r)); }
  QVec cartan_vector(size_t i) const { return basis_vector(chevalley().cartan_basis(i)); }
  /// Cartan element sum c_i h_i.
  QVec cartan_element(const CoVec& c) const;
  /// Coroot coordinates if x lies in the standard Cartan subalgebra.
  std::optional<CoVec> cartan_coords(const QVec& x) const;
  std::vector<std::string> basis_labels() const;

  /// Largest |[b_i,[b_j,b_k]] + cyclic| over all triples; zero means Jacobi holds.
  bool check_jacobi() const;
  bool check_antisymmetry() const;

 private:
  std::string label_;
  size_t dim_ = 0;
  std::vector<SparseVec> table_;
  std::shared_ptr<const ChevalleyData> chev_;
  mutable std::shared_ptr<QMatrix> killing_;
};

/// Canonical generators (h_i, x_i, y_i) with Bourbaki node order per component.
struct CanonicalGenerators {
  std::vector<QVec> h, x, y;
  CartanMatrix cartan;
  std::vector<ComponentType> components;  // node indices refer to positions in h/x/y
  std::string type() const { return canonical_type_label(components); }
  size_t rank() const { return h.size(); }
};

/// Span of all brackets [a, b].
Subspace derived_subspace(const LieAlgebra& g, const Subspace& s);
/// {x in within : [x, e] = 0 for all e}; `within` empty means the whole algebra.
Subspace centralizer(const LieAlgebra& g, const Subspace& elems, const Subspace* within = nullptr);
/// Subalgebra generated by a set of elements.
Subspace generated_subalgebra(const LieAlgebra& g, const Subspace& gens);

struct ReductiveDecomposition {
  Subspace derived;
  Subspace center;
};
ReductiveDecomposition reductive_decompose(const LieAlgebra& g, const Subspace& s);

/// Matrix of ad x restricted to an ad x-stable subspace, in the coordinates of `basis`.
QMatrix restricted_ad(const LieAlgebra& g, const QVec& x, const Subspace& basis, const Coordinates<Rational>& coords);

/// A split Cartan subalgebra of the semisimple subalgebra s containing the toral `hint`.
Subspace split_cartan(const LieAlgebra& g, const Subspace& s, const Subspace& hint);
/// Canonical generators of a split semisimple subalgebra. `hint` seeds the Cartan.
CanonicalGenerators canonical_generators(const LieAlgebra& g, const Subspace& s, const Subspace& hint = {});
/// Canonical generators from root vectors x_p, y_p of opposite simple roots:
/// y_p is rescaled so that [[x_p, y_p], x_p] = 2 x_p; nodes are put in Bourbaki order.
CanonicalGenerators canonical_from_root_vectors(const LieAlgebra& g, const std::vector<QVec>& xr, const std::vector<QVec>& yr);
/// Canonical generators of a Chevalley model (read off its basis).
CanonicalGenerators standard_generators(const LieAlgebra& model);

/// Chevalley model of a split semisimple subalgebra plus its embedding.
struct Model {
  std::shared_ptr<const LieAlgebra> algebra;
  QMatrix embed;  // ambient dim x model dim; column j is the image of model basis j
  Coordinates<Rational> coords;
  std::optional<QVec> to_model(const QVec& ambient) const { return coords(ambient); }
  QVec to_ambient(const QVec& m) const { return embed.apply(m); }
};
Model build_model(const LieAlgebra& ambient, const CanonicalGenerators& gens, const std::string& label = "");

/// Images of every model basis element given images of x_i and y_i.
/// `br` is the bracket of the target, `sc` multiplies by a rational.
template <class T>
std::vector<T> extend_from_generators(const ChevalleyData& cd, const std::vector<T>& xs, const std::vector<T>& ys,
                                      const std::function<T(const T&, const T&)>& br,
                                      const std::function<T(const Rational&, const T&)>& sc) {
  size_t n = cd.npos(), l = cd.rs.rank();
  std::vector<T> out(2 * n + l);
  for (size_t r = 0; r < n; ++r) {
    const auto& st = cd.steps[r];
    if (st.simple < 0) {
      size_t i = 0;
      while (cd.rs.positive_roots()[r][i] == 0) ++i;
      out[r] = xs[i];
      out[n + r] = ys[i];
    } else {
      size_t i = static_cast<size_t>(st.simple);
      out[r] = sc(st.x_div.inverse(), br(xs[i], out[st.pred]));
      out[n + r] = sc(st.y_div.inverse(), br(ys[i], out[n + st.pred]));
    }
  }
  for (size_t i = 0; i < l; ++i) out[2 * n + i] = br(xs[i], ys[i]);
  return out;
}

/// Homomorphism from a Chevalley model into `target` (matrix target.dim x model.dim).
template <class F>
Matrix<F> homomorphism_from_generators(const LieAlgebra& model, const LieAlgebra& target, const std::vector<Vec<F>>& xs,
                                       const std::vector<Vec<F>>& ys) {
  auto imgs = extend_from_generators<Vec<F>>(
      model.chevalley(), xs, ys, [&](const Vec<F>& a, const Vec<F>& b) { return target.bracket(a, b); },
      [](const Rational& s, const Vec<F>& v) { return scale(F(s), v); });
  return Matrix<F>::from_columns(imgs, target.dim());
}

struct Automorphism {
  KMatrix m;
  bool certified = false;
};

/// Checks A[a,b] = [Aa, Ab] for a in the generating set and b in the basis, and that A is invertible.
bool certify_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const KMatrix& a, const std::vector<QVec>& gens);
bool certify_automorphism(const LieAlgebra& g, const KMatrix& a, const std::vector<QVec>& gens);
/// Generators x_i, y_i of a Chevalley model.
std::vector<QVec> generating_set(const LieAlgebra& model);

/// exp(ad x) for ad-nilpotent x; throws if x is not ad-nilpotent.
template <class F>
Matrix<F> exp_ad(const LieAlgebra& g, const Vec<F>& x) {
  Matrix<F> a = g.ad(x);
  size_t n = g.dim();
  Matrix<F> result = Matrix<F>::identity(n);
  Matrix<F> term = Matrix<F>::identity(n);
  for (size_t k = 1; k <= n + 1; ++k) {
    term = a * term;
    if (term.is_zero()) return result;
    term = F(Rational(1, static_cast<long long>(k))) * term;
    result = result + term;
  }
  throw std::invalid_argument("exp_ad: element is not ad-nilpotent");
}

/// Diagram automorphism x_i -> x_{perm[i]}, y_i -> y_{perm[i]} of a Chevalley model.
QMatrix diagram_automorphism(const LieAlgebra& model, const std::vector<int>& perm);

/// Order of A up to `bound`, or -1.
int finite_order(const KMatrix& a, int bound = 48);
/// Inner-ness test for finite-order automorphisms: the fixed-point algebra
/// has full rank. Throws if A does not have finite order within the bound.
bool is_inner_by_rank(const LieAlgebra& g, const KMatrix& a);
/// Node permutation gamma with A o sigma_gamma^{-1} inner, found through
/// minuscule representations (Chevalley models only).
std::vector<int> outer_class(const LieAlgebra& model, const KMatrix& a);
bool is_inner(const LieAlgebra& model, const KMatrix& a);

/// Jacobson-Morozov style helper: a split toral h with [h,e] = 2e inside the subalgebra s.
struct Triple {
  QVec h, e, f;
};
std::optional<Triple> complete_triple(const LieAlgebra& g, const QVec& e, const Subspace* within = nullptr);

/// Minuscule representation data for a simple Chevalley model component.
struct MinusculeModule {
  std::vector<IVec> weights;          // Dynkin labels of the basis vectors
  std::vector<QMatrix> images;        // image of every model basis element
};
MinusculeModule minuscule_module(const LieAlgebra& model, const std::vector<int>& nodes, size_t fundamental);

/// Inner automorphism alpha with alpha(h) in the standard Cartan subalgebra (Chevalley models).
struct CartanConjugation {
  Automorphism alpha;
  CoVec h_cartan;
};
CartanConjugation conjugate_into_cartan(const LieAlgebra& model, const QVec& h);

std::string vec_to_string(const QVec& v);

}  // namespace nilcent
