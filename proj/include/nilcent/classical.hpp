#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilcent/conjugacy.hpp"
#include "nilcent/group.hpp"
#include "nilcent/sl2.hpp"

namespace nilcent {

enum class FormKind { Symmetric, Alternating };

/// A vector space Q^n with a nondegenerate bilinear form phi(v, w) = v^T phi w.
struct FormedSpace {
  size_t n = 0;
  QMatrix phi;
  FormKind kind = FormKind::Symmetric;

  /// Anti-diagonal Gram matrix: all ones (symmetric), or +1 above and -1 below the
  /// anti-diagonal midpoint (alternating, n even).
  static FormedSpace antidiagonal(size_t n, FormKind kind);
  Rational operator()(const QVec& v, const QVec& w) const;
  /// phi(xv, w) + phi(v, xw) = 0 for all basis pairs.
  bool in_algebra(const QMatrix& x) const;
  /// phi(gv, gw) = phi(v, w) for all basis pairs.
  bool preserves(const QMatrix& g) const;
};

/// o(V, phi) or sp(V, phi) as matrices, with structure constants in a fixed basis.
struct ClassicalAlgebra {
  FormedSpace space;
  std::shared_ptr<LieAlgebra> algebra;
  std::vector<QMatrix> basis;
  Coordinates<Rational> coords;

  QMatrix to_matrix(const QVec& x) const;
  QVec from_matrix(const QMatrix& m) const;
  /// Automorphism x -> g x g^{-1} in the algebra basis.
  QMatrix conjugation(const QMatrix& g) const;
};

ClassicalAlgebra classical_algebra(const FormedSpace& fs);
/// o(n) for n >= 3, sp(n) for n even.
ClassicalAlgebra orthogonal_algebra(size_t n);
ClassicalAlgebra symplectic_algebra(size_t n);

struct MatrixTriple {
  QMatrix h, e, f;
};

/// The triple acting on the natural module.
MatrixTriple matrix_triple(const ClassicalAlgebra& alg, const Sl2Triple& t);
Sl2Triple algebra_triple(const ClassicalAlgebra& alg, const MatrixTriple& m, const std::string& label = "");

/// Partitions of n labelling nilpotent orbits: even parts of even multiplicity
/// (symmetric) or odd parts of even multiplicity (alternating). Parts decreasing.
std::vector<std::vector<size_t>> classical_partitions(size_t n, FormKind kind);
/// Nilpotent triple of Jordan type `parts` on the anti-diagonal formed space.
MatrixTriple triple_from_partition(const FormedSpace& fs, const std::vector<size_t>& parts);
/// Sizes of the Jordan blocks of a nilpotent matrix (rank sequence), decreasing.
std::vector<size_t> jordan_type(const QMatrix& e);

/// An irreducible summand V_i with basis lowest, e.lowest, ..., e^{d-1}.lowest.
struct NaturalSummand {
  size_t dim = 0;
  QVec lowest;
  std::vector<QVec> basis;
};
std::vector<NaturalSummand> decompose_natural(const MatrixTriple& t);

/// Lowest weight vectors of the summands of dimension s, with psi_s(v, w) = phi(v, e^{s-1} w).
struct IsotypicData {
  size_t s = 0;
  std::vector<QVec> lowest;
  QMatrix psi;
};
std::vector<IsotypicData> isotypic_data(const FormedSpace& fs, const MatrixTriple& t);

/// g in O(psi) with det g = -1: the reflection in a vector w with psi(w, w) != 0
/// (a basis vector if possible, else the sum of the first two non-orthogonal ones).
QMatrix reflection_neg_det(const QMatrix& psi);

struct ClassicalComponentGroup {
  std::vector<size_t> parts;
  std::vector<size_t> relevant;     // sizes s with a reflection generator
  std::vector<QMatrix> generators;  // g_s on V, one per relevant s
  std::vector<QMatrix> hat_group;   // all products of generators
  std::vector<QMatrix> det_one;     // elements of hat_group with det 1
  std::vector<QMatrix> identity;    // det-one elements acting by an element of Z_G(h,e,f)°
  std::vector<QMatrix> representatives;  // one det-one element per component
  size_t hat_order = 1;
  size_t order = 1;
  std::string hat_label, label;
  bool inconclusive = false;
  std::string reason;
};

/// Component groups of Z_Ghat(h,e,f) (Ghat = O or Sp) and of Z_G(h,e,f), G = Aut(g)°.
ClassicalComponentGroup component_group_classical(const ClassicalAlgebra& alg, const Sl2Triple& t,
                                                  const ConjugacyOptions& opt = {});

}  // namespace nilcent
