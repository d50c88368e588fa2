#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcent/matrix.hpp"

namespace nilcent {

/// Integer vector: a root in simple-root coordinates, or Dynkin labels.
using IVec = std::vector<long long>;
/// Entry (i, j) is <alpha_i, alpha_j^vee>.
using CartanMatrix = std::vector<std::vector<int>>;

/// One simple component, with its nodes listed in Bourbaki order.
struct ComponentType {
  char series = 'A';
  int rank = 0;
  std::vector<int> nodes;
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
};

/// Standard Cartan matrix of a single simple type in Bourbaki numbering.
CartanMatrix standard_cartan(char series, int rank);
/// Parses "E6", "A1+A2", "2A1", "A2+B2", "" (rank 0).
std::vector<std::pair<char, int>> parse_type_label(const std::string& label);
/// Block-diagonal Cartan matrix for a type label.
CartanMatrix cartan_from_label(const std::string& label);
/// Components of a Cartan matrix with Bourbaki numbering, or nullopt if not of finite type.
std::optional<std::vector<ComponentType>> identify_cartan(const CartanMatrix& c);
/// Canonical label: components sorted by rank then series, equal ones grouped ("2A1+B2").
std::string canonical_type_label(const std::vector<ComponentType>& comps);
std::string canonical_type_label(const std::string& label);
/// All permutations p with C[p(i)][p(j)] == C[i][j].
std::vector<std::vector<int>> cartan_symmetries(const CartanMatrix& c);

class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(CartanMatrix c);
  static RootSystem from_label(const std::string& label) { return RootSystem(cartan_from_label(label)); }

  size_t rank() const { return c_.size(); }
  const CartanMatrix& cartan() const { return c_; }
  const std::vector<IVec>& positive_roots() const { return pos_; }
  size_t num_positive() const { return pos_.size(); }
  /// Root index: positive roots 0..N-1, negatives N..2N-1 in the same order.
  size_t num_roots() const { return 2 * pos_.size(); }
  IVec root(size_t idx) const;
  std::optional<size_t> root_index(const IVec& r) const;
  bool is_root(const IVec& r) const { return root_index(r).has_value(); }
  static long long height(const IVec& r);

  /// <r, alpha_j^vee>.
  long long pairing(const IVec& r, size_t j) const;
  /// Dynkin labels of a root: (<r, alpha_j^vee>)_j.
  IVec labels(const IVec& r) const;
  /// Coroot of r in simple-coroot coordinates.
  IVec coroot(const IVec& r) const;
  /// Symmetrised form (alpha_i, alpha_j) with short roots of squared length 2.
  long long inner(const IVec& a, const IVec& b) const;
  const std::vector<long long>& half_lengths() const { return d_; }

  const std::vector<ComponentType>& components() const { return comps_; }
  std::string label() const { return canonical_type_label(comps_); }

  /// Largest p with r - p*alpha_i a root (r itself must be a root).
  int string_down(const IVec& r, size_t i) const;

 private:
  CartanMatrix c_;
  std::vector<long long> d_;
  std::vector<IVec> pos_;
  std::map<IVec, size_t> index_;
  std::vector<ComponentType> comps_;
};

/// A Cartan element written in the simple coroots h_1..h_l.
using CoVec = QVec;

/// (alpha_1(h), ..., alpha_l(h)).
QVec simple_values(const RootSystem& rs, const CoVec& h);
/// Value of a root on h.
Rational root_value(const RootSystem& rs, const IVec& root, const CoVec& h);
/// s_i(h) = h - alpha_i(h) h_i.
CoVec reflect(const RootSystem& rs, const CoVec& h, size_t i);

/// Reflections applied in order (word[0] first).
struct DominantResult {
  CoVec h;
  std::vector<int> word;
};
/// Repeatedly reflects in the smallest index with a negative simple-root value.
DominantResult dominant_representative(const RootSystem& rs, const CoVec& h);
CoVec apply_word(const RootSystem& rs, const CoVec& h, const std::vector<int>& word);
/// Root r mapped by the word (word[0] applied first).
IVec apply_word_root(const RootSystem& rs, const IVec& r, const std::vector<int>& word);

/// Weyl group elements as shortest words, found by breadth-first search.
std::vector<std::vector<int>> weyl_group_words(const RootSystem& rs);

}  // namespace nilcent
