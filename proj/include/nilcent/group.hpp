#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nilcent/matrix.hpp"

namespace nilcent {

/// Isomorphism type read off from the order, commutativity and element orders; covers the
/// cyclic groups, elementary abelian 2-groups, S3, D8, Q8, A4, S4 and S5. Other groups get
/// "order N".
std::string isomorphism_label(size_t order, bool abelian, const std::map<int, int>& element_orders);

/// Finite group given by elements and an equivalence on them (equal modulo a normal subgroup).
struct FiniteGroup {
  std::vector<KMatrix> elements;  // elements[0] is the identity class
  std::vector<std::vector<size_t>> table;  // table[i][j] = index of elements[i] * elements[j]
  bool abelian = true;
  std::map<int, int> element_orders;
  std::string label;
  size_t order() const { return elements.size(); }
};

/// Closure of the generators under multiplication, classes decided by `same` (which must be
/// compatible with the product). Throws if more than `limit` classes appear.
FiniteGroup close_group(const std::vector<KMatrix>& generators,
                        const std::function<bool(const KMatrix&, const KMatrix&)>& same, size_t limit = 512);

}  // namespace nilcent
