#include "nilcent/group.hpp"

#include <stdexcept>

namespace nilcent {

std::string isomorphism_label(size_t order, bool abelian, const std::map<int, int>& element_orders) {
  if (order == 1) return "1";
  auto count = [&](int k) {
    auto it = element_orders.find(k);
    return it == element_orders.end() ? 0 : it->second;
  };
  if (abelian) {
    if (count(static_cast<int>(order)) > 0) return "C" + std::to_string(order);
    if (static_cast<size_t>(count(2)) + 1 == order) {
      std::string s = "C2";
      for (size_t m = order / 2; m > 1; m /= 2) s += "×C2";
      return s;
    }
    return "abelian of order " + std::to_string(order);
  }
  std::map<int, int> s3{{1, 1}, {2, 3}, {3, 2}};
  std::map<int, int> a4{{1, 1}, {2, 3}, {3, 8}};
  std::map<int, int> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  std::map<int, int> s5{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
  if (order == 6 && element_orders == s3) return "S3";
  if (order == 8) return count(2) == 1 ? "Q8" : "D8";
  if (order == 12 && element_orders == a4) return "A4";
  if (order == 24 && element_orders == s4) return "S4";
  if (order == 120 && element_orders == s5) return "S5";
  return "order " + std::to_string(order);
}

FiniteGroup close_group(const std::vector<KMatrix>& generators,
                        const std::function<bool(const KMatrix&, const KMatrix&)>& same, size_t limit) {
  if (generators.empty()) throw std::invalid_argument("close_group: no generators");
  FiniteGroup g;
  size_t n = generators.front().rows();
  g.elements.push_back(KMatrix::identity(n));
  auto find = [&](const KMatrix& m) {
    for (size_t i = 0; i < g.elements.size(); ++i)
      if (same(g.elements[i], m)) return i;
    return g.elements.size();
  };
  for (size_t at = 0; at < g.elements.size(); ++at)
    for (const auto& s : generators) {
      KMatrix p = g.elements[at] * s;
      if (find(p) == g.elements.size()) {
        if (g.elements.size() == limit) throw std::runtime_error("close_group: more than " + std::to_string(limit) + " classes");
        g.elements.push_back(std::move(p));
      }
    }
  size_t k = g.elements.size();
  g.table.assign(k, std::vector<size_t>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      size_t idx = find(g.elements[i] * g.elements[j]);
      if (idx == k) throw std::logic_error("close_group: equivalence is not compatible with the product");
      g.table[i][j] = idx;
    }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < i; ++j)
      if (g.table[i][j] != g.table[j][i]) g.abelian = false;
  for (size_t i = 0; i < k; ++i) {
    int ord = 1;
    for (size_t p = i; p != 0; p = g.table[p][i]) ++ord;
    ++g.element_orders[ord];
  }
  g.label = isomorphism_label(k, g.abelian, g.element_orders);
  return g;
}

}  // namespace nilcent
