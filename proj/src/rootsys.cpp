#include "nilcent/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilcent {

CartanMatrix standard_cartan(char series, int n) {
  CartanMatrix c(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  auto link = [&](int i, int j, int cij = -1, int cji = -1) {
    c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = cij;
    c[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = cji;
  };
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  switch (series) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -2, -1);
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -1, -2);
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      link(1, 3);
      link(2, 4);
      link(3, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("F_n needs n == 4");
      link(1, 2);
      link(2, 3, -2, -1);
      link(3, 4);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G_n needs n == 2");
      link(1, 2, -1, -3);
      break;
    default:
      throw std::invalid_argument(std::string("unknown series ") + series);
  }
  return c;
}

std::vector<std::pair<char, int>> parse_type_label(const std::string& label) {
  std::vector<std::pair<char, int>> out;
  std::string s;
  for (char ch : label)
    if (ch != ' ') s += ch;
  if (s.empty() || s == "0") return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    size_t k = 0;
    int mult = 1;
    while (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) ++k;
    if (k > 0) mult = std::stoi(part.substr(0, k));
    if (k >= part.size() || !std::isupper(static_cast<unsigned char>(part[k])))
      throw std::invalid_argument("bad type label: " + label);
    char series = part[k];
    int rank = std::stoi(part.substr(k + 1));
    for (int m = 0; m < mult; ++m) out.emplace_back(series, rank);
  }
  return out;
}

CartanMatrix cartan_from_label(const std::string& label) {
  auto parts = parse_type_label(label);
  size_t n = 0;
  for (auto& [s, r] : parts) n += static_cast<size_t>(r);
  CartanMatrix c(n, std::vector<int>(n, 0));
  size_t off = 0;
  for (auto& [s, r] : parts) {
    auto b = standard_cartan(s, r);
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) c[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return c;
}

namespace {

/// Permutation p (standard node -> component node) with K[p(i)][p(j)] == S[i][j].
std::optional<std::vector<int>> match_nodes(const CartanMatrix& k, const std::vector<int>& nodes, const CartanMatrix& s) {
  size_t n = nodes.size();
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (i == n) return true;
    for (size_t a = 0; a < n; ++a) {
      if (used[a]) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j) {
        int pa = nodes[a], pj = nodes[static_cast<size_t>(p[j])];
        ok = k[static_cast<size_t>(pa)][static_cast<size_t>(pj)] == s[i][j] && k[static_cast<size_t>(pj)][static_cast<size_t>(pa)] == s[j][i];
      }
      if (!ok) continue;
      used[a] = true;
      p[i] = static_cast<int>(a);
      if (rec(i + 1)) return true;
      used[a] = false;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<int> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = nodes[static_cast<size_t>(p[i])];
  return out;
}

int series_rank(char s) { return std::string("ABCDEFG").find(s) == std::string::npos ? 99 : static_cast<int>(std::string("ABCDEFG").find(s)); }

}  // namespace

std::optional<std::vector<ComponentType>> identify_cartan(const CartanMatrix& c) {
  size_t n = c.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> groups;
  for (size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> g;
    std::deque<size_t> q{i};
    comp[i] = static_cast<int>(groups.size());
    while (!q.empty()) {
      size_t a = q.front();
      q.pop_front();
      g.push_back(static_cast<int>(a));
      for (size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && (c[a][b] != 0 || c[b][a] != 0)) {
          comp[b] = comp[i];
          q.push_back(b);
        }
    }
    std::sort(g.begin(), g.end());
    groups.push_back(g);
  }
  std::vector<ComponentType> out;
  for (const auto& g : groups) {
    int r = static_cast<int>(g.size());
    std::vector<char> cands;
    if (r == 1) cands = {'A'};
    else if (r == 2) cands = {'A', 'B', 'G'};
    else if (r == 3) cands = {'A', 'B', 'C'};
    else cands = {'A', 'B', 'C', 'D'};
    if (r == 4) cands.push_back('F');
    if (r >= 6 && r <= 8) cands.push_back('E');
    bool found = false;
    for (char s : cands) {
      auto m = match_nodes(c, g, standard_cartan(s, r));
      if (m) {
        out.push_back({s, r, *m});
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::stable_sort(out.begin(), out.end(), [](const ComponentType& a, const ComponentType& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return series_rank(a.series) < series_rank(b.series);
  });
  return out;
}

std::string canonical_type_label(const std::vector<ComponentType>& comps) {
  if (comps.empty()) return "0";
  std::vector<std::pair<std::string, int>> groups;
  for (const auto& c : comps) {
    if (!groups.empty() && groups.back().first == c.label())
      ++groups.back().second;
    else
      groups.emplace_back(c.label(), 1);
  }
  std::string out;
  for (const auto& [l, m] : groups) {
    if (!out.empty()) out += "+";
    if (m > 1) out += std::to_string(m);
    out += l;
  }
  return out;
}

std::string canonical_type_label(const std::string& label) {
  auto parts = parse_type_label(label);
  std::vector<ComponentType> comps;
  for (auto& [s, r] : parts) {
    char series = s;
    if (series == 'C' && r == 2) series = 'B';
    if (series == 'D' && r == 3) series = 'A';
    if (series == 'B' && r == 1) series = 'A';
    if (series == 'C' && r == 1) series = 'A';
    comps.push_back({series, r, {}});
  }
  std::stable_sort(comps.begin(), comps.end(), [](const ComponentType& a, const ComponentType& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return series_rank(a.series) < series_rank(b.series);
  });
  return canonical_type_label(comps);
}

std::vector<std::vector<int>> cartan_symmetries(const CartanMatrix& c) {
  size_t n = c.size();
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (size_t a = 0; a < n; ++a) {
      if (used[a]) continue;
      bool ok = c[a][a] == c[i][i];
      for (size_t j = 0; j < i && ok; ++j) {
        size_t pj = static_cast<size_t>(p[j]);
        ok = c[a][pj] == c[i][j] && c[pj][a] == c[j][i];
      }
      if (!ok) continue;
      used[a] = true;
      p[i] = static_cast<int>(a);
      rec(i + 1);
      used[a] = false;
    }
  };
  rec(0);
  return out;
}

RootSystem::RootSystem(CartanMatrix c) : c_(std::move(c)) {
  size_t n = c_.size();
  for (size_t i = 0; i < n; ++i) {
    if (c_[i].size() != n || c_[i][i] != 2) throw std::invalid_argument("not a Cartan matrix");
    for (size_t j = 0; j < n; ++j)
      if (i != j && (c_[i][j] > 0 || (c_[i][j] == 0) != (c_[j][i] == 0))) throw std::invalid_argument("not a Cartan matrix");
  }
  auto comps = identify_cartan(c_);
  if (!comps) throw std::invalid_argument("Cartan matrix is not of finite type");
  comps_ = *comps;
  // half squared lengths: C_ij d_j = C_ji d_i, smallest 1 in each component
  d_.assign(n, 0);
  for (const auto& comp : comps_) {
    std::vector<Rational> d(n);
    d[static_cast<size_t>(comp.nodes[0])] = 1;
    std::deque<int> q{comp.nodes[0]};
    while (!q.empty()) {
      size_t i = static_cast<size_t>(q.front());
      q.pop_front();
      for (int jj : comp.nodes) {
        size_t j = static_cast<size_t>(jj);
        if (c_[i][j] == 0 || !d[j].is_zero()) continue;
        d[j] = d[i] * Rational(c_[j][i]) / Rational(c_[i][j]);
        q.push_back(jj);
      }
    }
    Rational mn = d[static_cast<size_t>(comp.nodes[0])];
    for (int j : comp.nodes) mn = std::min(mn, d[static_cast<size_t>(j)]);
    for (int j : comp.nodes) {
      Rational v = d[static_cast<size_t>(j)] / mn;
      if (!v.is_integer()) throw std::invalid_argument("non-integral root lengths");
      d_[static_cast<size_t>(j)] = v.small_num();
    }
  }
  // positive roots by height
  std::vector<IVec> layer;
  for (size_t i = 0; i < n; ++i) {
    IVec r(n, 0);
    r[i] = 1;
    layer.push_back(r);
  }
  while (!layer.empty()) {
    for (const auto& r : layer) {
      index_[r] = pos_.size();
      pos_.push_back(r);
    }
    std::set<IVec> next;
    for (const auto& r : layer)
      for (size_t i = 0; i < n; ++i) {
        int p = string_down(r, i);
        long long q = p - pairing(r, i);
        if (q > 0) {
          IVec s = r;
          ++s[i];
          next.insert(s);
        }
      }
    layer.assign(next.begin(), next.end());
    if (pos_.size() > 20000) throw std::invalid_argument("root system too large");
  }
}

IVec RootSystem::root(size_t idx) const {
  if (idx < pos_.size()) return pos_[idx];
  IVec r = pos_.at(idx - pos_.size());
  for (auto& x : r) x = -x;
  return r;
}

std::optional<size_t> RootSystem::root_index(const IVec& r) const {
  if (r.empty()) return std::nullopt;
  bool neg = false;
  for (auto x : r)
    if (x != 0) {
      neg = x < 0;
      break;
    }
  IVec a = r;
  if (neg)
    for (auto& x : a) x = -x;
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return neg ? it->second + pos_.size() : it->second;
}

long long RootSystem::height(const IVec& r) { return std::accumulate(r.begin(), r.end(), 0LL); }

long long RootSystem::pairing(const IVec& r, size_t j) const {
  long long s = 0;
  for (size_t k = 0; k < r.size(); ++k) s += r[k] * c_[k][j];
  return s;
}

IVec RootSystem::labels(const IVec& r) const {
  IVec out(rank());
  for (size_t j = 0; j < rank(); ++j) out[j] = pairing(r, j);
  return out;
}

long long RootSystem::inner(const IVec& a, const IVec& b) const {
  // (alpha_i, alpha_j) = C_ij d_j
  long long s = 0;
  for (size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * c_[i][j] * d_[j];
  }
  return s;
}

IVec RootSystem::coroot(const IVec& r) const {
  // r^vee = (2/(r,r)) sum r_k d_k alpha_k^vee
  long long rr = inner(r, r);
  IVec out(rank());
  for (size_t k = 0; k < rank(); ++k) {
    long long num = 2 * r[k] * d_[k];
    if (num % rr != 0) throw std::logic_error("non-integral coroot");
    out[k] = num / rr;
  }
  return out;
}

int RootSystem::string_down(const IVec& r, size_t i) const {
  int p = 0;
  IVec s = r;
  while (true) {
    --s[i];
    bool zero = std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; });
    if (zero || !root_index(s)) break;
    ++p;
  }
  return p;
}

QVec simple_values(const RootSystem& rs, const CoVec& h) {
  size_t n = rs.rank();
  QVec v(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      if (!h[i].is_zero() && rs.cartan()[j][i] != 0) v[j] += h[i] * Rational(rs.cartan()[j][i]);
  return v;
}

Rational root_value(const RootSystem& rs, const IVec& root, const CoVec& h) {
  QVec v = simple_values(rs, h);
  Rational s;
  for (size_t j = 0; j < root.size(); ++j)
    if (root[j] != 0) s += Rational(root[j]) * v[j];
  return s;
}

CoVec reflect(const RootSystem& rs, const CoVec& h, size_t i) {
  Rational a;
  for (size_t k = 0; k < rs.rank(); ++k)
    if (!h[k].is_zero() && rs.cartan()[i][k] != 0) a += h[k] * Rational(rs.cartan()[i][k]);
  CoVec out = h;
  out[i] -= a;
  return out;
}

DominantResult dominant_representative(const RootSystem& rs, const CoVec& h) {
  DominantResult res{h, {}};
  while (true) {
    QVec v = simple_values(rs, res.h);
    size_t i = 0;
    while (i < v.size() && v[i].sign() >= 0) ++i;
    if (i == v.size()) break;
    res.h = reflect(rs, res.h, i);
    res.word.push_back(static_cast<int>(i));
    if (res.word.size() > 100000) throw std::logic_error("dominance loop did not terminate");
  }
  return res;
}

CoVec apply_word(const RootSystem& rs, const CoVec& h, const std::vector<int>& word) {
  CoVec out = h;
  for (int i : word) out = reflect(rs, out, static_cast<size_t>(i));
  return out;
}

IVec apply_word_root(const RootSystem& rs, const IVec& r, const std::vector<int>& word) {
  IVec out = r;
  for (int i : word) {
    long long p = rs.pairing(out, static_cast<size_t>(i));
    out[static_cast<size_t>(i)] -= p;
  }
  return out;
}

std::vector<std::vector<int>> weyl_group_words(const RootSystem& rs) {
  IVec rho(rs.rank(), 0);
  for (const auto& r : rs.positive_roots())
    for (size_t k = 0; k < r.size(); ++k) rho[k] += r[k];
  std::map<IVec, size_t> seen;
  std::vector<std::vector<int>> words{{}};
  std::vector<IVec> images{rho};
  seen[rho] = 0;
  for (size_t at = 0; at < words.size(); ++at) {
    for (size_t i = 0; i < rs.rank(); ++i) {
      IVec img = images[at];
      img[i] -= rs.pairing(img, i);
      if (seen.count(img)) continue;
      seen[img] = words.size();
      auto w = words[at];
      w.push_back(static_cast<int>(i));
      words.push_back(std::move(w));
      images.push_back(std::move(img));
    }
  }
  return words;
}

}  // namespace nilcent
