#include "nilcent/liealg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilcent {

size_t ChevalleyData::x_basis(size_t i) const {
  IVec e(rs.rank(), 0);
  e[i] = 1;
  return *rs.root_index(e);
}

LieAlgebra::LieAlgebra(std::string label, size_t dim, std::vector<SparseVec> table)
    : label_(std::move(label)), dim_(dim), table_(std::move(table)) {
  if (table_.size() != dim_ * dim_) throw std::invalid_argument("structure table has wrong size");
}

const ChevalleyData& LieAlgebra::chevalley() const {
  if (!chev_) throw std::logic_error("algebra " + label_ + " carries no root data");
  return *chev_;
}

void LieAlgebra::set_chevalley(ChevalleyData d) { chev_ = std::make_shared<const ChevalleyData>(std::move(d)); }

const QMatrix& LieAlgebra::killing_matrix() const {
  if (killing_) return *killing_;
  auto k = std::make_shared<QMatrix>(dim_, dim_);
  auto coeff = [&](size_t a, size_t b, size_t c) -> const Rational* {
    for (const auto& [idx, v] : table_[a * dim_ + b])
      if (idx == c) return &v;
    return nullptr;
  };
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i; j < dim_; ++j) {
      // tr(ad b_i ad b_j) = sum_l sum_k c^k_{i l} c^l_{j k}
      Rational s;
      for (size_t l = 0; l < dim_; ++l)
        for (const auto& [kk, v] : table_[i * dim_ + l]) {
          const Rational* w = coeff(j, kk, l);
          if (w) s += v * *w;
        }
      (*k)(i, j) = s;
      (*k)(j, i) = s;
    }
  killing_ = k;
  return *killing_;
}

QVec LieAlgebra::cartan_element(const CoVec& c) const {
  QVec v(dim_);
  const auto& cd = chevalley();
  for (size_t i = 0; i < c.size(); ++i) v[cd.cartan_basis(i)] = c[i];
  return v;
}

std::optional<CoVec> LieAlgebra::cartan_coords(const QVec& x) const {
  const auto& cd = chevalley();
  for (size_t b = 0; b < 2 * cd.npos(); ++b)
    if (!x[b].is_zero()) return std::nullopt;
  CoVec c(cd.rs.rank());
  for (size_t i = 0; i < c.size(); ++i) c[i] = x[cd.cartan_basis(i)];
  return c;
}

std::vector<std::string> LieAlgebra::basis_labels() const {
  std::vector<std::string> out;
  if (!chev_) {
    for (size_t i = 0; i < dim_; ++i) out.push_back("b" + std::to_string(i + 1));
    return out;
  }
  const auto& cd = *chev_;
  auto rootstr = [](const IVec& r) {
    std::string s;
    for (auto x : r) s += std::to_string(x < 0 ? -x : x);
    return s;
  };
  for (size_t r = 0; r < cd.npos(); ++r) out.push_back("x" + rootstr(cd.rs.positive_roots()[r]));
  for (size_t r = 0; r < cd.npos(); ++r) out.push_back("y" + rootstr(cd.rs.positive_roots()[r]));
  for (size_t i = 0; i < cd.rs.rank(); ++i) out.push_back("h" + std::to_string(i + 1));
  return out;
}

bool LieAlgebra::check_antisymmetry() const {
  for (size_t i = 0; i < dim_; ++i) {
    if (!table_[i * dim_ + i].empty()) return false;
    for (size_t j = i + 1; j < dim_; ++j) {
      QVec a(dim_), b(dim_);
      for (const auto& [k, v] : table_[i * dim_ + j]) a[k] += v;
      for (const auto& [k, v] : table_[j * dim_ + i]) b[k] -= v;
      if (a != b) return false;
    }
  }
  return true;
}

bool LieAlgebra::check_jacobi() const {
  auto br_basis = [&](const QVec& x, size_t j) {
    QVec out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, v] : table_[i * dim_ + j]) out[k] += x[i] * v;
    }
    return out;
  };
  auto basis_br = [&](size_t i, size_t j) {
    QVec out(dim_);
    for (const auto& [k, v] : table_[i * dim_ + j]) out[k] += v;
    return out;
  };
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j) {
      QVec ij = basis_br(i, j);
      for (size_t k = j + 1; k < dim_; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        QVec s = br_basis(ij, k) + br_basis(basis_br(j, k), i) + br_basis(basis_br(k, i), j);
        if (!is_zero_vec(s)) return false;
      }
    }
  return true;
}

std::string vec_to_string(const QVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

// ---------------------------------------------------------------------------
// subspaces

Subspace derived_subspace(const LieAlgebra& g, const Subspace& s) {
  std::vector<QVec> all;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      QVec b = g.bracket(s[i], s[j]);
      if (!is_zero_vec(b)) all.push_back(std::move(b));
    }
  return span_basis(all, g.dim());
}

Subspace centralizer(const LieAlgebra& g, const Subspace& elems, const Subspace* within) {
  size_t n = g.dim();
  Subspace w;
  if (within) {
    w = *within;
  } else {
    for (size_t i = 0; i < n; ++i) w.push_back(unit_vec<Rational>(n, i));
  }
  if (w.empty()) return {};
  // coefficient vectors c with [sum c_k w_k, e] = 0 for all e
  std::vector<QMatrix> ms;
  for (const auto& e : elems) {
    QMatrix m(n, w.size());
    for (size_t k = 0; k < w.size(); ++k) m.set_col(k, g.bracket(w[k], e));
    ms.push_back(std::move(m));
  }
  auto ker = common_kernel(ms, w.size());
  Subspace out;
  for (const auto& c : ker) {
    QVec v(n);
    for (size_t k = 0; k < w.size(); ++k) axpy(v, c[k], w[k]);
    out.push_back(std::move(v));
  }
  return span_basis(out, n);
}

Subspace generated_subalgebra(const LieAlgebra& g, const Subspace& gens) {
  Subspace basis = span_basis(gens, g.dim());
  while (true) {
    std::vector<QVec> all = basis;
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i + 1; j < basis.size(); ++j) all.push_back(g.bracket(basis[i], basis[j]));
    Subspace next = span_basis(all, g.dim());
    if (next.size() == basis.size()) return basis;
    basis = next;
  }
}

ReductiveDecomposition reductive_decompose(const LieAlgebra& g, const Subspace& s) {
  ReductiveDecomposition d;
  d.derived = derived_subspace(g, s);
  d.center = centralizer(g, s, &s);
  return d;
}

QMatrix restricted_ad(const LieAlgebra& g, const QVec& x, const Subspace& basis, const Coordinates<Rational>& coords) {
  QMatrix m(basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    auto c = coords(g.bracket(x, basis[j]));
    if (!c) throw std::invalid_argument("subspace is not stable under ad x");
    m.set_col(j, *c);
  }
  return m;
}

std::optional<Triple> complete_triple(const LieAlgebra& g, const QVec& e, const Subspace* within) {
  size_t n = g.dim();
  Subspace w;
  if (within) {
    w = *within;
  } else {
    for (size_t i = 0; i < n; ++i) w.push_back(unit_vec<Rational>(n, i));
  }
  // h = [e, z] with [h, e] = 2e
  QMatrix m(n, w.size());
  std::vector<QVec> ez(w.size());
  for (size_t k = 0; k < w.size(); ++k) {
    ez[k] = g.bracket(e, w[k]);
    m.set_col(k, g.bracket(ez[k], e));
  }
  auto z = solve(m, scale(Rational(2), e));
  if (!z) return std::nullopt;
  QVec h(n);
  for (size_t k = 0; k < w.size(); ++k) axpy(h, (*z)[k], ez[k]);
  // f in w with [e, f] = h, [h, f] = -2 f
  QMatrix m2(2 * n, w.size());
  for (size_t k = 0; k < w.size(); ++k) {
    QVec a = g.bracket(e, w[k]);
    QVec b = g.bracket(h, w[k]);
    axpy(b, Rational(2), w[k]);
    for (size_t i = 0; i < n; ++i) {
      m2(i, k) = a[i];
      m2(n + i, k) = b[i];
    }
  }
  QVec rhs(2 * n);
  for (size_t i = 0; i < n; ++i) rhs[i] = h[i];
  auto fc = solve(m2, rhs);
  if (!fc) return std::nullopt;
  QVec f(n);
  for (size_t k = 0; k < w.size(); ++k) axpy(f, (*fc)[k], w[k]);
  return Triple{h, e, f};
}

// ---------------------------------------------------------------------------
// split Cartan subalgebras and canonical generators

namespace {

bool is_nilpotent_matrix(const QMatrix& a) {
  QMatrix p = a;
  for (size_t k = 0; k <= a.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * a;
  }
  return false;
}

/// A nonzero ad-nilpotent element of the semisimple subalgebra m, if one is found
/// among simple candidates.
std::optional<QVec> find_nilpotent(const LieAlgebra& g, const Subspace& m) {
  Coordinates<Rational> coords(m, g.dim());
  std::vector<QVec> cands = m;
  for (size_t i = 0; i + 1 < m.size() && i < 6; ++i) cands.push_back(m[i] + m[i + 1]);
  for (const auto& b : cands) {
    QMatrix a = restricted_ad(g, b, m, coords);
    if (a.is_zero()) continue;
    if (is_nilpotent_matrix(a)) return b;
    auto roots = rational_roots(minpoly(a));
    for (const auto& lam : roots) {
      if (lam.is_zero()) continue;
      QMatrix s = a;
      for (size_t i = 0; i < s.rows(); ++i) s(i, i) -= lam;
      auto ker = kernel(s);
      if (ker.empty()) continue;
      QVec v(g.dim());
      for (size_t k = 0; k < m.size(); ++k) axpy(v, ker[0][k], m[k]);
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

Subspace split_cartan(const LieAlgebra& g, const Subspace& s, const Subspace& hint) {
  Subspace a = span_basis(hint, g.dim());
  for (int iter = 0; iter < 64; ++iter) {
    Subspace c = centralizer(g, a, &s);
    if (c.size() == a.size()) return a;
    Subspace m = derived_subspace(g, c);
    std::optional<QVec> extra;
    if (!m.empty()) {
      auto v = find_nilpotent(g, m);
      if (!v) throw std::runtime_error("split_cartan: no nilpotent element found; algebra may not be split");
      auto t = complete_triple(g, *v, &m);
      if (!t) throw std::runtime_error("split_cartan: could not complete an sl2 triple");
      extra = t->h;
    } else {
      // abelian centralizer strictly larger than a: add a split element of it
      Coordinates<Rational> cc(c, g.dim());
      for (const auto& x : c) {
        std::vector<QVec> test = a;
        test.push_back(x);
        if (span_basis(test, g.dim()).size() == a.size()) continue;
        if (rational_eigenspaces(g.ad(x))) {
          extra = x;
          break;
        }
      }
      if (!extra) throw std::runtime_error("split_cartan: Cartan subalgebra is not split over Q");
    }
    a.push_back(*extra);
    a = span_basis(a, g.dim());
  }
  throw std::runtime_error("split_cartan: did not converge");
}

CanonicalGenerators canonical_generators(const LieAlgebra& g, const Subspace& s_in, const Subspace& hint) {
  size_t n = g.dim();
  Subspace s = span_basis(s_in, n);
  Subspace a = split_cartan(g, s, hint);
  size_t l = a.size();
  Coordinates<Rational> cs(s, n);
  // joint eigenspaces, refined one Cartan basis element at a time
  struct Piece {
    QVec vals;
    Subspace basis;  // coordinates relative to s
  };
  std::vector<Piece> pieces(1);
  for (size_t k = 0; k < s.size(); ++k) pieces[0].basis.push_back(unit_vec<Rational>(s.size(), k));
  auto to_ambient = [&](const QVec& c) {
    QVec v(n);
    for (size_t k = 0; k < s.size(); ++k) axpy(v, c[k], s[k]);
    return v;
  };
  for (size_t k = 0; k < l; ++k) {
    QMatrix adk = restricted_ad(g, a[k], s, cs);
    std::vector<Piece> next;
    for (const auto& pc : pieces) {
      // matrix of ad a_k on the piece
      QMatrix basis = QMatrix::from_columns(pc.basis, s.size());
      Coordinates<Rational> pcs(pc.basis, s.size());
      size_t d = pc.basis.size();
      QMatrix m(d, d);
      for (size_t j = 0; j < d; ++j) {
        auto c = pcs(adk.apply(pc.basis[j]));
        if (!c) throw std::logic_error("canonical_generators: piece is not stable");
        for (size_t i = 0; i < d; ++i) m(i, j) = (*c)[i];
      }
      auto es = rational_eigenspaces(m);
      if (!es) throw std::runtime_error("canonical_generators: Cartan subalgebra is not split");
      for (const auto& [lam, vecs] : *es) {
        Piece np;
        np.vals = pc.vals;
        np.vals.push_back(lam);
        for (const auto& v : vecs) np.basis.push_back(basis.apply(v));
        next.push_back(std::move(np));
      }
    }
    pieces = std::move(next);
  }
  std::vector<std::pair<QVec, QVec>> roots;  // (values on a, eigenvector)
  for (const auto& pc : pieces) {
    if (is_zero_vec(pc.vals)) {
      if (pc.basis.size() != l) throw std::runtime_error("canonical_generators: a is not a Cartan subalgebra");
      continue;
    }
    if (pc.basis.size() != 1) throw std::runtime_error("canonical_generators: could not separate root spaces");
    roots.emplace_back(pc.vals, to_ambient(pc.basis[0]));
  }
  auto is_positive = [](const QVec& r) {
    for (const auto& x : r)
      if (!x.is_zero()) return x.sign() > 0;
    return false;
  };
  std::map<std::vector<std::string>, size_t> index;
  auto key = [](const QVec& r) {
    std::vector<std::string> k;
    for (const auto& x : r) k.push_back(x.str());
    return k;
  };
  for (size_t i = 0; i < roots.size(); ++i) index[key(roots[i].first)] = i;
  std::vector<size_t> pos;
  for (size_t i = 0; i < roots.size(); ++i)
    if (is_positive(roots[i].first)) pos.push_back(i);
  std::vector<size_t> simple;
  for (size_t p : pos) {
    bool decomposable = false;
    for (size_t q : pos) {
      if (q == p) continue;
      QVec diff = roots[p].first - roots[q].first;
      auto it = index.find(key(diff));
      if (it != index.end() && is_positive(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(p);
  }
  if (simple.size() != l) throw std::runtime_error("canonical_generators: subalgebra is not semisimple of full rank");
  std::vector<QVec> xr, yr;
  for (size_t p : simple) {
    QVec neg = roots[p].first;
    for (auto& x : neg) x = -x;
    xr.push_back(roots[p].second);
    yr.push_back(roots[index.at(key(neg))].second);
  }
  return canonical_from_root_vectors(g, xr, yr);
}

CanonicalGenerators canonical_from_root_vectors(const LieAlgebra& g, const std::vector<QVec>& xr, const std::vector<QVec>& yr) {
  size_t l = xr.size();
  std::vector<QVec> xs, ys, hs;
  for (size_t p = 0; p < l; ++p) {
    QVec x = xr[p];
    QVec y = yr[p];
    QVec h = g.bracket(x, y);
    QVec hx = g.bracket(h, x);
    size_t piv = 0;
    while (x[piv].is_zero()) ++piv;
    Rational c = hx[piv] / x[piv];
    if (c.is_zero()) throw std::runtime_error("canonical_generators: degenerate root pair");
    y = scale(Rational(2) / c, y);
    xs.push_back(x);
    ys.push_back(y);
    hs.push_back(g.bracket(x, y));
  }
  CartanMatrix cm(l, std::vector<int>(l));
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) {
      QVec hx = g.bracket(hs[j], xs[i]);
      size_t piv = 0;
      while (xs[i][piv].is_zero()) ++piv;
      Rational c = hx[piv] / xs[i][piv];
      if (!c.is_integer()) throw std::runtime_error("canonical_generators: non-integral Cartan entry");
      cm[i][j] = static_cast<int>(c.small_num());
    }
  auto comps = identify_cartan(cm);
  if (!comps) throw std::runtime_error("canonical_generators: Cartan matrix is not of finite type");
  CanonicalGenerators out;
  std::vector<int> order;
  for (auto& comp : *comps) {
    std::vector<int> nodes;
    for (int v : comp.nodes) {
      nodes.push_back(static_cast<int>(order.size()));
      order.push_back(v);
    }
    out.components.push_back({comp.series, comp.rank, nodes});
  }
  for (int v : order) {
    out.x.push_back(xs[static_cast<size_t>(v)]);
    out.y.push_back(ys[static_cast<size_t>(v)]);
    out.h.push_back(hs[static_cast<size_t>(v)]);
  }
  out.cartan.assign(l, std::vector<int>(l));
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) out.cartan[i][j] = cm[static_cast<size_t>(order[i])][static_cast<size_t>(order[j])];
  return out;
}

CanonicalGenerators standard_generators(const LieAlgebra& model) {
  const auto& cd = model.chevalley();
  CanonicalGenerators out;
  for (size_t i = 0; i < cd.rs.rank(); ++i) {
    out.x.push_back(model.basis_vector(cd.x_basis(i)));
    out.y.push_back(model.basis_vector(cd.y_basis(i)));
    out.h.push_back(model.basis_vector(cd.cartan_basis(i)));
  }
  out.cartan = cd.rs.cartan();
  out.components = cd.rs.components();
  return out;
}

Model build_model(const LieAlgebra& ambient, const CanonicalGenerators& gens, const std::string& label) {
  size_t n = ambient.dim();
  ChevalleyData cd;
  cd.rs = RootSystem(gens.cartan);
  const auto& rs = cd.rs;
  size_t npos = rs.num_positive(), l = rs.rank();
  std::vector<QVec> xs(npos), ys(npos);
  cd.steps.resize(npos);
  for (size_t r = 0; r < npos; ++r) {
    const IVec& root = rs.positive_roots()[r];
    if (RootSystem::height(root) == 1) {
      size_t i = 0;
      while (root[i] == 0) ++i;
      xs[r] = gens.x[i];
      ys[r] = gens.y[i];
      continue;
    }
    size_t i = 0;
    std::optional<size_t> pred;
    for (; i < l; ++i) {
      if (root[i] == 0) continue;
      IVec p = root;
      --p[i];
      pred = rs.root_index(p);
      if (pred) break;
    }
    if (!pred) throw std::logic_error("build_model: root without predecessor");
    int p = rs.string_down(rs.positive_roots()[*pred], i);
    Rational xdiv(p + 1);
    QVec x = scale(xdiv.inverse(), ambient.bracket(gens.x[i], xs[*pred]));
    QVec y = scale(xdiv.inverse(), ambient.bracket(gens.y[i], ys[*pred]));
    // normalise y so that [x, y] = h_root
    IVec co = rs.coroot(root);
    QVec hr(n);
    for (size_t k = 0; k < l; ++k)
      if (co[k] != 0) axpy(hr, Rational(co[k]), gens.h[k]);
    QVec xy = ambient.bracket(x, y);
    size_t piv = 0;
    while (piv < n && hr[piv].is_zero()) ++piv;
    Rational c = xy[piv] / hr[piv];
    if (c.is_zero() || scale(c, hr) != xy) throw std::logic_error("build_model: [x, y] is not a multiple of the coroot");
    y = scale(c.inverse(), y);
    cd.steps[r] = {static_cast<int>(i), *pred, xdiv, xdiv * c};
    xs[r] = std::move(x);
    ys[r] = std::move(y);
  }
  std::vector<QVec> cols;
  for (auto& v : xs) cols.push_back(v);
  for (auto& v : ys) cols.push_back(v);
  for (auto& v : gens.h) cols.push_back(v);
  size_t m = cols.size();
  Coordinates<Rational> coords(cols, n);
  std::vector<SparseVec> table(m * m);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) {
      QVec br = ambient.bracket(cols[a], cols[b]);
      if (is_zero_vec(br)) continue;
      auto c = coords(br);
      if (!c) throw std::logic_error("build_model: span is not closed under the bracket");
      for (size_t k = 0; k < m; ++k)
        if (!(*c)[k].is_zero()) {
          table[a * m + b].emplace_back(static_cast<uint32_t>(k), (*c)[k]);
          table[b * m + a].emplace_back(static_cast<uint32_t>(k), -(*c)[k]);
        }
    }
  auto alg = std::make_shared<LieAlgebra>(label.empty() ? canonical_type_label(rs.components()) : label, m, std::move(table));
  alg->set_chevalley(std::move(cd));
  return Model{alg, QMatrix::from_columns(cols, n), std::move(coords)};
}

// ---------------------------------------------------------------------------
// construction of the simple algebras

namespace {

/// Simply-laced algebra from a bimultiplicative sign cocycle on the root lattice.
LieAlgebra simply_laced_raw(const CartanMatrix& c, CanonicalGenerators& gens) {
  RootSystem rs(c);
  size_t npos = rs.num_positive(), l = rs.rank(), n = 2 * npos + l;
  std::vector<std::vector<int>> k(l, std::vector<int>(l, 0));
  for (size_t i = 0; i < l; ++i) {
    k[i][i] = 1;
    for (size_t j = i + 1; j < l; ++j)
      if (c[i][j] == -1) k[i][j] = 1;
  }
  auto eps = [&](const IVec& a, const IVec& b) {
    long long s = 0;
    for (size_t i = 0; i < l; ++i)
      for (size_t j = 0; j < l; ++j) s += a[i] * b[j] * k[i][j];
    return (s % 2 == 0) ? 1 : -1;
  };
  std::vector<SparseVec> table(n * n);
  for (size_t a = 0; a < 2 * npos; ++a) {
    IVec ra = rs.root(a);
    for (size_t b = 0; b < 2 * npos; ++b) {
      if (a == b) continue;
      IVec rb = rs.root(b);
      IVec sum(l);
      bool zero = true;
      for (size_t i = 0; i < l; ++i) {
        sum[i] = ra[i] + rb[i];
        if (sum[i] != 0) zero = false;
      }
      if (zero) {
        // [E_a, E_{-a}] = -h_a
        for (size_t i = 0; i < l; ++i)
          if (ra[i] != 0) table[a * n + b].emplace_back(static_cast<uint32_t>(2 * npos + i), Rational(-ra[i]));
      } else if (auto idx = rs.root_index(sum)) {
        table[a * n + b].emplace_back(static_cast<uint32_t>(*idx), Rational(eps(ra, rb)));
      }
    }
    for (size_t i = 0; i < l; ++i) {
      long long p = rs.pairing(ra, i);
      if (p == 0) continue;
      table[(2 * npos + i) * n + a].emplace_back(static_cast<uint32_t>(a), Rational(p));
      table[a * n + 2 * npos + i].emplace_back(static_cast<uint32_t>(a), Rational(-p));
    }
  }
  gens = CanonicalGenerators{};
  for (size_t i = 0; i < l; ++i) {
    gens.x.push_back(unit_vec<Rational>(n, i));
    gens.y.push_back(scale(Rational(-1), unit_vec<Rational>(n, npos + i)));
    gens.h.push_back(unit_vec<Rational>(n, 2 * npos + i));
  }
  gens.cartan = c;
  gens.components = rs.components();
  return LieAlgebra("raw", n, std::move(table));
}

std::shared_ptr<const LieAlgebra> build_simple(char series, int rank) {
  std::string label = std::string(1, series) + std::to_string(rank);
  if (series == 'A' || series == 'D' || series == 'E') {
    CanonicalGenerators gens;
    LieAlgebra raw = simply_laced_raw(standard_cartan(series, rank), gens);
    return build_model(raw, gens, label).algebra;
  }
  // fixed points of a diagram automorphism of a simply-laced cover
  std::string cover;
  std::vector<int> perm;
  if (series == 'B') {
    cover = "D" + std::to_string(rank + 1);
    for (int i = 0; i <= rank; ++i) perm.push_back(i);
    std::swap(perm[static_cast<size_t>(rank - 1)], perm[static_cast<size_t>(rank)]);
  } else if (series == 'C') {
    cover = "A" + std::to_string(2 * rank - 1);
    for (int i = 0; i < 2 * rank - 1; ++i) perm.push_back(2 * rank - 2 - i);
  } else if (series == 'F') {
    cover = "E6";
    perm = {5, 1, 4, 3, 2, 0};
  } else if (series == 'G') {
    cover = "D4";
    perm = {2, 1, 3, 0};
  } else {
    throw std::invalid_argument("unknown series");
  }
  std::shared_ptr<const LieAlgebra> amb;
  if (cover == "D3") {
    CanonicalGenerators g3;
    LieAlgebra raw = simply_laced_raw(standard_cartan('D', 3), g3);
    amb = build_model(raw, g3, "D3").algebra;
  } else {
    amb = LieAlgebra::from_type(cover);
  }
  QMatrix sigma = diagram_automorphism(*amb, perm);
  Subspace fixed = kernel(sigma - QMatrix::identity(amb->dim()));
  Subspace hint;
  size_t l = amb->chevalley().rs.rank();
  std::vector<bool> seen(l, false);
  for (size_t i = 0; i < l; ++i) {
    if (seen[i]) continue;
    QVec h(amb->dim());
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      h[amb->chevalley().cartan_basis(j)] = 1;
      j = static_cast<size_t>(perm[j]);
    }
    hint.push_back(h);
  }
  CanonicalGenerators gens = canonical_generators(*amb, fixed, hint);
  if (gens.type() != canonical_type_label(label)) throw std::logic_error("folding produced type " + gens.type());
  return build_model(*amb, gens, label).algebra;
}

std::shared_ptr<const LieAlgebra> direct_sum(const std::vector<std::shared_ptr<const LieAlgebra>>& parts, const std::string& label) {
  size_t n = 0;
  for (auto& p : parts) n += p->dim();
  std::vector<SparseVec> table(n * n);
  CanonicalGenerators gens;
  size_t off = 0;
  for (auto& p : parts) {
    size_t m = p->dim();
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b)
        for (const auto& [k, v] : p->bracket_basis(a, b)) table[(off + a) * n + off + b].emplace_back(static_cast<uint32_t>(off + k), v);
    auto sg = standard_generators(*p);
    auto lift = [&](const QVec& v) {
      QVec w(n);
      for (size_t i = 0; i < m; ++i) w[off + i] = v[i];
      return w;
    };
    for (size_t i = 0; i < sg.rank(); ++i) {
      gens.x.push_back(lift(sg.x[i]));
      gens.y.push_back(lift(sg.y[i]));
      gens.h.push_back(lift(sg.h[i]));
    }
    off += m;
  }
  size_t l = gens.h.size();
  gens.cartan.assign(l, std::vector<int>(l, 0));
  size_t noff = 0;
  for (auto& p : parts) {
    const auto& c = p->chevalley().rs.cartan();
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < c.size(); ++j) gens.cartan[noff + i][noff + j] = c[i][j];
    noff += c.size();
  }
  LieAlgebra raw("raw", n, std::move(table));
  return build_model(raw, gens, label).algebra;
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::from_type(const std::string& label_in) {
  static std::map<std::string, std::shared_ptr<const LieAlgebra>> cache;
  static std::recursive_mutex mu;
  std::string label = canonical_type_label(label_in);
  {
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;
  }
  auto parts = parse_type_label(label);
  if (parts.empty()) throw std::invalid_argument("from_type: empty type");
  std::shared_ptr<const LieAlgebra> alg;
  if (parts.size() == 1) {
    alg = build_simple(parts[0].first, parts[0].second);
  } else {
    std::vector<std::shared_ptr<const LieAlgebra>> simple;
    for (auto& [s, r] : parts) simple.push_back(from_type(std::string(1, s) + std::to_string(r)));
    alg = direct_sum(simple, label);
  }
  std::lock_guard<std::recursive_mutex> lock(mu);
  cache.emplace(label, alg);
  return alg;
}

// ---------------------------------------------------------------------------
// automorphisms

std::vector<QVec> generating_set(const LieAlgebra& model) {
  auto sg = standard_generators(model);
  std::vector<QVec> out = sg.x;
  out.insert(out.end(), sg.y.begin(), sg.y.end());
  return out;
}

namespace {

template <class F>
bool certify_impl(const LieAlgebra& src, const LieAlgebra& dst, const Matrix<F>& a, const std::vector<QVec>& gens) {
  if (a.rows() != dst.dim() || a.cols() != src.dim()) return false;
  std::vector<Vec<F>> cols(src.dim());
  for (size_t b = 0; b < src.dim(); ++b) cols[b] = a.col(b);
  for (const auto& gq : gens) {
    Vec<F> g(gq.begin(), gq.end());
    Vec<F> ag = a.apply(g);
    Matrix<F> adag = dst.ad(ag);
    for (size_t b = 0; b < src.dim(); ++b) {
      Vec<F> lhs = a.apply(src.bracket(g, unit_vec<F>(src.dim(), b)));
      Vec<F> rhs = adag.apply(cols[b]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

bool certify_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const KMatrix& a, const std::vector<QVec>& gens) {
  if (auto q = to_q(a)) return certify_impl(src, dst, *q, gens);
  return certify_impl(src, dst, a, gens);
}

bool certify_automorphism(const LieAlgebra& g, const KMatrix& a, const std::vector<QVec>& gens) {
  if (!certify_homomorphism(g, g, a, gens)) return false;
  if (auto q = to_q(a)) return rank(*q) == g.dim();
  return rank(a) == g.dim();
}

QMatrix diagram_automorphism(const LieAlgebra& model, const std::vector<int>& perm) {
  const auto& cd = model.chevalley();
  size_t l = cd.rs.rank();
  std::vector<QVec> xs, ys;
  for (size_t i = 0; i < l; ++i) {
    size_t j = static_cast<size_t>(perm[i]);
    xs.push_back(model.basis_vector(cd.x_basis(j)));
    ys.push_back(model.basis_vector(cd.y_basis(j)));
  }
  return homomorphism_from_generators(model, model, xs, ys);
}

int finite_order(const KMatrix& a, int bound) {
  KMatrix p = a;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * a;
  }
  return -1;
}

namespace {

/// Dimension of the Fitting null component of ad x, intersected with `sub` when given.
size_t fitting_null_dim(const LieAlgebra& g, const KVec& x, const std::vector<KVec>* sub) {
  KMatrix a = g.ad(x);
  KMatrix p = a;
  size_t n = g.dim();
  size_t pw = 1;
  while (pw < n) {
    p = p * p;
    pw *= 2;
  }
  auto ker = kernel(p);
  if (!sub) return ker.size();
  return intersect(ker, *sub, n).size();
}

size_t algebra_rank(const LieAlgebra& g) {
  if (g.has_chevalley()) return g.chevalley().rs.rank();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  size_t best = g.dim();
  for (int t = 0; t < 4; ++t) {
    KVec x(g.dim());
    for (auto& c : x) c = Cyclotomic(d(rng));
    best = std::min(best, fitting_null_dim(g, x, nullptr));
  }
  return best;
}

}  // namespace

bool is_inner_by_rank(const LieAlgebra& g, const KMatrix& a) {
  if (finite_order(a) < 0) throw std::invalid_argument("is_inner_by_rank: automorphism does not have small finite order");
  size_t n = g.dim();
  auto g0 = kernel(a - KMatrix::identity(n));
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> d(-7, 7);
  size_t best = n;
  for (int t = 0; t < 4; ++t) {
    KVec x(n);
    for (const auto& b : g0) axpy(x, Cyclotomic(d(rng)), b);
    best = std::min(best, fitting_null_dim(g, x, &g0));
  }
  return best == algebra_rank(g);
}

MinusculeModule minuscule_module(const LieAlgebra& model, const std::vector<int>& nodes, size_t fundamental) {
  const auto& cd = model.chevalley();
  const auto& c = cd.rs.cartan();
  size_t r = nodes.size(), l = cd.rs.rank();
  IVec top(r, 0);
  top[fundamental - 1] = 1;
  std::vector<IVec> weights{top};
  std::map<IVec, size_t> idx{{top, 0}};
  for (size_t at = 0; at < weights.size(); ++at)
    for (size_t i = 0; i < r; ++i) {
      if (weights[at][i] <= 0) continue;
      IVec nu = weights[at];
      for (size_t j = 0; j < r; ++j) nu[j] -= c[static_cast<size_t>(nodes[i])][static_cast<size_t>(nodes[j])];
      if (!idx.count(nu)) {
        idx[nu] = weights.size();
        weights.push_back(nu);
      }
    }
  size_t dim = weights.size();
  std::vector<QMatrix> xs(l, QMatrix(dim, dim)), ys(l, QMatrix(dim, dim));
  for (size_t a = 0; a < r; ++a) {
    size_t gi = static_cast<size_t>(nodes[a]);
    for (size_t w = 0; w < dim; ++w) {
      IVec up = weights[w], down = weights[w];
      for (size_t j = 0; j < r; ++j) {
        up[j] += c[gi][static_cast<size_t>(nodes[j])];
        down[j] -= c[gi][static_cast<size_t>(nodes[j])];
      }
      if (weights[w][a] == -1) xs[gi](idx.at(up), w) = 1;
      if (weights[w][a] == 1) ys[gi](idx.at(down), w) = 1;
    }
  }
  MinusculeModule mod;
  mod.weights = weights;
  mod.images = extend_from_generators<QMatrix>(
      cd, xs, ys, [](const QMatrix& p, const QMatrix& q) { return p * q - q * p; },
      [](const Rational& s, const QMatrix& p) { return s * p; });
  return mod;
}

namespace {

/// Basis indices of a simple component of a Chevalley model.
std::vector<size_t> component_basis(const ChevalleyData& cd, const std::vector<int>& nodes) {
  std::set<int> ns(nodes.begin(), nodes.end());
  std::vector<size_t> out;
  for (size_t r = 0; r < cd.rs.num_roots(); ++r) {
    IVec root = cd.rs.root(r);
    bool inside = true;
    for (size_t i = 0; i < root.size(); ++i)
      if (root[i] != 0 && !ns.count(static_cast<int>(i))) inside = false;
    if (inside) out.push_back(cd.root_basis(r));
  }
  for (int i : nodes) out.push_back(cd.cartan_basis(static_cast<size_t>(i)));
  return out;
}

std::vector<size_t> test_fundamentals(const ComponentType& t) {
  if (t.series == 'A' && t.rank >= 2) return {1};
  if (t.series == 'D' && t.rank == 4) return {1, 3};
  if (t.series == 'D' && t.rank >= 5) return {static_cast<size_t>(t.rank)};
  if (t.series == 'E' && t.rank == 6) return {1};
  return {};
}

}  // namespace

std::vector<int> outer_class(const LieAlgebra& model, const KMatrix& a) {
  const auto& cd = model.chevalley();
  const auto& comps = cd.rs.components();
  size_t l = cd.rs.rank();
  std::vector<int> gamma(l, -1);
  std::vector<std::vector<size_t>> cbasis;
  for (const auto& c : comps) cbasis.push_back(component_basis(cd, c.nodes));
  for (size_t k = 0; k < comps.size(); ++k) {
    KVec img = a.col(cd.x_basis(static_cast<size_t>(comps[k].nodes[0])));
    size_t target = comps.size();
    for (size_t t = 0; t < comps.size() && target == comps.size(); ++t) {
      std::set<size_t> inside(cbasis[t].begin(), cbasis[t].end());
      bool ok = !is_zero_vec(img);
      for (size_t i = 0; i < img.size() && ok; ++i)
        if (!img[i].is_zero() && !inside.count(i)) ok = false;
      if (ok) target = t;
    }
    if (target == comps.size() || comps[target].label() != comps[k].label())
      throw std::invalid_argument("outer_class: map does not permute simple components");
    const auto& src = comps[k].nodes;
    const auto& dst = comps[target].nodes;
    auto syms = cartan_symmetries(standard_cartan(comps[k].series, comps[k].rank));
    auto fund = test_fundamentals(comps[k]);
    std::vector<int> chosen;
    for (const auto& p : syms) {
      // delta(src[i]) = dst[p[i]]
      std::vector<int> delta_inv(l, -1);
      for (size_t i = 0; i < src.size(); ++i) delta_inv[static_cast<size_t>(dst[static_cast<size_t>(p[i])])] = src[i];
      bool inner = true;
      for (size_t f : fund) {
        MinusculeModule mod = minuscule_module(model, dst, f);
        size_t dim = mod.weights.size();
        auto rho = [&](const KVec& v) {
          KMatrix m(dim, dim);
          for (size_t b = 0; b < v.size(); ++b)
            if (!v[b].is_zero()) m = m + v[b] * mod.images[b].cast<Cyclotomic>();
          return m;
        };
        std::vector<KMatrix> xs;
        for (int j : dst) xs.push_back(rho(a.col(cd.x_basis(static_cast<size_t>(delta_inv[static_cast<size_t>(j)])))));
        auto v0 = common_kernel(xs, dim);
        if (v0.size() != 1) throw std::logic_error("outer_class: twisted module is not irreducible");
        for (size_t jj = 0; jj < dst.size() && inner; ++jj) {
          int j = dst[jj];
          KMatrix hm = rho(a.col(cd.cartan_basis(static_cast<size_t>(delta_inv[static_cast<size_t>(j)]))));
          KVec hv = hm.apply(v0[0]);
          size_t piv = 0;
          while (v0[0][piv].is_zero()) ++piv;
          Cyclotomic mu = hv[piv] / v0[0][piv];
          Cyclotomic want = (jj + 1 == f) ? Cyclotomic(1) : Cyclotomic(0);
          if (mu != want) inner = false;
        }
        if (!inner) break;
      }
      if (inner) {
        chosen = p;
        break;
      }
    }
    if (chosen.empty()) throw std::logic_error("outer_class: no diagram automorphism matches");
    for (size_t i = 0; i < src.size(); ++i) gamma[static_cast<size_t>(src[i])] = dst[static_cast<size_t>(chosen[i])];
  }
  return gamma;
}

bool is_inner(const LieAlgebra& model, const KMatrix& a) {
  auto gamma = outer_class(model, a);
  for (size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] != static_cast<int>(i)) return false;
  return true;
}

CartanConjugation conjugate_into_cartan(const LieAlgebra& model, const QVec& h) {
  size_t n = model.dim();
  if (auto c = model.cartan_coords(h)) return {{KMatrix::identity(n), true}, *c};
  Subspace all;
  for (size_t i = 0; i < n; ++i) all.push_back(model.basis_vector(i));
  CanonicalGenerators gens = canonical_generators(model, all, {h});
  if (gens.cartan != model.chevalley().rs.cartan()) {
    // isomorphic components may come out in another order; match blockwise by label
    std::vector<size_t> order;
    std::vector<bool> used(gens.components.size(), false);
    for (const auto& mc : model.chevalley().rs.components()) {
      size_t pick = gens.components.size();
      for (size_t t = 0; t < gens.components.size(); ++t)
        if (!used[t] && gens.components[t].label() == mc.label()) {
          pick = t;
          break;
        }
      if (pick == gens.components.size()) throw std::logic_error("conjugate_into_cartan: component mismatch");
      used[pick] = true;
      for (int v : gens.components[pick].nodes) order.push_back(static_cast<size_t>(v));
    }
    CanonicalGenerators g2;
    for (size_t v : order) {
      g2.x.push_back(gens.x[v]);
      g2.y.push_back(gens.y[v]);
      g2.h.push_back(gens.h[v]);
    }
    gens = g2;
  }
  QMatrix beta = homomorphism_from_generators(model, model, gens.x, gens.y);
  KMatrix betak = beta.cast<Cyclotomic>();
  auto gamma = outer_class(model, betak);
  std::vector<int> ginv(gamma.size());
  for (size_t i = 0; i < gamma.size(); ++i) ginv[static_cast<size_t>(gamma[i])] = static_cast<int>(i);
  QMatrix inner = beta * diagram_automorphism(model, ginv);
  auto alpha = inverse(inner);
  if (!alpha) throw std::logic_error("conjugate_into_cartan: map is not invertible");
  QVec img = alpha->apply(h);
  auto c = model.cartan_coords(img);
  if (!c) throw std::logic_error("conjugate_into_cartan: image is not in the Cartan subalgebra");
  KMatrix ak = alpha->cast<Cyclotomic>();
  bool cert = certify_automorphism(model, ak, generating_set(model));
  return {{ak, cert}, *c};
}

}  // namespace nilcent
