#include "nilcent/conjugacy.hpp"

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace nilcent {

SparseQMatrix::SparseQMatrix(const QMatrix& m) : rows(m.rows()) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) rows[i].emplace_back(j, m(i, j));
}

template <class F>
std::vector<Poly<F>> SparseQMatrix::apply(const std::vector<Poly<F>>& v) const {
  std::vector<Poly<F>> out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i])
      if (!v[j].is_zero()) out[i] = out[i].axpy_term(F(c), Monomial(), v[j]);
  return out;
}

namespace {

template <class F>
bool all_zero(const std::vector<Poly<F>>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

template <class F>
std::vector<Poly<F>> constant_vec(const Vec<F>& v) {
  std::vector<Poly<F>> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Poly<F>::constant(x));
  return out;
}

/// exp(c A) for nilpotent A.
KMatrix exp_scaled(const QMatrix& a, const Cyclotomic& c) {
  size_t n = a.rows();
  KMatrix result = KMatrix::identity(n);
  if (c.is_zero()) return result;
  KMatrix ak = a.cast<Cyclotomic>();
  KMatrix term = KMatrix::identity(n);
  for (size_t k = 1; k <= n + 1; ++k) {
    term = ak * term;
    if (term.is_zero()) return result;
    term = (c * Cyclotomic(Rational(1, static_cast<long long>(k)))) * term;
    result = result + term;
  }
  throw std::invalid_argument("exp_scaled: matrix is not nilpotent");
}

Cyclotomic power(const Cyclotomic& x, long long k) {
  Cyclotomic base = k < 0 ? x.inverse() : x;
  Cyclotomic r(1);
  for (long long i = 0; i < std::llabs(k); ++i) r *= base;
  return r;
}

long long integral_value(const Rational& q, const char* what) {
  if (!q.is_integer() || !q.is_small()) throw std::invalid_argument(std::string(what) + ": non-integral torus weight");
  return q.small_num();
}

struct TorusEigen {
  bool diagonal = true;
  QMatrix p, pinv;
  std::vector<std::vector<long long>> weights;
};

TorusEigen torus_eigenbasis(const LieAlgebra& g, const std::vector<QVec>& cochar) {
  size_t n = g.dim(), k = cochar.size();
  TorusEigen out;
  std::vector<QMatrix> ads;
  for (const auto& c : cochar) ads.push_back(g.ad(c));
  for (const auto& a : ads)
    for (size_t i = 0; i < n && out.diagonal; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j && !a(i, j).is_zero()) {
          out.diagonal = false;
          break;
        }
  if (out.diagonal) {
    out.weights.assign(n, std::vector<long long>(k));
    for (size_t j = 0; j < n; ++j)
      for (size_t q = 0; q < k; ++q) out.weights[j][q] = integral_value(ads[q](j, j), "torus_eigenbasis");
    return out;
  }
  std::vector<std::pair<std::vector<long long>, Subspace>> blocks;
  Subspace all;
  for (size_t i = 0; i < n; ++i) all.push_back(g.basis_vector(i));
  blocks.emplace_back(std::vector<long long>{}, all);
  for (size_t q = 0; q < k; ++q) {
    std::vector<std::pair<std::vector<long long>, Subspace>> next;
    for (const auto& [w, b] : blocks) {
      Coordinates<Rational> coords(b, n);
      auto eig = rational_eigenspaces(restricted_ad(g, cochar[q], b, coords));
      if (!eig) throw std::invalid_argument("torus_eigenbasis: torus is not split");
      for (const auto& [lambda, vecs] : *eig) {
        auto w2 = w;
        w2.push_back(integral_value(lambda, "torus_eigenbasis"));
        Subspace amb;
        for (const auto& c : vecs) {
          QVec v(n);
          for (size_t j = 0; j < b.size(); ++j) axpy(v, c[j], b[j]);
          amb.push_back(std::move(v));
        }
        next.emplace_back(std::move(w2), std::move(amb));
      }
    }
    blocks = std::move(next);
  }
  std::vector<QVec> cols;
  for (const auto& [w, b] : blocks)
    for (const auto& v : b) {
      cols.push_back(v);
      out.weights.push_back(w);
    }
  out.p = QMatrix::from_columns(cols, n);
  auto inv = inverse(out.p);
  if (!inv) throw std::logic_error("torus_eigenbasis: eigenvectors do not form a basis");
  out.pinv = *inv;
  return out;
}

/// Monomial prod t_k^{w_k}, with a_k standing for t_k^{-1}.
Monomial torus_monomial(const CellGroup::Params& p, const std::vector<long long>& w, bool inverse) {
  Monomial m;
  for (size_t k = 0; k < w.size(); ++k) {
    long long e = inverse ? -w[k] : w[k];
    if (e == 0) continue;
    size_t var = e > 0 ? p.t[k] : p.a[k];
    m = m * Monomial::var(var, static_cast<unsigned>(std::llabs(e)));
  }
  return m;
}

}  // namespace

QMatrix weyl_representative(const LieAlgebra& g, const QVec& x, const QVec& y) {
  QMatrix ex = exp_ad(g, x);
  return ex * exp_ad(g, scale(Rational(-1), y)) * ex;
}

CellGroup::CellGroup(const LieAlgebra& g, const CanonicalGenerators& derived, std::vector<QVec> cochar)
    : g_(&g), cochar_(std::move(cochar)) {
  size_t n = g.dim();
  std::vector<std::vector<int>> words{{}};
  if (derived.rank() > 0) {
    Model m = build_model(g, derived);
    rs_ = m.algebra->chevalley().rs;
    type_ = derived.type();
    for (size_t r = 0; r < rs_.num_positive(); ++r) {
      xpos_.push_back(m.embed.col(r));
      adpos_.push_back(g.ad(xpos_.back()));
      adpos_sparse_.emplace_back(adpos_.back());
    }
    for (size_t i = 0; i < derived.rank(); ++i) sdot_.push_back(weyl_representative(g, derived.x[i], derived.y[i]));
    words = weyl_group_words(rs_);
  }
  for (const auto& w : words) {
    Cell c;
    c.word = w;
    for (size_t r = 0; r < rs_.num_positive(); ++r) {
      IVec img = apply_word_root(rs_, rs_.positive_roots()[r], w);
      if (std::any_of(img.begin(), img.end(), [](long long v) { return v < 0; })) c.inversions.push_back(r);
    }
    c.wdot = QMatrix::identity(n);
    for (int i : w) c.wdot = sdot_[static_cast<size_t>(i)] * c.wdot;
    auto inv = inverse(c.wdot);
    if (!inv) throw std::logic_error("CellGroup: singular Weyl representative");
    c.wdot_inv = *inv;
    c.wdot_sparse = SparseQMatrix(c.wdot);
    c.wdot_inv_sparse = SparseQMatrix(c.wdot_inv);
    if (c.inversions.size() != w.size()) throw std::logic_error("CellGroup: word is not reduced");
    cells_.push_back(std::move(c));
  }
  auto te = torus_eigenbasis(g, cochar_);
  diagonal_ = te.diagonal;
  weights_ = std::move(te.weights);
  if (!diagonal_) {
    p_ = std::move(te.p);
    pinv_ = std::move(te.pinv);
    p_sparse_ = SparseQMatrix(p_);
    pinv_sparse_ = SparseQMatrix(pinv_);
  }
}

CellGroup::Params CellGroup::params(const Cell& c) const {
  Params p;
  size_t k = cochar_.size();
  if (2 * k + xpos_.size() + c.inversions.size() > kMaxVars) throw std::invalid_argument("CellGroup: too many indeterminates");
  for (size_t i = 0; i < k; ++i) p.t.push_back(p.vars.add("t" + std::to_string(i + 1)));
  for (size_t i = 0; i < xpos_.size(); ++i) p.u.push_back(p.vars.add("u" + std::to_string(i + 1)));
  for (size_t i = 0; i < c.inversions.size(); ++i) p.s.push_back(p.vars.add("s" + std::to_string(i + 1)));
  for (size_t i = 0; i < k; ++i) p.a.push_back(p.vars.add("a" + std::to_string(i + 1)));
  return p;
}

template <class F>
std::vector<Poly<F>> CellGroup::root_exp(size_t root, size_t var, std::vector<Poly<F>> v, bool negate) const {
  std::vector<Poly<F>> term = v;
  for (size_t k = 1; k <= v.size() + 1; ++k) {
    term = adpos_sparse_[root].apply(term);
    if (all_zero(term)) return v;
    Rational c(negate ? -1 : 1, static_cast<long long>(k));
    Monomial m = Monomial::var(var);
    for (size_t i = 0; i < v.size(); ++i) {
      if (term[i].is_zero()) continue;
      term[i] = term[i].mul_term(F(c), m);
      v[i] += term[i];
    }
  }
  throw std::logic_error("root_exp: root vector is not ad-nilpotent");
}

template <class F>
std::vector<Poly<F>> CellGroup::torus_apply(const Params& p, std::vector<Poly<F>> v, bool inverse) const {
  if (cochar_.empty()) return v;
  if (!diagonal_) v = pinv_sparse_.apply(v);
  for (size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) v[j] = v[j].mul_term(F(1), torus_monomial(p, weights_[j], inverse));
  if (!diagonal_) v = p_sparse_.apply(v);
  return v;
}

template <class F>
std::vector<Poly<F>> CellGroup::apply_upper(const Params& p, std::vector<Poly<F>> v, bool inverse) const {
  size_t n = xpos_.size();
  if (!inverse) {
    for (size_t r = n; r-- > 0;) v = root_exp(r, p.u[r], std::move(v), false);
  } else {
    for (size_t r = 0; r < n; ++r) v = root_exp(r, p.u[r], std::move(v), true);
  }
  return v;
}

template <class F>
std::vector<Poly<F>> CellGroup::apply_lower(const Cell& c, const Params& p, std::vector<Poly<F>> v) const {
  for (size_t j = c.inversions.size(); j-- > 0;) v = root_exp(c.inversions[j], p.s[j], std::move(v), false);
  v = c.wdot_sparse.apply(v);
  return torus_apply(p, std::move(v), false);
}

template <class F>
std::vector<Poly<F>> CellGroup::apply(const Cell& c, const Params& p, std::vector<Poly<F>> v) const {
  return apply_upper(p, apply_lower(c, p, std::move(v)), false);
}

template <class F>
std::vector<Poly<F>> CellGroup::apply_inverse(const Cell& c, const Params& p, std::vector<Poly<F>> v) const {
  v = apply_upper(p, std::move(v), true);
  v = torus_apply(p, std::move(v), true);
  v = c.wdot_inv_sparse.apply(v);
  for (size_t j = 0; j < c.inversions.size(); ++j) v = root_exp(c.inversions[j], p.s[j], std::move(v), true);
  return v;
}

KMatrix CellGroup::torus_element(const std::vector<Cyclotomic>& t) const {
  size_t n = g_->dim();
  KMatrix d(n, n);
  for (size_t j = 0; j < n; ++j) {
    Cyclotomic x(1);
    for (size_t k = 0; k < t.size(); ++k) x *= power(t[k], weights_[j][k]);
    d(j, j) = x;
  }
  if (diagonal_) return d;
  return p_.cast<Cyclotomic>() * d * pinv_.cast<Cyclotomic>();
}

KMatrix CellGroup::element(const Cell& c, const Params& p, const std::vector<Cyclotomic>& point) const {
  size_t n = g_->dim();
  KMatrix m = KMatrix::identity(n);
  for (size_t r = 0; r < xpos_.size(); ++r) m = m * exp_scaled(adpos_[r], point[p.u[r]]);
  std::vector<Cyclotomic> t;
  for (size_t v : p.t) t.push_back(point[v]);
  m = m * torus_element(t) * c.wdot.cast<Cyclotomic>();
  for (size_t j = 0; j < c.inversions.size(); ++j) m = m * exp_scaled(adpos_[c.inversions[j]], point[p.s[j]]);
  return m;
}

#define NILCENT_CELL_INSTANTIATE(F)                                                                              \
  template std::vector<Poly<F>> SparseQMatrix::apply(const std::vector<Poly<F>>&) const;                         \
  template std::vector<Poly<F>> CellGroup::apply(const Cell&, const Params&, std::vector<Poly<F>>) const;         \
  template std::vector<Poly<F>> CellGroup::apply_inverse(const Cell&, const Params&, std::vector<Poly<F>>) const; \
  template std::vector<Poly<F>> CellGroup::apply_lower(const Cell&, const Params&, std::vector<Poly<F>>) const;   \
  template std::vector<Poly<F>> CellGroup::apply_upper(const Params&, std::vector<Poly<F>>, bool) const;
NILCENT_CELL_INSTANTIATE(Rational)
NILCENT_CELL_INSTANTIATE(Cyclotomic)
#undef NILCENT_CELL_INSTANTIATE

// ---------------------------------------------------------------------------
// groups

CellGroup centralizer_cell_group(const LieAlgebra& model, const CoVec& h) {
  const auto& rs = model.chevalley().rs;
  size_t npos = rs.num_positive();
  std::vector<size_t> psi;
  for (size_t r = 0; r < npos; ++r)
    if (root_value(rs, rs.positive_roots()[r], h).is_zero()) psi.push_back(r);
  std::vector<QVec> xr, yr;
  for (size_t r : psi) {
    bool decomposable = false;
    for (size_t a : psi) {
      IVec rest = rs.positive_roots()[r];
      const IVec& ra = rs.positive_roots()[a];
      for (size_t k = 0; k < rest.size(); ++k) rest[k] -= ra[k];
      auto idx = rs.root_index(rest);
      if (idx && *idx < npos && std::find(psi.begin(), psi.end(), *idx) != psi.end()) {
        decomposable = true;
        break;
      }
    }
    if (decomposable) continue;
    xr.push_back(model.root_vector(r));
    yr.push_back(model.basis_vector(npos + r));
  }
  CanonicalGenerators gens;
  if (!xr.empty()) gens = canonical_from_root_vectors(model, xr, yr);
  std::vector<QVec> cochar;
  for (size_t i = 0; i < rs.rank(); ++i) cochar.push_back(model.cartan_vector(i));
  return CellGroup(model, gens, std::move(cochar));
}

CellGroup reductive_cell_group(const LieAlgebra& g, const Subspace& c) {
  CanonicalGenerators gens;
  std::vector<QVec> cochar;
  if (!c.empty()) {
    auto rd = reductive_decompose(g, c);
    if (!rd.derived.empty()) gens = canonical_generators(g, rd.derived);
    cochar = gens.h;
    for (const auto& z : rd.center) {
      auto eig = rational_eigenspaces(g.ad(z));
      if (!eig) throw std::invalid_argument("reductive_cell_group: center is not split toral");
      mpz_class l = 1;
      for (const auto& [lambda, vecs] : *eig) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), lambda.denominator().get_mpz_t());
      cochar.push_back(scale(Rational(mpq_class(l)), z));
    }
  }
  return CellGroup(g, gens, std::move(cochar));
}

// ---------------------------------------------------------------------------
// systems

namespace {

bool dump_enabled() {
  const char* v = std::getenv("NILCENT_DUMP_CELLS");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void dump_system(const CellGroup::Cell& c, const VarRegistry& vars, const std::vector<KPoly>& polys) {
  std::cerr << "# cell w = [";
  for (size_t i = 0; i < c.word.size(); ++i) std::cerr << (i ? " " : "") << c.word[i];
  std::cerr << "], " << vars.size() << " indeterminates\n";
  for (const auto& p : polys) std::cerr << p.str(&vars) << "\n";
}

void push_unique(std::vector<KPoly>& out, const KPoly& p) {
  if (p.is_zero()) return;
  KPoly m = p.monic();
  for (const auto& q : out)
    if (q == m) return;
  out.push_back(std::move(m));
}

std::vector<QVec> default_tests(const LieAlgebra& g) {
  if (g.has_chevalley()) return generating_set(g);
  std::vector<QVec> out;
  for (size_t i = 0; i < g.dim(); ++i) out.push_back(g.basis_vector(i));
  return out;
}

SolutionSet solve_cell(const CellGroup::Params& p, const std::vector<KPoly>& polys, const GroebnerOptions& opt) {
  PolySystem sys;
  sys.vars = p.vars;
  for (const auto& f : polys) {
    auto q = to_q(f);
    if (!q) return solve_zero_dim(p.vars, polys, opt);
    sys.polys.push_back(*q);
  }
  for (size_t k = 0; k < p.t.size(); ++k) sys.inverses.emplace_back(p.t[k], p.a[k]);
  return solve_with_splitting(sys, opt);
}

enum class Consistency { Consistent, Inconsistent, Unknown };

/// Whether the polynomials have a common zero over an algebraically closed field.
Consistency consistency(const std::vector<KPoly>& polys, const GroebnerOptions& opt) {
  if (polys.empty()) return Consistency::Consistent;
  std::vector<QPoly> qs;
  for (const auto& f : polys) {
    auto q = to_q(f);
    if (!q) break;
    qs.push_back(*q);
  }
  bool complete = false, unit = false;
  if (qs.size() == polys.size()) {
    auto r = buchberger(qs, opt);
    complete = r.complete;
    unit = r.basis.size() == 1 && r.basis[0].is_constant();
  } else {
    auto r = buchberger(polys, opt);
    complete = r.complete;
    unit = r.basis.size() == 1 && r.basis[0].is_constant();
  }
  if (!complete) return Consistency::Unknown;
  return unit ? Consistency::Inconsistent : Consistency::Consistent;
}

std::vector<KVec> images(const KMatrix& a, const std::vector<QVec>& vs) {
  std::vector<KVec> out;
  for (const auto& v : vs) out.push_back(a.apply(to_k(v)));
  return out;
}

bool contains(const std::vector<KMatrix>& list, const KMatrix& m) {
  for (const auto& x : list)
    if (x.data() == m.data()) return true;
  return false;
}

KMatrix kinverse(const QMatrix& m) {
  auto inv = inverse(m);
  if (!inv) throw std::logic_error("matrix is not invertible");
  return inv->cast<Cyclotomic>();
}

bool maps_triple(const KMatrix& a, const Sl2Triple& s, const Sl2Triple& t) {
  return a.apply(to_k(s.h)) == to_k(t.h) && a.apply(to_k(s.e)) == to_k(t.e) && a.apply(to_k(s.f)) == to_k(t.f);
}

}  // namespace

bool fixes(const KMatrix& a, const std::vector<QVec>& vs) {
  for (const auto& v : vs)
    if (a.apply(to_k(v)) != to_k(v)) return false;
  return true;
}

CellSystem bruhat_system(const CellGroup& grp, const CellGroup::Cell& cell, const std::vector<QVec>& src,
                         const std::vector<KVec>& tgt) {
  if (src.size() != tgt.size()) throw std::invalid_argument("bruhat_system: source and target lists differ in length");
  CellSystem out{grp.params(cell), {}};
  const auto& p = out.params;
  // g = u * (h w' u_w): compare (h w' u_w)(src) with u^{-1}(tgt)
  for (size_t k = 0; k < src.size(); ++k) {
    auto lhs = grp.apply_lower<Rational>(cell, p, constant_vec(src[k]));
    auto rhs = grp.apply_upper<Cyclotomic>(p, constant_vec(tgt[k]), true);
    for (size_t i = 0; i < lhs.size(); ++i) push_unique(out.polys, to_k(lhs[i]) - rhs[i]);
  }
  for (size_t k = 0; k < p.t.size(); ++k)
    out.polys.push_back(KPoly(MonoOrder::DegRevLex,
                              {{Monomial::var(p.t[k]) * Monomial::var(p.a[k]), Cyclotomic(1)}, {Monomial(), Cyclotomic(-1)}}));
  return out;
}

StabilizerResult solve_in_cells(const CellGroup& grp, const std::vector<QVec>& src, const std::vector<KVec>& tgt,
                                const ConjugacyOptions& opt) {
  StabilizerResult res;
  const LieAlgebra& g = grp.algebra();
  std::vector<QVec> inv_tests;
  if (opt.involutions_only) inv_tests = default_tests(g);
  for (const auto& cell : grp.cells()) {
    auto cs = bruhat_system(grp, cell, src, tgt);
    for (const auto& b : inv_tests) {
      auto fwd = grp.apply<Rational>(cell, cs.params, constant_vec(b));
      auto bwd = grp.apply_inverse<Rational>(cell, cs.params, constant_vec(b));
      for (size_t i = 0; i < fwd.size(); ++i) push_unique(cs.polys, to_k(fwd[i] - bwd[i]));
    }
    if (dump_enabled()) dump_system(cell, cs.params.vars, cs.polys);
    auto sol = solve_cell(cs.params, cs.polys, opt.groebner);
    CellStatus st{cell.word, sol.status, sol.solutions.size(), sol.reason};
    res.cells.push_back(st);
    if (sol.inconclusive()) {
      res.inconclusive = true;
      if (res.reason.empty()) res.reason = sol.reason;
    }
    for (const auto& pt : sol.solutions) {
      KMatrix m = grp.element(cell, cs.params, pt);
      for (size_t k = 0; k < src.size(); ++k)
        if (m.apply(to_k(src[k])) != tgt[k]) throw std::logic_error("solve_in_cells: solution does not satisfy the equations");
      if (opt.involutions_only && !(m * m).is_identity())
        throw std::logic_error("solve_in_cells: solution is not an involution");
      if (!contains(res.elements, m)) res.elements.push_back(std::move(m));
    }
    if (opt.first_only && !res.elements.empty()) break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// conjugation

std::optional<QMatrix> conjugate_cartan_pair(const LieAlgebra& model, const CoVec& h1, const CoVec& h2) {
  const auto& rs = model.chevalley().rs;
  auto d1 = dominant_representative(rs, h1);
  auto d2 = dominant_representative(rs, h2);
  if (d1.h != d2.h) return std::nullopt;
  auto gens = standard_generators(model);
  std::vector<QMatrix> sdot;
  for (size_t i = 0; i < rs.rank(); ++i) sdot.push_back(weyl_representative(model, gens.x[i], gens.y[i]));
  size_t n = model.dim();
  QMatrix w1 = QMatrix::identity(n), w2 = QMatrix::identity(n);
  for (int i : d1.word) w1 = sdot[static_cast<size_t>(i)] * w1;
  for (int i : d2.word) w2 = sdot[static_cast<size_t>(i)] * w2;
  auto w2inv = inverse(w2);
  if (!w2inv) throw std::logic_error("conjugate_cartan_pair: singular Weyl representative");
  QMatrix tau = *w2inv * w1;
  if (tau.apply(model.cartan_element(h1)) != model.cartan_element(h2))
    throw std::logic_error("conjugate_cartan_pair: image mismatch");
  return tau;
}

CartanTriple triple_in_cartan(const LieAlgebra& model, const Sl2Triple& t) {
  auto cc = conjugate_into_cartan(model, t.h);
  auto a = to_q(cc.alpha.m);
  if (!a) throw std::logic_error("triple_in_cartan: conjugation is not rational");
  CartanTriple out;
  out.alpha = *a;
  out.t = {a->apply(t.h), a->apply(t.e), a->apply(t.f), t.label};
  out.h = cc.h_cartan;
  return out;
}

KMatrix find_conjugator(const LieAlgebra& model, const Sl2Triple& t1, const Sl2Triple& t2, const ConjugacyOptions& opt) {
  auto c1 = triple_in_cartan(model, t1);
  auto c2 = triple_in_cartan(model, t2);
  auto tau = conjugate_cartan_pair(model, c1.h, c2.h);
  if (!tau) throw std::invalid_argument("find_conjugator: triples are not conjugate");
  QVec e1 = tau->apply(c1.t.e);
  CellGroup grp = centralizer_cell_group(model, c2.h);
  std::string why;
  for (const auto& cell : grp.cells()) {
    auto cs = bruhat_system(grp, cell, {e1}, {to_k(c2.t.e)});
    if (dump_enabled()) dump_system(cell, cs.params.vars, cs.polys);
    auto c = consistency(cs.polys, opt.groebner);
    if (c == Consistency::Inconsistent) continue;
    if (c == Consistency::Unknown) {
      why = "Groebner basis budget exhausted";
      continue;
    }
    // the solution set is a coset of the stabilizer; pin parameters until it is finite
    const auto& p = cs.params;
    std::vector<size_t> pin = p.u;
    pin.insert(pin.end(), p.s.begin(), p.s.end());
    pin.insert(pin.end(), p.t.begin(), p.t.end());
    auto polys = cs.polys;
    std::optional<std::vector<Cyclotomic>> point;
    for (size_t at = 0; at <= pin.size() && !point; ++at) {
      auto sol = solve_cell(p, polys, opt.groebner);
      if (sol.status == SolutionSet::Status::Solved && !sol.solutions.empty()) {
        point = sol.solutions.front();
        break;
      }
      if (sol.status == SolutionSet::Status::Unsat || at == pin.size()) {
        why = sol.reason.empty() ? "no solution after pinning" : sol.reason;
        break;
      }
      for (long long v : {0LL, 1LL, -1LL, 2LL, -2LL, 3LL}) {
        auto trial = polys;
        trial.push_back(KPoly::var(pin[at]) - KPoly::constant(Cyclotomic(v)));
        if (consistency(trial, opt.groebner) == Consistency::Consistent) {
          polys = std::move(trial);
          break;
        }
      }
    }
    if (!point) continue;
    KMatrix g = grp.element(cell, p, *point);
    KMatrix sigma = kinverse(c2.alpha) * g * tau->cast<Cyclotomic>() * c1.alpha.cast<Cyclotomic>();
    if (!maps_triple(sigma, t1, t2)) throw std::logic_error("find_conjugator: conjugator does not map the triple");
    if (!certify_automorphism(model, sigma, generating_set(model)))
      throw std::logic_error("find_conjugator: conjugator is not an automorphism");
    return sigma;
  }
  if (!why.empty()) throw std::runtime_error("find_conjugator: inconclusive: " + why);
  throw std::logic_error("find_conjugator: every cell is inconsistent");
}

namespace {

StabilizerResult stabilizer_search(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt) {
  auto c = triple_in_cartan(model, t);
  if (!centralizer(model, {c.t.h, c.t.e, c.t.f}).empty())
    throw std::invalid_argument("finite_stabilizer: the centralizer of the triple is not zero");
  CellGroup grp = centralizer_cell_group(model, c.h);
  auto res = solve_in_cells(grp, {c.t.e, c.t.f}, {to_k(c.t.e), to_k(c.t.f)}, opt);
  KMatrix a = c.alpha.cast<Cyclotomic>(), ainv = kinverse(c.alpha);
  auto gens = generating_set(model);
  for (auto& m : res.elements) {
    m = ainv * m * a;
    if (!maps_triple(m, t, t)) throw std::logic_error("finite_stabilizer: element does not fix the triple");
    if (!certify_automorphism(model, m, gens)) throw std::logic_error("finite_stabilizer: element is not an automorphism");
  }
  return res;
}

}  // namespace

StabilizerResult finite_stabilizer(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt) {
  ConjugacyOptions o = opt;
  o.first_only = false;
  o.involutions_only = false;
  auto res = stabilizer_search(model, t, o);
  if (res.inconclusive) res.elements.clear();
  return res;
}

StabilizerResult order2_search(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt) {
  ConjugacyOptions o = opt;
  o.first_only = false;
  o.involutions_only = true;
  return stabilizer_search(model, t, o);
}

StabilizerResult outer_stabilizer(const LieAlgebra& model, const Sl2Triple& t, const ConjugacyOptions& opt) {
  StabilizerResult out;
  const auto& rs = model.chevalley().rs;
  auto syms = cartan_symmetries(rs.cartan());
  std::vector<KMatrix> inner;
  bool have_inner = false;
  IVec wdd = weighted_dynkin_diagram(model, t);
  auto gens = generating_set(model);
  for (const auto& perm : syms) {
    bool identity = true;
    for (size_t i = 0; i < perm.size(); ++i) identity = identity && perm[i] == static_cast<int>(i);
    if (identity) continue;
    QMatrix d = diagram_automorphism(model, perm);
    Sl2Triple moved{d.apply(t.h), d.apply(t.e), d.apply(t.f), t.label};
    if (weighted_dynkin_diagram(model, moved) != wdd) continue;
    if (!have_inner) {
      auto base = finite_stabilizer(model, t, opt);
      out.cells = base.cells;
      if (base.inconclusive) {
        out.inconclusive = true;
        out.reason = base.reason;
        return out;
      }
      inner = std::move(base.elements);
      have_inner = true;
    }
    KMatrix phi = find_conjugator(model, moved, t, opt) * d.cast<Cyclotomic>();
    for (const auto& s : inner) {
      KMatrix m = s * phi;
      if (!maps_triple(m, t, t)) throw std::logic_error("outer_stabilizer: element does not fix the triple");
      if (!certify_automorphism(model, m, gens)) throw std::logic_error("outer_stabilizer: element is not an automorphism");
      if (!contains(out.elements, m)) out.elements.push_back(std::move(m));
    }
  }
  return out;
}

Membership in_identity_component_cells(const LieAlgebra& g, const KMatrix& sigma, const Subspace& c1,
                                       const std::vector<QVec>& tests, const ConjugacyOptions& opt) {
  std::vector<QVec> src = tests.empty() ? default_tests(g) : tests;
  CellGroup grp = reductive_cell_group(g, c1);
  auto tgt = images(sigma, src);
  bool unknown = false;
  for (const auto& cell : grp.cells()) {
    auto cs = bruhat_system(grp, cell, src, tgt);
    if (dump_enabled()) dump_system(cell, cs.params.vars, cs.polys);
    switch (consistency(cs.polys, opt.groebner)) {
      case Consistency::Consistent:
        return Membership::Yes;
      case Consistency::Unknown:
        unknown = true;
        break;
      case Consistency::Inconsistent:
        break;
    }
  }
  return unknown ? Membership::Inconclusive : Membership::No;
}

namespace {

size_t reductive_rank(const LieAlgebra& g, const Subspace& c) {
  if (c.empty()) return 0;
  auto rd = reductive_decompose(g, c);
  size_t r = rd.center.size();
  if (!rd.derived.empty()) r += canonical_generators(g, rd.derived).rank();
  return r;
}

/// A semisimple sigma in R lies in a maximal torus T of R; then Lie(T) sits in the fixed
/// points of sigma on c1, and sigma lies in R iff it lies in T.
std::optional<Membership> torus_membership(const LieAlgebra& g, const QMatrix& sigma, const Subspace& c1,
                                           const std::vector<QVec>& src, const ConjugacyOptions& opt) {
  size_t n = g.dim();
  QMatrix m(n, c1.size());
  for (size_t j = 0; j < c1.size(); ++j) m.set_col(j, sigma.apply(c1[j]) - c1[j]);
  Subspace fixed;
  for (const auto& z : kernel(m)) {
    QVec v(n);
    for (size_t j = 0; j < c1.size(); ++j) axpy(v, z[j], c1[j]);
    fixed.push_back(std::move(v));
  }
  size_t rank = reductive_rank(g, c1);
  if (fixed.empty()) return rank == 0 ? std::optional<Membership>() : Membership::No;
  auto rd = reductive_decompose(g, fixed);
  Subspace cartan = rd.center;
  if (!rd.derived.empty())
    for (auto& v : split_cartan(g, rd.derived, {})) cartan.push_back(std::move(v));
  if (cartan.size() < rank) return Membership::No;
  if (cartan.size() > rank) throw std::logic_error("torus_membership: fixed points have larger rank");
  CellGroup torus = reductive_cell_group(g, cartan);
  auto tgt = images(sigma.cast<Cyclotomic>(), src);
  auto cs = bruhat_system(torus, torus.cells().front(), src, tgt);
  switch (consistency(cs.polys, opt.groebner)) {
    case Consistency::Consistent:
      return Membership::Yes;
    case Consistency::Inconsistent:
      return Membership::No;
    case Consistency::Unknown:
      break;
  }
  return Membership::Inconclusive;
}

}  // namespace

Membership in_identity_component(const LieAlgebra& g, const KMatrix& sigma, const Subspace& c1,
                                 const std::vector<QVec>& tests, const ConjugacyOptions& opt) {
  std::vector<QVec> src = tests.empty() ? default_tests(g) : tests;
  auto q = to_q(sigma);
  if (q && !c1.empty() && finite_order(sigma) > 0) {
    try {
      if (auto r = torus_membership(g, *q, c1, src, opt)) return *r;
    } catch (const std::exception&) {
      // fixed points not split over Q: fall back to the cell scan
    }
  }
  return in_identity_component_cells(g, sigma, c1, src, opt);
}

}  // namespace nilcent
