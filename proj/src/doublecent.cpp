#include "nilcent/doublecent.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace nilcent {

namespace {

/// Incrementally built row-echelon set; add() reports whether v enlarged the span.
template <class F>
struct Echelon {
  std::vector<Vec<F>> rows;
  std::vector<size_t> piv;

  Vec<F> reduce(Vec<F> v) const {
    for (size_t r = 0; r < rows.size(); ++r)
      if (!v[piv[r]].is_zero()) axpy(v, -v[piv[r]], rows[r]);
    return v;
  }
  bool add(const Vec<F>& v) {
    Vec<F> w = reduce(v);
    size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) return false;
    w = scale(F(1) / w[p], w);
    rows.push_back(std::move(w));
    piv.push_back(p);
    return true;
  }
  bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }
};

size_t span_rank(const Subspace& a) {
  Echelon<Rational> e;
  for (const auto& v : a) e.add(v);
  return e.rows.size();
}

bool same_span(const Subspace& a, const Subspace& b) {
  Subspace u = a;
  u.insert(u.end(), b.begin(), b.end());
  size_t r = span_rank(u);
  return r == span_rank(a) && r == span_rank(b);
}

bool in_span(const Subspace& a, const QVec& v) {
  Echelon<Rational> e;
  for (const auto& x : a) e.add(x);
  return e.contains(v);
}

Subspace full_basis(const LieAlgebra& g) {
  Subspace s;
  for (size_t i = 0; i < g.dim(); ++i) s.push_back(g.basis_vector(i));
  return s;
}

template <class F>
Vec<F> normalize_first(Vec<F> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return scale(F(1) / x, v);
  throw std::logic_error("normalize_first: zero vector");
}

CanonicalGenerators sub_generators(const CanonicalGenerators& cg, size_t from, size_t to) {
  CanonicalGenerators out;
  for (size_t i = from; i < to; ++i) {
    out.h.push_back(cg.h[i]);
    out.x.push_back(cg.x[i]);
    out.y.push_back(cg.y[i]);
  }
  out.cartan.assign(to - from, std::vector<int>(to - from));
  for (size_t i = from; i < to; ++i)
    for (size_t j = from; j < to; ++j) out.cartan[i - from][j - from] = cg.cartan[i][j];
  for (const auto& c : cg.components) {
    if (c.nodes.empty() || static_cast<size_t>(c.nodes.front()) < from || static_cast<size_t>(c.nodes.front()) >= to) continue;
    ComponentType ct = c;
    for (auto& n : ct.nodes) n -= static_cast<int>(from);
    out.components.push_back(ct);
  }
  return out;
}

CanonicalGenerators concat_generators(const CanonicalGenerators& a, const CanonicalGenerators& b) {
  CanonicalGenerators out = a;
  size_t ra = a.rank(), rb = b.rank();
  out.h.insert(out.h.end(), b.h.begin(), b.h.end());
  out.x.insert(out.x.end(), b.x.begin(), b.x.end());
  out.y.insert(out.y.end(), b.y.begin(), b.y.end());
  out.cartan.assign(ra + rb, std::vector<int>(ra + rb, 0));
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < ra; ++j) out.cartan[i][j] = a.cartan[i][j];
  for (size_t i = 0; i < rb; ++i)
    for (size_t j = 0; j < rb; ++j) out.cartan[ra + i][ra + j] = b.cartan[i][j];
  for (auto c : b.components) {
    for (auto& n : c.nodes) n += static_cast<int>(ra);
    out.components.push_back(c);
  }
  return out;
}

/// Eigenvalue of ad x on an eigenvector v.
template <class F>
F eigenvalue(const LieAlgebra& g, const Vec<F>& x, const Vec<F>& v) {
  Vec<F> w = g.bracket(x, v);
  for (size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) {
      F lam = w[k] / v[k];
      if (w != scale(lam, v)) throw std::logic_error("eigenvalue: not an eigenvector");
      return lam;
    }
  throw std::logic_error("eigenvalue: zero vector");
}

void compute_nu(const LieAlgebra& g, ModuleDecomposition& md) {
  size_t s = md.s(), d = md.torus.size();
  md.nu.assign(s + d, std::vector<Rational>(md.m()));
  for (size_t j = 0; j < md.m(); ++j) {
    for (size_t i = 0; i < s; ++i) md.nu[i][j] = eigenvalue(g, md.gens.h[i], md.highest[j]);
    for (size_t i = 0; i < d; ++i) md.nu[s + i][j] = eigenvalue(g, md.torus[i], md.highest[j]);
  }
}

GeneratorImages images_of(const CanonicalGenerators& cg) {
  GeneratorImages im;
  for (size_t i = 0; i < cg.rank(); ++i) {
    im.h.push_back(to_k(cg.h[i]));
    im.x.push_back(to_k(cg.x[i]));
    im.y.push_back(to_k(cg.y[i]));
  }
  return im;
}

}  // namespace

CentralizerPair centralizer_pair(const LieAlgebra& g, const Sl2Triple& t) {
  CentralizerPair cp;
  cp.triple = t;
  cp.c1 = centralizer(g, {t.h, t.e, t.f});
  cp.c2 = cp.c1.empty() ? full_basis(g) : centralizer(g, cp.c1);
  auto r1 = reductive_decompose(g, cp.c1);
  auto r2 = reductive_decompose(g, cp.c2);
  cp.c1d = r1.derived;
  cp.c2d = r2.derived;
  cp.t = r1.center;

  for (const QVec* x : {&t.h, &t.e, &t.f})
    if (!in_span(cp.c2, *x)) throw std::logic_error("centralizer_pair: triple is not in c2");
  Subspace zc2 = centralizer(g, cp.c2);
  if (!same_span(zc2, cp.c1)) throw std::logic_error("centralizer_pair: z(c2) differs from c1");
  if (!same_span(r2.center, cp.t)) throw std::logic_error("centralizer_pair: centres of c1 and c2 differ");
  Subspace meet = intersect(cp.c1, cp.c2, g.dim());
  if (!same_span(meet, cp.t)) throw std::logic_error("centralizer_pair: c1 and c2 meet outside the centre");

  cp.c = cp.c1d;
  cp.c.insert(cp.c.end(), cp.c2d.begin(), cp.c2d.end());
  cp.c.insert(cp.c.end(), cp.t.begin(), cp.t.end());
  if (span_rank(cp.c) != cp.c.size()) throw std::logic_error("centralizer_pair: c1' + c2' + t is not direct");

  const QMatrix& kill = g.killing_matrix();
  size_t n = g.dim(), k = cp.c.size();
  QMatrix gram(k, k);
  std::vector<QVec> kc;
  for (size_t i = 0; i < k; ++i) kc.push_back(kill.apply(cp.c[i]));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) gram(i, j) = dot(kc[i], cp.c[j]);
  if (k > 0 && determinant(gram).is_zero()) throw std::logic_error("centralizer_pair: Killing form degenerate on c");
  cp.perp = k == 0 ? full_basis(g) : kernel(QMatrix::from_rows(kc, n));
  if (cp.perp.size() + k != n) throw std::logic_error("centralizer_pair: c + c^perp is not g");
  for (const auto& x : cp.c)
    for (const auto& v : cp.perp) {
      QVec w = g.bracket(x, v);
      for (const auto& row : kc)
        if (!dot(row, w).is_zero()) throw std::logic_error("centralizer_pair: c^perp is not c-stable");
    }
  return cp;
}

ModuleDecomposition killing_complement(const LieAlgebra& g, const CentralizerPair& cp) {
  ModuleDecomposition md;
  CanonicalGenerators cg1, cg2;
  if (!cp.c1d.empty()) cg1 = canonical_generators(g, cp.c1d);
  if (!cp.c2d.empty()) {
    Subspace hint;
    if (!is_zero_vec(cp.triple.h)) hint.push_back(cp.triple.h);
    cg2 = canonical_generators(g, cp.c2d, hint);
  }
  md.rank1 = cg1.rank();
  md.type1 = cp.c1d.empty() ? "0" : cg1.type();
  md.type2 = cp.c2d.empty() ? "0" : cg2.type();
  md.gens = concat_generators(cg1, cg2);
  md.torus = cp.t;
  size_t s = md.s(), n = g.dim();

  // V0 = {v in V : [x_i, v] = 0}
  Subspace v0;
  if (s == 0) {
    v0 = cp.perp;
  } else if (!cp.perp.empty()) {
    QMatrix p = QMatrix::from_columns(cp.perp, n);
    QMatrix eq(s * n, cp.perp.size());
    for (size_t i = 0; i < s; ++i) {
      QMatrix a = g.ad(md.gens.x[i]) * p;
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < cp.perp.size(); ++c) eq(i * n + r, c) = a(r, c);
    }
    for (const auto& c : kernel(eq)) v0.push_back(p.apply(c));
  }

  // joint eigenspaces of the h_i and the torus on V0
  std::vector<Subspace> pieces;
  if (!v0.empty()) pieces.push_back(v0);
  std::vector<QVec> ops = md.gens.h;
  ops.insert(ops.end(), md.torus.begin(), md.torus.end());
  for (const auto& x : ops) {
    std::vector<Subspace> next;
    for (const auto& piece : pieces) {
      if (piece.size() == 1) {
        next.push_back(piece);
        continue;
      }
      Coordinates<Rational> coords(piece, n);
      auto eig = rational_eigenspaces(restricted_ad(g, x, piece, coords));
      if (!eig) throw std::logic_error("killing_complement: Cartan element not diagonalisable over Q");
      for (const auto& [lam, vs] : *eig) {
        Subspace sub;
        for (const auto& c : vs) {
          QVec w(n);
          for (size_t k = 0; k < piece.size(); ++k) axpy(w, c[k], piece[k]);
          sub.push_back(std::move(w));
        }
        next.push_back(std::move(sub));
      }
    }
    pieces = std::move(next);
  }
  for (const auto& piece : pieces) {
    if (piece.size() != 1) throw std::logic_error("killing_complement: V is not multiplicity free");
    md.highest.push_back(normalize_first(piece.front()));
  }

  // summands: closure of v_j under ad y_i, remembering the words
  for (const auto& v : md.highest) {
    Echelon<Rational> ech;
    Subspace basis{v};
    std::vector<std::vector<size_t>> words{{}};
    ech.add(v);
    for (size_t at = 0; at < basis.size(); ++at)
      for (size_t i = 0; i < s; ++i) {
        QVec w = g.bracket(md.gens.y[i], basis[at]);
        if (ech.add(w)) {
          basis.push_back(w);
          auto word = words[at];
          word.push_back(i);
          words.push_back(std::move(word));
        }
      }
    md.summands.push_back(std::move(basis));
    md.words.push_back(std::move(words));
  }
  size_t total = 0;
  for (const auto& b : md.summands) total += b.size();
  if (total != cp.perp.size()) throw std::logic_error("killing_complement: summands do not fill V");

  compute_nu(g, md);

  // integral torus basis: a Z-basis of the lattice spanned by the torus weights
  size_t d = md.torus.size();
  if (d > 0 && md.m() > 0) {
    mpz_class den = 1;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < md.m(); ++j) den = lcm(den, md.nu[s + i][j].denominator());
    std::vector<std::vector<long long>> cols;
    for (size_t j = 0; j < md.m(); ++j) {
      std::vector<long long> c(d);
      for (size_t i = 0; i < d; ++i) {
        mpq_class q = md.nu[s + i][j].to_mpq() * den;
        c[i] = mpz_class(q.get_num() / q.get_den()).get_si();
      }
      cols.push_back(std::move(c));
    }
    auto lat = lattice_basis(cols);
    if (lat.size() == d) {
      QMatrix m(d, d);
      for (size_t k = 0; k < d; ++k)
        for (size_t i = 0; i < d; ++i) m(i, k) = Rational(lat[k][i]) / Rational(den.get_si());
      auto b = inverse(m);
      if (!b) throw std::logic_error("killing_complement: singular lattice basis");
      change_torus_basis(g, md, *b);
    }
  }

  // order: c' weights decreasing, then torus weights increasing
  std::vector<size_t> order(md.m());
  for (size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    for (size_t i = 0; i < s; ++i)
      if (md.nu[i][a] != md.nu[i][b]) return md.nu[i][b] < md.nu[i][a];
    for (size_t i = s; i < s + d; ++i)
      if (md.nu[i][a] != md.nu[i][b]) return md.nu[i][a] < md.nu[i][b];
    return false;
  });
  reorder_summands(md, order);
  return md;
}

void change_torus_basis(const LieAlgebra& g, ModuleDecomposition& md, const QMatrix& change) {
  size_t d = md.torus.size();
  if (change.rows() != d || change.cols() != d) throw std::invalid_argument("change_torus_basis: wrong size");
  std::vector<QVec> nt(d, QVec(g.dim()));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) axpy(nt[i], change(i, k), md.torus[k]);
  md.torus = std::move(nt);
  compute_nu(g, md);
}

void reorder_summands(ModuleDecomposition& md, const std::vector<size_t>& order) {
  auto permute = [&](auto& v) {
    auto old = v;
    for (size_t j = 0; j < order.size(); ++j) v[j] = old[order[j]];
  };
  permute(md.highest);
  permute(md.summands);
  permute(md.words);
  for (auto& row : md.nu) permute(row);
}

RestrictionCandidates restriction_candidates(const LieAlgebra& g, const CentralizerPair& cp,
                                             const ModuleDecomposition& md, const ConjugacyOptions& opt) {
  RestrictionCandidates rc;
  size_t r1 = md.rank1, s = md.s();
  CanonicalGenerators cg1 = sub_generators(md.gens, 0, r1);
  if (r1 == 0) {
    rc.theta.emplace_back();
    rc.theta_perm.emplace_back();
  } else {
    GeneratorImages base = images_of(cg1);
    for (const auto& p : cartan_symmetries(cg1.cartan)) {
      GeneratorImages im;
      for (size_t i = 0; i < r1; ++i) {
        size_t q = static_cast<size_t>(p[i]);
        im.h.push_back(base.h[q]);
        im.x.push_back(base.x[q]);
        im.y.push_back(base.y[q]);
      }
      rc.theta.push_back(std::move(im));
      rc.theta_perm.push_back(p);
    }
  }

  CanonicalGenerators cg2 = sub_generators(md.gens, r1, s);
  if (cg2.rank() == 0) {
    rc.eta.emplace_back();
    rc.eta_outer.emplace_back();
    return rc;
  }
  Model model = build_model(g, cg2, md.type2);
  const LieAlgebra& m2 = *model.algebra;
  CanonicalGenerators std2 = standard_generators(m2);
  for (size_t i = 0; i < cg2.rank(); ++i)
    if (model.to_ambient(std2.x[i]) != cg2.x[i] || model.to_ambient(std2.y[i]) != cg2.y[i])
      throw std::logic_error("restriction_candidates: model generators do not match");
  auto to_model = [&](const QVec& v) {
    auto c = model.to_model(v);
    if (!c) throw std::logic_error("restriction_candidates: triple not in c2'");
    return *c;
  };
  Sl2Triple tm{to_model(cp.triple.h), to_model(cp.triple.e), to_model(cp.triple.f), cp.triple.label};
  StabilizerResult inner = finite_stabilizer(m2, tm, opt);
  StabilizerResult outer = outer_stabilizer(m2, tm, opt);
  if (inner.inconclusive || outer.inconclusive) {
    rc.inconclusive = true;
    rc.reason = inner.inconclusive ? inner.reason : outer.reason;
  }
  KMatrix embed = model.embed.cast<Cyclotomic>();
  auto add = [&](const KMatrix& eta) {
    GeneratorImages im;
    for (size_t i = 0; i < cg2.rank(); ++i) {
      im.h.push_back(embed.apply(eta.apply(to_k(std2.h[i]))));
      im.x.push_back(embed.apply(eta.apply(to_k(std2.x[i]))));
      im.y.push_back(embed.apply(eta.apply(to_k(std2.y[i]))));
    }
    rc.eta.push_back(std::move(im));
    rc.eta_outer.push_back(outer_class(m2, eta));
  };
  for (const auto& e : inner.elements) add(e);
  for (const auto& e : outer.elements) add(e);
  return rc;
}

BarredData barred_data(const LieAlgebra& g, const ModuleDecomposition& md, const GeneratorImages& theta,
                       const GeneratorImages& eta) {
  BarredData bd;
  bd.h = theta.h;
  bd.h.insert(bd.h.end(), eta.h.begin(), eta.h.end());
  bd.x = theta.x;
  bd.x.insert(bd.x.end(), eta.x.begin(), eta.x.end());
  bd.y = theta.y;
  bd.y.insert(bd.y.end(), eta.y.begin(), eta.y.end());
  size_t s = md.s(), n = g.dim();
  if (bd.h.size() != s) throw std::invalid_argument("barred_data: generator count mismatch");
  std::vector<KMatrix> adx;
  for (const auto& x : bd.x) adx.push_back(g.ad(x));
  for (const auto& basis : md.summands) {
    KMatrix p = QMatrix::from_columns(basis, n).cast<Cyclotomic>();
    KVec v;
    if (s == 0) {
      v = to_k(basis.front());
    } else {
      KMatrix eq(s * n, basis.size());
      for (size_t i = 0; i < s; ++i) {
        KMatrix a = adx[i] * p;
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < basis.size(); ++c) eq(i * n + r, c) = a(r, c);
      }
      auto ker = kernel(eq);
      if (ker.size() != 1) throw std::logic_error("barred_data: highest weight space is not a line");
      v = p.apply(ker.front());
    }
    bd.v.push_back(normalize_first(v));
  }
  bd.mu.assign(s, std::vector<Cyclotomic>(md.m()));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < md.m(); ++j) bd.mu[i][j] = eigenvalue(g, bd.h[i], bd.v[j]);
  return bd;
}

std::vector<std::vector<size_t>> permutation_candidates(const ModuleDecomposition& md, const BarredData& bd) {
  size_t m = md.m(), s = md.s();
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> pi(m);
  std::vector<bool> used(m, false);
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == m) {
      out.push_back(pi);
      return;
    }
    for (size_t l = 0; l < m; ++l) {
      if (used[l] || md.summands[l].size() != md.summands[j].size()) continue;
      bool ok = true;
      for (size_t i = 0; i < s && ok; ++i) ok = bd.mu[i][l] == Cyclotomic(md.nu[i][j]);
      if (!ok) continue;
      used[l] = true;
      pi[j] = l;
      rec(j + 1);
      used[l] = false;
    }
  };
  rec(0);
  return out;
}

std::optional<QMatrix> torus_restriction(const ModuleDecomposition& md, const std::vector<size_t>& pi) {
  size_t d = md.torus.size(), s = md.s(), m = md.m();
  if (d == 0) return QMatrix(0, 0);
  std::vector<size_t> inv(m);
  for (size_t j = 0; j < m; ++j) inv[pi[j]] = j;
  // sum_k a_ik nu_{s+k,j} = nu_{s+i,pi^{-1}(j)}
  QMatrix nt(m, d);
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < d; ++k) nt(j, k) = md.nu[s + k][j];
  QMatrix a(d, d);
  for (size_t i = 0; i < d; ++i) {
    QVec rhs(m);
    for (size_t j = 0; j < m; ++j) rhs[j] = md.nu[s + i][inv[j]];
    auto sol = solve(nt, rhs);
    if (!sol) return std::nullopt;
    for (size_t k = 0; k < d; ++k) a(i, k) = (*sol)[k];
  }
  if (rank(nt) != d) throw std::logic_error("torus_restriction: torus weights do not span");
  return a;
}

std::vector<size_t> pinned_indices(const ModuleDecomposition& md) {
  size_t d = md.torus.size(), s = md.s();
  std::vector<size_t> out;
  Echelon<Rational> ech;
  for (size_t j = 0; j < md.m() && out.size() < d; ++j) {
    QVec w(d);
    for (size_t k = 0; k < d; ++k) w[k] = md.nu[s + k][j];
    if (ech.add(w)) out.push_back(j);
  }
  if (out.size() != d) throw std::logic_error("pinned_indices: torus characters have a common kernel");
  return out;
}

ExtensionResult extension_solve(const LieAlgebra& g, const ModuleDecomposition& md, const BarredData& bd,
                                const std::vector<size_t>& pi, const QMatrix& a, const GroebnerOptions& opt) {
  ExtensionResult res;
  size_t n = g.dim(), s = md.s(), d = md.torus.size(), m = md.m();

  // adapted basis: c' (closure of the generators), t, then the summands
  std::vector<QVec> basis;
  std::vector<KVec> img;
  std::vector<int> block;  // -1 for c' + t, j for V_j
  Echelon<Rational> ech;
  auto push = [&](const QVec& v, const KVec& w, int b) {
    if (!ech.add(v)) return false;
    basis.push_back(v);
    img.push_back(w);
    block.push_back(b);
    return true;
  };
  for (size_t i = 0; i < s; ++i) {
    push(md.gens.x[i], bd.x[i], -1);
    push(md.gens.y[i], bd.y[i], -1);
    push(md.gens.h[i], bd.h[i], -1);
  }
  for (size_t at = 0; at < basis.size(); ++at)
    for (size_t i = 0; i < s; ++i) {
      push(g.bracket(md.gens.x[i], basis[at]), g.bracket(bd.x[i], img[at]), -1);
      push(g.bracket(md.gens.y[i], basis[at]), g.bracket(bd.y[i], img[at]), -1);
    }
  for (size_t i = 0; i < d; ++i) {
    KVec w(n);
    for (size_t k = 0; k < d; ++k) axpy(w, Cyclotomic(a(i, k)), to_k(md.torus[k]));
    if (!push(md.torus[i], w, -1)) throw std::logic_error("extension_solve: torus meets c'");
  }
  std::vector<std::vector<size_t>> block_cols(m);
  for (size_t j = 0; j < m; ++j)
    for (size_t k = 0; k < md.summands[j].size(); ++k) {
      KVec w = bd.v[pi[j]];
      for (size_t i : md.words[j][k]) w = g.bracket(bd.y[i], w);
      block_cols[j].push_back(basis.size());
      if (!push(md.summands[j][k], w, static_cast<int>(j))) throw std::logic_error("extension_solve: summands overlap");
    }
  if (basis.size() != n) throw std::logic_error("extension_solve: adapted basis does not span g");
  auto ainv = inverse(QMatrix::from_columns(basis, n));
  if (!ainv) throw std::logic_error("extension_solve: adapted basis is singular");

  // lambda variables; pinned ones are the constant 1
  std::vector<size_t> pinned = pinned_indices(md);
  VarRegistry vars;
  std::vector<KPoly> lam(m);
  for (size_t j = 0; j < m; ++j) {
    if (std::find(pinned.begin(), pinned.end(), j) != pinned.end()) {
      lam[j] = KPoly::constant(Cyclotomic(1));
    } else {
      lam[j] = KPoly::var(vars.add("l" + std::to_string(j + 1)));
    }
  }
  std::vector<KPoly> polys;
  std::set<std::string> seen;
  auto add_poly = [&](const KPoly& p) {
    if (p.is_zero()) return;
    KPoly q = p.monic();
    if (seen.insert(q.str()).second) polys.push_back(std::move(q));
  };

  // sigma([v_j, b]) = [sigma v_j, sigma b] for the highest weight vectors and b in V
  for (size_t j = 0; j < m; ++j) {
    const KVec& vj = img[block_cols[j].front()];
    for (size_t k = 0; k < m; ++k)
      for (size_t col : block_cols[k]) {
        QVec w = g.bracket(md.highest[j], basis[col]);
        QVec q = ainv->apply(w);
        KVec p0(n);
        std::vector<KVec> pl(m, KVec(n));
        std::vector<bool> used(m, false);
        for (size_t c = 0; c < n; ++c) {
          if (q[c].is_zero()) continue;
          if (block[c] < 0) {
            axpy(p0, Cyclotomic(q[c]), img[c]);
          } else {
            axpy(pl[static_cast<size_t>(block[c])], Cyclotomic(q[c]), img[c]);
            used[static_cast<size_t>(block[c])] = true;
          }
        }
        KVec rhs = g.bracket(vj, img[col]);
        KPoly pair = lam[j] * lam[k];
        for (size_t r = 0; r < n; ++r) {
          KPoly p = KPoly::constant(p0[r]);
          for (size_t l = 0; l < m; ++l)
            if (used[l] && !pl[l][r].is_zero()) p += lam[l].scaled(pl[l][r]);
          if (!rhs[r].is_zero()) p -= pair.scaled(rhs[r]);
          add_poly(p);
        }
      }
  }
  for (size_t j = 0; j < m; ++j) {
    if (lam[j].is_constant()) continue;
    size_t aux = vars.add("m" + std::to_string(j + 1));
    add_poly(lam[j] * KPoly::var(aux) - KPoly::constant(Cyclotomic(1)));
  }
  res.equations = polys.size();

  std::vector<std::vector<Cyclotomic>> sols;
  if (vars.size() == 0) {
    for (const auto& p : polys)
      if (!p.is_zero()) {
        res.status = SolutionSet::Status::Unsat;
        return res;
      }
    sols.emplace_back();
  } else {
    SolutionSet ss = solve_zero_dim(vars, polys, opt);
    res.status = ss.status;
    res.reason = ss.reason;
    if (ss.status != SolutionSet::Status::Solved) return res;
    sols = ss.solutions;
  }
  res.status = SolutionSet::Status::Solved;

  KMatrix ak = ainv->cast<Cyclotomic>();
  std::vector<QVec> gens = generating_set(g);
  for (const auto& sol : sols) {
    std::vector<Cyclotomic> lv(m, Cyclotomic(1));
    size_t at = 0;
    for (size_t j = 0; j < m; ++j)
      if (!lam[j].is_constant()) lv[j] = sol[at++];
    KMatrix scaled_img(n, n);
    for (size_t c = 0; c < n; ++c) {
      Cyclotomic f = block[c] < 0 ? Cyclotomic(1) : lv[static_cast<size_t>(block[c])];
      scaled_img.set_col(c, scale(f, img[c]));
    }
    KMatrix sigma = scaled_img * ak;
    Automorphism aut{sigma, certify_automorphism(g, sigma, gens)};
    if (!aut.certified) throw std::logic_error("extension_solve: solution is not an automorphism");
    res.sigmas.push_back(std::move(aut));
  }
  return res;
}

DoubleCentralizerResult component_group_doublecent(const LieAlgebra& g, const Sl2Triple& t, const ConjugacyOptions& opt,
                                                   size_t budget) {
  DoubleCentralizerResult res;
  size_t n = g.dim();
  auto same_class = [&](const KMatrix& a, const KMatrix& b) {
    if (a == b) return true;
    if (res.cp.c1.empty()) return false;
    auto ai = inverse(a);
    if (!ai) throw std::logic_error("component_group_doublecent: singular automorphism");
    Membership mem = in_identity_component(g, *ai * b, res.cp.c1, {}, opt);
    if (mem == Membership::Inconclusive) {
      res.inconclusive = true;
      res.reason = "identity component test inconclusive";
    }
    return mem == Membership::Yes;
  };
  if (is_zero_vec(t.e)) {
    res.group = close_group({KMatrix::identity(n)}, same_class);
    return res;
  }
  res.cp = centralizer_pair(g, t);
  res.md = killing_complement(g, res.cp);
  RestrictionCandidates rc = restriction_candidates(g, res.cp, res.md, opt);
  if (rc.inconclusive) {
    res.inconclusive = true;
    res.reason = "restriction candidates: " + rc.reason;
  }
  KVec h = to_k(t.h), e = to_k(t.e), f = to_k(t.f);
  bool exhausted = false;
  for (size_t u = 0; u < rc.theta.size() && !exhausted; ++u)
    for (size_t v = 0; v < rc.eta.size() && !exhausted; ++v) {
      BarredData bd = barred_data(g, res.md, rc.theta[u], rc.eta[v]);
      for (const auto& pi : permutation_candidates(res.md, bd)) {
        if (budget != 0 && res.statuses.size() == budget) {
          exhausted = true;
          res.inconclusive = true;
          res.reason = "budget of " + std::to_string(budget) + " (u,v,pi) triples exhausted";
          break;
        }
        ExtensionStatus st;
        st.u = u;
        st.v = v;
        st.pi = pi;
        auto a = torus_restriction(res.md, pi);
        if (!a) {
          st.status = "no-torus-solution";
          res.statuses.push_back(st);
          continue;
        }
        ExtensionResult ext = extension_solve(g, res.md, bd, pi, *a, opt.groebner);
        if (ext.status == SolutionSet::Status::Inconclusive) {
          st.status = "inconclusive";
          st.reason = ext.reason;
          res.inconclusive = true;
          res.reason = "extension solve inconclusive";
        } else if (ext.status == SolutionSet::Status::Unsat) {
          st.status = "unsat";
        } else {
          st.status = "solved";
        }
        for (const auto& s : ext.sigmas) {
          if (s.m.apply(h) != h || s.m.apply(e) != e || s.m.apply(f) != f)
            throw std::logic_error("component_group_doublecent: extension does not fix the triple");
          if (!is_inner(g, s.m)) {
            st.status = "outer";
            continue;
          }
          ++st.solutions;
          res.candidates.push_back(s.m);
        }
        res.statuses.push_back(st);
      }
    }
  if (res.candidates.empty()) {
    if (!res.inconclusive) throw std::logic_error("component_group_doublecent: no extension found (the identity must extend)");
    res.group = close_group({KMatrix::identity(n)}, same_class);
    return res;
  }
  std::vector<KMatrix> reps;
  for (const auto& c : res.candidates) {
    bool dup = false;
    for (const auto& r : reps) dup = dup || same_class(r, c);
    if (!dup) reps.push_back(c);
  }
  res.group = close_group(reps, same_class);
  if (res.group.order() != reps.size()) {
    res.inconclusive = true;
    res.reason = "closure produced classes outside the candidate list";
  }
  return res;
}

std::vector<WeightRow> weight_rows(const ModuleDecomposition& md) {
  std::vector<WeightRow> rows;
  size_t s = md.s(), d = md.torus.size();
  for (size_t j = 0; j < md.m(); ++j) {
    WeightRow r;
    for (size_t i = 0; i < md.rank1; ++i) r.w1.push_back(md.nu[i][j].small_num());
    for (size_t i = 0; i < d; ++i) r.w2.push_back(md.nu[s + i][j]);
    for (size_t i = md.rank1; i < s; ++i) r.w3.push_back(md.nu[i][j].small_num());
    rows.push_back(std::move(r));
  }
  return rows;
}

bool same_weight_table(const std::vector<WeightRow>& a, const std::vector<WeightRow>& b, const CartanMatrix& c1,
                       const CartanMatrix& c2) {
  size_t m = a.size();
  if (b.size() != m) return false;
  size_t d = m == 0 ? 0 : a.front().w2.size();
  auto permuted = [](const std::vector<long long>& w, const std::vector<int>& p) {
    std::vector<long long> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[static_cast<size_t>(p[i])] = w[i];
    return out;
  };
  auto sym1 = c1.empty() ? std::vector<std::vector<int>>{{}} : cartan_symmetries(c1);
  auto sym2 = c2.empty() ? std::vector<std::vector<int>>{{}} : cartan_symmetries(c2);
  for (const auto& p1 : sym1)
    for (const auto& p2 : sym2) {
      std::vector<std::vector<long long>> k1(m), k3(m);
      for (size_t j = 0; j < m; ++j) {
        k1[j] = permuted(a[j].w1, p1);
        k3[j] = permuted(a[j].w3, p2);
      }
      // bijection respecting the semisimple weights; torus parts related by one matrix
      std::vector<size_t> match(m);
      std::vector<bool> used(m, false);
      std::function<bool(size_t)> rec = [&](size_t j) -> bool {
        if (j == m) {
          if (d == 0) return true;
          QMatrix src(m, d), dst(m, d);
          for (size_t r = 0; r < m; ++r)
            for (size_t k = 0; k < d; ++k) {
              src(r, k) = a[r].w2[k];
              dst(r, k) = b[match[r]].w2[k];
            }
          // dst = src * X^T for an invertible X
          QMatrix x(d, d);
          for (size_t k = 0; k < d; ++k) {
            auto col = solve(src, dst.col(k));
            if (!col) return false;
            for (size_t i = 0; i < d; ++i) x(k, i) = (*col)[i];
          }
          return !determinant(x).is_zero();
        }
        for (size_t l = 0; l < m; ++l) {
          if (used[l] || b[l].w1 != k1[j] || b[l].w3 != k3[j]) continue;
          used[l] = true;
          match[j] = l;
          if (rec(j + 1)) return true;
          used[l] = false;
        }
        return false;
      };
      if (rec(0)) return true;
    }
  return false;
}

std::vector<TableAlignment> table_alignments(const ModuleDecomposition& md, const std::vector<WeightRow>& ref) {
  auto rows = weight_rows(md);
  size_t m = rows.size(), d = md.torus.size();
  std::vector<TableAlignment> out;
  if (ref.size() != m) return out;
  std::vector<size_t> order(m);
  std::vector<bool> used(m, false);
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == m) {
      // ref_j = C * ours_{order[j]}, one row of C at a time
      QMatrix src(m, d), c(d, d);
      for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k < d; ++k) src(r, k) = rows[order[r]].w2[k];
      for (size_t i = 0; i < d; ++i) {
        QVec rhs(m);
        for (size_t r = 0; r < m; ++r) rhs[r] = ref[r].w2[i];
        auto sol = solve(src, rhs);
        if (!sol) return;
        for (size_t k = 0; k < d; ++k) c(i, k) = (*sol)[k];
      }
      if (d == 0 || !determinant(c).is_zero()) out.push_back({order, c});
      return;
    }
    for (size_t l = 0; l < m; ++l) {
      if (used[l] || rows[l].w1 != ref[j].w1 || rows[l].w3 != ref[j].w3 || rows[l].w2.size() != ref[j].w2.size()) continue;
      used[l] = true;
      order[j] = l;
      rec(j + 1);
      used[l] = false;
    }
  };
  rec(0);
  return out;
}

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_table: cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.value("schema", "") != "nilcent.table/1") throw std::runtime_error("load_table: unknown schema in " + path);
  std::vector<TableRow> rows;
  for (const auto& r : j.at("rows")) {
    TableRow row;
    row.label = r.at("label").get<std::string>();
    row.c1 = r.at("c1").get<std::string>();
    row.c2 = r.at("c2").get<std::string>();
    row.d = r.at("d").get<size_t>();
    row.group = r.at("group").get<std::string>();
    for (const auto& w : r.at("weights")) {
      WeightRow wr;
      wr.w1 = w.at("w1").get<std::vector<long long>>();
      for (long long x : w.at("w2").get<std::vector<long long>>()) wr.w2.emplace_back(x);
      wr.w3 = w.at("w3").get<std::vector<long long>>();
      row.weights.push_back(std::move(wr));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> builtin_table(const std::string& algebra) {
  std::string path = data_dir() + "/tables/" + algebra + ".json";
  if (!std::ifstream(path)) return {};
  return load_table(path);
}

}  // namespace nilcent
