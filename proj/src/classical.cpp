#include "nilcent/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nilcent {

namespace {

QVec flatten(const QMatrix& m) { return m.data(); }

QMatrix unflatten(const QVec& v, size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix power(const QMatrix& a, size_t k) {
  QMatrix p = QMatrix::identity(a.rows());
  for (size_t i = 0; i < k; ++i) p = a * p;
  return p;
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Rational sign(size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

FormedSpace FormedSpace::antidiagonal(size_t n, FormKind kind) {
  if (kind == FormKind::Alternating && n % 2 != 0) throw std::invalid_argument("alternating form needs even dimension");
  FormedSpace fs;
  fs.n = n;
  fs.kind = kind;
  fs.phi = QMatrix(n, n);
  for (size_t i = 0; i < n; ++i) fs.phi(i, n - 1 - i) = (kind == FormKind::Alternating && i >= n / 2) ? Rational(-1) : Rational(1);
  return fs;
}

Rational FormedSpace::operator()(const QVec& v, const QVec& w) const { return dot(v, phi.apply(w)); }

bool FormedSpace::in_algebra(const QMatrix& x) const { return (x.transpose() * phi + phi * x).is_zero(); }

bool FormedSpace::preserves(const QMatrix& g) const {
  QMatrix d = g.transpose() * phi * g - phi;
  return d.is_zero();
}

QMatrix ClassicalAlgebra::to_matrix(const QVec& x) const {
  size_t n = space.n;
  QMatrix m(n, n);
  for (size_t k = 0; k < basis.size(); ++k)
    if (!x[k].is_zero()) m = m + x[k] * basis[k];
  return m;
}

QVec ClassicalAlgebra::from_matrix(const QMatrix& m) const {
  auto c = coords(flatten(m));
  if (!c) throw std::invalid_argument("from_matrix: matrix is not in the algebra");
  return *c;
}

QMatrix ClassicalAlgebra::conjugation(const QMatrix& g) const {
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("conjugation: matrix is not invertible");
  QMatrix out(basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) out.set_col(j, from_matrix(g * basis[j] * *gi));
  return out;
}

ClassicalAlgebra classical_algebra(const FormedSpace& fs) {
  size_t n = fs.n, nn = n * n;
  // (x^T phi + phi x)_{ab} = sum_k x_{ka} phi_{kb} + phi_{ak} x_{kb}
  QMatrix eq(nn, nn);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t k = 0; k < n; ++k) {
        eq(a * n + b, k * n + a) += fs.phi(k, b);
        eq(a * n + b, k * n + b) += fs.phi(a, k);
      }
  ClassicalAlgebra alg;
  alg.space = fs;
  std::vector<QVec> flat;
  for (auto& v : kernel(eq)) {
    alg.basis.push_back(unflatten(v, n));
    flat.push_back(std::move(v));
  }
  size_t dim = alg.basis.size();
  alg.coords = Coordinates<Rational>(flat, nn);
  std::vector<SparseVec> table(dim * dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j) {
      QMatrix br = commutator(alg.basis[i], alg.basis[j]);
      if (br.is_zero()) continue;
      QVec c = alg.from_matrix(br);
      for (size_t k = 0; k < dim; ++k)
        if (!c[k].is_zero()) {
          table[i * dim + j].emplace_back(static_cast<uint32_t>(k), c[k]);
          table[j * dim + i].emplace_back(static_cast<uint32_t>(k), -c[k]);
        }
    }
  std::string label = (fs.kind == FormKind::Symmetric ? "so(" : "sp(") + std::to_string(n) + ")";
  alg.algebra = std::make_shared<LieAlgebra>(label, dim, std::move(table));
  return alg;
}

ClassicalAlgebra orthogonal_algebra(size_t n) { return classical_algebra(FormedSpace::antidiagonal(n, FormKind::Symmetric)); }
ClassicalAlgebra symplectic_algebra(size_t n) { return classical_algebra(FormedSpace::antidiagonal(n, FormKind::Alternating)); }

MatrixTriple matrix_triple(const ClassicalAlgebra& alg, const Sl2Triple& t) {
  return {alg.to_matrix(t.h), alg.to_matrix(t.e), alg.to_matrix(t.f)};
}

Sl2Triple algebra_triple(const ClassicalAlgebra& alg, const MatrixTriple& m, const std::string& label) {
  return {alg.from_matrix(m.h), alg.from_matrix(m.e), alg.from_matrix(m.f), label};
}

std::vector<std::vector<size_t>> classical_partitions(size_t n, FormKind kind) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::function<void(size_t, size_t)> rec = [&](size_t left, size_t maxpart) {
    if (left == 0) {
      std::map<size_t, size_t> mult;
      for (size_t p : cur) ++mult[p];
      bool ok = true;
      for (const auto& [p, m] : mult) {
        bool restricted = kind == FormKind::Symmetric ? p % 2 == 0 : p % 2 == 1;
        if (restricted && m % 2 != 0) ok = false;
      }
      if (ok) out.push_back(cur);
      return;
    }
    for (size_t p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

MatrixTriple triple_from_partition(const FormedSpace& fs, const std::vector<size_t>& parts) {
  size_t n = fs.n, total = 0;
  for (size_t p : parts) total += p;
  if (total != n) throw std::invalid_argument("triple_from_partition: parts do not sum to the dimension");
  bool sym = fs.kind == FormKind::Symmetric;
  Rational eps = sym ? Rational(1) : Rational(-1);
  std::map<size_t, size_t, std::greater<>> mult;
  for (size_t p : parts) ++mult[p];

  // blocks V(d) with basis u_k = e^k u_0 in a model space W, with form B
  QMatrix e(n, n), h(n, n), f(n, n), b(n, n);
  std::vector<QVec> pv, qv, mids;
  std::vector<Rational> mid_target;
  size_t offset = 0;
  auto add_block = [&](size_t d) {
    for (size_t k = 0; k < d; ++k) {
      size_t i = offset + k;
      if (k + 1 < d) e(i + 1, i) = Rational(1);
      h(i, i) = Rational(2 * static_cast<long long>(k) - static_cast<long long>(d) + 1);
      if (k > 0) f(i - 1, i) = Rational(static_cast<long long>(k * (d - k)));
    }
    size_t at = offset;
    offset += d;
    return at;
  };
  auto unit = [&](size_t i) { return unit_vec<Rational>(n, i); };
  for (const auto& [d, m] : mult) {
    bool single_ok = sym ? d % 2 == 1 : d % 2 == 0;
    if (!single_ok && m % 2 != 0) throw std::invalid_argument("triple_from_partition: not a valid partition for the form");
    for (size_t pair = 0; pair < m / 2; ++pair) {
      size_t o1 = add_block(d), o2 = add_block(d);
      for (size_t j = 0; j < d; ++j) {
        b(o1 + j, o2 + d - 1 - j) = sign(j);
        b(o2 + d - 1 - j, o1 + j) = eps * sign(j);
        pv.push_back(unit(o1 + j));
        qv.push_back(scale(sign(j), unit(o2 + d - 1 - j)));
      }
    }
    if (m % 2 == 1) {
      size_t o = add_block(d);
      // scale the form on a single block so that the leftover lines alternate +1, -1, ...
      Rational c(1);
      if (sym) {
        size_t mid = (d - 1) / 2;
        Rational target = mids.size() % 2 == 0 ? Rational(1) : Rational(-1);
        c = target * sign(mid);
      }
      for (size_t j = 0; j < d; ++j) b(o + j, o + d - 1 - j) = c * sign(j);
      for (size_t j = 0; j < d / 2; ++j) {
        pv.push_back(unit(o + j));
        qv.push_back(scale(c * sign(j), unit(o + d - 1 - j)));
      }
      if (sym) mids.push_back(unit(o + (d - 1) / 2));
    }
  }
  for (size_t i = 0; i + 1 < mids.size(); i += 2) {
    pv.push_back(scale(Rational(1, 2), mids[i] + mids[i + 1]));
    qv.push_back(mids[i] - mids[i + 1]);
  }
  std::vector<QVec> cols(n);
  size_t half = pv.size();
  for (size_t i = 0; i < half; ++i) {
    cols[i] = pv[i];
    cols[n - 1 - i] = qv[i];
  }
  if (n % 2 == 1) {
    if (mids.size() % 2 != 1) throw std::logic_error("triple_from_partition: no anisotropic line left for the middle");
    cols[n / 2] = mids.back();
  }
  if (2 * half + n % 2 != n) throw std::logic_error("triple_from_partition: basis size mismatch");
  QMatrix s = QMatrix::from_columns(cols, n);
  if (s.transpose() * b * s != fs.phi) throw std::logic_error("triple_from_partition: change of basis is not an isometry");
  auto si = inverse(s);
  if (!si) throw std::logic_error("triple_from_partition: singular change of basis");
  MatrixTriple t{*si * h * s, *si * e * s, *si * f * s};
  if (!fs.in_algebra(t.h) || !fs.in_algebra(t.e) || !fs.in_algebra(t.f))
    throw std::logic_error("triple_from_partition: matrices are not in the algebra");
  return t;
}

std::vector<size_t> jordan_type(const QMatrix& e) {
  size_t n = e.rows();
  std::vector<size_t> ranks{n};
  QMatrix p = QMatrix::identity(n);
  while (ranks.back() > 0) {
    p = e * p;
    size_t r = rank(p);
    if (r == ranks.back()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    ranks.push_back(r);
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<size_t> parts;
  for (size_t k = ranks.size() - 1; k >= 1; --k) {
    size_t atleast = ranks[k - 1] - ranks[k];
    size_t bigger = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (size_t c = 0; c < atleast - bigger; ++c) parts.push_back(k);
  }
  return parts;
}

namespace {

/// Lowest weight vectors of the summands of dimension s.
std::vector<QVec> lowest_vectors(const MatrixTriple& t, size_t s) {
  size_t n = t.h.rows();
  QMatrix shifted = t.h + Rational(static_cast<long long>(s) - 1) * QMatrix::identity(n);
  return kernel(stack(t.f, shifted));
}

}  // namespace

std::vector<NaturalSummand> decompose_natural(const MatrixTriple& t) {
  size_t n = t.h.rows();
  std::vector<NaturalSummand> out;
  for (size_t s = 1; s <= n; ++s)
    for (auto& v : lowest_vectors(t, s)) {
      NaturalSummand m;
      m.dim = s;
      m.lowest = v;
      QVec x = v;
      for (size_t k = 0; k < s; ++k) {
        m.basis.push_back(x);
        x = t.e.apply(x);
      }
      if (!is_zero_vec(x)) throw std::logic_error("decompose_natural: e^d does not kill the lowest vector");
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<IsotypicData> isotypic_data(const FormedSpace& fs, const MatrixTriple& t) {
  std::vector<IsotypicData> out;
  for (size_t s = 1; s <= fs.n; ++s) {
    auto low = lowest_vectors(t, s);
    if (low.empty()) continue;
    IsotypicData d;
    d.s = s;
    d.lowest = low;
    QMatrix es = power(t.e, s - 1);
    d.psi = QMatrix(low.size(), low.size());
    for (size_t i = 0; i < low.size(); ++i)
      for (size_t j = 0; j < low.size(); ++j) d.psi(i, j) = fs(low[i], es.apply(low[j]));
    out.push_back(std::move(d));
  }
  return out;
}

QMatrix reflection_neg_det(const QMatrix& psi) {
  size_t k = psi.rows();
  if (psi != psi.transpose()) throw std::invalid_argument("reflection_neg_det: form is not symmetric");
  QVec w(k);
  bool found = false;
  for (size_t i = 0; i < k && !found; ++i)
    if (!psi(i, i).is_zero()) {
      w[i] = Rational(1);
      found = true;
    }
  for (size_t i = 0; i < k && !found; ++i)
    for (size_t j = i + 1; j < k && !found; ++j)
      if (!psi(i, j).is_zero()) {
        w[i] = Rational(1);
        w[j] = Rational(1);
        found = true;
      }
  if (!found) throw std::invalid_argument("reflection_neg_det: form is degenerate");
  QVec pw = psi.apply(w);
  Rational q = dot(w, pw);
  // g(v) = v - 2 psi(w, v) / psi(w, w) w
  QMatrix g = QMatrix::identity(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) g(i, j) -= Rational(2) * w[i] * pw[j] / q;
  return g;
}

ClassicalComponentGroup component_group_classical(const ClassicalAlgebra& alg, const Sl2Triple& t, const ConjugacyOptions& opt) {
  const FormedSpace& fs = alg.space;
  size_t n = fs.n;
  MatrixTriple mt = matrix_triple(alg, t);
  ClassicalComponentGroup out;
  out.parts = jordan_type(mt.e);
  auto iso = isotypic_data(fs, mt);

  // change of basis to the summand bases e^k v_i
  std::vector<QVec> cols;
  std::map<size_t, size_t> start;  // s -> first column of its summands
  for (const auto& d : iso) {
    start[d.s] = cols.size();
    for (const auto& v : d.lowest) {
      QVec x = v;
      for (size_t k = 0; k < d.s; ++k) {
        cols.push_back(x);
        x = mt.e.apply(x);
      }
    }
  }
  QMatrix c = QMatrix::from_columns(cols, n);
  auto ci = inverse(c);
  if (!ci) throw std::logic_error("component_group_classical: summands do not span V");

  bool sym = fs.kind == FormKind::Symmetric;
  for (const auto& d : iso) {
    bool relevant = sym ? d.s % 2 == 1 : d.s % 2 == 0;
    if (!relevant) continue;
    QMatrix ghat = reflection_neg_det(d.psi);
    QMatrix lifted = QMatrix::identity(n);
    size_t s0 = start[d.s], m = d.lowest.size();
    for (size_t i = 0; i < m; ++i)
      for (size_t k = 0; k < d.s; ++k) {
        size_t col = s0 + i * d.s + k;
        lifted(col, col) = Rational(0);
        for (size_t l = 0; l < m; ++l) lifted(s0 + l * d.s + k, col) = ghat(l, i);
      }
    QMatrix g = c * lifted * *ci;
    if (!fs.preserves(g)) throw std::logic_error("component_group_classical: generator does not preserve the form");
    if (g * mt.h != mt.h * g || g * mt.e != mt.e * g || g * mt.f != mt.f * g)
      throw std::logic_error("component_group_classical: generator does not centralize the triple");
    out.relevant.push_back(d.s);
    out.generators.push_back(std::move(g));
  }

  size_t r = out.generators.size();
  for (size_t mask = 0; mask < (size_t(1) << r); ++mask) {
    QMatrix g = QMatrix::identity(n);
    for (size_t i = 0; i < r; ++i)
      if (mask & (size_t(1) << i)) g = g * out.generators[i];
    out.hat_group.push_back(g);
    if (determinant(g) == Rational(1)) out.det_one.push_back(g);
  }
  out.hat_order = out.hat_group.size();
  std::map<int, int> hat_orders{{1, 1}};
  if (out.hat_order > 1) hat_orders[2] = static_cast<int>(out.hat_order) - 1;
  out.hat_label = isomorphism_label(out.hat_order, true, hat_orders);

  // step (8): drop the elements acting through the identity component of Z_G(h,e,f)
  const LieAlgebra& g = *alg.algebra;
  Subspace z = centralizer(g, {t.h, t.e, t.f});
  std::vector<QVec> tests;
  for (size_t i = 0; i < g.dim(); ++i) tests.push_back(g.basis_vector(i));
  for (const auto& x : out.det_one) {
    if (x.is_identity()) {
      out.identity.push_back(x);
      continue;
    }
    KMatrix sigma = alg.conjugation(x).cast<Cyclotomic>();
    switch (in_identity_component(g, sigma, z, tests, opt)) {
      case Membership::Yes:
        out.identity.push_back(x);
        break;
      case Membership::No:
        break;
      case Membership::Inconclusive:
        out.inconclusive = true;
        out.reason = "identity component test inconclusive";
        break;
    }
  }
  auto in_identity = [&](const QMatrix& x) {
    return std::any_of(out.identity.begin(), out.identity.end(), [&](const QMatrix& y) { return y == x; });
  };
  for (const auto& x : out.det_one) {
    bool covered = false;
    for (const auto& rep : out.representatives) covered = covered || in_identity(rep * x);
    if (!covered) out.representatives.push_back(x);
  }
  out.order = out.representatives.size();
  std::map<int, int> orders{{1, 1}};
  if (out.order > 1) orders[2] = static_cast<int>(out.order) - 1;
  out.label = isomorphism_label(out.order, true, orders);
  return out;
}

}  // namespace nilcent
