#include "nilcent/groebner.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>

namespace nilcent {

namespace {

struct MonoHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

template <class F>
Poly<F> drop_lead(const Poly<F>& q) {
  std::vector<typename Poly<F>::Term> t(q.terms().begin() + 1, q.terms().end());
  return Poly<F>::from_sorted(q.order(), std::move(t));
}

template <class F>
Poly<F> reduce_by(const Poly<F>& p, const std::vector<const Poly<F>*>& g) {
  std::vector<typename Poly<F>::Term> rem;
  Poly<F> q = p;
  while (!q.is_zero()) {
    const Poly<F>* div = nullptr;
    for (const Poly<F>* gi : g)
      if (gi->lm().divides(q.lm())) {
        div = gi;
        break;
      }
    if (div) {
      q = q.axpy_term(-(q.lc() / div->lc()), q.lm() / div->lm(), *div);
    } else {
      rem.push_back(q.terms().front());
      q = drop_lead(q);
    }
  }
  return Poly<F>::from_sorted(p.order(), std::move(rem));
}

template <class F>
Poly<F> spoly(const Poly<F>& a, const Poly<F>& b) {
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  Poly<F> s = a.mul_term(F(1) / a.lc(), l / a.lm());
  return s.axpy_term(-(F(1) / b.lc()), l / b.lm(), b);
}

template <class F>
bool has_nonzero_constant(const std::vector<Poly<F>>& p) {
  for (const auto& f : p)
    if (!f.is_zero() && f.is_constant()) return true;
  return false;
}

template <class F>
void sort_by_lm(std::vector<Poly<F>>& p) {
  std::sort(p.begin(), p.end(),
            [](const Poly<F>& a, const Poly<F>& b) { return mono_cmp(a.lm(), b.lm(), a.order()) < 0; });
}

}  // namespace

template <class F>
Poly<F> normal_form(const Poly<F>& p, const std::vector<Poly<F>>& g) {
  std::vector<const Poly<F>*> ptr;
  for (const auto& gi : g)
    if (!gi.is_zero()) ptr.push_back(&gi);
  return reduce_by(p, ptr);
}

template <class F>
GroebnerResult<F> buchberger(std::vector<Poly<F>> gens, const GroebnerOptions& opt) {
  GroebnerResult<F> res;
  std::erase_if(gens, [](const Poly<F>& p) { return p.is_zero(); });
  if (gens.empty()) {
    res.complete = true;
    return res;
  }
  MonoOrder ord = gens.front().order();
  if (has_nonzero_constant(gens)) {
    res.complete = true;
    res.basis = {Poly<F>::constant(F(1), ord)};
    return res;
  }

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  std::vector<Poly<F>> polys;
  std::vector<char> active;
  std::vector<Pair> pairs;

  // Gebauer-Moeller installation of a new basis element h
  auto update = [&](size_t h) {
    const Monomial& lh = polys[h].lm();
    std::vector<size_t> c;
    std::vector<Monomial> lc;
    for (size_t g = 0; g < h; ++g)
      if (active[g]) {
        c.push_back(g);
        lc.push_back(Monomial::lcm(lh, polys[g].lm()));
      }
    std::vector<size_t> d;
    for (size_t k = 0; k < c.size(); ++k) {
      bool keep = Monomial::coprime(lh, polys[c[k]].lm());
      if (!keep) {
        keep = true;
        for (size_t m = k + 1; m < c.size() && keep; ++m)
          if (lc[m].divides(lc[k])) keep = false;
        for (size_t m : d)
          if (keep && lc[m].divides(lc[k])) keep = false;
      }
      if (keep) d.push_back(k);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && Monomial::lcm(polys[p.i].lm(), lh) != p.lcm &&
                  Monomial::lcm(lh, polys[p.j].lm()) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (size_t k : d)
      if (!Monomial::coprime(lh, polys[c[k]].lm())) next.push_back({c[k], h, lc[k]});
    pairs = std::move(next);
    for (size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].lm())) active[g] = 0;
    active[h] = 1;
  };
  auto basis_ptrs = [&]() {
    std::vector<const Poly<F>*> out;
    for (size_t g = 0; g < polys.size(); ++g)
      if (active[g]) out.push_back(&polys[g]);
    return out;
  };
  auto install = [&](Poly<F> r) {
    polys.push_back(r.monic());
    active.push_back(0);
    update(polys.size() - 1);
  };

  sort_by_lm(gens);
  for (auto& g : gens) {
    Poly<F> r = reduce_by(g, basis_ptrs());
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      res.complete = true;
      res.basis = {Poly<F>::constant(F(1), ord)};
      return res;
    }
    install(std::move(r));
  }

  while (!pairs.empty()) {
    if (res.pairs >= opt.max_pairs) {
      res.reason = "pair budget of " + std::to_string(opt.max_pairs) + " exhausted";
      for (size_t g = 0; g < polys.size(); ++g)
        if (active[g]) res.basis.push_back(polys[g]);
      return res;
    }
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Monomial& a = pairs[k].lcm;
      const Monomial& b = pairs[best].lcm;
      if (a.deg < b.deg || (a.deg == b.deg && mono_cmp(a, b, ord) < 0)) best = k;
    }
    Pair pr = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    ++res.pairs;
    Poly<F> r = reduce_by(spoly(polys[pr.i], polys[pr.j]), basis_ptrs());
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      res.complete = true;
      res.basis = {Poly<F>::constant(F(1), ord)};
      return res;
    }
    install(std::move(r));
  }

  std::vector<Poly<F>> g;
  for (size_t k = 0; k < polys.size(); ++k)
    if (active[k]) g.push_back(polys[k]);
  for (size_t k = 0; k < g.size(); ++k) {
    std::vector<const Poly<F>*> others;
    for (size_t m = 0; m < g.size(); ++m)
      if (m != k) others.push_back(&g[m]);
    g[k] = reduce_by(g[k], others).monic();
  }
  sort_by_lm(g);
  res.basis = std::move(g);
  res.complete = true;
  return res;
}

template <class F>
bool is_groebner_basis(const std::vector<Poly<F>>& g) {
  std::vector<const Poly<F>*> ptr;
  for (const auto& p : g)
    if (!p.is_zero()) ptr.push_back(&p);
  for (size_t i = 0; i < ptr.size(); ++i)
    for (size_t j = i + 1; j < ptr.size(); ++j) {
      if (Monomial::coprime(ptr[i]->lm(), ptr[j]->lm())) continue;
      if (!reduce_by(spoly(*ptr[i], *ptr[j]), ptr).is_zero()) return false;
    }
  return true;
}

template <class F>
std::vector<Poly<F>> reduce_set(std::vector<Poly<F>> p) {
  std::erase_if(p, [](const Poly<F>& f) { return f.is_zero(); });
  if (p.empty()) return p;
  MonoOrder ord = p.front().order();
  if (has_nonzero_constant(p)) return {Poly<F>::constant(F(1), ord)};
  for (auto& f : p) f = f.monic();
  while (true) {
    bool changed = false;
    for (size_t i = 0; i < p.size() && !changed; ++i)
      for (size_t j = 0; j < p.size(); ++j) {
        if (i == j || !p[j].lm().divides(p[i].lm())) continue;
        std::vector<const Poly<F>*> others;
        for (size_t k = 0; k < p.size(); ++k)
          if (k != i) others.push_back(&p[k]);
        Poly<F> r = reduce_by(p[i], others);
        if (r.is_zero()) {
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        } else if (r.is_constant()) {
          return {Poly<F>::constant(F(1), ord)};
        } else {
          p[i] = r.monic();
        }
        changed = true;
        break;
      }
    if (!changed) break;
  }
  sort_by_lm(p);
  // Tail reduction. Leading monomials are fixed, and only smaller ones can divide a tail term.
  for (size_t i = 0; i < p.size(); ++i) {
    std::vector<const Poly<F>*> others;
    for (size_t k = 0; k < p.size(); ++k)
      if (k != i) others.push_back(&p[k]);
    p[i] = reduce_by(p[i], others).monic();
  }
  return p;
}

template <class F>
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly<F>>& g, size_t nvars, size_t limit) {
  for (size_t v = 0; v < nvars; ++v) {
    bool pure = false;
    for (const auto& p : g)
      if (!p.is_zero() && p.lm().support_end() == v + 1 && p.lm().deg == p.lm().e[v]) pure = true;
    if (!pure) return std::nullopt;
  }
  for (const auto& p : g)
    if (!p.is_zero() && p.lm().support_end() > nvars) return std::nullopt;
  auto reducible = [&](const Monomial& m) {
    for (const auto& p : g)
      if (!p.is_zero() && p.lm().divides(m)) return true;
    return false;
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonoHash> seen;
  std::vector<Monomial> queue{Monomial()};
  seen.insert(Monomial());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Monomial m = queue[qi];
    if (reducible(m)) continue;
    out.push_back(m);
    if (out.size() > limit) return std::nullopt;
    for (size_t v = 0; v < nvars; ++v) {
      Monomial n = m * Monomial::var(v);
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return out;
}

template <class F>
GroebnerResult<F> fglm_to_lex(const std::vector<Poly<F>>& g, size_t nvars, const GroebnerOptions& opt) {
  GroebnerResult<F> res;
  if (g.empty()) {
    res.reason = "zero ideal is not zero-dimensional";
    return res;
  }
  MonoOrder src = g.front().order();
  if (has_nonzero_constant(g)) {
    res.complete = true;
    res.basis = {Poly<F>::constant(F(1), MonoOrder::Lex)};
    return res;
  }
  auto stdm = standard_monomials(g, nvars, opt.max_quotient_dim);
  if (!stdm) {
    res.reason = "ideal is not zero-dimensional or its quotient is too large";
    return res;
  }
  std::unordered_map<Monomial, size_t, MonoHash> index;
  for (size_t k = 0; k < stdm->size(); ++k) index[(*stdm)[k]] = k;

  using Row = std::map<size_t, F>;
  auto to_row = [&](const Poly<F>& nf) {
    Row r;
    for (const auto& [m, c] : nf.terms()) r[index.at(m)] = c;
    return r;
  };
  auto axpy = [](Row& a, const F& c, const Row& b) {
    for (const auto& [k, v] : b) {
      F s = a[k] + c * v;
      if (s.is_zero()) {
        a.erase(k);
      } else {
        a[k] = std::move(s);
      }
    }
  };

  struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b, MonoOrder::Lex) < 0; }
  };
  std::set<Monomial, LexLess> cand{Monomial()};
  std::unordered_map<Monomial, Poly<F>, MonoHash> nf;  // normal forms of visited staircase monomials
  std::unordered_map<Monomial, std::pair<Monomial, size_t>, MonoHash> parent;
  std::vector<Monomial> stair;
  std::vector<std::pair<Row, Row>> ech;  // (residual, combination over stair)
  std::vector<Poly<F>> lex;

  while (!cand.empty()) {
    Monomial m = *cand.begin();
    cand.erase(cand.begin());
    bool skip = false;
    for (const auto& p : lex)
      if (p.lm().divides(m)) skip = true;
    if (skip) continue;
    Poly<F> v;
    if (m.is_one()) {
      v = normal_form(Poly<F>::constant(F(1), src), g);
    } else {
      auto [pm, var] = parent.at(m);
      v = normal_form(nf.at(pm).mul_term(F(1), Monomial::var(var)), g);
    }
    Row r = to_row(v);
    Row comb;
    comb[stair.size()] = F(1);
    for (const auto& [er, ec] : ech) {
      size_t piv = er.begin()->first;
      auto it = r.find(piv);
      if (it == r.end()) continue;
      F f = -(it->second / er.begin()->second);
      axpy(r, f, er);
      axpy(comb, f, ec);
    }
    if (r.empty()) {
      std::vector<typename Poly<F>::Term> t;
      for (const auto& [k, c] : comb) t.emplace_back(k == stair.size() ? m : stair[k], c);
      lex.push_back(Poly<F>(MonoOrder::Lex, std::move(t)).monic());
      continue;
    }
    ech.emplace_back(std::move(r), std::move(comb));
    nf.emplace(m, std::move(v));
    stair.push_back(m);
    for (size_t var = 0; var < nvars; ++var) {
      Monomial n = m * Monomial::var(var);
      if (cand.insert(n).second) parent.emplace(n, std::make_pair(m, var));
    }
  }
  sort_by_lm(lex);
  res.basis = std::move(lex);
  res.complete = true;
  return res;
}

// ---------------------------------------------------------------------------
// roots over cyclotomic fields

namespace {

using KU = UPoly<Cyclotomic>;

int legendre(long long a, long long p) {
  long long r = 1, b = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

/// zeta_n^k with the conductor reduced by gcd(n, k).
Cyclotomic unity(long long n, long long k) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return Cyclotomic(1);
  long long g = std::gcd(n, k);
  return Cyclotomic::root_of_unity(static_cast<int>(n / g), static_cast<int>(k / g));
}

Cyclotomic galois(const Cyclotomic& c, int a) {
  int n = c.conductor();
  if (n == 1) return c;
  Cyclotomic s;
  auto co = c.coeffs();
  for (size_t k = 0; k < co.size(); ++k)
    if (!co[k].is_zero()) s += Cyclotomic(co[k]) * unity(n, static_cast<long long>(a) * static_cast<long long>(k));
  return s;
}

UPoly<Rational> norm_poly(const KU& p) {
  int n = 1;
  for (const auto& c : p.coeffs()) n = std::lcm(n, c.conductor());
  KU prod({Cyclotomic(1)});
  for (int a = 1; a <= n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::vector<Cyclotomic> co;
    for (const auto& c : p.coeffs()) co.push_back(galois(c, a));
    prod = prod * KU(std::move(co));
  }
  std::vector<Rational> q;
  for (const auto& c : prod.coeffs()) q.push_back(c.rational());
  return UPoly<Rational>(std::move(q));
}

/// Writes w = zeta_L^j * q with q rational, if possible.
struct UnitTimesRational {
  long long L, j;
  Rational q;
};
std::optional<UnitTimesRational> split_unit(const Cyclotomic& w) {
  if (w.is_rational()) return UnitTimesRational{1, 0, w.rational()};
  int m = w.conductor();
  for (int j = 0; j < m; ++j) {
    Cyclotomic d = w * unity(m, -j);
    if (d.is_rational()) return UnitTimesRational{m, j, d.rational()};
  }
  return std::nullopt;
}

std::optional<Rational> rational_kth_root(const Rational& q, unsigned k) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class num = q.numerator(), den = q.denominator(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
  return Rational(mpq_class(rn, rd));
}

/// All d-th roots of w that can be written down, or empty.
std::vector<Cyclotomic> kth_roots(const Cyclotomic& w, unsigned d) {
  if (w.is_zero()) return {Cyclotomic(0)};
  auto s = split_unit(w);
  if (!s) return {};
  long long L = s->L, j = s->j;
  Rational q = s->q;
  if (q.sign() < 0) {
    long long L2 = std::lcm(L, 2LL);
    j = j * (L2 / L) + L2 / 2;
    L = L2;
    q = -q;
  }
  std::optional<Cyclotomic> r;
  if (auto rr = rational_kth_root(q, d)) {
    r = Cyclotomic(*rr);
  } else if (d == 2) {
    r = cyclotomic_sqrt(q);
  }
  if (!r) return {};
  std::vector<Cyclotomic> out;
  for (unsigned t = 0; t < d; ++t) {
    try {
      out.push_back(*r * unity(L * d, j + L * static_cast<long long>(t)));
    } catch (const UnsupportedExtension&) {
    }
  }
  return out;
}

}  // namespace

std::optional<Cyclotomic> cyclotomic_sqrt(const Rational& q) {
  if (q.is_zero()) return Cyclotomic(0);
  mpz_class n = q.numerator() * q.denominator();
  int sign = n < 0 ? -1 : 1;
  n = abs(n);
  mpz_class square = 1;
  std::vector<unsigned long> primes;  // primes in the squarefree part
  for (unsigned long p = 2; p < 1000000 && p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) primes.push_back(p);
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      square *= sqrt(n);
    } else if (n.fits_ulong_p() && n < 1000000) {
      primes.push_back(n.get_ui());
    } else {
      return std::nullopt;
    }
  }
  try {
    Cyclotomic s(1);
    long long prod = 1;  // product of the p* and 2
    for (unsigned long p : primes) {
      if (p == 2) {
        s *= unity(8, 1) - unity(8, 3);
        prod *= 2;
        continue;
      }
      Cyclotomic g;
      for (unsigned long a = 1; a < p; ++a) g += Cyclotomic(legendre(static_cast<long long>(a), static_cast<long long>(p))) * unity(static_cast<long long>(p), static_cast<long long>(a));
      s *= g;
      prod *= (p % 4 == 1) ? static_cast<long long>(p) : -static_cast<long long>(p);
    }
    if ((prod < 0) != (sign < 0)) s *= unity(4, 1);
    Cyclotomic out = s * Cyclotomic(Rational(mpq_class(square, q.denominator())));
    if (out * out != Cyclotomic(q)) throw std::logic_error("cyclotomic_sqrt: verification failed");
    return out;
  } catch (const UnsupportedExtension&) {
    return std::nullopt;
  }
}

RootSearch cyclotomic_roots(const KU& p) {
  RootSearch out;
  if (p.degree() <= 0) {
    out.rest = KU({Cyclotomic(1)});
    return out;
  }
  KU rest = squarefree_part(p);
  auto take = [&](const Cyclotomic& r) {
    if (rest.degree() <= 0 || !rest.eval(r).is_zero()) return false;
    for (const auto& x : out.roots)
      if (x == r) return false;
    out.roots.push_back(r);
    rest = rest.divmod(KU({-r, Cyclotomic(1)})).first.monic();
    return true;
  };
  auto guarded = [&](const std::function<void()>& step) {
    try {
      step();
    } catch (const UnsupportedExtension&) {
    }
  };
  bool progress = true;
  while (rest.degree() > 0 && progress) {
    int before = rest.degree();
    if (rest.coeffs()[0].is_zero()) take(Cyclotomic(0));
    if (rest.degree() == 1) {
      take(-rest.coeffs()[0] / rest.coeffs()[1]);
      break;
    }
    guarded([&] {
      for (const auto& r : upoly_rational_roots(squarefree_part(norm_poly(rest)))) take(Cyclotomic(r));
    });
    if (rest.degree() == 2) {
      guarded([&] {
        const auto q = rest.coeffs();
        Cyclotomic disc = q[1] * q[1] - Cyclotomic(4) * q[0] * q[2];
        for (const auto& s : kth_roots(disc, 2)) take((-q[1] + s) / (Cyclotomic(2) * q[2]));
      });
    }
    for (int m = 1; m <= cyclotomic_bound() && rest.degree() > 0; ++m)
      for (int k = 0; k < m; ++k)
        if (std::gcd(k, m) == 1) guarded([&] { take(unity(m, k)); });
    // polynomials in x^g: solve for y = x^g, then take g-th roots
    if (rest.degree() > 1) {
      unsigned g = 0;
      for (size_t k = 1; k < rest.coeffs().size(); ++k)
        if (!rest.coeffs()[k].is_zero()) g = std::gcd(g, static_cast<unsigned>(k));
      if (g >= 2 && rest.coeffs()[0].is_zero() == false) {
        std::vector<Cyclotomic> yc;
        for (size_t k = 0; k < rest.coeffs().size(); k += g) yc.push_back(rest.coeffs()[k]);
        KU ypoly(std::move(yc));
        RootSearch sub = ypoly.degree() == 1 ? RootSearch{{-ypoly.coeffs()[0] / ypoly.coeffs()[1]}, KU({Cyclotomic(1)})}
                                             : cyclotomic_roots(ypoly);
        for (const auto& y : sub.roots)
          guarded([&] {
            for (const auto& x : kth_roots(y, g)) take(x);
          });
      }
    }
    progress = rest.degree() < before;
  }
  out.rest = rest.degree() <= 0 ? KU({Cyclotomic(1)}) : rest;
  return out;
}

// ---------------------------------------------------------------------------
// systems

size_t PolySystem::add_inverse(size_t var) {
  std::string base = "a_" + vars.name(var);
  std::string name = base;
  for (int k = 2; vars.find(name); ++k) name = base + "_" + std::to_string(k);
  size_t a = vars.add(name);
  polys.push_back(QPoly(order, {{Monomial::var(var) * Monomial::var(a), Rational(1)}, {Monomial(), Rational(-1)}}));
  inverses.emplace_back(var, a);
  return a;
}

std::string PolySystem::str() const {
  std::string out;
  for (const auto& p : polys) out += p.str(&vars) + "\n";
  return out;
}

namespace {

bool same_point(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) { return a == b; }

void add_solution(std::vector<std::vector<Cyclotomic>>& sols, std::vector<Cyclotomic> s) {
  for (const auto& x : sols)
    if (same_point(x, s)) return;
  sols.push_back(std::move(s));
}

}  // namespace

namespace {

/// Groebner basis, zero-dimensionality check and FGLM; fills `out` and returns
/// nullopt when the answer is already decided (unsat or inconclusive).
template <class F>
std::optional<std::vector<KPoly>> lex_basis(const std::vector<Poly<F>>& polys, size_t n, const GroebnerOptions& opt,
                                            SolutionSet& out) {
  std::vector<Poly<F>> gens;
  for (const auto& p : polys)
    if (!p.is_zero()) gens.push_back(p.with_order(MonoOrder::DegRevLex));
  if (has_nonzero_constant(gens)) return std::nullopt;
  auto gb = buchberger(gens, opt);
  if (!gb.complete) {
    out.status = SolutionSet::Status::Inconclusive;
    out.reason = "Groebner basis: " + gb.reason;
    return std::nullopt;
  }
  if (has_nonzero_constant(gb.basis)) return std::nullopt;
  if (gb.basis.empty()) gb.basis.push_back(Poly<F>(MonoOrder::DegRevLex));
  auto lex = fglm_to_lex(gb.basis, n, opt);
  if (!lex.complete) {
    out.status = SolutionSet::Status::Inconclusive;
    out.reason = "FGLM: " + lex.reason;
    return std::nullopt;
  }
  std::vector<KPoly> start;
  for (const auto& p : lex.basis) {
    if constexpr (std::is_same_v<F, Rational>) {
      start.push_back(to_k(p));
    } else {
      start.push_back(p);
    }
  }
  return start;
}

SolutionSet back_substitute(const VarRegistry& vars, const std::vector<KPoly>& original, const std::vector<KPoly>& start,
                            const GroebnerOptions& opt) {
  SolutionSet out;
  size_t n = vars.size();
  std::vector<Cyclotomic> point(n);
  bool inconclusive = false;
  std::string why;
  std::vector<std::vector<Cyclotomic>> sols;
  std::function<void(const std::vector<KPoly>&, int)> rec = [&](const std::vector<KPoly>& g, int k) {
    if (inconclusive) return;
    if (has_nonzero_constant(g)) return;
    if (k < 0) {
      add_solution(sols, point);
      return;
    }
    const KPoly* uni = nullptr;
    for (const auto& p : g)
      if (!p.is_zero() && p.support() == (uint64_t(1) << k)) {
        uni = &p;
        break;
      }
    if (!uni) {
      inconclusive = true;
      why = "no univariate polynomial in " + vars.name(static_cast<size_t>(k));
      return;
    }
    RootSearch rs = cyclotomic_roots(*uni->as_univariate(static_cast<size_t>(k)));
    if (!rs.complete()) {
      inconclusive = true;
      KPoly rest = KPoly::from_univariate(rs.rest, static_cast<size_t>(k), MonoOrder::Lex);
      why = "roots outside the supported cyclotomic fields: " + rest.str(&vars);
      return;
    }
    for (const auto& r : rs.roots) {
      point[static_cast<size_t>(k)] = r;
      std::vector<KPoly> h;
      for (const auto& p : g) {
        KPoly s = p.substitute(static_cast<size_t>(k), r);
        if (!s.is_zero()) h.push_back(std::move(s));
      }
      if (k > 0 && !h.empty()) {
        auto hb = buchberger(h, opt);
        if (!hb.complete) {
          inconclusive = true;
          why = "Groebner basis after substitution: " + hb.reason;
          return;
        }
        h = std::move(hb.basis);
      }
      rec(h, k - 1);
    }
  };
  try {
    rec(start, static_cast<int>(n) - 1);
  } catch (const UnsupportedExtension& e) {
    inconclusive = true;
    why = e.what();
  }
  for (const auto& s : sols)
    for (const auto& p : original)
      if (!p.eval(s).is_zero()) throw std::logic_error("solve_zero_dim: solution fails re-substitution");
  out.solutions = std::move(sols);
  if (inconclusive) {
    out.status = SolutionSet::Status::Inconclusive;
    out.reason = why;
  } else {
    out.status = out.solutions.empty() ? SolutionSet::Status::Unsat : SolutionSet::Status::Solved;
  }
  return out;
}

}  // namespace

SolutionSet solve_zero_dim(const PolySystem& sys, const GroebnerOptions& opt) {
  SolutionSet out;
  size_t n = sys.vars.size();
  if (n == 0) {
    for (const auto& p : sys.polys)
      if (!p.is_zero()) return out;
    out.status = SolutionSet::Status::Solved;
    out.solutions.push_back({});
    return out;
  }
  auto start = lex_basis(sys.polys, n, opt, out);
  if (!start) return out;
  std::vector<KPoly> original;
  for (const auto& p : sys.polys) original.push_back(to_k(p));
  return back_substitute(sys.vars, original, *start, opt);
}

SolutionSet solve_zero_dim(const VarRegistry& vars, const std::vector<KPoly>& polys, const GroebnerOptions& opt) {
  SolutionSet out;
  size_t n = vars.size();
  if (n == 0) {
    for (const auto& p : polys)
      if (!p.is_zero()) return out;
    out.status = SolutionSet::Status::Solved;
    out.solutions.push_back({});
    return out;
  }
  std::vector<KPoly> work;
  bool rational = true;
  for (const auto& p : polys) {
    work.push_back(p);
    if (!to_q(p)) rational = false;
  }
  if (rational) {
    PolySystem sys;
    sys.vars = vars;
    for (const auto& p : polys) sys.polys.push_back(*to_q(p));
    return solve_zero_dim(sys, opt);
  }
  auto start = lex_basis(work, n, opt, out);
  if (!start) return out;
  return back_substitute(vars, polys, *start, opt);
}

namespace {

/// q with f = q * g; throws if g does not divide f.
QPoly divide_exact(const QPoly& f, const QPoly& g) {
  QPoly q(f.order()), r = f;
  while (!r.is_zero()) {
    if (!g.lm().divides(r.lm())) throw std::logic_error("divide_exact: not divisible");
    Rational c = r.lc() / g.lc();
    Monomial m = r.lm() / g.lm();
    q = q.axpy_term(c, m, QPoly::constant(Rational(1), f.order()));
    r = r.axpy_term(-c, m, g);
  }
  return q;
}

/// Nontrivial factorization of f, or nullopt.
std::optional<std::vector<QPoly>> split_factors(const QPoly& f) {
  MonoOrder o = f.order();
  if (f.is_constant()) return std::nullopt;
  // monomial content
  Monomial content = f.terms().front().first;
  for (const auto& [m, c] : f.terms())
    for (size_t i = 0; i < kMaxVars; ++i) content.e[i] = std::min(content.e[i], m.e[i]);
  content.deg = 0;
  for (auto e : content.e) content.deg = static_cast<uint16_t>(content.deg + e);
  if (content.deg > 0 && f.size() > 1) {
    std::vector<QPoly> out;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (content.e[i]) out.push_back(QPoly::var(i, o));
    out.push_back(divide_exact(f, QPoly(o, {{content, Rational(1)}})));
    return out;
  }
  if (f.size() == 1) {
    if (content.deg <= 1) return std::nullopt;
    std::vector<QPoly> out;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (content.e[i]) out.push_back(QPoly::var(i, o));
    return out;
  }
  // univariate
  uint64_t sup = f.support();
  if ((sup & (sup - 1)) == 0) {
    size_t v = static_cast<size_t>(__builtin_ctzll(sup));
    auto u = *f.as_univariate(v);
    auto sf = squarefree_part(u);
    auto roots = upoly_rational_roots(sf);
    std::vector<QPoly> out;
    UPoly<Rational> cof = sf;
    for (const auto& r : roots) {
      UPoly<Rational> lin({-r, Rational(1)});
      out.push_back(QPoly::from_univariate(lin, v, o));
      cof = cof.divmod(lin).first;
    }
    if (cof.degree() > 0) out.push_back(QPoly::from_univariate(cof, v, o));
    if (out.size() > 1 || sf.degree() < u.degree()) return out;
    return std::nullopt;
  }
  // binomials m1 + c m2 = M1^k - r^k M2^k
  if (f.size() == 2) {
    const auto& [m1, c1] = f.terms()[0];
    const auto& [m2, c2] = f.terms()[1];
    unsigned k = 0;
    for (size_t i = 0; i < kMaxVars; ++i) {
      k = std::gcd(k, static_cast<unsigned>(m1.e[i]));
      k = std::gcd(k, static_cast<unsigned>(m2.e[i]));
    }
    if (k >= 2) {
      Rational w = -(c2 / c1);
      std::optional<Rational> r;
      if (w.sign() >= 0) {
        r = rational_kth_root(w, k);
      } else if (k % 2 == 1) {
        if (auto rr = rational_kth_root(-w, k)) r = -*rr;
      }
      if (r) {
        Monomial r1, r2;
        for (size_t i = 0; i < kMaxVars; ++i) {
          r1.e[i] = static_cast<uint8_t>(m1.e[i] / k);
          r2.e[i] = static_cast<uint8_t>(m2.e[i] / k);
        }
        r1.deg = static_cast<uint16_t>(m1.deg / k);
        r2.deg = static_cast<uint16_t>(m2.deg / k);
        QPoly minus(o, {{r1, Rational(1)}, {r2, -*r}});
        std::vector<QPoly> out{minus};
        QPoly cof = divide_exact(f.monic(), minus);
        if (k % 2 == 0) {
          QPoly plus(o, {{r1, Rational(1)}, {r2, *r}});
          out.push_back(plus);
          cof = divide_exact(cof, plus);
        }
        if (!cof.is_constant()) out.push_back(cof);
        return out;
      }
    }
  }
  return std::nullopt;
}

std::string branch_key(const std::vector<QPoly>& s) {
  std::vector<std::string> parts;
  for (const auto& p : s) parts.push_back(p.str());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& x : parts) key += x + ";";
  return key;
}

}  // namespace

std::vector<std::vector<QPoly>> factor_split(const std::vector<QPoly>& p, size_t max_branches) {
  std::vector<std::vector<QPoly>> done;
  std::set<std::string> seen;
  std::vector<std::vector<QPoly>> work{reduce_set(p)};
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    if (has_nonzero_constant(s)) continue;
    std::optional<std::vector<QPoly>> fac;
    size_t at = 0;
    if (work.size() + done.size() < max_branches)
      for (; at < s.size(); ++at)
        if ((fac = split_factors(s[at]))) break;
    if (!fac) {
      if (seen.insert(branch_key(s)).second) done.push_back(std::move(s));
      continue;
    }
    for (const auto& f : *fac) {
      auto t = s;
      t[at] = f;
      work.push_back(reduce_set(std::move(t)));
    }
  }
  return done;
}

SolutionSet solve_with_splitting(const PolySystem& sys, const GroebnerOptions& opt) {
  SolutionSet out;
  std::vector<std::string> reasons;
  bool inconclusive = false;
  for (auto& branch : factor_split(sys.polys)) {
    PolySystem sub = sys;
    sub.polys = std::move(branch);
    auto r = solve_zero_dim(sub, opt);
    for (auto& s : r.solutions) add_solution(out.solutions, std::move(s));
    if (r.inconclusive()) {
      inconclusive = true;
      reasons.push_back(r.reason);
    }
  }
  if (inconclusive) {
    out.status = SolutionSet::Status::Inconclusive;
    out.reason = reasons.front();
  } else {
    out.status = out.solutions.empty() ? SolutionSet::Status::Unsat : SolutionSet::Status::Solved;
  }
  return out;
}

#define NILCENT_GROEBNER_INSTANTIATE(F)                                                                           \
  template GroebnerResult<F> buchberger(std::vector<Poly<F>>, const GroebnerOptions&);                           \
  template Poly<F> normal_form(const Poly<F>&, const std::vector<Poly<F>>&);                                     \
  template bool is_groebner_basis(const std::vector<Poly<F>>&);                                                  \
  template std::vector<Poly<F>> reduce_set(std::vector<Poly<F>>);                                                \
  template std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly<F>>&, size_t, size_t); \
  template GroebnerResult<F> fglm_to_lex(const std::vector<Poly<F>>&, size_t, const GroebnerOptions&);

NILCENT_GROEBNER_INSTANTIATE(Rational)
NILCENT_GROEBNER_INSTANTIATE(Cyclotomic)

}  // namespace nilcent
