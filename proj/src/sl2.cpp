#include "nilcent/sl2.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nilcent {

using json = nlohmann::json;

bool is_ad_nilpotent(const LieAlgebra& g, const QVec& x) {
  // apply ad x repeatedly to every basis vector; height bounds the nilpotency index
  QMatrix a = g.ad(x);
  QMatrix p = a;
  for (size_t k = 0; k <= g.dim(); ++k) {
    if (p.is_zero()) return true;
    p = a * p;
  }
  return false;
}

bool is_sl2_triple(const LieAlgebra& g, const QVec& h, const QVec& e, const QVec& f) {
  return g.bracket(h, e) == scale(Rational(2), e) && g.bracket(h, f) == scale(Rational(-2), f) && g.bracket(e, f) == h;
}

namespace {

/// f with [e,f] = h and [h,f] = -2f, if one exists.
std::optional<QVec> solve_nilnegative(const LieAlgebra& g, const QVec& h, const QVec& e) {
  size_t n = g.dim();
  QMatrix m(2 * n, n);
  for (size_t j = 0; j < n; ++j) {
    QVec b = g.basis_vector(j);
    QVec a = g.bracket(e, b);
    QVec c = g.bracket(h, b);
    c[j] += Rational(2);
    for (size_t k = 0; k < n; ++k) {
      m(k, j) = a[k];
      m(n + k, j) = c[k];
    }
  }
  QVec rhs(2 * n);
  for (size_t k = 0; k < n; ++k) rhs[k] = h[k];
  auto f = solve(m, rhs);
  if (f && is_sl2_triple(g, h, e, *f)) return f;
  return std::nullopt;
}

}  // namespace

Sl2Triple jacobson_morozov(const LieAlgebra& g, const QVec& e) {
  if (!is_ad_nilpotent(g, e)) throw std::invalid_argument("jacobson_morozov: element is not nilpotent");
  if (is_zero_vec(e)) return {QVec(g.dim()), e, QVec(g.dim()), ""};
  if (g.has_chevalley()) {
    // prefer a neutral element in the standard Cartan subalgebra when one exists
    size_t n = g.dim(), l = g.chevalley().rs.rank();
    QMatrix m(2 * n, l + n);
    for (size_t i = 0; i < l; ++i) {
      QVec he = g.bracket(g.cartan_vector(i), e);
      for (size_t k = 0; k < n; ++k) {
        m(k, i) = he[k];
        m(n + k, i) = k == g.chevalley().cartan_basis(i) ? Rational(-1) : Rational(0);
      }
    }
    for (size_t j = 0; j < n; ++j) {
      QVec ez = g.bracket(e, g.basis_vector(j));
      for (size_t k = 0; k < n; ++k) m(n + k, l + j) = ez[k];
    }
    QVec rhs(2 * n);
    for (size_t k = 0; k < n; ++k) rhs[k] = Rational(2) * e[k];
    if (auto sol = solve(m, rhs)) {
      CoVec c(sol->begin(), sol->begin() + static_cast<long>(l));
      QVec h = g.cartan_element(c);
      if (auto f = solve_nilnegative(g, h, e)) return {h, e, *f, ""};
    }
  }
  auto t = complete_triple(g, e);
  if (!t || !is_sl2_triple(g, t->h, t->e, t->f)) throw std::logic_error("jacobson_morozov: no triple found");
  return {t->h, t->e, t->f, ""};
}

namespace {

/// Multiset of root values of a dominant labeling, sorted.
std::vector<long long> root_value_spectrum(const RootSystem& rs, const IVec& labels) {
  std::vector<long long> out;
  for (size_t r = 0; r < rs.num_roots(); ++r) {
    IVec root = rs.root(r);
    long long v = 0;
    for (size_t i = 0; i < root.size(); ++i) v += root[i] * labels[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Labelings in {0,1,2}^l that are characteristics of nilpotent orbits (cached per algebra).
const std::vector<IVec>& characteristic_labelings(const LieAlgebra& model) {
  static std::mutex mu;
  static std::map<std::string, std::vector<IVec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(model.label());
  if (it != cache.end()) return it->second;
  size_t l = model.chevalley().rs.rank();
  std::vector<IVec> out;
  IVec labels(l, 0);
  while (true) {
    auto g2 = graded_roots(model, labels, 2);
    QVec e(model.dim());
    long long c = 1;
    for (size_t r : g2) {
      axpy(e, Rational(c), model.root_vector(r));
      c = c % 7 + 2;
    }
    if (has_characteristic(model, labels, e)) out.push_back(labels);
    size_t i = 0;
    while (i < l && labels[i] == 2) labels[i++] = 0;
    if (i == l) break;
    ++labels[i];
  }
  return cache.emplace(model.label(), std::move(out)).first->second;
}

IVec dominant_labels(const RootSystem& rs, const CoVec& hc) {
  auto d = dominant_representative(rs, hc);
  IVec out;
  for (const auto& v : simple_values(rs, d.h)) {
    if (!v.is_integer() || v.sign() < 0 || v > Rational(2))
      throw std::logic_error("weighted_dynkin_diagram: label outside {0,1,2}");
    out.push_back(v.small_num());
  }
  return out;
}

}  // namespace

IVec weighted_dynkin_diagram(const LieAlgebra& model, const Sl2Triple& t) {
  const RootSystem& rs = model.chevalley().rs;
  CoVec hc;
  if (auto c = model.cartan_coords(t.h)) {
    hc = *c;
  } else {
    // the spectrum of ad h separates most orbits without conjugating h
    auto es = rational_eigenspaces(model.ad(t.h));
    if (es) {
      std::vector<long long> spec;
      bool integral = true;
      size_t zero_mult = 0;
      for (const auto& [lam, vecs] : *es) {
        if (!lam.is_integer()) integral = false;
        if (lam.is_zero()) zero_mult = vecs.size();
        for (size_t k = 0; k < vecs.size(); ++k) spec.push_back(lam.is_integer() ? lam.small_num() : 0);
      }
      if (integral && zero_mult >= rs.rank()) {
        // drop the Cartan part of the zero eigenspace
        auto z = std::find(spec.begin(), spec.end(), 0LL);
        spec.erase(z, z + static_cast<long>(rs.rank()));
        std::vector<IVec> matches;
        for (const auto& lab : characteristic_labelings(model))
          if (root_value_spectrum(rs, lab) == spec) matches.push_back(lab);
        if (matches.size() == 1) return matches[0];
      }
    }
    hc = conjugate_into_cartan(model, t.h).h_cartan;
  }
  return dominant_labels(rs, hc);
}

IVec weighted_dynkin_diagram_by_conjugation(const LieAlgebra& model, const Sl2Triple& t) {
  return dominant_labels(model.chevalley().rs, conjugate_into_cartan(model, t.h).h_cartan);
}

bool same_orbit(const LieAlgebra& model, const Sl2Triple& a, const Sl2Triple& b) {
  return weighted_dynkin_diagram(model, a) == weighted_dynkin_diagram(model, b);
}

QVec characteristic_element(const LieAlgebra& model, const IVec& labels) {
  const RootSystem& rs = model.chevalley().rs;
  size_t l = rs.rank();
  QMatrix c(l, l);
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) c(i, j) = Rational(rs.cartan()[i][j]);
  QVec rhs(l);
  for (size_t i = 0; i < l; ++i) rhs[i] = Rational(labels[i]);
  auto x = solve(c, rhs);
  if (!x) throw std::logic_error("characteristic_element: singular Cartan matrix");
  return model.cartan_element(*x);
}

std::vector<size_t> graded_roots(const LieAlgebra& model, const IVec& labels, long long k) {
  const RootSystem& rs = model.chevalley().rs;
  std::vector<size_t> out;
  for (size_t r = 0; r < rs.num_roots(); ++r) {
    IVec root = rs.root(r);
    long long v = 0;
    for (size_t i = 0; i < root.size(); ++i) v += root[i] * labels[i];
    if (v == k) out.push_back(r);
  }
  return out;
}

size_t orbit_dimension(const LieAlgebra& model, const IVec& labels) {
  size_t l = model.chevalley().rs.rank();
  return model.dim() - (l + graded_roots(model, labels, 0).size()) - graded_roots(model, labels, 1).size();
}

bool has_characteristic(const LieAlgebra& model, const IVec& labels, const QVec& e) {
  QVec h = characteristic_element(model, labels);
  if (is_zero_vec(h)) return is_zero_vec(e);
  if (model.bracket(h, e) != scale(Rational(2), e)) return false;
  auto neg = graded_roots(model, labels, -2);
  std::vector<QVec> cols;
  for (size_t r : neg) cols.push_back(model.bracket(e, model.root_vector(r)));
  if (cols.empty()) return false;
  return solve(QMatrix::from_columns(cols, model.dim()), h).has_value();
}

QVec OrbitRepresentative::element(const LieAlgebra& model) const {
  const RootSystem& rs = model.chevalley().rs;
  QVec e(model.dim());
  for (const auto& [root, c] : terms) {
    auto idx = rs.root_index(root);
    if (!idx) throw std::invalid_argument("orbit representative: not a root of " + model.label());
    axpy(e, c, model.root_vector(*idx));
  }
  return e;
}

std::string orbit_to_json(const OrbitRepresentative& r, int indent) {
  json j;
  j["algebra"] = r.algebra;
  j["label"] = r.label;
  json terms = json::array();
  for (const auto& [root, c] : r.terms) terms.push_back({{"root", root}, {"coeff", c.str()}});
  j["e"] = terms;
  if (!r.wdd.empty()) j["wdd"] = r.wdd;
  j["dim"] = r.dim;
  return j.dump(indent);
}

namespace {

OrbitRepresentative from_json_value(const json& j) {
  OrbitRepresentative r;
  r.algebra = j.at("algebra").get<std::string>();
  r.label = j.at("label").get<std::string>();
  for (const auto& t : j.at("e")) {
    const auto& c = t.at("coeff");
    Rational q = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long long>());
    r.terms.emplace_back(t.at("root").get<IVec>(), q);
  }
  if (j.contains("wdd")) r.wdd = j.at("wdd").get<IVec>();
  if (j.contains("dim")) r.dim = j.at("dim").get<size_t>();
  return r;
}

}  // namespace

OrbitRepresentative orbit_from_json(const std::string& text) { return from_json_value(json::parse(text)); }

std::vector<OrbitRepresentative> load_orbit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open orbit file " + path);
  json j = json::parse(in);
  std::vector<OrbitRepresentative> out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(from_json_value(x));
  } else if (j.contains("orbits")) {
    for (const auto& x : j.at("orbits")) out.push_back(from_json_value(x));
  } else {
    out.push_back(from_json_value(j));
  }
  return out;
}

void save_orbit_file(const std::string& path, const std::vector<OrbitRepresentative>& reps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write orbit file " + path);
  // one representative per line keeps fixture diffs readable
  out << "{\"schema\": \"nilcent.orbits/1\", \"orbits\": [\n";
  for (size_t i = 0; i < reps.size(); ++i) out << "  " << orbit_to_json(reps[i]) << (i + 1 < reps.size() ? ",\n" : "\n");
  out << "]}\n";
}

std::string data_dir() {
  if (const char* d = std::getenv("NILCENT_DATA_DIR")) return d;
  return NILCENT_DATA_DIR;
}

std::vector<OrbitRepresentative> builtin_orbits(const std::string& algebra) {
  return load_orbit_file(data_dir() + "/orbits/" + algebra + ".json");
}

std::optional<OrbitRepresentative> builtin_orbit(const std::string& algebra, const std::string& label) {
  for (auto& r : builtin_orbits(algebra))
    if (r.label == label) return r;
  return std::nullopt;
}

std::string levi_label(const LieAlgebra& model, const Sl2Triple& t) {
  size_t n = model.dim();
  Subspace z = centralizer(model, {t.h, t.e, t.f});
  Subspace t0 = z.empty() ? Subspace{} : split_cartan(model, z, {});
  Subspace l;
  if (t0.empty()) {
    for (size_t i = 0; i < n; ++i) l.push_back(model.basis_vector(i));
  } else {
    l = centralizer(model, t0);
  }
  Subspace d = derived_subspace(model, l);
  if (d.empty()) return "0";
  CanonicalGenerators cg = canonical_generators(model, d);
  // coroots of long roots have the smallest Killing norm
  const RootSystem& rs = model.chevalley().rs;
  Rational longest;
  bool first = true;
  for (size_t i = 0; i < rs.rank(); ++i) {
    Rational k = model.killing(model.cartan_vector(i), model.cartan_vector(i));
    if (first || k < longest) longest = k;
    first = false;
  }
  struct Part {
    size_t rank;
    bool tilde;
    std::string name;
  };
  std::vector<Part> parts;
  for (const auto& c : cg.components) {
    bool tilde = false;
    if (c.series == 'A') {
      QVec hv = cg.h[static_cast<size_t>(c.nodes[0])];
      tilde = model.killing(hv, hv) > longest;
    }
    parts.push_back({static_cast<size_t>(c.rank), tilde, (tilde ? "~" : "") + c.label()});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.tilde != b.tilde) return !a.tilde;
    return a.name < b.name;
  });
  std::string out;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j].name == parts[i].name) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i].name;
    i = j;
  }
  return out;
}

namespace {

std::vector<std::string> distinguished_suffixes(const std::string& levi, size_t count) {
  std::vector<std::string> out{""};
  if (levi == "E6") {
    out = {"", "(a1)", "(a3)"};
  } else if (levi == "E8") {
    out = {"", "(a1)", "(a2)", "(a3)", "(a4)", "(b4)", "(a5)", "(b5)", "(a6)", "(b6)", "(a7)"};
  }
  for (size_t k = out.size(); k < count; ++k) out.push_back("(a" + std::to_string(k) + ")");
  return out;
}

}  // namespace

Subspace standard_torus(const LieAlgebra& model, const Sl2Triple& t) {
  Subspace cartan;
  for (size_t i = 0; i < model.chevalley().rs.rank(); ++i) cartan.push_back(model.cartan_vector(i));
  return intersect(cartan, centralizer(model, {t.h, t.e, t.f}), model.dim());
}

bool standard_torus_is_maximal(const LieAlgebra& model, const Sl2Triple& t) {
  Subspace z = centralizer(model, {t.h, t.e, t.f});
  Subspace tor = standard_torus(model, t);
  if (z.empty()) return true;
  // in the reductive algebra z a toral subalgebra is maximal iff it is self-centralizing
  return centralizer(model, tor, &z).size() == tor.size();
}

std::vector<OrbitRepresentative> enumerate_orbits(const LieAlgebra& model, unsigned seed) {
  const RootSystem& rs = model.chevalley().rs;
  size_t l = rs.rank();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(1, 9);
  std::vector<OrbitRepresentative> found;
  std::vector<Sl2Triple> triples;
  IVec labels(l, 0);
  while (true) {
    auto g2 = graded_roots(model, labels, 2);
    bool zero = std::all_of(labels.begin(), labels.end(), [](long long x) { return x == 0; });
    std::optional<QVec> rep;
    if (zero) {
      rep = QVec(model.dim());
    } else if (!g2.empty()) {
      for (int attempt = 0; attempt < 8 && !rep; ++attempt) {
        std::map<size_t, Rational> coeffs;
        for (size_t r : g2) coeffs[r] = Rational(coef(rng));
        auto build = [&](const std::map<size_t, Rational>& cs) {
          QVec e(model.dim());
          for (const auto& [r, c] : cs) axpy(e, c, model.root_vector(r));
          return e;
        };
        if (!has_characteristic(model, labels, build(coeffs))) continue;
        // sparsify, then normalize coefficients to 1 where possible
        for (size_t r : g2) {
          auto trial = coeffs;
          trial.erase(r);
          if (has_characteristic(model, labels, build(trial))) coeffs = trial;
        }
        std::vector<size_t> support;
        for (const auto& kv : coeffs) support.push_back(kv.first);
        for (size_t r : support) {
          auto trial = coeffs;
          trial[r] = Rational(1);
          if (has_characteristic(model, labels, build(trial))) coeffs = trial;
        }
        // keep representatives whose reductive centralizer has its maximal
        // torus inside the standard Cartan subalgebra
        QVec cand = build(coeffs);
        if (!standard_torus_is_maximal(model, jacobson_morozov(model, cand))) continue;
        rep = cand;
      }
    }
    if (rep) {
      OrbitRepresentative o;
      o.algebra = model.label();
      o.wdd = labels;
      o.dim = orbit_dimension(model, labels);
      for (size_t r = 0; r < rs.num_positive(); ++r)
        if (!(*rep)[r].is_zero()) o.terms.emplace_back(rs.root(r), (*rep)[r]);
      Sl2Triple t = jacobson_morozov(model, *rep);
      o.label = levi_label(model, t);
      found.push_back(o);
      triples.push_back(t);
    }
    size_t i = 0;
    while (i < l && labels[i] == 2) labels[i++] = 0;
    if (i == l) break;
    ++labels[i];
  }
  // distinguished orbits of the same Levi type are told apart by dimension
  std::map<std::string, std::vector<size_t>> by_levi;
  for (size_t i = 0; i < found.size(); ++i) by_levi[found[i].label].push_back(i);
  for (auto& [levi, idxs] : by_levi) {
    if (idxs.size() == 1) continue;
    std::sort(idxs.begin(), idxs.end(), [&](size_t a, size_t b) { return found[a].dim > found[b].dim; });
    auto suffix = distinguished_suffixes(levi, idxs.size());
    for (size_t k = 0; k < idxs.size(); ++k) found[idxs[k]].label = levi + suffix[k];
  }
  std::sort(found.begin(), found.end(), [](const OrbitRepresentative& a, const OrbitRepresentative& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label < b.label;
  });
  return found;
}

}  // namespace nilcent
