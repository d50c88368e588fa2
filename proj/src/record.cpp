#include "nilcent/record.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nilcent {

using nlohmann::json;

namespace {

std::string status_name(SolutionSet::Status s) {
  switch (s) {
    case SolutionSet::Status::Solved:
      return "solved";
    case SolutionSet::Status::Unsat:
      return "unsat";
    case SolutionSet::Status::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

json sparse_matrix(const KMatrix& m) {
  json entries = json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) entries.push_back(json::array({i, j, m(i, j).str()}));
  return json{{"dim", m.rows()}, {"entries", entries}};
}

json qmatrix_json(const QMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

QMatrix parse_qmatrix(const json& j) {
  size_t n = j.size();
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (j[i].size() != n) throw std::invalid_argument("triple file: matrices must be square");
    for (size_t k = 0; k < n; ++k) {
      const auto& x = j[i][k];
      m(i, k) = x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long long>());
    }
  }
  return m;
}

json group_json(const FiniteGroup& g, const std::vector<size_t>& gens) {
  json orders = json::object();
  for (const auto& [k, c] : g.element_orders) orders[std::to_string(k)] = c;
  json elements = json::array();
  for (const auto& e : g.elements) elements.push_back(sparse_matrix(e));
  return json{{"order", g.order()}, {"label", g.label}, {"abelian", g.abelian}, {"element_orders", orders},
              {"generators", gens}, {"table", g.table}, {"elements", elements}};
}

bool same_matrix(const KMatrix& a, const KMatrix& b) { return a == b; }

FiniteGroup trivial_group(size_t n) { return close_group({KMatrix::identity(n)}, same_matrix); }

std::string type_or_zero(const std::string& t) { return t.empty() ? "0" : t; }

CartanMatrix cartan_block(const CartanMatrix& c, size_t from, size_t to) {
  CartanMatrix out(to - from, std::vector<int>(to - from));
  for (size_t i = from; i < to; ++i)
    for (size_t j = from; j < to; ++j) out[i - from][j - from] = c[i][j];
  return out;
}

/// Orbit representatives by algebra; enumeration results are cached for algebras without fixtures.
const std::vector<OrbitRepresentative>& representatives(const std::string& algebra) {
  static std::mutex mu;
  static std::map<std::string, std::vector<OrbitRepresentative>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(algebra);
  if (it != cache.end()) return it->second;
  std::vector<OrbitRepresentative> reps;
  if (std::ifstream(data_dir() + "/orbits/" + algebra + ".json")) reps = builtin_orbits(algebra);
  if (reps.empty()) reps = enumerate_orbits(*LieAlgebra::from_type(algebra));
  return cache.emplace(algebra, std::move(reps)).first->second;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '+' || c == '-' || c == '.' ||
                c == ',';
    out += keep ? c : '_';
  }
  return out;
}

void fill_structure(const LieAlgebra& g, const CentralizerPair& cp, OrbitRecord& r) {
  try {
    ModuleDecomposition md = killing_complement(g, cp);
    r.c1_type = type_or_zero(md.type1);
    r.c2_type = type_or_zero(md.type2);
    r.c1_cartan = cartan_block(md.gens.cartan, 0, md.rank1);
    r.c2_cartan = cartan_block(md.gens.cartan, md.rank1, md.s());
    r.d = cp.d();
    r.weights = weight_rows(md);
    r.structural = true;
  } catch (const std::exception& ex) {
    r.diagnostics.push_back(std::string("structure: ") + ex.what());
  }
}

void classical_record(const OrbitQuery& q, const ClassicalSeries& series, const std::optional<std::vector<size_t>>& parts,
                      const ConjugacyOptions& opt, OrbitRecord& r) {
  FormedSpace fs = FormedSpace::antidiagonal(series.n, series.kind);
  MatrixTriple mt;
  if (parts) {
    auto all = classical_partitions(series.n, series.kind);
    std::vector<size_t> sorted = *parts;
    std::sort(sorted.rbegin(), sorted.rend());
    if (std::find(all.begin(), all.end(), sorted) == all.end())
      throw std::invalid_argument("unknown orbit label " + q.orbit + " for " + q.algebra +
                                  ": not a partition of a nilpotent orbit of the natural module");
    mt = triple_from_partition(fs, sorted);
    r.representative = json{{"form", series.kind == FormKind::Symmetric ? "symmetric" : "alternating"},
                             {"partition", sorted}}
                           .dump();
  } else {
    TripleFile tf = load_triple_file(q.representative_file);
    if (tf.kind != series.kind || tf.triple.h.rows() != series.n)
      throw std::invalid_argument("triple file does not match " + q.algebra);
    if (!fs.in_algebra(tf.triple.h) || !fs.in_algebra(tf.triple.e) || !fs.in_algebra(tf.triple.f))
      throw std::invalid_argument("triple file: matrices do not preserve the anti-diagonal form");
    mt = tf.triple;
    r.representative = json{{"form", series.kind == FormKind::Symmetric ? "symmetric" : "alternating"},
                             {"h", qmatrix_json(mt.h)},
                             {"e", qmatrix_json(mt.e)},
                             {"f", qmatrix_json(mt.f)}}
                           .dump();
  }
  r.orbit = partition_label(jordan_type(mt.e));
  r.route = "classical";
  ClassicalAlgebra alg = classical_algebra(fs);
  ClassicalComponentGroup res = component_group_classical(alg, algebra_triple(alg, mt), opt);

  std::vector<KMatrix> hat;
  for (const auto& m : res.hat_group) hat.push_back(m.cast<Cyclotomic>());
  r.hat_group = close_group(hat, same_matrix);
  r.hat_generators = minimal_generators(*r.hat_group);

  std::vector<KMatrix> identity;
  for (const auto& m : res.identity) identity.push_back(m.cast<Cyclotomic>());
  auto same = [&](const KMatrix& a, const KMatrix& b) {
    auto ai = inverse(a);
    if (!ai) throw std::logic_error("classical record: singular element");
    KMatrix p = *ai * b;
    return std::any_of(identity.begin(), identity.end(), [&](const KMatrix& x) { return x == p; });
  };
  std::vector<KMatrix> reps;
  for (const auto& m : res.representatives) reps.push_back(m.cast<Cyclotomic>());
  if (reps.empty()) reps.push_back(KMatrix::identity(series.n));
  r.group = close_group(reps, same);
  r.generators = minimal_generators(r.group);
  if (r.group.order() != res.order) throw std::logic_error("classical record: closure disagrees with the component count");
  r.diagnostics.push_back("parts " + join(res.parts) + "; relevant sizes " + join(res.relevant) + "; hat order " +
                          std::to_string(res.hat_order));
  if (res.inconclusive) {
    r.status = "INCONCLUSIVE";
    r.diagnostics.push_back("classical: " + res.reason);
  }
}

void chevalley_record(const OrbitQuery& q, const ConjugacyOptions& opt, OrbitRecord& r) {
  auto g = LieAlgebra::from_type(q.algebra);
  OrbitRepresentative rep;
  if (!q.representative_file.empty()) {
    auto reps = load_orbit_file(q.representative_file);
    if (reps.size() != 1) throw std::invalid_argument("representative file must hold exactly one orbit");
    rep = reps.front();
  } else {
    const auto& reps = representatives(q.algebra);
    auto it = std::find_if(reps.begin(), reps.end(), [&](const OrbitRepresentative& o) { return o.label == q.orbit; });
    if (it == reps.end()) throw std::invalid_argument("unknown orbit label " + q.orbit + " for " + q.algebra);
    rep = *it;
  }
  r.orbit = q.orbit.empty() ? rep.label : q.orbit;
  r.representative = orbit_to_json(rep);
  Sl2Triple t = jacobson_morozov(*g, rep.element(*g));
  size_t n = g->dim();

  if (is_zero_vec(t.e)) {
    if (q.route == Route::Conjugacy) throw std::invalid_argument("route conjugacy is inapplicable: z(h,e,f) = g");
    r.route = "doublecent";
    r.wdd = IVec(g->chevalley().rs.rank(), 0);
    r.group = trivial_group(n);
    r.generators = {};
    return;
  }
  r.wdd = rep.wdd.empty() ? weighted_dynkin_diagram(*g, t) : rep.wdd;
  CentralizerPair cp = centralizer_pair(*g, t);
  Route route = q.route;
  if (route == Route::Auto) route = cp.c1.empty() ? Route::Conjugacy : Route::Doublecent;
  r.route = route_name(route);
  fill_structure(*g, cp, r);

  if (route == Route::Conjugacy) {
    if (!cp.c1.empty())
      throw std::invalid_argument("route conjugacy is inapplicable: z(h,e,f) has dimension " + std::to_string(cp.c1.size()));
    StabilizerResult st = finite_stabilizer(*g, t, opt);
    for (const auto& c : st.cells)
      r.diagnostics.push_back("cell [" + join(c.word) + "] " + status_name(c.status) + " " + std::to_string(c.solutions) +
                              (c.reason.empty() ? "" : " " + c.reason));
    if (st.inconclusive) {
      r.status = "INCONCLUSIVE";
      r.diagnostics.push_back("conjugacy: " + st.reason);
      r.group = trivial_group(n);
    } else {
      r.group = close_group(st.elements, same_matrix);
    }
  } else {
    DoubleCentralizerResult res = component_group_doublecent(*g, t, opt, q.budget);
    for (const auto& s : res.statuses)
      r.diagnostics.push_back("u=" + std::to_string(s.u) + " v=" + std::to_string(s.v) + " pi=[" + join(s.pi) + "] " +
                              s.status + " " + std::to_string(s.solutions) + (s.reason.empty() ? "" : " " + s.reason));
    if (res.inconclusive) {
      r.status = "INCONCLUSIVE";
      r.diagnostics.push_back("doublecent: " + res.reason);
    }
    r.group = res.group;
  }
  r.generators = minimal_generators(r.group);
}

}  // namespace

std::string route_name(Route r) {
  switch (r) {
    case Route::Auto:
      return "auto";
    case Route::Classical:
      return "classical";
    case Route::Conjugacy:
      return "conjugacy";
    case Route::Doublecent:
      return "doublecent";
  }
  return "auto";
}

Route parse_route(const std::string& s) {
  for (Route r : {Route::Auto, Route::Classical, Route::Conjugacy, Route::Doublecent})
    if (route_name(r) == s) return r;
  throw std::invalid_argument("unknown route " + s + " (auto, classical, conjugacy, doublecent)");
}

std::optional<ClassicalSeries> classical_series(const std::string& algebra) {
  auto number = [](const std::string& s) -> std::optional<size_t> {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::nullopt;
    return std::stoul(s);
  };
  if (algebra.size() >= 2 && (algebra[0] == 'B' || algebra[0] == 'C' || algebra[0] == 'D')) {
    auto l = number(algebra.substr(1));
    if (!l || *l == 0) return std::nullopt;
    if (algebra[0] == 'B') return ClassicalSeries{FormKind::Symmetric, 2 * *l + 1};
    if (algebra[0] == 'C') return ClassicalSeries{FormKind::Alternating, 2 * *l};
    if (*l < 3) return std::nullopt;
    return ClassicalSeries{FormKind::Symmetric, 2 * *l};
  }
  for (auto [prefix, kind] : {std::pair{"so(", FormKind::Symmetric}, std::pair{"o(", FormKind::Symmetric},
                              std::pair{"sp(", FormKind::Alternating}}) {
    std::string p = prefix;
    if (algebra.rfind(p, 0) == 0 && algebra.back() == ')') {
      auto n = number(algebra.substr(p.size(), algebra.size() - p.size() - 1));
      if (!n || *n < 3) return std::nullopt;
      if (kind == FormKind::Alternating && *n % 2 != 0) return std::nullopt;
      return ClassicalSeries{kind, *n};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<size_t>> parse_partition(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  std::vector<size_t> parts;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return false;
    parts.push_back(std::stoul(cur));
    cur.clear();
    return parts.back() > 0;
  };
  for (char c : body) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ',' || c == '+') {
      if (!flush()) return std::nullopt;
    } else if (c != ' ') {
      return std::nullopt;
    }
  }
  if (!flush()) return std::nullopt;
  return parts;
}

std::string partition_label(const std::vector<size_t>& parts) { return "[" + join(parts) + "]"; }

TripleFile load_triple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open triple file " + path);
  json j = json::parse(in);
  if (j.value("schema", "") != "nilcent.triple/1") throw std::invalid_argument("triple file: unknown schema in " + path);
  TripleFile tf;
  std::string form = j.at("form").get<std::string>();
  if (form == "symmetric") {
    tf.kind = FormKind::Symmetric;
  } else if (form == "alternating") {
    tf.kind = FormKind::Alternating;
  } else {
    throw std::invalid_argument("triple file: form must be symmetric or alternating");
  }
  tf.triple = {parse_qmatrix(j.at("h")), parse_qmatrix(j.at("e")), parse_qmatrix(j.at("f"))};
  const auto& m = tf.triple;
  auto br = [](const QMatrix& a, const QMatrix& b) { return a * b - b * a; };
  if (br(m.h, m.e) != Rational(2) * m.e || br(m.h, m.f) != Rational(-2) * m.f || br(m.e, m.f) != m.h)
    throw std::invalid_argument("triple file: h, e, f is not an sl2-triple");
  return tf;
}

OrbitRecord compute_record(const OrbitQuery& q, const ConjugacyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  OrbitRecord r;
  r.algebra = q.algebra;
  auto series = classical_series(q.algebra);
  std::optional<std::vector<size_t>> parts;
  if (!q.orbit.empty()) parts = parse_partition(q.orbit);
  bool triple_file = false;
  if (!q.representative_file.empty()) {
    std::ifstream in(q.representative_file);
    if (!in) throw std::invalid_argument("cannot open " + q.representative_file);
    json j = json::parse(in);
    triple_file = j.is_object() && j.value("schema", "") == "nilcent.triple/1";
  }
  bool classical_input = series && (parts || triple_file);
  if (q.route == Route::Classical && !classical_input)
    throw std::invalid_argument("route classical is inapplicable to " + q.algebra +
                                ": it needs a B, C or D label with a partition or a matrix triple");
  if (classical_input && (q.route == Route::Conjugacy || q.route == Route::Doublecent))
    throw std::invalid_argument("route " + route_name(q.route) + " needs a Chevalley model; give a Bala-Carter label");
  if (triple_file && !series) throw std::invalid_argument("matrix triples need a B, C or D label");

  if (classical_input) {
    classical_record(q, *series, parts, opt, r);
  } else {
    if (q.orbit.empty() && q.representative_file.empty()) throw std::invalid_argument("no orbit given");
    chevalley_record(q, opt, r);
  }
  r.fixture_hash = fnv1a_hex(r.algebra + "\n" + r.representative);
  if (!verify_closure(r.group) || (r.hat_group && !verify_closure(*r.hat_group)))
    throw std::logic_error("compute_record: group closure verification failed");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool verify_closure(const FiniteGroup& g) {
  size_t k = g.order();
  if (k == 0 || !g.elements[0].is_identity() || g.table.size() != k) return false;
  for (size_t i = 0; i < k; ++i) {
    if (g.table[i].size() != k) return false;
    std::vector<bool> row(k, false), col(k, false);
    for (size_t j = 0; j < k; ++j) {
      if (g.table[i][j] >= k || g.table[j][i] >= k) return false;
      row[g.table[i][j]] = true;
      col[g.table[j][i]] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(k)) return false;
    if (std::count(col.begin(), col.end(), true) != static_cast<long>(k)) return false;
    if (g.table[0][i] != i || g.table[i][0] != i) return false;
  }
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      for (size_t c = 0; c < k; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) return false;
  bool abelian = true;
  std::map<int, int> orders;
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) abelian = abelian && g.table[i][j] == g.table[j][i];
    int ord = 1;
    for (size_t p = i; p != 0; p = g.table[p][i]) ++ord;
    ++orders[ord];
  }
  return abelian == g.abelian && orders == g.element_orders && g.label == isomorphism_label(k, abelian, orders);
}

std::vector<size_t> minimal_generators(const FiniteGroup& g) {
  size_t k = g.order();
  std::vector<size_t> gens;
  std::vector<bool> in(k, false);
  in[0] = true;
  for (size_t i = 1; i < k; ++i) {
    if (in[i]) continue;
    gens.push_back(i);
    std::vector<size_t> sub;
    for (size_t j = 0; j < k; ++j)
      if (in[j]) sub.push_back(j);
    for (size_t at = 0; at < sub.size(); ++at)
      for (size_t s : gens) {
        size_t p = g.table[sub[at]][s];
        if (!in[p]) {
          in[p] = true;
          sub.push_back(p);
        }
      }
  }
  return gens;
}

std::string record_to_json(const OrbitRecord& r, bool timing) {
  json j;
  j["schema"] = "nilcent.orbit-record/1";
  j["algebra"] = r.algebra;
  j["orbit"] = r.orbit;
  j["route"] = r.route;
  j["fixture_hash"] = r.fixture_hash;
  j["representative"] = json::parse(r.representative);
  j["wdd"] = r.wdd;
  if (r.structural) {
    json w = json::array();
    for (const auto& row : r.weights) {
      json w2 = json::array();
      for (const auto& x : row.w2) w2.push_back(x.str());
      w.push_back(json{{"w1", row.w1}, {"w2", w2}, {"w3", row.w3}});
    }
    j["structure"] = json{{"c1", r.c1_type}, {"d", r.d}, {"c2", r.c2_type}, {"weights", w}};
  } else {
    j["structure"] = nullptr;
  }
  j["group"] = group_json(r.group, r.generators);
  j["hat_group"] = r.hat_group ? group_json(*r.hat_group, r.hat_generators) : json(nullptr);
  j["status"] = r.status;
  j["diagnostics"] = r.diagnostics;
  if (timing) j["seconds"] = r.seconds;
  return j.dump(1);
}

std::string ResultStore::path_for(const std::string& algebra, const std::string& orbit, const std::string& route,
                                  const std::string& hash) const {
  return (std::filesystem::path(dir_) / sanitize(algebra) / (sanitize(orbit) + "--" + route + "--" + hash + ".json"))
      .string();
}

std::string ResultStore::save(const OrbitRecord& r) const {
  if (!verify_closure(r.group) || (r.hat_group && !verify_closure(*r.hat_group)))
    throw std::logic_error("result store: refusing a record whose group fails closure verification");
  std::string path = path_for(r.algebra, r.orbit, r.route, r.fixture_hash);
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("result store: cannot write " + path);
  out << record_to_json(r) << "\n";
  return path;
}

std::optional<std::string> ResultStore::load(const std::string& algebra, const std::string& orbit,
                                             const std::string& route, const std::string& hash) const {
  std::ifstream in(path_for(algebra, orbit, route, hash));
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> orbit_labels(const std::string& algebra) {
  std::vector<std::string> out;
  if (auto series = classical_series(algebra)) {
    for (const auto& p : classical_partitions(series->n, series->kind)) out.push_back(partition_label(p));
    return out;
  }
  for (const auto& r : representatives(algebra)) out.push_back(r.label);
  return out;
}

std::vector<OrbitRecord> nontrivial_records(const std::string& algebra, const ConjugacyOptions& opt) {
  std::vector<OrbitRecord> out;
  for (const auto& label : orbit_labels(algebra)) {
    OrbitQuery q;
    q.algebra = algebra;
    q.orbit = label;
    OrbitRecord r = compute_record(q, opt);
    if (r.group.order() > 1 || !r.ok()) out.push_back(std::move(r));
  }
  return out;
}

std::string render_table(const std::vector<OrbitRecord>& rows) {
  std::ostringstream out;
  out << "orbit | c1' | d | c2' | weights | A\n";
  for (const auto& r : rows) {
    out << r.orbit << " | ";
    if (r.structural) {
      out << r.c1_type << " | " << r.d << " | " << r.c2_type << " | ";
      std::vector<std::string> ws;
      for (const auto& w : r.weights) {
        std::vector<std::string> w2;
        for (const auto& x : w.w2) w2.push_back(x.str());
        ws.push_back("(" + join(w.w1) + "; " + join(w2) + "; " + join(w.w3) + ")");
      }
      out << (ws.empty() ? "-" : join(ws, " "));
    } else {
      out << "- | - | - | -";
    }
    out << " | " << (r.ok() ? r.group.label : "INCONCLUSIVE") << "\n";
  }
  return out.str();
}

std::vector<std::string> diff_table(const std::vector<OrbitRecord>& rows, const std::vector<TableRow>& ref) {
  std::vector<std::string> out;
  auto group_name = [](const std::string& g) { return g == "S2" ? std::string("C2") : g; };
  for (const auto& t : ref) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const OrbitRecord& r) { return r.orbit == t.label; });
    if (it == rows.end()) {
      out.push_back(t.label + ": missing from the computed rows");
      continue;
    }
    const OrbitRecord& r = *it;
    if (!r.ok()) out.push_back(t.label + ": computation inconclusive");
    if (!r.structural) {
      out.push_back(t.label + ": no structural data");
    } else {
      if (r.c1_type != t.c1) out.push_back(t.label + ": c1' " + r.c1_type + " vs " + t.c1);
      if (r.d != t.d) out.push_back(t.label + ": d " + std::to_string(r.d) + " vs " + std::to_string(t.d));
      if (r.c2_type != t.c2) out.push_back(t.label + ": c2' " + r.c2_type + " vs " + t.c2);
      if (!same_weight_table(r.weights, t.weights, r.c1_cartan, r.c2_cartan)) out.push_back(t.label + ": weights differ");
    }
    if (r.ok() && r.group.label != group_name(t.group)) out.push_back(t.label + ": group " + r.group.label + " vs " + t.group);
  }
  for (const auto& r : rows)
    if (std::none_of(ref.begin(), ref.end(), [&](const TableRow& t) { return t.label == r.orbit; }))
      out.push_back(r.orbit + ": not in the reference table");
  return out;
}

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

}  // namespace nilcent
