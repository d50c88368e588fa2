#include "nilcent/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nilcent/record.hpp"

namespace nilcent {

namespace {

/// Accumulates failures of one criterion.
struct Check {
  std::vector<std::string> failures;
  bool inconclusive = false;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

CriterionResult run(const std::string& id, const std::string& title, const std::function<void(Check&)>& body,
                    double time_limit = 0) {
  CriterionResult r{id, title, "pass", "", 0};
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.failures.push_back(std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && r.seconds > time_limit)
    c.failures.push_back("runtime " + std::to_string(r.seconds) + " s exceeds " + std::to_string(time_limit) + " s");
  if (!c.failures.empty()) {
    r.outcome = "fail";
    std::ostringstream d;
    for (size_t i = 0; i < c.failures.size() && i < 10; ++i) d << (i ? "; " : "") << c.failures[i];
    if (c.failures.size() > 10) d << "; ... " << c.failures.size() - 10 << " more";
    r.detail = d.str();
  } else if (c.inconclusive) {
    r.outcome = "inconclusive";
    r.detail = c.note;
  } else {
    r.detail = c.note;
  }
  return r;
}

QMatrix int_rows(const std::vector<std::vector<int>>& rows) {
  QMatrix m(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

Sl2Triple fixture_triple(const LieAlgebra& g, const std::string& algebra, const std::string& label) {
  auto rep = builtin_orbit(algebra, label);
  if (!rep) throw std::runtime_error("missing orbit fixture " + algebra + " " + label);
  return jacobson_morozov(g, rep->element(g));
}

std::optional<TableRow> table_row(const std::string& algebra, const std::string& label) {
  for (const auto& r : builtin_table(algebra))
    if (r.label == label) return r;
  return std::nullopt;
}

std::string type_or_zero(const std::string& t) { return t.empty() ? "0" : t; }

CartanMatrix cartan_block(const CartanMatrix& c, size_t from, size_t to) {
  CartanMatrix out(to - from, std::vector<int>(to - from));
  for (size_t i = from; i < to; ++i)
    for (size_t j = from; j < to; ++j) out[i - from][j - from] = c[i][j];
  return out;
}

/// Structural columns of one table row, linear algebra only.
void check_structural_row(Check& c, const LieAlgebra& g, const std::string& algebra, const TableRow& row) {
  auto t = fixture_triple(g, algebra, row.label);
  auto cp = centralizer_pair(g, t);
  auto md = killing_complement(g, cp);
  std::string where = algebra + " " + row.label + ": ";
  c.require(type_or_zero(md.type1) == row.c1, where + "c1' " + type_or_zero(md.type1) + " vs " + row.c1);
  c.require(cp.d() == row.d, where + "d " + std::to_string(cp.d()) + " vs " + std::to_string(row.d));
  c.require(type_or_zero(md.type2) == row.c2, where + "c2' " + type_or_zero(md.type2) + " vs " + row.c2);
  c.require(same_weight_table(weight_rows(md), row.weights, cartan_block(md.gens.cartan, 0, md.rank1),
                              cartan_block(md.gens.cartan, md.rank1, md.s())),
            where + "weights differ");
}

void check_structural_table(Check& c, const std::string& algebra) {
  auto g = LieAlgebra::from_type(algebra);
  auto rows = builtin_table(algebra);
  c.require(!rows.empty(), "no reference table for " + algebra);
  for (const auto& row : rows) check_structural_row(c, *g, algebra, row);
}

// ---------------------------------------------------------------- criteria

CriterionResult b2_example() {
  return run("1-b2-example", "B2 worked example: Z_Ghat group C2xC2 with h1, h3; Z_G group {id, h1h3} = C2", [](Check& c) {
    TripleFile tf = load_triple_file(data_dir() + "/classical/B2-example.json");
    FormedSpace fs = FormedSpace::antidiagonal(5, FormKind::Symmetric);
    ClassicalAlgebra alg = classical_algebra(fs);
    auto res = component_group_classical(alg, algebra_triple(alg, tf.triple));
    QMatrix h1 = int_rows({{1, 0, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, 0, 1}});
    QMatrix h3 = int_rows({{-1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}});
    c.require(res.generators.size() == 2, "expected two generators");
    if (res.generators.size() == 2) {
      c.require(res.generators[0] == h1, "first generator differs from h1");
      c.require(res.generators[1] == h3, "second generator differs from h3");
    }
    c.require(res.hat_order == 4 && res.hat_label == "C2×C2", "Z_Ghat group is " + res.hat_label);
    c.require(res.det_one.size() == 2 && res.det_one.back() == h1 * h3, "det-one elements are not {id, h1 h3}");
    c.require(res.order == 2 && res.label == "C2", "Z_G group is " + res.label);
    c.require(!res.inconclusive, "inconclusive: " + res.reason);
    c.note = "generators h1, h3 reproduced exactly; Z_G = {id, h1h3}";
  }, 1.0);
}

/// One classical algebra of the sweep; returns the number of orbits checked.
size_t sweep_algebra(Check& c, size_t n, FormKind kind) {
  std::string name = std::string(kind == FormKind::Symmetric ? "o(" : "sp(") + std::to_string(n) + ")";
  FormedSpace fs = FormedSpace::antidiagonal(n, kind);
  ClassicalAlgebra alg = classical_algebra(fs);
  std::vector<QVec> basis;
  for (size_t i = 0; i < alg.algebra->dim(); ++i) basis.push_back(alg.algebra->basis_vector(i));
  size_t count = 0;
  for (const auto& parts : classical_partitions(n, kind)) {
    std::string where = name + " " + partition_label(parts) + ": ";
    MatrixTriple mt = triple_from_partition(fs, parts);
    auto res = component_group_classical(alg, algebra_triple(alg, mt));
    ++count;
    if (res.inconclusive) {
      c.inconclusive = true;
      c.note = where + res.reason;
    }
    // oracle: distinct summand dimensions of the computed decomposition with the relevant parity
    std::set<size_t> sizes;
    for (const auto& s : decompose_natural(mt))
      if ((s.dim % 2 == 1) == (kind == FormKind::Symmetric)) sizes.insert(s.dim);
    size_t expected = size_t{1} << sizes.size();
    std::vector<KMatrix> hat;
    for (const auto& m : res.hat_group) hat.push_back(m.cast<Cyclotomic>());
    FiniteGroup hg = close_group(hat, [](const KMatrix& a, const KMatrix& b) { return a == b; });
    bool elementary = hg.abelian && hg.element_orders.size() <= 2 &&
                      std::all_of(hg.element_orders.begin(), hg.element_orders.end(),
                                  [](const auto& kv) { return kv.first <= 2; });
    c.require(hg.order() == expected, where + "Z_Ghat order " + std::to_string(hg.order()) + " vs " + std::to_string(expected));
    c.require(elementary, where + "Z_Ghat group is not elementary abelian");
    c.require(verify_closure(hg), where + "Z_Ghat closure check failed");
    for (const auto& gen : res.generators) {
      c.require(fs.preserves(gen), where + "generator does not preserve the form");
      auto gi = inverse(gen);
      c.require(gi && gen * mt.h * *gi == mt.h && gen * mt.e * *gi == mt.e && gen * mt.f * *gi == mt.f,
                where + "generator does not fix (h,e,f)");
      c.require(certify_automorphism(*alg.algebra, alg.conjugation(gen).cast<Cyclotomic>(), basis),
                where + "generator is not a certified automorphism");
    }
    OrbitQuery q;
    q.algebra = name;
    q.orbit = partition_label(parts);
    OrbitRecord rec = compute_record(q);
    c.require(verify_closure(rec.group), where + "Z_G closure check failed");
    c.require(rec.group.order() == res.order, where + "Z_G record order mismatch");
  }
  return count;
}

CriterionResult classical_sweep(const std::vector<std::pair<size_t, FormKind>>& algebras) {
  return run("2-classical-sweep", "classical sweep: Z_Ghat elementary abelian of order 2^(#relevant part sizes)",
             [&](Check& c) {
               size_t total = 0;
               for (auto [n, kind] : algebras) total += sweep_algebra(c, n, kind);
               if (c.note.empty()) c.note = std::to_string(total) + " orbits in " + std::to_string(algebras.size()) + " algebras";
             },
             600.0);
}

std::vector<std::pair<size_t, FormKind>> default_sweep() {
  std::vector<std::pair<size_t, FormKind>> out;
  for (size_t n : {5, 7, 9, 11, 13}) out.emplace_back(n, FormKind::Symmetric);
  for (size_t n : {2, 3, 4, 5, 6}) out.emplace_back(2 * n, FormKind::Alternating);
  return out;
}

CriterionResult g2_complete() {
  return run("3-g2-complete", "G2: only G2(a1) has a nontrivial group; finite_stabilizer gives S3", [](Check& c) {
    auto rows = nontrivial_records("G2");
    c.require(rows.size() == 1 && rows.front().orbit == "G2(a1)", "nontrivial orbits differ from {G2(a1)}");
    for (const auto& r : rows) c.require(r.ok(), r.orbit + " inconclusive");
    auto g = LieAlgebra::from_type("G2");
    auto st = finite_stabilizer(*g, fixture_triple(*g, "G2", "G2(a1)"));
    c.require(!st.inconclusive, "finite_stabilizer inconclusive: " + st.reason);
    c.require(st.elements.size() == 6, "finite_stabilizer returned " + std::to_string(st.elements.size()) + " elements");
    if (!st.elements.empty()) {
      auto grp = close_group(st.elements, [](const KMatrix& a, const KMatrix& b) { return a == b; });
      c.require(grp.order() == 6 && grp.label == "S3" && verify_closure(grp), "group is " + grp.label);
    }
    c.note = "5 orbits, G2(a1) -> S3 (6 elements)";
  }, 1800.0);
}

CriterionResult f4_structural() {
  return run("4-f4-structural", "F4 structural rows and multiplicity-freeness for every orbit", [](Check& c) {
    check_structural_table(c, "F4");
    auto g = LieAlgebra::from_type("F4");
    size_t orbits = 0;
    for (const auto& rep : builtin_orbits("F4")) {
      auto t = jacobson_morozov(*g, rep.element(*g));
      if (is_zero_vec(t.e)) continue;
      ++orbits;
      try {
        killing_complement(*g, centralizer_pair(*g, t));
      } catch (const std::exception& ex) {
        c.require(false, rep.label + ": " + ex.what());
      }
    }
    c.note = "7 rows matched; V multiplicity free for " + std::to_string(orbits) + " nonzero orbits";
  }, 600.0);
}

/// The D4(a1) example in E6 step by step.
void e6_d4a1_example(Check& c) {
  auto g = LieAlgebra::from_type("E6");
  auto t = fixture_triple(*g, "E6", "D4(a1)");
  auto cp = centralizer_pair(*g, t);
  auto md = killing_complement(*g, cp);
  c.require(md.m() == 6, "expected 6 summands");
  auto ref = table_row("E6", "D4(a1)");
  if (!ref) throw std::runtime_error("missing E6 D4(a1) table row");
  auto al = table_alignments(md, ref->weights);
  c.require(!al.empty(), "summand weights do not match the printed table");
  auto rc = restriction_candidates(*g, cp, md);
  if (rc.inconclusive) {
    c.inconclusive = true;
    c.note = "restriction candidates: " + rc.reason;
    return;
  }
  // triality 1 -> 4 -> 3 -> 1 on the Bourbaki nodes of D4
  const std::vector<int> tau{3, 1, 0, 2};
  const std::vector<size_t> expected_pi{5, 4, 1, 0, 2, 3};
  QMatrix expected_a(2, 2);
  expected_a(0, 0) = Rational(-1, 2);
  expected_a(0, 1) = Rational(1, 2);
  expected_a(1, 0) = Rational(-3, 2);
  expected_a(1, 1) = Rational(-1, 2);
  for (const auto& [order, change] : al) {
    ModuleDecomposition mdp = md;
    reorder_summands(mdp, order);
    change_torus_basis(*g, mdp, change);
    c.require(pinned_indices(mdp) == std::vector<size_t>{0, 2}, "pinned summands are not 1 and 3");
    size_t cosets = 0;
    for (size_t v = 0; v < rc.eta.size(); ++v) {
      if (rc.eta_outer[v] != tau) continue;
      ++cosets;
      BarredData bd = barred_data(*g, mdp, rc.theta[0], rc.eta[v]);
      auto pis = permutation_candidates(mdp, bd);
      c.require(pis.size() == 8, std::to_string(pis.size()) + " candidate permutations for tau");
      std::vector<std::vector<size_t>> torus_ok;
      size_t lambda_solutions = 0;
      for (const auto& pi : pis) {
        auto a = torus_restriction(mdp, pi);
        if (!a) continue;
        auto ext = extension_solve(*g, mdp, bd, pi, *a);
        if (ext.status == SolutionSet::Status::Inconclusive) {
          c.inconclusive = true;
          c.note = "extension solve: " + ext.reason;
        }
        for (const auto& s : ext.sigmas) {
          if (!is_inner(*g, s.m)) continue;
          torus_ok.push_back(pi);
          c.require(*a == expected_a, "torus matrix a differs from ((-1/2,1/2),(-3/2,-1/2))");
          ++lambda_solutions;
        }
      }
      c.require(torus_ok.size() == 1 && torus_ok.front() == expected_pi, "surviving permutation differs");
      c.require(lambda_solutions == 1, std::to_string(lambda_solutions) + " lambda-solutions");
    }
    c.require(cosets == 1, "tau coset not found among the eta candidates");
  }
  auto res = component_group_doublecent(*g, t);
  if (res.inconclusive) {
    c.inconclusive = true;
    c.note = res.reason;
  }
  c.require(res.group.order() == 6 && res.group.label == "S3", "final group is " + res.group.label);
}

CriterionResult e6_suite() {
  return run("5-e6", "E6 structural rows; D4(a1) example end to end (8 candidates, one survivor, S3)", [](Check& c) {
    check_structural_table(c, "E6");
    e6_d4a1_example(c);
    if (c.note.empty()) c.note = "3 rows matched; pi = (6,5,2,1,3,4), a = ((-1/2,1/2),(-3/2,-1/2)), S3";
  }, 3600.0);
}

CriterionResult f4a3_stretch() {
  return run("6-f4a3-stretch", "F4(a3): Bruhat cell systems give 24 solutions forming S4", [](Check& c) {
    auto g = LieAlgebra::from_type("F4");
    auto st = finite_stabilizer(*g, fixture_triple(*g, "F4", "F4(a3)"));
    size_t inconclusive_cells = 0, solutions = 0;
    for (const auto& cell : st.cells) {
      inconclusive_cells += cell.status == SolutionSet::Status::Inconclusive;
      solutions += cell.solutions;
    }
    if (st.inconclusive) {
      c.inconclusive = true;
      c.note = std::to_string(inconclusive_cells) + " inconclusive cells: " + st.reason;
      return;
    }
    c.require(st.cells.size() == 12, std::to_string(st.cells.size()) + " cells instead of 12");
    c.require(solutions == 24 && st.elements.size() == 24, std::to_string(solutions) + " solutions instead of 24");
    auto grp = close_group(st.elements, [](const KMatrix& a, const KMatrix& b) { return a == b; });
    c.require(grp.label == "S4", "group is " + grp.label);
    c.note = "12 cells, 24 solutions, S4";
  });
}

// ---------------------------------------------------------------- properties

QVec random_vec(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  QVec v(n);
  for (auto& x : v) x = Rational(d(rng));
  return v;
}

void jacobi_and_killing(Check& c) {
  std::mt19937_64 rng(11);
  for (const char* type : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    auto g = LieAlgebra::from_type(type);
    size_t n = g->dim();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j <= i; ++j) {
        QVec a = g->bracket(g->basis_vector(i), g->basis_vector(j));
        QVec b = g->bracket(g->basis_vector(j), g->basis_vector(i));
        axpy(a, Rational(1), b);
        c.require(is_zero_vec(a), std::string(type) + ": antisymmetry fails");
      }
    for (int trial = 0; trial < 20; ++trial) {
      QVec x = random_vec(rng, n), y = random_vec(rng, n), z = random_vec(rng, n);
      QVec j = g->bracket(x, g->bracket(y, z));
      axpy(j, Rational(1), g->bracket(y, g->bracket(z, x)));
      axpy(j, Rational(1), g->bracket(z, g->bracket(x, y)));
      c.require(is_zero_vec(j), std::string(type) + ": Jacobi identity fails");
      c.require(g->killing(g->bracket(x, y), z) == g->killing(x, g->bracket(y, z)),
                std::string(type) + ": Killing form is not associative");
    }
  }
}

void check_relations(Check& c, const LieAlgebra& g, const CanonicalGenerators& cg, const std::string& where) {
  size_t l = cg.rank();
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) {
      c.require(is_zero_vec(g.bracket(cg.h[i], cg.h[j])), where + ": [h_i, h_j] != 0");
      QVec xy = g.bracket(cg.x[i], cg.y[j]);
      if (i == j) axpy(xy, Rational(-1), cg.h[i]);
      c.require(is_zero_vec(xy), where + ": [x_i, y_j] != delta_ij h_i");
      Rational cij(cg.cartan[i][j]);
      QVec hx = g.bracket(cg.h[j], cg.x[i]);
      axpy(hx, -cij, cg.x[i]);
      QVec hy = g.bracket(cg.h[j], cg.y[i]);
      axpy(hy, cij, cg.y[i]);
      c.require(is_zero_vec(hx) && is_zero_vec(hy), where + ": [h_j, x_i] or [h_j, y_i] has the wrong eigenvalue");
    }
}

void canonical_generator_relations(Check& c) {
  for (const char* type : {"G2", "F4", "E6"}) {
    auto g = LieAlgebra::from_type(type);
    check_relations(c, *g, standard_generators(*g), std::string(type) + " standard");
    for (const auto& rep : builtin_orbits(type)) {
      auto t = jacobson_morozov(*g, rep.element(*g));
      if (is_zero_vec(t.e)) continue;
      auto md = killing_complement(*g, centralizer_pair(*g, t));
      check_relations(c, *g, md.gens, std::string(type) + " " + rep.label);
    }
  }
}

void dominant_properties(Check& c) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (const char* type : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    RootSystem rs = RootSystem::from_label(type);
    size_t l = rs.rank();
    std::uniform_int_distribution<int> node(0, static_cast<int>(l) - 1);
    for (int trial = 0; trial < 100; ++trial) {
      CoVec h(l);
      for (auto& x : h) x = Rational(coef(rng), 1 + trial % 3);
      auto d = dominant_representative(rs, h);
      for (const auto& v : simple_values(rs, d.h)) c.require(v >= Rational(0), std::string(type) + ": result not dominant");
      c.require(apply_word(rs, h, d.word) == d.h, std::string(type) + ": word does not reproduce the result");
      auto again = dominant_representative(rs, d.h);
      c.require(again.h == d.h && again.word.empty(), std::string(type) + ": not idempotent");
      std::vector<int> w;
      for (int k = 0; k < 6; ++k) w.push_back(node(rng));
      c.require(dominant_representative(rs, apply_word(rs, h, w)).h == d.h, std::string(type) + ": depends on the Weyl representative");
    }
  }
}

bool vanishes(const std::vector<QPoly>& p, const std::vector<Rational>& pt) {
  for (const auto& f : p)
    if (!f.eval(pt).is_zero()) return false;
  return true;
}

void groebner_properties(Check& c) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::string where = "synthetic system " + std::to_string(trial);
    size_t n = 1 + static_cast<size_t>(trial % 3);
    PolySystem s;
    for (size_t k = 0; k < n; ++k) s.vars.add("x" + std::to_string(k));
    std::vector<std::vector<int>> allowed(n);
    for (size_t k = 0; k < n; ++k) {
      QPoly b = QPoly::constant(Rational(1));
      std::set<int> rs;
      for (int j = 0; j < 2 + trial % 2; ++j) rs.insert(small(rng));
      for (int r : rs) b *= QPoly::var(k) - QPoly::constant(Rational(r));
      allowed[k].assign(rs.begin(), rs.end());
      s.polys.push_back(b);
    }
    for (int extra = 0; extra < 2; ++extra) {
      QPoly f = QPoly::constant(Rational(1));
      for (int fac = 0; fac < 2; ++fac) {
        QPoly lin = QPoly::constant(Rational(small(rng)));
        for (size_t k = 0; k < n; ++k) lin += QPoly::var(k).scaled(Rational(small(rng)));
        if (lin.is_zero()) lin = QPoly::var(0);
        f *= lin;
      }
      s.polys.push_back(f);
    }
    std::set<std::vector<Rational>> oracle;
    std::vector<Rational> pt(n);
    std::function<void(size_t)> grid = [&](size_t k) {
      if (k == n) {
        if (vanishes(s.polys, pt)) oracle.insert(pt);
        return;
      }
      for (int r : allowed[k]) {
        pt[k] = Rational(r);
        grid(k + 1);
      }
    };
    grid(0);
    auto branches = factor_split(s.polys);
    std::set<std::vector<Rational>> covered;
    for (const auto& b : branches)
      for (const auto& p : oracle)
        if (vanishes(b, p)) covered.insert(p);
    c.require(covered == oracle, where + ": factor_split loses solutions");
    auto sol = solve_with_splitting(s);
    c.require(sol.status != SolutionSet::Status::Inconclusive, where + ": inconclusive");
    std::set<std::vector<Rational>> found;
    for (const auto& x : sol.solutions) {
      for (const auto& p : s.polys) c.require(to_k(p).eval(x).is_zero(), where + ": solution does not re-substitute to 0");
      std::vector<Rational> r;
      for (const auto& v : x)
        if (v.is_rational()) r.push_back(v.rational());
      if (r.size() == x.size()) found.insert(r);
    }
    c.require(found == oracle && sol.solutions.size() == oracle.size(), where + ": solution set differs from the grid oracle");
  }
}

void group_closures(Check& c) {
  size_t groups = 0;
  for (const char* type : {"G2", "F4", "E6"})
    for (const auto& label : orbit_labels(type)) {
      OrbitQuery q;
      q.algebra = type;
      q.orbit = label;
      auto r = compute_record(q);
      ++groups;
      c.require(verify_closure(r.group), std::string(type) + " " + label + ": closure fails");
    }
  c.note = "group closure verified for " + std::to_string(groups) + " exceptional orbits";
}

CriterionResult properties() {
  return run("7-properties", "property suites: Jacobi, Killing, canonical relations, dominant reps, Groebner, closure",
             [](Check& c) {
               jacobi_and_killing(c);
               canonical_generator_relations(c);
               dominant_properties(c);
               groebner_properties(c);
               group_closures(c);
             });
}

CriterionResult e7_e8_not_gated() {
  CriterionResult r{"8-e7-e8", "E7/E8 not acceptance-gated", "skipped",
                    "no E7/E8 fixtures are shipped; the shared machinery is exercised by criteria 5-7", 0};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"classical", "exceptional-structural", "exceptional-groups", "properties", "stretch"};
}

std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "classical") return {b2_example(), classical_sweep(default_sweep())};
  if (suite == "exceptional-structural") {
    return {f4_structural(), run("5a-e6-structural", "E6 structural rows", [](Check& c) {
              check_structural_table(c, "E6");
              c.note = "3 rows matched";
            })};
  }
  if (suite == "exceptional-groups") {
    std::vector<CriterionResult> out{g2_complete(), e6_suite()};
    out.push_back(run("4b-f4-groups", "F4 component groups against the table", [](Check& c) {
      auto rows = nontrivial_records("F4");
      for (const auto& d : diff_table(rows, builtin_table("F4"))) c.require(false, d);
      c.note = std::to_string(rows.size()) + " nontrivial orbits matched";
    }));
    out.push_back(opt.stretch ? f4a3_stretch() : CriterionResult{"6-f4a3-stretch", "F4(a3) Bruhat cell run", "skipped",
                                                                  "flag-gated; pass --stretch", 0});
    return out;
  }
  if (suite == "properties") return {properties(), e7_e8_not_gated()};
  if (suite == "stretch") return {f4a3_stretch()};
  throw std::invalid_argument("unknown suite " + suite);
}

std::vector<CriterionResult> verify_algebra(const std::string& algebra) {
  std::vector<CriterionResult> out;
  if (auto series = classical_series(algebra)) {
    if (series->kind == FormKind::Symmetric && series->n == 5) out.push_back(b2_example());
    out.push_back(classical_sweep({{series->n, series->kind}}));
    return out;
  }
  auto table = builtin_table(algebra);
  if (!table.empty()) {
    out.push_back(run("structural-" + algebra, algebra + " structural rows", [&](Check& c) {
      check_structural_table(c, algebra);
      c.note = std::to_string(table.size()) + " rows matched";
    }));
    out.push_back(run("groups-" + algebra, algebra + " component groups against the table", [&](Check& c) {
      auto rows = nontrivial_records(algebra);
      for (const auto& d : diff_table(rows, table)) c.require(false, d);
      c.note = std::to_string(rows.size()) + " nontrivial orbits matched";
    }));
    return out;
  }
  out.push_back(run("groups-" + algebra, algebra + " component groups are closed", [&](Check& c) {
    size_t nontrivial = 0, total = 0;
    for (const auto& label : orbit_labels(algebra)) {
      OrbitQuery q;
      q.algebra = algebra;
      q.orbit = label;
      auto r = compute_record(q);
      ++total;
      nontrivial += r.group.order() > 1;
      c.require(verify_closure(r.group), label + ": closure fails");
      if (!r.ok()) {
        c.inconclusive = true;
        c.note = label + " inconclusive";
      }
    }
    if (c.note.empty())
      c.note = nontrivial == 0 ? "vacuous: no nontrivial component groups among " + std::to_string(total) + " orbits"
                               : std::to_string(nontrivial) + " nontrivial groups among " + std::to_string(total) + " orbits";
  }));
  return out;
}

int exit_code(const std::vector<CriterionResult>& results) {
  bool inconclusive = false;
  for (const auto& r : results) {
    if (r.outcome == "fail") return 1;
    inconclusive = inconclusive || r.outcome == "inconclusive";
  }
  return inconclusive ? 2 : 0;
}

std::string report_json(const std::vector<CriterionResult>& results) {
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& r : results)
    crit.push_back({{"id", r.id}, {"title", r.title}, {"outcome", r.outcome}, {"detail", r.detail}});
  nlohmann::json j{{"schema", "nilcent.verify/1"}, {"criteria", crit}, {"exit_code", exit_code(results)}};
  return j.dump(1);
}

}  // namespace nilcent
