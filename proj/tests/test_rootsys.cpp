#include <doctest.h>

#include <random>

#include "nilcent/rootsys.hpp"

using namespace nilcent;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("positive root counts and Weyl group orders") {
  struct Row {
    const char* label;
    size_t npos;
    long long order;
  };
  std::vector<Row> rows = {
      {"A1", 1, 2},         {"A2", 3, 6},        {"A4", 10, factorial(5)}, {"B2", 4, 8},
      {"B3", 9, 48},        {"C3", 9, 48},       {"C4", 16, 384},          {"D4", 12, 192},
      {"D5", 20, 1920},     {"G2", 6, 12},       {"F4", 24, 1152},         {"E6", 36, 51840},
      {"A1+A2", 4, 12},     {"2A1", 2, 4},
  };
  for (const auto& r : rows) {
    CAPTURE(r.label);
    RootSystem rs = RootSystem::from_label(r.label);
    CHECK(rs.num_positive() == r.npos);
    CHECK(static_cast<long long>(weyl_group_words(rs).size()) == r.order);
  }
  CHECK(RootSystem::from_label("E7").num_positive() == 63);
  CHECK(RootSystem::from_label("E8").num_positive() == 120);
}

TEST_CASE("highest root heights equal Coxeter number minus one") {
  std::vector<std::pair<const char*, long long>> rows = {{"A5", 5}, {"B4", 7}, {"C4", 7}, {"D5", 7},
                                                         {"G2", 5}, {"F4", 11}, {"E6", 11}, {"E8", 29}};
  for (auto [l, h] : rows) {
    RootSystem rs = RootSystem::from_label(l);
    CHECK(RootSystem::height(rs.positive_roots().back()) == h);
  }
}

TEST_CASE("type identification recovers Bourbaki numbering") {
  for (const char* l : {"A3", "B3", "C3", "D4", "D5", "E6", "E7", "F4", "G2", "B2"}) {
    auto std = cartan_from_label(l);
    // scramble by reversing the node order
    size_t n = std.size();
    CartanMatrix rev(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) rev[i][j] = std[n - 1 - i][n - 1 - j];
    auto comps = identify_cartan(rev);
    REQUIRE(comps.has_value());
    REQUIRE(comps->size() == 1);
    CHECK((*comps)[0].label() == std::string(l));
    const auto& nodes = (*comps)[0].nodes;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) CHECK(rev[static_cast<size_t>(nodes[i])][static_cast<size_t>(nodes[j])] == std[i][j]);
  }
  CHECK(canonical_type_label("A2+A1+A1") == "2A1+A2");
  CHECK(canonical_type_label("C2") == "B2");
  CHECK(cartan_symmetries(cartan_from_label("D4")).size() == 6);
  CHECK(cartan_symmetries(cartan_from_label("2A2")).size() == 8);
  CHECK(cartan_symmetries(cartan_from_label("F4")).size() == 1);
}

TEST_CASE("coroots and root strings") {
  RootSystem g2 = RootSystem::from_label("G2");
  // long simple root alpha_2, short alpha_1; 3a1+2a2 is long so its coroot is a1^v + 2 a2^v
  CHECK(g2.coroot({3, 2}) == IVec{1, 2});
  CHECK(g2.coroot({1, 1}) == IVec{1, 3});
  CHECK(g2.string_down({3, 1}, 0) == 3);
  RootSystem b2 = RootSystem::from_label("B2");
  CHECK(b2.coroot({1, 2}) == IVec{1, 1});
}

TEST_CASE("dominant representative is idempotent and independent of Weyl translate") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-6, 6), den(1, 3);
  for (const char* l : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    CAPTURE(l);
    RootSystem rs = RootSystem::from_label(l);
    auto words = weyl_group_words(rs);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int it = 0; it < 100; ++it) {
      CoVec h(rs.rank());
      for (auto& x : h) x = Rational(coef(rng), den(rng));
      auto d = dominant_representative(rs, h);
      for (const auto& v : simple_values(rs, d.h)) CHECK(v.sign() >= 0);
      CHECK(apply_word(rs, h, d.word) == d.h);
      auto dd = dominant_representative(rs, d.h);
      CHECK(dd.h == d.h);
      CHECK(dd.word.empty());
      CoVec moved = apply_word(rs, h, words[pick(rng)]);
      CHECK(dominant_representative(rs, moved).h == d.h);
    }
  }
}
