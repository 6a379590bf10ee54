#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "artin/morse.hpp"

#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "artin/catalog.hpp"
#include "doctest.h"

using namespace artin;

namespace {

Simplex labels(std::initializer_list<int> vs) {
  Simplex s;
  for (int v : vs) s = s.with(v - 1);
  return s;
}

Matching empty_matching() {
  return Matching([](Simplex) { return std::nullopt; });
}

// matching from an explicit pair list
Matching table_matching(std::vector<std::pair<Simplex, Simplex>> pairs) {
  auto map = std::make_shared<std::map<Simplex, Simplex>>();
  for (auto [a, b] : pairs) {
    (*map)[a] = b;
    (*map)[b] = a;
  }
  return Matching([map](Simplex s) -> std::optional<Simplex> {
    auto it = map->find(s);
    if (it == map->end()) return std::nullopt;
    return it->second;
  });
}

}  // namespace

TEST_CASE("verify_acyclic") {
  SUBCASE("empty matching is acyclic") {
    CHECK(verify_acyclic(CoxeterGraph::type_A(3), empty_matching()));
  }
  SUBCASE("the K_{5,1} d=3 matching is acyclic") {
    auto g = CoxeterGraph::type_A(5);
    CHECK(verify_acyclic(g, matching_A(5, 1, 3)));
  }
  SUBCASE("classic two-pair cycle on a square is rejected") {
    // cycle graph on 4 vertices as a simplicial complex; match each vertex
    // with the edge to its clockwise neighbor
    std::vector<Simplex> poset{Simplex(),          simplex_of({0}),    simplex_of({1}),
                               simplex_of({2}),    simplex_of({3}),    simplex_of({0, 1}),
                               simplex_of({1, 2}), simplex_of({2, 3}), simplex_of({0, 3})};
    auto m = table_matching({{simplex_of({0}), simplex_of({0, 1})},
                             {simplex_of({1}), simplex_of({1, 2})},
                             {simplex_of({2}), simplex_of({2, 3})},
                             {simplex_of({3}), simplex_of({0, 3})}});
    CHECK(!verify_acyclic(poset, m));
  }
  SUBCASE("pairing violations throw") {
    auto bad = Matching([](Simplex s) -> std::optional<Simplex> { return Simplex(s.bits ^ 3u); });
    CHECK_THROWS_AS(verify_acyclic(CoxeterGraph::type_A(2), bad), NotAMatching);
    auto drift = Matching(
        [](Simplex s) -> std::optional<Simplex> { return Simplex(((s.bits << 1) | 1) & 7u); });
    CHECK_THROWS_AS(verify_acyclic(CoxeterGraph::type_A(3), drift), NotAMatching);
  }
}

TEST_CASE("verify_weighted") {
  SUBCASE("B_n with d odd: toggle vertex 1") {
    for (int n = 1; n <= 5; ++n)
      for (int d = 3; d <= 9; d += 2)
        CHECK(verify_weighted(CoxeterGraph::type_B(n), matching_B(n, d), d));
  }
  SUBCASE("the same toggle fails at d=4 on B_2") {
    auto toggle1 = Matching([](Simplex s) -> std::optional<Simplex> { return s.toggled(0); });
    CHECK(!verify_weighted(CoxeterGraph::type_B(2), toggle1, 4));
    CHECK(weight_exponent(CoxeterGraph::type_B(2), labels({1, 2}), 4) == 1);
    CHECK(weight_exponent(CoxeterGraph::type_B(2), labels({2}), 4) == 0);
  }
  SUBCASE("empty matching is weighted") {
    CHECK(verify_weighted(CoxeterGraph::type_A(4), empty_matching(), 3));
  }
}

TEST_CASE("alternating paths") {
  SUBCASE("B_10, d=4: a single path of length 3 from sigma'_2 to sigma_0") {
    const int n = 10, d = 4;
    auto g = CoxeterGraph::type_B(n);
    Simplex from = parse_bitstring("1111010101");  // sigma'_2
    Simplex to = parse_bitstring("0101010111");    // sigma_0
    auto m = matching_B(n, d);
    auto poset = spherical_complex(g);
    auto paths = alternating_paths(poset, m, from, to);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length() == 3);
    CHECK(morse_incidence(poset, m, from, to) == paths[0].sign);
    CHECK(std::abs(paths[0].sign) == 1);
  }
  SUBCASE("tA_n: the two paths from tau'_{q+1} to tau_q cancel") {
    const int n = 7, d = 3;  // n = 2d + 1: k = 2, r = 1
    auto g = CoxeterGraph::affine_A(n);
    auto m = matching_tA(n, d);
    auto poset = spherical_complex(g);
    Simplex tau_p1 = parse_bitstring("11110100");  // tau'_1
    Simplex tau_0 = parse_bitstring("10110100");   // tau_0
    auto paths = alternating_paths(poset, m, tau_p1, tau_0);
    CHECK(paths.size() == 2);
    CHECK(morse_incidence(poset, m, tau_p1, tau_0) == 0);
  }
  SUBCASE("trivial path only for facet pairs under the empty matching") {
    auto poset = spherical_complex(CoxeterGraph::type_A(3));
    auto m = empty_matching();
    auto paths = alternating_paths(poset, m, labels({1, 2}), labels({2}));
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].length() == 0);
    CHECK(paths[0].sign == incidence(labels({1, 2}), labels({2})));
    CHECK(alternating_paths(poset, m, labels({1, 2}), labels({3})).empty());
  }
}

TEST_CASE("morse_complex") {
  SUBCASE("A_3, d=3: two cells with incidence of absolute value 1") {
    auto g = CoxeterGraph::type_A(3);
    auto mc = morse_complex(g, matching_A(3, 0, 3), 3);
    REQUIRE(mc.top_degree() == 2);
    REQUIRE(mc.dim(2) == 1);
    REQUIRE(mc.dim(1) == 1);
    CHECK(mc.cells[2][0].cell == parse_bitstring("011"));
    CHECK(mc.cells[2][0].exponent == 1);
    CHECK(mc.cells[1][0].cell == parse_bitstring("010"));
    CHECK(mc.cells[1][0].exponent == 0);
    CHECK(std::abs(mc.boundary[2][0][0]) == 1);
  }
  SUBCASE("B_4, d=4: the four critical cells of the table") {
    auto g = CoxeterGraph::type_B(4);
    auto mc = morse_complex(g, matching_B(4, 4), 4);
    std::vector<Simplex> got;
    for (const auto& level : mc.cells)
      for (const auto& c : level) got.push_back(c.cell);
    // sigma'_0 = {2,4}, sigma'_1 = {1,2,4}, sigma_0 = {2,3,4}, sigma'_2 = full
    std::vector<Simplex> expected{labels({2, 4}), labels({1, 2, 4}), labels({2, 3, 4}),
                                  labels({1, 2, 3, 4})};
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  SUBCASE("perfect matching gives an empty Morse complex") {
    auto mc = morse_complex(CoxeterGraph::type_A(4), matching_A(4, 0, 3), 3);
    CHECK(mc.top_degree() == -1);
  }
  SUBCASE("unweighted Morse boundary squares to zero") {
    std::vector<std::tuple<Family, int, int>> cases{{Family::A, 5, 3},  {Family::B, 4, 4},
                                                    {Family::tA, 4, 3}, {Family::tC, 4, 4},
                                                    {Family::tA, 5, 3}, {Family::tC, 5, 6}};
    for (auto [fam, n, d] : cases) {
      auto g = family_graph(fam, n);
      auto mc = morse_complex(g, family_matching(fam, n, d), d);
      for (size_t k = 2; k < mc.cells.size(); ++k) {
        if (mc.boundary[k].empty() || mc.boundary[k - 1].empty()) continue;
        auto prod = matmul(mc.boundary[k - 1], mc.boundary[k]);
        for (const auto& row : prod)
          for (long long x : row) CHECK(x == 0);
      }
    }
  }
  SUBCASE("matched pairs partition the non-critical cells") {
    auto g = CoxeterGraph::type_B(4);
    auto m = matching_B(4, 4);
    std::set<Simplex> seen;
    int matched = 0, critical = 0;
    for (Simplex s : spherical_complex(g)) {
      auto p = m.partner(s);
      if (!p) {
        ++critical;
        continue;
      }
      ++matched;
      CHECK(*m.partner(*p) == s);
      CHECK(!seen.count(s));
      seen.insert(s);
    }
    CHECK(matched == 12);
    CHECK(critical == 4);
  }
  SUBCASE("morse homology over Q agrees with the full complex") {
    std::vector<std::tuple<Family, int, int>> cases{{Family::A, 5, 3},
                                                    {Family::A, 6, 4},
                                                    {Family::B, 4, 4},
                                                    {Family::tA, 4, 3},
                                                    {Family::tC, 4, 4}};
    for (auto [fam, n, d] : cases) {
      auto g = family_graph(fam, n);
      auto mc = morse_complex(g, family_matching(fam, n, d), d);
      IntChainComplex as_complex;
      as_complex.basis.resize(mc.cells.size());
      as_complex.boundary = mc.boundary;
      for (size_t k = 0; k < mc.cells.size(); ++k)
        for (const auto& c : mc.cells[k]) as_complex.basis[k].push_back(c.cell);
      auto morse_ranks = homology_ranks(as_complex);
      auto full_ranks = homology_ranks(build_C0(g));
      morse_ranks.resize(std::max(morse_ranks.size(), full_ranks.size()), 0);
      full_ranks.resize(morse_ranks.size(), 0);
      CHECK(morse_ranks == full_ranks);
    }
  }
}

TEST_CASE("verify_precise") {
  SUBCASE("catalog matchings are precise") {
    auto g = CoxeterGraph::type_B(4);
    CHECK(verify_precise(morse_complex(g, matching_B(4, 4), 4)));
  }
  SUBCASE("the empty matching on A_3 at d=2 is not precise") {
    auto g = CoxeterGraph::type_A(3);
    auto mc = morse_complex(g, empty_matching(), 2);
    CHECK(!verify_precise(mc));  // e.g. {1,2} -> {1} has v 1 -> 1
  }
  SUBCASE("empty Morse complex is vacuously precise") {
    auto mc = morse_complex(CoxeterGraph::type_A(4), matching_A(4, 0, 3), 3);
    CHECK(verify_precise(mc));
  }
  SUBCASE("|sigma| - v is constant on components of precise matchings") {
    auto g = CoxeterGraph::type_B(6);
    auto mc = morse_complex(g, matching_B(6, 4), 4);
    auto comps = decompose_components(mc);
    for (size_t c = 0; c < comps.components.size(); ++c)
      for (auto [k, i] : comps.components[c])
        CHECK(mc.cells[static_cast<size_t>(k)][static_cast<size_t>(i)].exponent - k ==
              comps.offsets[c]);
  }
}

TEST_CASE("non-acyclic inputs are caught by the path machinery") {
  std::vector<Simplex> poset{Simplex(),          simplex_of({0}),    simplex_of({1}),
                             simplex_of({2}),    simplex_of({3}),    simplex_of({0, 1}),
                             simplex_of({1, 2}), simplex_of({2, 3}), simplex_of({0, 3})};
  auto m = table_matching({{simplex_of({0}), simplex_of({0, 1})},
                           {simplex_of({1}), simplex_of({1, 2})},
                           {simplex_of({2}), simplex_of({2, 3})},
                           {simplex_of({3}), simplex_of({0, 3})}});
  // no critical cells at all: ask for paths between two matched cells anyway
  CHECK_THROWS_AS(morse_incidence(poset, m, simplex_of({0, 1}), simplex_of({2})), NonTerminating);
  // an unreachable target sends the explicit enumeration around the cycle
  // until the 2|K| length guard fires
  CHECK_THROWS_AS(alternating_paths(poset, m, simplex_of({0, 1}), Simplex()), NonTerminating);
}

TEST_CASE("collapse_check") {
  CHECK(collapse_check(CoxeterGraph::type_B(4), matching_B(4, 4), 4));
  CHECK(collapse_check(CoxeterGraph::type_A(5), matching_A(5, 0, 3), 3));
  CHECK(collapse_check(CoxeterGraph::type_A(4), matching_A(4, 0, 3), 3));
  CHECK(!collapse_check(CoxeterGraph::type_A(3), empty_matching(), 2));
}

TEST_CASE("homology_L_phi") {
  SUBCASE("A_3, d=3: one R/(phi) in degree 2") {
    auto g = CoxeterGraph::type_A(3);
    auto h = homology_L_phi(morse_complex(g, matching_A(3, 0, 3), 3));
    REQUIRE(h.by_degree.size() == 3);
    CHECK(h.by_degree[0].empty());
    CHECK(h.by_degree[1].empty());
    REQUIRE(h.by_degree[2].size() == 1);
    CHECK(h.by_degree[2][0] == PhiSummand{1, 1});
  }
  SUBCASE("empty Morse complex is zero") {
    auto h = homology_L_phi(morse_complex(CoxeterGraph::type_A(4), matching_A(4, 0, 3), 3));
    CHECK(h.by_degree.empty());
  }
  SUBCASE("B_4, d=4: R/(phi) in degrees 3 and 4") {
    auto g = CoxeterGraph::type_B(4);
    auto h = homology_L_phi(morse_complex(g, matching_B(4, 4), 4));
    REQUIRE(h.by_degree.size() == 5);
    CHECK(h.by_degree[2].empty());
    REQUIRE(h.by_degree[3].size() == 1);
    CHECK(h.by_degree[3][0] == PhiSummand{1, 1});
    REQUIRE(h.by_degree[4].size() == 1);
    CHECK(h.by_degree[4][0] == PhiSummand{1, 1});
  }
  SUBCASE("non-precise input throws") {
    auto mc = morse_complex(CoxeterGraph::type_A(3), empty_matching(), 2);
    CHECK_THROWS_AS(homology_L_phi(mc), NotPrecise);
  }
}

TEST_CASE("homology_artin on A_3") {
  auto g = CoxeterGraph::type_A(3);
  auto table = homology_artin(g, [](int d) { return matching_A(3, 0, d); });
  // Br_4: R/(phi_2) in degree 0, R/(phi_3) in degree 1, R/(phi_4) in degree 2
  REQUIRE(table.torsion.size() == 3);
  CHECK(table.free_rank == std::vector<int>{0, 0, 0});
  CHECK(table.torsion[0] == std::vector<TorsionSummand>{{2, 1, 1}});
  CHECK(table.torsion[1] == std::vector<TorsionSummand>{{3, 1, 1}});
  CHECK(table.torsion[2] == std::vector<TorsionSummand>{{4, 1, 1}});
}

TEST_CASE("homology_artin keeps the affine free part") {
  auto g = CoxeterGraph::affine_A(2);
  auto table = homology_artin(g, [](int d) { return matching_tA(2, d); });
  REQUIRE(table.free_rank.size() == 3);
  CHECK(table.free_rank[2] == 1);
  CHECK(table.torsion[1] == std::vector<TorsionSummand>{{3, 1, 2}});
  CHECK(table.torsion[0] == std::vector<TorsionSummand>{{2, 1, 1}});
}
