#include <doctest.h>

#include <algorithm>

#include "cubepaths/cube_chains.hpp"
#include "test_util.hpp"

using namespace cubepaths;
using testutil::loop_complex;

namespace {

std::vector<std::string> chain_ids(const PrecubicalSet& K,
                                   const CubeChain& chain) {
  std::vector<std::string> out;
  for (const CellId& c : chain.cells) out.push_back(K.id(c));
  return out;
}

CubeChain chain_of(const PrecubicalSet& K,
                   const std::vector<std::string>& ids) {
  CubeChain chain;
  for (const auto& id : ids) {
    for (int d = 1; d <= K.top_dim(); ++d)
      if (auto c = K.find(d, id)) {
        chain.cells.push_back(*c);
        break;
      }
  }
  REQUIRE(chain.cells.size() == ids.size());
  return chain;
}

long long factorial(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

TEST_CASE("chain enumeration in the square") {
  const PrecubicalSet K = standard_cube(2);
  const CellId a = *K.find(0, "00"), b = *K.find(0, "11");
  auto grades = enumerate_chains(K, a, b, 2);
  REQUIRE(grades.count(2) == 1);
  REQUIRE(grades.size() == 1);  // no grade-1 chains 00 -> 11
  const auto& objects = grades[2];
  REQUIRE(objects.size() == 3);
  CHECK(chain_ids(K, objects[0]) == std::vector<std::string>{"**"});
  CHECK(chain_ids(K, objects[1]) == std::vector<std::string>{"*0", "1*"});
  CHECK(chain_ids(K, objects[2]) == std::vector<std::string>{"0*", "*1"});
}

TEST_CASE("chain enumeration oracles") {
  SUBCASE("boundary of the square: the two interleavings") {
    const PrecubicalSet K = boundary_cube(2);
    auto grades =
        enumerate_chains(K, *K.find(0, "00"), *K.find(0, "11"), 2);
    CHECK(grades[2].size() == 2);
  }
  SUBCASE("3-cube: 1 + 6 + 6 objects in grade 3") {
    const PrecubicalSet K = standard_cube(3);
    auto grades =
        enumerate_chains(K, *K.find(0, "000"), *K.find(0, "111"), 3);
    REQUIRE(grades.count(3) == 1);
    CHECK(grades[3].size() == 13);
    int singles = 0, pairs = 0, triples = 0;
    for (const auto& chain : grades[3]) {
      if (chain.cells.size() == 1) ++singles;
      if (chain.cells.size() == 2) ++pairs;
      if (chain.cells.size() == 3) ++triples;
    }
    CHECK(singles == 1);
    CHECK(pairs == 6);
    CHECK(triples == 6);
  }
  SUBCASE("maximal chains of the n-cube are the n! edge chains") {
    for (int n = 1; n <= 4; ++n) {
      const PrecubicalSet K = standard_cube(n);
      auto grades = enumerate_chains(K, *K.find(0, std::string(n, '0')),
                                     *K.find(0, std::string(n, '1')), n);
      long long edge_chains = 0;
      for (const auto& chain : grades[n])
        if (static_cast<int>(chain.cells.size()) == n) ++edge_chains;
      CHECK(edge_chains == factorial(n));
    }
  }
  SUBCASE("loop complex has one chain per grade") {
    const PrecubicalSet K = loop_complex();
    const CellId v = *K.find(0, "v");
    auto grades = enumerate_chains(K, v, v, 5);
    for (int n = 1; n <= 5; ++n) {
      REQUIRE(grades.count(n) == 1);
      CHECK(grades[n].size() == 1);
      CHECK(grades[n][0].cells.size() == static_cast<std::size_t>(n));
    }
  }
  SUBCASE("unknown vertices are rejected") {
    const PrecubicalSet K = standard_cube(1);
    CHECK_THROWS_AS(enumerate_chains(K, CellId{0, 9}, CellId{0, 0}, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("hom witnesses in the square") {
  const PrecubicalSet K = standard_cube(2);
  const CubeChain coarse = chain_of(K, {"**"});
  SUBCASE("bottom-right edge pair") {
    const auto ws = hom(K, chain_of(K, {"*0", "1*"}), coarse);
    REQUIRE(ws.size() == 1);
    CHECK(witness_string(ws[0]) == "({1}{2})");
  }
  SUBCASE("left-top edge pair") {
    const auto ws = hom(K, chain_of(K, {"0*", "*1"}), coarse);
    REQUIRE(ws.size() == 1);
    CHECK(witness_string(ws[0]) == "({2}{1})");
  }
  SUBCASE("no morphisms between the two edge pairs") {
    CHECK(hom(K, chain_of(K, {"*0", "1*"}), chain_of(K, {"0*", "*1"})).empty());
    const PrecubicalSet B = boundary_cube(2);
    CHECK(hom(B, chain_of(B, {"*0", "1*"}), chain_of(B, {"0*", "*1"})).empty());
  }
  SUBCASE("hom(a,a) is the identity alone") {
    const auto ws = hom(K, coarse, coarse);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].is_identity());
  }
  SUBCASE("witness block cells are the mixed iterated faces") {
    const auto ws = hom(K, chain_of(K, {"*0", "1*"}), coarse);
    const CellId top = *K.find(2, "**");
    CHECK(K.id(witness_block_cell(K, top, ws[0].parts[0], 0)) == "*0");
    CHECK(K.id(witness_block_cell(K, top, ws[0].parts[0], 1)) == "1*");
  }
}

TEST_CASE("category of the square") {
  const PrecubicalSet K = standard_cube(2);
  const ChainCategory C =
      build_category(K, *K.find(0, "00"), *K.find(0, "11"), 2);
  CHECK(C.objects.size() == 3);
  CHECK(C.morphisms.size() == 2);
  for (const auto& m : C.morphisms) CHECK(m.dst == 0);  // into the 1-cube chain
  CHECK(C.nonthin_pairs.empty());
  CHECK(C.endomorphisms.empty());
  const auto terminal = has_terminal(C);
  REQUIRE(terminal.has_value());
  CHECK(chain_ids(K, C.objects[*terminal]) == std::vector<std::string>{"**"});
}

TEST_CASE("category of the boundary of the 3-cube is a 12-cycle") {
  const PrecubicalSet K = boundary_cube(3);
  const ChainCategory C =
      build_category(K, *K.find(0, "000"), *K.find(0, "111"), 3);
  CHECK(C.objects.size() == 12);
  CHECK(C.morphisms.size() == 12);
  CHECK(!has_terminal(C).has_value());
  CHECK(C.nonthin_pairs.empty());
  CHECK(C.endomorphisms.empty());
  // every edge triple refines exactly two 2-cube chains, every 2-cube chain
  // is refined by exactly two triples, and the graph is a single cycle
  std::vector<int> out_deg(12, 0), in_deg(12, 0);
  for (const auto& m : C.morphisms) {
    ++out_deg[m.src];
    ++in_deg[m.dst];
  }
  for (int i = 0; i < 12; ++i) {
    const bool is_triple = C.objects[i].cells.size() == 3;
    CHECK(out_deg[i] == (is_triple ? 2 : 0));
    CHECK(in_deg[i] == (is_triple ? 0 : 2));
  }
}

TEST_CASE("trivial categories") {
  const PrecubicalSet K1 = standard_cube(1);
  const ChainCategory C1 =
      build_category(K1, *K1.find(0, "0"), *K1.find(0, "1"), 1);
  CHECK(C1.objects.size() == 1);
  CHECK(C1.morphisms.empty());
  CHECK(has_terminal(C1).has_value());

  const PrecubicalSet B = boundary_cube(2);
  const ChainCategory CB =
      build_category(B, *B.find(0, "00"), *B.find(0, "11"), 2);
  CHECK(CB.objects.size() == 2);
  CHECK(CB.morphisms.empty());
  CHECK(!has_terminal(CB).has_value());
}

TEST_CASE("cube categories have the single-cube chain as terminal object") {
  for (int n = 1; n <= 4; ++n) {
    const PrecubicalSet K = standard_cube(n);
    const ChainCategory C = build_category(K, *K.find(0, std::string(n, '0')),
                                           *K.find(0, std::string(n, '1')), n);
    const auto terminal = has_terminal(C);
    REQUIRE(terminal.has_value());
    CHECK(C.objects[*terminal].cells.size() == 1);
    // exactly one morphism from every other object to the terminal one
    for (int a = 0; a < static_cast<int>(C.objects.size()); ++a) {
      if (a == *terminal) continue;
      int arrows = 0;
      for (const auto& m : C.morphisms)
        if (m.src == a && m.dst == *terminal) ++arrows;
      CHECK(arrows == 1);
    }
  }
}

TEST_CASE("morphisms preserve grade and endpoints") {
  const PrecubicalSet K = boundary_cube(3);
  const ChainCategory C =
      build_category(K, *K.find(0, "000"), *K.find(0, "111"), 3);
  for (const auto& m : C.morphisms) {
    const CubeChain& a = C.objects[m.src];
    const CubeChain& b = C.objects[m.dst];
    CHECK(a.grade() == b.grade());
    CHECK(chain_from(K, a) == chain_from(K, b));
    CHECK(chain_to(K, a) == chain_to(K, b));
    // witness blocks reproduce the fine cubes
    std::size_t fine = 0;
    for (std::size_t j = 0; j < b.cells.size(); ++j)
      for (std::size_t r = 0; r < m.witness.parts[j].blocks.size(); ++r)
        CHECK(witness_block_cell(K, b.cells[j], m.witness.parts[j],
                                 static_cast<int>(r)) == a.cells[fine++]);
    CHECK(fine == a.cells.size());
  }
}

TEST_CASE("concat") {
  const PrecubicalSet K = chain_cube({1, 1});
  const CubeChain e1 = chain_of(K, {"1:*"});
  const CubeChain e2 = chain_of(K, {"2:*"});
  SUBCASE("grades add and the result is the unique grade-2 chain") {
    const CubeChain both = concat(K, e1, e2);
    CHECK(both.grade() == 2);
    const auto grades =
        enumerate_chains(K, *K.find(0, "1:0"), *K.find(0, "2:1"), 2);
    REQUIRE(grades.count(2) == 1);
    REQUIRE(grades.at(2).size() == 1);
    CHECK(both == grades.at(2)[0]);
  }
  SUBCASE("associative, byte-identically") {
    const PrecubicalSet K3 = chain_cube({1, 2, 1});
    const CubeChain a = chain_of(K3, {"1:*"});
    const CubeChain b = chain_of(K3, {"2:**"});
    const CubeChain c = chain_of(K3, {"3:*"});
    CHECK(concat(K3, concat(K3, a, b), c) == concat(K3, a, concat(K3, b, c)));
  }
  SUBCASE("endpoint mismatch") {
    CHECK_THROWS_AS(concat(K, e2, e1), std::invalid_argument);
  }
  SUBCASE("grade 1 concat grade 2 lands in grade 3") {
    const PrecubicalSet K3 = chain_cube({1, 2});
    const CubeChain a = chain_of(K3, {"1:*"});
    const CubeChain b = chain_of(K3, {"2:**"});
    CHECK(concat(K3, a, b).grade() == 3);
  }
}

TEST_CASE("concat is functorial on refinements") {
  // refine the second factor: square -> edge pair, concatenated with an edge
  const PrecubicalSet K = chain_cube({1, 2});
  const CubeChain edge = chain_of(K, {"1:*"});
  const CubeChain coarse = chain_of(K, {"2:**"});
  const CubeChain fine = chain_of(K, {"2:*0", "2:1*"});
  const auto ws = hom(K, fine, coarse);
  REQUIRE(ws.size() == 1);

  const CubeChain cat_fine = concat(K, edge, fine);
  const CubeChain cat_coarse = concat(K, edge, coarse);
  RefinementWitness identity_edge;
  identity_edge.parts.push_back(OrderedPartition{{{1}}});
  const RefinementWitness glued = concat_witness(identity_edge, ws[0]);
  // the concatenated witness is exactly the hom witness of the concatenation
  const auto glued_hom = hom(K, cat_fine, cat_coarse);
  REQUIRE(glued_hom.size() == 1);
  CHECK(glued == glued_hom[0]);
}

TEST_CASE("composition table composes witnesses blockwise") {
  // inside the 3-cube: triple -> (edge, square) -> single cube
  const PrecubicalSet K = standard_cube(3);
  const ChainCategory C =
      build_category(K, *K.find(0, "000"), *K.find(0, "111"), 3);
  int checked = 0;
  for (const auto& [pair, composite] : C.composition) {
    const auto& f = C.morphisms[pair.first];
    const auto& g = C.morphisms[pair.second];
    REQUIRE(f.dst == g.src);
    if (composite >= 0) {
      const auto& h = C.morphisms[composite];
      CHECK(h.src == f.src);
      CHECK(h.dst == g.dst);
      const RefinementWitness direct = compose_witness(
          K, C.objects[f.src], C.objects[g.src], C.objects[g.dst], f.witness,
          g.witness);
      CHECK(direct == h.witness);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("natural grade bound") {
  const PrecubicalSet cube = standard_cube(3);
  CHECK(natural_grade_bound(cube, *cube.find(0, "000"),
                            *cube.find(0, "111")) == 3);
  CHECK(natural_grade_bound(cube, *cube.find(0, "111"),
                            *cube.find(0, "000")) == 0);  // unreachable
  const PrecubicalSet loop = loop_complex();
  CHECK(!natural_grade_bound(loop, *loop.find(0, "v"), *loop.find(0, "v"))
           .has_value());
  const PrecubicalSet chain = chain_cube({2, 1});
  CHECK(natural_grade_bound(chain, *chain.find(0, "1:00"),
                            *chain.find(0, "2:1")) == 3);
}

TEST_CASE("chains v1 report is canonical") {
  const PrecubicalSet K = standard_cube(2);
  std::map<int, ChainCategory> per_grade;
  per_grade.emplace(2,
                    build_category(K, *K.find(0, "00"), *K.find(0, "11"), 2));
  const std::string report = chains_report(K, per_grade);
  CHECK(report ==
        "chains v1\n"
        "grade 2\n"
        "object 0 : **\n"
        "object 1 : *0,1*\n"
        "object 2 : 0*,*1\n"
        "mor 1 -> 0 : ({1}{2})\n"
        "mor 2 -> 0 : ({2}{1})\n");
}
