#include <doctest.h>

#include "cubepaths/flow_model.hpp"
#include "test_util.hpp"

using namespace cubepaths;
using testutil::loop_complex;

namespace {

std::set<std::string> full_boundary_words(int n) {
  std::set<std::string> cells;
  for (const std::string& w : all_words(n))
    if (word_dim(w) < n) cells.insert(w);
  return cells;
}

}  // namespace

TEST_CASE("cube path spaces are contractible in a single grade") {
  for (int n = 1; n <= 4; ++n) {
    const PrecubicalSet K = standard_cube(n);
    const PathSpaceModel m =
        path_space_model(K, *K.find(0, std::string(n, '0')),
                         *K.find(0, std::string(n, '1')), std::nullopt);
    CHECK(m.natural_bound);
    CHECK(m.bound == n);
    REQUIRE(m.grades.size() == 1);
    REQUIRE(m.grades.count(n) == 1);
    const GradeModel& gm = m.grades.at(n);
    CHECK(gm.components == 1);
    REQUIRE(!gm.hom.betti.empty());
    CHECK(gm.hom.betti[0] == 1);
    for (std::size_t k = 1; k < gm.hom.betti.size(); ++k)
      CHECK(gm.hom.betti[k] == 0);
    CHECK(m.pi0_total == 1);
  }
}

TEST_CASE("boundary square: two rigid interleavings") {
  const PrecubicalSet K = boundary_cube(2);
  const PathSpaceModel m = path_space_model(K, *K.find(0, "00"),
                                            *K.find(0, "11"), std::nullopt);
  CHECK(m.pi0_total == 2);
  REQUIRE(m.grades.count(2) == 1);
  const GradeModel& gm = m.grades.at(2);
  CHECK(gm.components == 2);
  CHECK(gm.hom.betti == std::vector<int>{2});  // two contractible points
}

TEST_CASE("sphere model grade") {
  const Amalgam glued = amalgam(3, full_boundary_words(3));
  const PrecubicalSet& K = glued.complex;
  const PathSpaceModel m = path_space_model(K, *K.find(0, "000"),
                                            *K.find(0, "111"), std::nullopt);
  REQUIRE(m.grades.count(3) == 1);
  CHECK(m.grades.at(3).hom.betti == std::vector<int>{1, 0, 1});
  CHECK(m.pi0_total == 1);
}

TEST_CASE("loop complex grading") {
  const PrecubicalSet K = loop_complex();
  const CellId v = *K.find(0, "v");
  CHECK_THROWS_AS(path_space_model(K, v, v, std::nullopt),
                  std::invalid_argument);
  const PathSpaceModel m = path_space_model(K, v, v, 5);
  CHECK(!m.natural_bound);
  CHECK(m.bound == 5);
  REQUIRE(m.grades.size() == 5);
  for (int n = 1; n <= 5; ++n) {
    REQUIRE(m.grades.count(n) == 1);
    CHECK(m.grades.at(n).components == 1);
    CHECK(m.grades.at(n).category.objects.size() == 1);
  }
  CHECK(m.pi0_total == 5);
}

TEST_CASE("natural cube flow") {
  const FlowModel flow = natural_cube_flow(2);
  SUBCASE("one step: single contractible component") {
    const PathSpaceModel& m = flow.path_spaces.at({"00", "10"});
    CHECK(m.pi0_total == 1);
    REQUIRE(m.grades.count(1) == 1);
    CHECK(m.grades.at(1).hom.betti[0] == 1);
  }
  SUBCASE("incomparable endpoints give the empty space") {
    const PathSpaceModel& m = flow.path_spaces.at({"10", "01"});
    CHECK(m.grades.empty());
    CHECK(m.pi0_total == 0);
  }
  SUBCASE("no constant paths: alpha to alpha is empty") {
    for (const auto& v : {"00", "01", "10", "11"}) {
      const PathSpaceModel& m = flow.path_spaces.at({v, v});
      CHECK(m.grades.empty());
    }
  }
  SUBCASE("full diagonal of the 3-cube is contractible") {
    const FlowModel f3 = natural_cube_flow(3);
    const PathSpaceModel& m = f3.path_spaces.at({"000", "111"});
    REQUIRE(m.grades.count(3) == 1);
    CHECK(m.grades.at(3).components == 1);
    CHECK(m.grades.at(3).hom.betti[0] == 1);
  }
}

TEST_CASE("composition of path classes") {
  SUBCASE("two unit edges concatenate to the unique grade-2 class") {
    const PrecubicalSet K = chain_cube({1, 1});
    const auto e1 = enumerate_chains(K, *K.find(0, "1:0"), *K.find(0, "1:1"),
                                     1).at(1)[0];
    const auto e2 = enumerate_chains(K, *K.find(0, "1:1"), *K.find(0, "2:1"),
                                     1).at(1)[0];
    const CubeChain both = compose_classes(K, e1, e2);
    const auto all2 =
        enumerate_chains(K, *K.find(0, "1:0"), *K.find(0, "2:1"), 2).at(2);
    REQUIRE(all2.size() == 1);
    CHECK(both == all2[0]);
  }
  SUBCASE("loop edge composed with itself is the grade-2 loop class") {
    const PrecubicalSet K = loop_complex();
    const CellId v = *K.find(0, "v");
    const CubeChain e = enumerate_chains(K, v, v, 1).at(1)[0];
    const CubeChain ee = compose_classes(K, e, e);
    CHECK(ee == enumerate_chains(K, v, v, 2).at(2)[0]);
  }
  SUBCASE("grading is respected") {
    const PrecubicalSet K = chain_cube({2, 1});
    const auto sq = enumerate_chains(K, *K.find(0, "1:00"),
                                     *K.find(0, "1:11"), 2).at(2)[0];
    const auto e = enumerate_chains(K, *K.find(0, "1:11"), *K.find(0, "2:1"),
                                    1).at(1)[0];
    CHECK(compose_classes(K, sq, e).grade() == 3);
  }
}

TEST_CASE("pi0 composition is well-defined on components") {
  // if x ~ x' then x*y ~ x'*y, exhaustively on a small corpus
  const PrecubicalSet K = chain_cube({2, 1});
  const CellId a = *K.find(0, "1:00");
  const CellId b = *K.find(0, "1:11");
  const CellId c = *K.find(0, "2:1");
  const ChainCategory left_cat = build_category(K, a, b, 2);
  const ChainCategory right = build_category(K, b, c, 1);
  const ChainCategory target = build_category(K, a, c, 3);

  auto component_of = [](const ChainCategory& cat, const CubeChain& object) {
    const auto comps = pi0(cat);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (int idx : comps[i])
        if (cat.objects[idx] == object) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
  };
  for (const auto& x : left_cat.objects)
    for (const auto& xp : left_cat.objects) {
      if (component_of(left_cat, x) != component_of(left_cat, xp)) continue;
      for (const auto& y : right.objects)
        CHECK(component_of(target, compose_classes(K, x, y)) ==
              component_of(target, compose_classes(K, xp, y)));
    }
}

TEST_CASE("reachability and deadlocks") {
  // two edges out of a fork; one branch dead-ends
  PcsBuilder builder;
  builder.cell("s", 0).cell("m", 0).cell("t", 0).cell("d", 0);
  builder.cell("a", 1).cell("b", 1).cell("c", 1);
  builder.face("a", 1, 0, "s").face("a", 1, 1, "m");
  builder.face("b", 1, 0, "m").face("b", 1, 1, "t");
  builder.face("c", 1, 0, "m").face("c", 1, 1, "d");
  const PrecubicalSet K = builder.build();
  REQUIRE(validate(K).ok());
  const CellId s = *K.find(0, "s"), t = *K.find(0, "t");
  CHECK(reachable_vertices(K, s).size() == 4);
  const auto dead = deadlock_vertices(K, s, t);
  REQUIRE(dead.size() == 1);
  CHECK(K.id(dead[0]) == "d");
}

TEST_CASE("pathspace report format") {
  const PrecubicalSet K = boundary_cube(2);
  const PathSpaceModel m = path_space_model(K, *K.find(0, "00"),
                                            *K.find(0, "11"), std::nullopt);
  CHECK(pathspace_report(K, m) ==
        "pathspace v1\n"
        "source 00\n"
        "target 11\n"
        "bound 2 natural\n"
        "grade 2: objects 2 morphisms 0 pi0 2 betti 2\n"
        "pi0 = 2\n");
}
