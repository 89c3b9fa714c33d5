#include <doctest.h>

#include <sstream>

#include "cubepaths/flow_model.hpp"
#include "cubepaths/pcs_io.hpp"
#include "cubepaths/pv.hpp"
#include "cubepaths/spatiality.hpp"
#include "test_util.hpp"

using namespace cubepaths;

namespace {

const char* kSwissFlag =
    "pv v1\n"
    "sem a 1\n"
    "sem b 1\n"
    "proc X: Pa Pb Vb Va\n"
    "proc Y: Pb Pa Va Vb\n";

PvProgram parse(const std::string& text) {
  std::istringstream in(text);
  return parse_pv(in);
}

// interval chain with the compile_pv naming convention
PrecubicalSet interval_chain(int k) {
  PcsBuilder b;
  for (int v = 0; v <= k; ++v) b.cell("v" + std::to_string(v), 0);
  for (int e = 1; e <= k; ++e) {
    const std::string name = "e" + std::to_string(e);
    b.cell(name, 1);
    b.face(name, 1, 0, "v" + std::to_string(e - 1));
    b.face(name, 1, 1, "v" + std::to_string(e));
  }
  return b.build();
}

}  // namespace

TEST_CASE("pv parsing") {
  SUBCASE("the classic two-process program") {
    const PvProgram p = parse(kSwissFlag);
    CHECK(p.semaphores.at("a") == 1);
    CHECK(p.semaphores.at("b") == 1);
    REQUIRE(p.processes.size() == 2);
    CHECK(p.processes[0].name == "X");
    REQUIRE(p.processes[0].actions.size() == 4);
    CHECK(p.processes[0].actions[0].acquire);
    CHECK(p.processes[0].actions[0].semaphore == "a");
    CHECK(!p.processes[0].actions[3].acquire);
    CHECK(p.processes[1].name == "Y");
  }
  SUBCASE("empty process list is valid") {
    const PvProgram p = parse("pv v1\nsem a 2\n");
    CHECK(p.processes.empty());
    const CompiledPv c = compile_pv(p);
    CHECK(c.complex.total_cells() == 1);
    CHECK(c.initial_vertex == c.final_vertex);
  }
  SUBCASE("V with no prior P is rejected") {
    CHECK_THROWS_AS(parse("pv v1\nsem a 1\nproc X: Va\n"), FormatError);
    CHECK_THROWS_AS(parse("pv v1\nsem a 1\nproc X: Pa Va Va\n"), FormatError);
  }
  SUBCASE("unknown semaphore is rejected") {
    CHECK_THROWS_AS(parse("pv v1\nproc X: Pa\n"), FormatError);
  }
  SUBCASE("syntax errors") {
    CHECK_THROWS_AS(parse(""), FormatError);
    CHECK_THROWS_AS(parse("pv v2\n"), FormatError);
    CHECK_THROWS_AS(parse("pv v1\nsem a zero\n"), FormatError);
    CHECK_THROWS_AS(parse("pv v1\nsem a 0\n"), FormatError);
    CHECK_THROWS_AS(parse("pv v1\nsem a 1\nproc X Pa\n"), FormatError);
    CHECK_THROWS_AS(parse("pv v1\nsem a 1\nproc X: Qa\n"), FormatError);
    CHECK_THROWS_AS(parse("pv v1\nsem a 1\nsem a 2\n"), FormatError);
  }
  SUBCASE("declaration order is free") {
    const PvProgram p = parse("pv v1\nproc X: Pa Va\nsem a 1\n");
    CHECK(p.processes.size() == 1);
  }
}

TEST_CASE("compile: one process, two actions") {
  const CompiledPv c = compile_pv(parse("pv v1\nsem a 1\nproc X: Pa Va\n"));
  CHECK(validate(c.complex).ok());
  CHECK(c.complex.size(0) == 3);
  CHECK(c.complex.size(1) == 2);
  CHECK(c.complex.top_dim() == 1);
  CHECK(c.initial_vertex == "v0");
  CHECK(c.final_vertex == "v2");
}

TEST_CASE("compile: the swiss flag") {
  const CompiledPv c = compile_pv(parse(kSwissFlag));
  const PrecubicalSet& K = c.complex;
  REQUIRE(validate(K).ok());
  CHECK(c.initial_vertex == "v0,v0");
  CHECK(c.final_vertex == "v4,v4");

  SUBCASE("forbidden vertices carve the flag") {
    CHECK(K.size(0) == 20);  // 25 minus the five forbidden grid vertices
    for (const char* gone :
         {"v1,v2", "v2,v2", "v3,v2", "v2,v1", "v2,v3"})
      CHECK(!K.find(0, gone).has_value());
    CHECK(K.find(0, "v1,v1").has_value());
    CHECK(K.find(0, "v3,v3").has_value());
  }
  SUBCASE("compiled complexes are proper") {
    CHECK(is_proper(K).proper);
    CHECK(is_spatial(K).verdict == SpatialVerdict::Spatial);
  }
  SUBCASE("two schedules around the forbidden region") {
    const PathSpaceModel m =
        path_space_model(K, *K.find(0, c.initial_vertex),
                         *K.find(0, c.final_vertex), std::nullopt);
    CHECK(m.natural_bound);
    CHECK(m.bound == 8);
    REQUIRE(m.grades.size() == 1);  // every chain advances 8 grid steps
    CHECK(m.pi0_total == 2);
  }
  SUBCASE("exactly one deadlock, found by exhaustive search") {
    const auto dead = deadlock_vertices(K, *K.find(0, c.initial_vertex),
                                        *K.find(0, c.final_vertex));
    REQUIRE(dead.size() == 1);
    CHECK(K.id(dead[0]) == "v1,v1");

    // independent oracle: scan all vertices for outgoing edges by brute force
    for (int v = 0; v < K.size(0); ++v) {
      bool exits = false;
      for (int e = 0; e < K.size(1); ++e)
        if (K.lower_extreme(CellId{1, e}).index == v) exits = true;
      for (int q = 0; q < K.size(2); ++q)
        if (K.lower_extreme(CellId{2, q}).index == v) exits = true;
      const bool stuck = !exits && K.id(CellId{0, v}) != c.final_vertex;
      if (stuck) CHECK(K.id(CellId{0, v}) == "v1,v1");
    }
  }
  SUBCASE("the unreachable upper pocket is not a deadlock") {
    const auto reach = reachable_vertices(K, *K.find(0, c.initial_vertex));
    bool v33_reached = false;
    for (const CellId& v : reach) v33_reached |= K.id(v) == "v3,v3";
    CHECK(!v33_reached);
  }
}

TEST_CASE("relaxed capacities give the full tensor grid") {
  const CompiledPv c = compile_pv(parse(
      "pv v1\nsem a 2\nsem b 2\nproc X: Pa Pb Vb Va\nproc Y: Pb Pa Va Vb\n"));
  CHECK(pcs_string(c.complex) ==
        pcs_string(tensor(interval_chain(4), interval_chain(4))));
  // counts are products of the chain counts
  CHECK(c.complex.size(0) == 25);
  CHECK(c.complex.size(1) == 40);
  CHECK(c.complex.size(2) == 16);
}

TEST_CASE("compile caps") {
  std::string many = "pv v1\nsem a 9\n";
  for (int p = 0; p < 5; ++p)
    many += "proc P" + std::to_string(p) + ": Pa Va\n";
  CHECK_THROWS_AS(compile_pv(parse(many)), CapError);

  std::string longseq = "pv v1\nsem a 9\nproc X:";
  for (int i = 0; i < 13; ++i) longseq += i % 2 == 0 ? " Pa" : " Va";
  longseq += "\n";
  CHECK_THROWS_AS(compile_pv(parse(longseq)), CapError);
}

TEST_CASE("three dining processes stay proper") {
  const CompiledPv c = compile_pv(parse(
      "pv v1\nsem a 1\nsem b 1\nsem c 1\n"
      "proc X: Pa Pb Va Vb\nproc Y: Pb Pc Vb Vc\nproc Z: Pc Pa Vc Va\n"));
  CHECK(validate(c.complex).ok());
  CHECK(is_proper(c.complex).proper);
  CHECK(c.complex.top_dim() <= 3);
}
