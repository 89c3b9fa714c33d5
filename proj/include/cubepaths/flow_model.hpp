#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubepaths/cube_chains.hpp"
#include "cubepaths/nerve.hpp"

namespace cubepaths {

// One grade of a path-space model: the chain category, its nerve, the nerve's
// integer homology and the number of connected components.
struct GradeModel {
  ChainCategory category;
  NerveComplex nerve_complex;
  HomologySummary hom;
  int components = 0;
};

// Combinatorial model of the execution paths from one vertex to another:
// per-grade models plus the aggregate component count (grades never merge).
struct PathSpaceModel {
  CellId from, to;
  std::map<int, GradeModel> grades;  // nonempty grades only
  int pi0_total = 0;
  int bound = 0;            // grade bound the enumeration ran with
  bool natural_bound = false;  // bound derived from the acyclic extension graph
};

// Builds the model. When the chain extension graph is acyclic the natural
// bound (longest weighted path) is used and n_max is ignored; otherwise n_max
// is mandatory and std::invalid_argument is thrown without it.
PathSpaceModel path_space_model(const PrecubicalSet& K, CellId alpha,
                                CellId beta, std::optional<int> n_max);

// States plus one path-space model per ordered pair of distinct-or-equal
// vertices; semicategory composition is concatenation of chains.
struct FlowModel {
  PrecubicalSet complex;
  std::map<std::pair<std::string, std::string>, PathSpaceModel> path_spaces;
};

// The combinatorial model of the natural flow of the standard n-cube: for
// alpha < beta the chain category of the subcube spanned by the differing
// coordinates (single grade, contractible); empty otherwise.
FlowModel natural_cube_flow(int n);

// Concatenation of path classes; endpoints must match.
CubeChain compose_classes(const PrecubicalSet& K, const CubeChain& x,
                          const CubeChain& y);

// Vertices reachable from `from` along grade-1 chains (edges lower -> upper).
std::vector<CellId> reachable_vertices(const PrecubicalSet& K, CellId from);

// Vertices other than `final` that are reachable from `init` and have no
// outgoing cell of dimension >= 1.
std::vector<CellId> deadlock_vertices(const PrecubicalSet& K, CellId init,
                                      CellId final_vertex);

// pathspace report: one block per grade plus the aggregate pi0 line.
std::string pathspace_report(const PrecubicalSet& K, const PathSpaceModel& m);

}  // namespace cubepaths
