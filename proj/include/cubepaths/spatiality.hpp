#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubepaths/dpath.hpp"
#include "cubepaths/precubical.hpp"

namespace cubepaths {

// A face-closed set of cells of the standard n-cube, stored as words; used
// for subcomplexes of the boundary.
struct CubeSubcomplex {
  int n = 0;
  std::set<std::string> cells;

  bool contains(const std::string& word) const { return cells.count(word) > 0; }
};

CubeSubcomplex face_closure(int n, const std::set<std::string>& cells);
bool is_face_closed(const CubeSubcomplex& A);

struct ProperReport {
  bool proper = true;
  // first colliding pair in canonical order, with the shared extreme pair
  std::string cell_a, cell_b, lower, upper;
};

// Injectivity of cube -> (lower extreme, upper extreme) over all dimensions.
ProperReport is_proper(const PrecubicalSet& K);

// Cells of the boundary of the standard n-cube on which the characteristic
// maps of c1 and c2 agree (dim c1 = dim c2 = n); face-closed by construction.
CubeSubcomplex agreement(const PrecubicalSet& K, CellId c1, CellId c2);

// Membership certificate for the vertex-avoiding reachability question.
// Positive: `witness` is a natural PL d-path from the bottom to the top
// vertex of the standard n-cube, image inside |A|, avoiding all intermediate
// vertices. Negative: the grid search at parameter `grid` was exhausted.
struct BnCertificate {
  bool member = false;
  int grid = 0;
  PLDPath witness;
};

// Directed reachability on the 1/N grid restricted to |A|, intermediate
// corner vertices removed. N >= 2.
BnCertificate vertex_avoiding_reach(const CubeSubcomplex& A, int N);

// B_n membership: false for n <= 2; otherwise grid reachability at N = 3,
// escalating to N = 4 before a negative verdict.
BnCertificate in_Bn(const CubeSubcomplex& A);
// Single fixed grid parameter (no escalation).
BnCertificate in_Bn(const CubeSubcomplex& A, int grid);

enum class SpatialVerdict { Spatial, NotSpatial, UndecidedDimCap };

struct SpatialDefect {
  int n = 0;
  std::string cube1, cube2;
  BnCertificate certificate;
};

struct SpatialReport {
  SpatialVerdict verdict = SpatialVerdict::Spatial;
  std::vector<SpatialDefect> defects;
  int dim_cap = 6;
};

// K is spatial iff no two distinct n-cubes (n >= 3) agree on a subcomplex of
// the boundary that carries a vertex-avoiding d-path. Dimensions above the
// cap yield an explicit undecided verdict, never a silent pass.
SpatialReport is_spatial(const PrecubicalSet& K,
                         std::optional<int> grid = std::nullopt);

// All witnesses from is_spatial in canonical order.
std::vector<SpatialDefect> spatial_defects(const PrecubicalSet& K);

// spatial report: verdict line, then one block per defect with the
// certificate in dpath v1 format (coordinates of the shared standard cube).
std::string spatial_report_text(const SpatialReport& report);

}  // namespace cubepaths
