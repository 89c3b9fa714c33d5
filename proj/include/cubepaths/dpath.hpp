#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubepaths/errors.hpp"
#include "cubepaths/precubical.hpp"
#include "cubepaths/rat.hpp"

namespace cubepaths {

// A point of the geometric realization, presented in a cell's coordinates.
// Canonical form has every coordinate strictly inside (0,1), or dim 0.
struct Point {
  CellId cell;
  std::vector<Rat> coords;
};

bool operator==(const Point& a, const Point& b);

// One tame segment: a piecewise-linear path inside a single cell, given by
// breakpoints (absolute time, coordinates). Times are strictly increasing;
// the first and last breakpoints of a tame segment lie at vertices of K.
struct PathSegment {
  CellId cell;
  std::vector<Rat> times;
  std::vector<std::vector<Rat>> points;
};

bool operator==(const PathSegment& a, const PathSegment& b);

// Piecewise-linear tame d-path: Moore composition of segments over a global
// time domain [0, length]. All coordinates and times are exact rationals.
struct PLDPath {
  std::vector<PathSegment> segments;

  Rat length() const;
};

bool operator==(const PLDPath& a, const PLDPath& b);

struct CarrierEntry {
  CellId cell;
  int dim;
};
using Carrier = std::vector<CarrierEntry>;

// Pushes every coordinate equal to 0 or 1 to the corresponding face until the
// rest are interior. Unique by the cubical relations.
Point canonical_point(const PrecubicalSet& K, const Point& p);

// Structural well-formedness: nonempty segments with >= 2 breakpoints each,
// strictly increasing times starting at 0, matching junction times,
// coordinate counts equal to cell dimensions, coordinates within [0,1].
// Returns an empty string when well-formed, else a description.
std::string path_defect(const PrecubicalSet& K, const PLDPath& g);

// True iff well-formed, coordinatewise nondecreasing and nonconstant in every
// segment, with every segment endpoint at a vertex of K and consecutive
// segments joined at the same vertex.
bool is_tame_dpath(const PrecubicalSet& K, const PLDPath& g);

// True iff additionally, within each segment, the coordinate sum at every
// breakpoint equals the elapsed time from the segment start and the segment
// length equals the dimension of its cell.
bool is_natural(const PrecubicalSet& K, const PLDPath& g);

// Raised by naturalize on a constant sub-path.
struct StallingSegment : std::runtime_error {
  explicit StallingSegment(int seg)
      : std::runtime_error("stalling (constant) sub-path in segment " +
                           std::to_string(seg)),
        segment(seg) {}
  int segment;
};

// Reparametrizes each segment by L1 arc length after restricting it to its
// minimal carrier cell. The result is natural, has the same image and
// carrier, and naturalize is idempotent (byte-identical on canonical form).
PLDPath naturalize(const PrecubicalSet& K, const PLDPath& g);

// Moore composition: concatenation with time shift. Strictly associative at
// the representation level. Throws std::invalid_argument on endpoint
// mismatch.
PLDPath moore_compose(const PrecubicalSet& K, const PLDPath& a,
                      const PLDPath& b);

// The sequence of minimal carrier cells of the segments, dims >= 1.
// Requires is_tame_dpath.
Carrier carrier_of(const PrecubicalSet& K, const PLDPath& g);

// For a natural path inside the standard n-cube `cube` (segments lie in cells
// of it): true iff the image meets {0,1}^n minus the two extreme vertices.
// Vertices can only occur at integer times, so only those are evaluated.
bool hits_intermediate_vertex(const PrecubicalSet& cube, const PLDPath& g,
                              int n);

// dpath v1 text format:
//   dpath v1
//   segment <cell-id>
//   pt <t> <x1> ... <xk>
// with rational literals p/q (bare integers accepted on input).
PLDPath read_dpath(std::istream& in, const PrecubicalSet& K);
void write_dpath(std::ostream& out, const PrecubicalSet& K, const PLDPath& g);
std::string dpath_string(const PrecubicalSet& K, const PLDPath& g);

}  // namespace cubepaths
