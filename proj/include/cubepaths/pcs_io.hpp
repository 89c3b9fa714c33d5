#pragma once

#include <iosfwd>
#include <string>

#include "cubepaths/errors.hpp"
#include "cubepaths/precubical.hpp"

namespace cubepaths {

// pcs v1: line-based, UTF-8, '#' comments.
//   pcs v1
//   cell <id> dim <k>
//   face <id> <i> <eps> <target-id>
// Readers accept lines in any order; the writer emits cells sorted by
// (dimension, identifier), then faces in the same order with i ascending and
// eps 0 before 1, so write(read(x)) is a fixed point.
PrecubicalSet read_pcs(std::istream& in);
void write_pcs(std::ostream& out, const PrecubicalSet& K);
std::string pcs_string(const PrecubicalSet& K);

}  // namespace cubepaths
