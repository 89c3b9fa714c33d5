#pragma once

#include <stdexcept>

namespace cubepaths {

// Malformed input text ("pcs v1", "dpath v1", "pv v1") or semantically
// invalid input (unknown vertex, invalid complex).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A resource cap was exceeded (ordered-partition dimension, nerve depth,
// PV program limits).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cubepaths
