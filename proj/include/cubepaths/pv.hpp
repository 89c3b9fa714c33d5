#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cubepaths/errors.hpp"
#include "cubepaths/precubical.hpp"

namespace cubepaths {

struct PvAction {
  bool acquire = true;  // P = acquire, V = release
  std::string semaphore;
};

struct PvProcess {
  std::string name;
  std::vector<PvAction> actions;
};

struct PvProgram {
  std::map<std::string, int> semaphores;  // name -> capacity
  std::vector<PvProcess> processes;
};

// pv v1 grammar:
//   pv v1
//   sem <name> <capacity>
//   proc <name>: <action>+      action = P<sem> | V<sem>
// Declaration order is free. Throws FormatError on syntax errors, unknown
// semaphores, or a V with no matching preceding P in its process.
PvProgram parse_pv(std::istream& in);

struct CompiledPv {
  PrecubicalSet complex;
  std::string initial_vertex;
  std::string final_vertex;
};

// Compiles to the tensor grid of one interval chain per process (vertices
// v0..vk, edges e1..ek, tuple cells named by comma-joined components), minus
// every cell on which some semaphore's hold count exceeds its capacity; the
// kept region is face-closed (a cell stays only if all its iterated faces
// stay). Caps: at most 4 processes of at most 12 actions each (CapError).
CompiledPv compile_pv(const PvProgram& program);

}  // namespace cubepaths
