// cubepaths: combinatorial models of execution-path spaces of precubical
// sets, with exact properness/spatiality decisions and a PV-program compiler.
//
// Verdicts are report content on stdout, never exit codes: 0 = ran, 2 = usage
// error, 3 = input format error, 4 = resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubepaths/cube_chains.hpp"
#include "cubepaths/dpath.hpp"
#include "cubepaths/flow_model.hpp"
#include "cubepaths/nerve.hpp"
#include "cubepaths/pcs_io.hpp"
#include "cubepaths/pv.hpp"
#include "cubepaths/spatiality.hpp"

using namespace cubepaths;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: cubepaths <command> [args]

commands:
  validate <pcs|->                      check the cubical relations and faces
  info <pcs|->                          cell counts per dimension
  gen cube <n>                          standard n-cube, pcs v1 on stdout
  gen boundary <n>                      boundary of the n-cube
  gen chain <n1> <n2> ...               chain of cubes
  gen amalgam <n> [--along w1,w2,...]   two n-cubes glued along the closure of
                                        the listed boundary cells (default:
                                        the full boundary)
  pathspace <pcs|-> --from V --to V [--max-grade N]
                                        per-grade chain categories, component
                                        counts and Betti numbers
  homology <pcs|-> --from V --to V [--max-grade N]
                                        per-grade integer homology of the
                                        path-space model
  proper <pcs|->                        injectivity of cube -> extreme pair
  spatial <pcs|-> [--grid N]            spatiality with defect certificates
  pv compile <pv|->                     compile a PV program to pcs v1

'-' reads the input from stdin.
)";

PrecubicalSet load_pcs(const std::string& path) {
  if (path == "-") return read_pcs(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_pcs(in);
}

CellId find_vertex(const PrecubicalSet& K, const std::string& name) {
  const auto v = K.find(0, name);
  if (!v) throw FormatError("unknown vertex '" + name + "'");
  return *v;
}

struct Args {
  std::vector<std::string> positional;
  std::optional<std::string> from, to, along;
  std::optional<int> max_grade, grid;
};

int parse_flag_int(const std::string& flag, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int out = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return out;
  } catch (...) {
    throw UsageError("bad value for " + flag + ": '" + value + "'");
  }
}

Args parse_args(int argc, char** argv, int first) {
  Args args;
  for (int i = first; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&](const std::string& flag) -> std::string {
      if (i + 1 >= argc) throw UsageError(flag + " needs a value");
      return argv[++i];
    };
    if (arg == "--from")
      args.from = next(arg);
    else if (arg == "--to")
      args.to = next(arg);
    else if (arg == "--along")
      args.along = next(arg);
    else if (arg == "--max-grade")
      args.max_grade = parse_flag_int(arg, next(arg));
    else if (arg == "--grid")
      args.grid = parse_flag_int(arg, next(arg));
    else if (arg.rfind("--", 0) == 0)
      throw UsageError("unknown flag '" + arg + "'");
    else
      args.positional.push_back(arg);
  }
  return args;
}

int parse_count(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    const int n = std::stoi(tok, &pos);
    if (pos != tok.size() || n < 0) throw std::invalid_argument("");
    return n;
  } catch (...) {
    throw UsageError(std::string("bad ") + what + " '" + tok + "'");
  }
}

int cmd_validate(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("validate needs one input");
  const ValidationReport report = validate(load_pcs(args.positional[0]));
  std::cout << "valid: " << (report.ok() ? "yes" : "no") << "\n";
  for (const auto& v : report.violations) std::cout << v.detail << "\n";
  return 0;
}

int cmd_info(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("info needs one input");
  const PrecubicalSet K = load_pcs(args.positional[0]);
  std::cout << "dim " << std::max(K.top_dim(), 0) << "\n";
  for (int d = 0; d <= K.top_dim(); ++d)
    std::cout << "cells " << d << " " << K.size(d) << "\n";
  std::cout << "total " << K.total_cells() << "\n";
  return 0;
}

int cmd_gen(const Args& args) {
  if (args.positional.empty()) throw UsageError("gen needs a shape");
  const std::string& shape = args.positional[0];
  if (shape == "cube" || shape == "boundary") {
    if (args.positional.size() != 2)
      throw UsageError("gen " + shape + " needs a dimension");
    const int n = parse_count(args.positional[1], "dimension");
    write_pcs(std::cout, shape == "cube" ? standard_cube(n)
                                         : boundary_cube(n));
    return 0;
  }
  if (shape == "chain") {
    if (args.positional.size() < 2)
      throw UsageError("gen chain needs at least one block dimension");
    std::vector<int> ns;
    for (std::size_t i = 1; i < args.positional.size(); ++i) {
      const int n = parse_count(args.positional[i], "block dimension");
      if (n < 1) throw UsageError("gen chain blocks must be >= 1");
      ns.push_back(n);
    }
    write_pcs(std::cout, chain_cube(ns));
    return 0;
  }
  if (shape == "amalgam") {
    if (args.positional.size() != 2)
      throw UsageError("gen amalgam needs a dimension");
    const int n = parse_count(args.positional[1], "dimension");
    if (n < 1) throw UsageError("gen amalgam needs n >= 1");
    std::set<std::string> cells;
    if (args.along) {
      std::stringstream list(*args.along);
      std::string w;
      while (std::getline(list, w, ','))
        if (!w.empty()) cells.insert(w);
      if (cells.empty()) throw UsageError("--along lists no cells");
    } else {
      for (const std::string& w : all_words(n))
        if (word_dim(w) < n) cells.insert(w);
    }
    Amalgam glued;
    try {
      glued = amalgam(n, cells);
    } catch (const std::invalid_argument& err) {
      throw FormatError(err.what());
    }
    for (const auto& w : glued.closure_added)
      std::cerr << "warning: added " << w << " to close the gluing locus\n";
    write_pcs(std::cout, glued.complex);
    return 0;
  }
  throw UsageError("unknown gen shape '" + shape + "'");
}

PathSpaceModel model_for(const Args& args, const PrecubicalSet& K) {
  if (!args.from || !args.to) throw UsageError("--from and --to are required");
  const CellId a = find_vertex(K, *args.from);
  const CellId b = find_vertex(K, *args.to);
  if (!natural_grade_bound(K, a, b) && !args.max_grade)
    throw UsageError(
        "the chain extension graph is cyclic; --max-grade is required");
  return path_space_model(K, a, b, args.max_grade);
}

int cmd_pathspace(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("pathspace needs one input");
  const PrecubicalSet K = load_pcs(args.positional[0]);
  std::cout << pathspace_report(K, model_for(args, K));
  return 0;
}

int cmd_homology(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("homology needs one input");
  const PrecubicalSet K = load_pcs(args.positional[0]);
  const PathSpaceModel m = model_for(args, K);
  std::cout << "homology v1\n";
  std::cout << "source " << K.id(m.from) << "\n";
  std::cout << "target " << K.id(m.to) << "\n";
  for (const auto& [grade, gm] : m.grades) {
    std::cout << "grade " << grade << "\n";
    if (gm.nerve_complex.capped)
      std::cout << "# warning: nerve depth capped\n";
    std::cout << homology_report(gm.hom);
  }
  return 0;
}

int cmd_proper(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("proper needs one input");
  const ProperReport r = is_proper(load_pcs(args.positional[0]));
  std::cout << "proper v1\n";
  std::cout << "proper: " << (r.proper ? "yes" : "no") << "\n";
  if (!r.proper)
    std::cout << "collision: " << r.cell_a << " " << r.cell_b << " extremes "
              << r.lower << " -> " << r.upper << "\n";
  return 0;
}

int cmd_spatial(const Args& args) {
  if (args.positional.size() != 1) throw UsageError("spatial needs one input");
  if (args.grid && *args.grid < 2) throw UsageError("--grid must be >= 2");
  const PrecubicalSet K = load_pcs(args.positional[0]);
  std::cout << spatial_report_text(is_spatial(K, args.grid));
  return 0;
}

int cmd_pv(const Args& args) {
  if (args.positional.size() != 2 || args.positional[0] != "compile")
    throw UsageError("usage: pv compile <pv|->");
  const std::string& path = args.positional[1];
  PvProgram program;
  if (path == "-") {
    program = parse_pv(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    program = parse_pv(in);
  }
  const CompiledPv compiled = compile_pv(program);
  std::cerr << "initial " << compiled.initial_vertex << "\n";
  std::cerr << "final " << compiled.final_vertex << "\n";
  write_pcs(std::cout, compiled.complex);
  return 0;
}

int run(int argc, char** argv) {
  if (argc < 2) throw UsageError("missing command");
  const std::string command = argv[1];
  const Args args = parse_args(argc, argv, 2);
  if (command == "validate") return cmd_validate(args);
  if (command == "info") return cmd_info(args);
  if (command == "gen") return cmd_gen(args);
  if (command == "pathspace") return cmd_pathspace(args);
  if (command == "homology") return cmd_homology(args);
  if (command == "proper") return cmd_proper(args);
  if (command == "spatial") return cmd_spatial(args);
  if (command == "pv") return cmd_pv(args);
  if (command == "help" || command == "--help" || command == "-h") {
    std::cout << kUsage;
    return 0;
  }
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n" << kUsage;
    return 2;
  } catch (const CapError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const FormatError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
}
