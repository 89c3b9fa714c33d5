#include "cubepaths/pv.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace cubepaths {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

PvProgram parse_pv(std::istream& in) {
  struct ProcLine {
    int line_no;
    std::vector<std::string> tokens;
  };
  std::vector<ProcLine> proc_lines;
  PvProgram program;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "pv" || tokens[1] != "v1")
        throw FormatError(where + ": expected 'pv v1' header");
      saw_header = true;
      continue;
    }
    if (tokens[0] == "sem") {
      if (tokens.size() != 3)
        throw FormatError(where + ": expected 'sem <name> <capacity>'");
      int capacity = 0;
      try {
        std::size_t pos = 0;
        capacity = std::stoi(tokens[2], &pos);
        if (pos != tokens[2].size()) throw std::invalid_argument("");
      } catch (...) {
        throw FormatError(where + ": bad capacity '" + tokens[2] + "'");
      }
      if (capacity < 1) throw FormatError(where + ": capacity must be >= 1");
      if (!program.semaphores.emplace(tokens[1], capacity).second)
        throw FormatError(where + ": semaphore '" + tokens[1] +
                          "' declared twice");
    } else if (tokens[0] == "proc") {
      proc_lines.push_back(ProcLine{line_no, std::move(tokens)});
    } else {
      throw FormatError(where + ": unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_header) throw FormatError("missing 'pv v1' header");

  // processes are resolved after all semaphore declarations
  for (const auto& [pl_line, tokens] : proc_lines) {
    const std::string where = "line " + std::to_string(pl_line);
    if (tokens.size() < 2)
      throw FormatError(where + ": expected 'proc <name>: <action>+'");
    std::string name = tokens[1];
    std::size_t first_action = 2;
    if (!name.empty() && name.back() == ':') {
      name.pop_back();
    } else if (tokens.size() > 2 && tokens[2] == ":") {
      first_action = 3;
    } else {
      throw FormatError(where + ": missing ':' after process name");
    }
    if (name.empty()) throw FormatError(where + ": empty process name");
    PvProcess proc;
    proc.name = name;
    std::map<std::string, int> held;
    for (std::size_t t = first_action; t < tokens.size(); ++t) {
      const std::string& tok = tokens[t];
      if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'V'))
        throw FormatError(where + ": bad action '" + tok + "'");
      PvAction action;
      action.acquire = tok[0] == 'P';
      action.semaphore = tok.substr(1);
      if (!program.semaphores.count(action.semaphore))
        throw FormatError(where + ": unknown semaphore '" + action.semaphore +
                          "'");
      int& h = held[action.semaphore];
      if (action.acquire)
        ++h;
      else if (--h < 0)
        throw FormatError(where + ": V" + action.semaphore +
                          " with no matching preceding P" + action.semaphore);
      proc.actions.push_back(std::move(action));
    }
    program.processes.push_back(std::move(proc));
  }
  return program;
}

namespace {

constexpr int kMaxProcesses = 4;
constexpr int kMaxActions = 12;

// Per-process component of a grid cell: vertex j (0..k) or edge j (1..k).
struct Component {
  bool edge = false;
  int at = 0;

  std::string name() const {
    return (edge ? "e" : "v") + std::to_string(at);
  }
};

}  // namespace

CompiledPv compile_pv(const PvProgram& program) {
  const int procs = static_cast<int>(program.processes.size());
  if (procs > kMaxProcesses)
    throw CapError("compile_pv: more than " + std::to_string(kMaxProcesses) +
                   " processes");
  for (const auto& proc : program.processes)
    if (static_cast<int>(proc.actions.size()) > kMaxActions)
      throw CapError("compile_pv: process '" + proc.name + "' has more than " +
                     std::to_string(kMaxActions) + " actions");

  CompiledPv out;
  if (procs == 0) {
    PcsBuilder b;
    b.cell("v0", 0);
    out.complex = b.build();
    out.initial_vertex = out.final_vertex = "v0";
    return out;
  }

  // hold[i][s][j] = semaphores held by process i at vertex j (after j
  // completed actions); on edge j the action j counts as held while it runs.
  std::vector<std::map<std::string, std::vector<int>>> vertex_hold(procs);
  for (int i = 0; i < procs; ++i) {
    const auto& actions = program.processes[i].actions;
    for (const auto& [sem, cap] : program.semaphores) {
      (void)cap;
      std::vector<int> levels{0};
      for (const auto& action : actions) {
        int next = levels.back();
        if (action.semaphore == sem) next += action.acquire ? 1 : -1;
        levels.push_back(next);
      }
      vertex_hold[i][sem] = std::move(levels);
    }
  }
  auto component_hold = [&](int proc, const Component& comp,
                            const std::string& sem) {
    const auto& levels = vertex_hold[proc].at(sem);
    if (!comp.edge) return levels[comp.at];
    // On edge j the action j is in progress: a P already holds, a V still
    // holds until it completes.
    const auto& action = program.processes[proc].actions[comp.at - 1];
    int h = levels[comp.at - 1];
    if (action.semaphore == sem && action.acquire) ++h;
    return h;
  };

  // enumerate all tuple cells (mixed radix over per-process components)
  std::vector<int> option_count(procs);
  for (int i = 0; i < procs; ++i)
    option_count[i] =
        2 * static_cast<int>(program.processes[i].actions.size()) + 1;
  auto component_of = [&](int option) {
    // options: v0, e1, v1, e2, v2, ... ek, vk
    return option % 2 == 0 ? Component{false, option / 2}
                           : Component{true, option / 2 + 1};
  };

  std::vector<std::vector<Component>> cells;  // all tuples, allowed or not
  std::vector<char> allowed, kept;
  std::map<std::string, int> cell_index;
  std::vector<int> option(procs, 0);
  for (;;) {
    std::vector<Component> tuple;
    for (int i = 0; i < procs; ++i) tuple.push_back(component_of(option[i]));
    bool ok = true;
    for (const auto& [sem, cap] : program.semaphores) {
      int total = 0;
      for (int i = 0; i < procs; ++i) total += component_hold(i, tuple[i], sem);
      if (total > cap) {
        ok = false;
        break;
      }
    }
    std::string name;
    for (int i = 0; i < procs; ++i)
      name += (i ? "," : "") + tuple[i].name();
    cell_index[name] = static_cast<int>(cells.size());
    cells.push_back(std::move(tuple));
    allowed.push_back(ok ? 1 : 0);
    int pos = procs - 1;
    while (pos >= 0 && option[pos] == option_count[pos] - 1) option[pos--] = 0;
    if (pos < 0) break;
    ++option[pos];
  }

  auto name_of = [&](const std::vector<Component>& tuple) {
    std::string name;
    for (int i = 0; i < procs; ++i)
      name += (i ? "," : "") + tuple[i].name();
    return name;
  };
  auto cell_dim = [&](const std::vector<Component>& tuple) {
    int d = 0;
    for (const auto& comp : tuple) d += comp.edge ? 1 : 0;
    return d;
  };

  // keep a cell iff the cell and all its iterated faces are allowed
  kept = allowed;
  int max_dim = 0;
  for (const auto& tuple : cells) max_dim = std::max(max_dim, cell_dim(tuple));
  for (int d = 1; d <= max_dim; ++d) {
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      if (cell_dim(cells[ci]) != d || !kept[ci]) continue;
      for (int i = 0; i < procs && kept[ci]; ++i) {
        if (!cells[ci][i].edge) continue;
        for (int eps = 0; eps <= 1; ++eps) {
          auto face = cells[ci];
          face[i] = Component{false, cells[ci][i].at - (eps ? 0 : 1)};
          if (!kept[cell_index.at(name_of(face))]) {
            kept[ci] = 0;
            break;
          }
        }
      }
    }
  }

  PcsBuilder b;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    if (!kept[ci]) continue;
    const auto& tuple = cells[ci];
    const std::string name = name_of(tuple);
    b.cell(name, cell_dim(tuple));
    int axis = 0;
    for (int i = 0; i < procs; ++i) {
      if (!tuple[i].edge) continue;
      ++axis;
      for (int eps = 0; eps <= 1; ++eps) {
        auto face = tuple;
        face[i] = Component{false, tuple[i].at - (eps ? 0 : 1)};
        b.face(name, axis, eps, name_of(face));
      }
    }
  }
  out.complex = b.build();
  std::string init, fin;
  for (int i = 0; i < procs; ++i) {
    init += (i ? "," : "") + std::string("v0");
    fin += (i ? "," : "") +
           ("v" + std::to_string(program.processes[i].actions.size()));
  }
  out.initial_vertex = init;
  out.final_vertex = fin;
  return out;
}

}  // namespace cubepaths
