#include "cubepaths/pcs_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

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

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return value;
  } catch (...) {
    throw FormatError("line " + std::to_string(line_no) + ": bad " + what +
                      " '" + tok + "'");
  }
}

}  // namespace

PrecubicalSet read_pcs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  PcsBuilder builder;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "pcs" || tokens[1] != "v1")
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected 'pcs v1' header");
      saw_header = true;
      continue;
    }
    if (tokens[0] == "cell") {
      if (tokens.size() != 4 || tokens[2] != "dim")
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected 'cell <id> dim <k>'");
      const int dim = parse_int(tokens[3], line_no, "dimension");
      if (dim < 0)
        throw FormatError("line " + std::to_string(line_no) +
                          ": negative dimension");
      builder.cell(tokens[1], dim);
    } else if (tokens[0] == "face") {
      if (tokens.size() != 5)
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected 'face <id> <i> <eps> <target-id>'");
      const int i = parse_int(tokens[2], line_no, "face index");
      const int eps = parse_int(tokens[3], line_no, "face sign");
      builder.face(tokens[1], i, eps, tokens[4]);
    } else {
      throw FormatError("line " + std::to_string(line_no) +
                        ": unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_header) throw FormatError("missing 'pcs v1' header");
  try {
    return builder.build();
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
}

void write_pcs(std::ostream& out, const PrecubicalSet& K) {
  out << "pcs v1\n";
  for (int d = 0; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i)
      out << "cell " << K.id(CellId{d, i}) << " dim " << d << "\n";
  for (int d = 1; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      const CellId c{d, i};
      for (int axis = 1; axis <= d; ++axis)
        for (int eps = 0; eps <= 1; ++eps)
          if (K.has_face(c, axis, eps))
            out << "face " << K.id(c) << " " << axis << " " << eps << " "
                << K.id(K.face(c, axis, eps)) << "\n";
    }
}

std::string pcs_string(const PrecubicalSet& K) {
  std::ostringstream out;
  write_pcs(out, K);
  return out.str();
}

}  // namespace cubepaths
