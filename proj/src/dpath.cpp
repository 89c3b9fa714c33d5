#include "cubepaths/dpath.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace cubepaths {

bool operator==(const Point& a, const Point& b) {
  return a.cell == b.cell && a.coords == b.coords;
}

bool operator==(const PathSegment& a, const PathSegment& b) {
  return a.cell == b.cell && a.times == b.times && a.points == b.points;
}

bool operator==(const PLDPath& a, const PLDPath& b) {
  return a.segments == b.segments;
}

Rat PLDPath::length() const {
  if (segments.empty()) return Rat(0);
  return segments.back().times.back();
}

Point canonical_point(const PrecubicalSet& K, const Point& p) {
  if (static_cast<int>(p.coords.size()) != p.cell.dim)
    throw std::invalid_argument("point: coordinate count != dim(cell)");
  std::string word(p.cell.dim, '*');
  std::vector<Rat> interior;
  for (int i = 0; i < p.cell.dim; ++i) {
    const Rat& x = p.coords[i];
    if (x < 0 || x > 1)
      throw std::invalid_argument("point: coordinate outside [0,1]");
    if (x == 0)
      word[i] = '0';
    else if (x == 1)
      word[i] = '1';
    else
      interior.push_back(x);
  }
  return Point{evaluate_word(K, p.cell, word), std::move(interior)};
}

namespace {

// Minimal carrier word of a segment: a coordinate is fixed iff it is constant
// 0 or constant 1 across all breakpoints.
std::string segment_carrier_word(const PathSegment& seg) {
  const int d = seg.cell.dim;
  std::string word(d, '*');
  for (int i = 0; i < d; ++i) {
    bool all0 = true, all1 = true;
    for (const auto& bp : seg.points) {
      if (bp[i] != 0) all0 = false;
      if (bp[i] != 1) all1 = false;
    }
    if (all0)
      word[i] = '0';
    else if (all1)
      word[i] = '1';
  }
  return word;
}

Rat coord_sum(const std::vector<Rat>& xs) {
  Rat s(0);
  for (const Rat& x : xs) s += x;
  return s;
}

std::optional<Point> vertex_at(const PrecubicalSet& K, CellId cell,
                               const std::vector<Rat>& coords) {
  Point p = canonical_point(K, Point{cell, coords});
  if (p.cell.dim != 0) return std::nullopt;
  return p;
}

}  // namespace

std::string path_defect(const PrecubicalSet& K, const PLDPath& g) {
  if (g.segments.empty()) return "path has no segments";
  Rat expected_start(0);
  for (std::size_t s = 0; s < g.segments.size(); ++s) {
    const auto& seg = g.segments[s];
    const std::string tag = "segment " + std::to_string(s);
    if (seg.cell.dim < 0 || seg.cell.dim > K.top_dim() ||
        seg.cell.index < 0 || seg.cell.index >= K.size(seg.cell.dim))
      return tag + ": unknown cell";
    if (seg.points.size() < 2) return tag + ": fewer than 2 breakpoints";
    if (seg.times.size() != seg.points.size())
      return tag + ": times/points length mismatch";
    if (seg.times.front() != expected_start)
      return tag + ": does not start where the previous segment ended";
    for (std::size_t j = 0; j < seg.points.size(); ++j) {
      if (static_cast<int>(seg.points[j].size()) != seg.cell.dim)
        return tag + ": breakpoint arity != dim(cell)";
      for (const Rat& x : seg.points[j])
        if (x < 0 || x > 1) return tag + ": coordinate outside [0,1]";
      if (j > 0 && !(seg.times[j] > seg.times[j - 1]))
        return tag + ": times not strictly increasing";
    }
    expected_start = seg.times.back();
  }
  return "";
}

bool is_tame_dpath(const PrecubicalSet& K, const PLDPath& g) {
  if (!path_defect(K, g).empty()) return false;
  std::optional<Point> prev_vertex;
  for (const auto& seg : g.segments) {
    for (std::size_t j = 1; j < seg.points.size(); ++j)
      for (int i = 0; i < seg.cell.dim; ++i)
        if (seg.points[j][i] < seg.points[j - 1][i]) return false;
    if (seg.points.front() == seg.points.back()) return false;  // constant
    const auto start = vertex_at(K, seg.cell, seg.points.front());
    const auto end = vertex_at(K, seg.cell, seg.points.back());
    if (!start || !end) return false;
    if (prev_vertex && !(*prev_vertex == *start)) return false;
    prev_vertex = end;
  }
  return true;
}

bool is_natural(const PrecubicalSet& K, const PLDPath& g) {
  if (!is_tame_dpath(K, g)) return false;
  for (const auto& seg : g.segments) {
    const Rat t0 = seg.times.front();
    for (std::size_t j = 0; j < seg.points.size(); ++j)
      if (coord_sum(seg.points[j]) != seg.times[j] - t0) return false;
    if (seg.times.back() - t0 != Rat(seg.cell.dim)) return false;
  }
  return true;
}

PLDPath naturalize(const PrecubicalSet& K, const PLDPath& g) {
  if (!is_tame_dpath(K, g))
    throw std::invalid_argument("naturalize: not a tame d-path");
  for (std::size_t s = 0; s < g.segments.size(); ++s) {
    const auto& seg = g.segments[s];
    for (std::size_t j = 1; j < seg.points.size(); ++j)
      if (seg.points[j] == seg.points[j - 1])
        throw StallingSegment(static_cast<int>(s));
  }
  PLDPath out;
  Rat clock(0);
  for (const auto& seg : g.segments) {
    const std::string word = segment_carrier_word(seg);
    PathSegment ns;
    ns.cell = evaluate_word(K, seg.cell, word);
    for (const auto& bp : seg.points) {
      std::vector<Rat> kept;
      for (int i = 0; i < seg.cell.dim; ++i)
        if (word[i] == '*') kept.push_back(bp[i]);
      ns.points.push_back(std::move(kept));
    }
    const Rat base = coord_sum(ns.points.front());
    for (const auto& bp : ns.points) ns.times.push_back(clock + coord_sum(bp) - base);
    clock = ns.times.back();
    out.segments.push_back(std::move(ns));
  }
  return out;
}

PLDPath moore_compose(const PrecubicalSet& K, const PLDPath& a,
                      const PLDPath& b) {
  const std::string da = path_defect(K, a), db = path_defect(K, b);
  if (!da.empty() || !db.empty())
    throw std::invalid_argument("moore_compose: ill-formed operand");
  const auto& ea = a.segments.back();
  const auto& sb = b.segments.front();
  const Point end = canonical_point(K, Point{ea.cell, ea.points.back()});
  const Point start = canonical_point(K, Point{sb.cell, sb.points.front()});
  if (!(end == start))
    throw std::invalid_argument("moore_compose: endpoint mismatch");
  PLDPath out = a;
  const Rat shift = a.length();
  for (PathSegment seg : b.segments) {
    for (Rat& t : seg.times) t += shift;
    out.segments.push_back(std::move(seg));
  }
  return out;
}

Carrier carrier_of(const PrecubicalSet& K, const PLDPath& g) {
  if (!is_tame_dpath(K, g))
    throw std::invalid_argument("carrier_of: not a tame d-path");
  Carrier carrier;
  for (const auto& seg : g.segments) {
    const CellId c = evaluate_word(K, seg.cell, segment_carrier_word(seg));
    carrier.push_back(CarrierEntry{c, c.dim});
  }
  return carrier;
}

bool hits_intermediate_vertex(const PrecubicalSet& cube, const PLDPath& g,
                              int n) {
  if (!is_natural(cube, g))
    throw std::invalid_argument(
        "hits_intermediate_vertex: path must be natural");
  const Rat len = g.length();
  if (len.get_den() != 1)
    throw std::invalid_argument("natural path with non-integer length");
  const std::string zero(n, '0'), one(n, '1');
  for (Int t = 0; t <= len.get_num(); ++t) {
    const Rat time(t);
    // locate the segment whose time range contains `time`
    for (const auto& seg : g.segments) {
      if (time < seg.times.front() || time > seg.times.back()) continue;
      // interpolate within the segment
      std::vector<Rat> coords(seg.cell.dim, Rat(0));
      for (std::size_t j = 1; j < seg.times.size(); ++j) {
        if (time > seg.times[j]) continue;
        const Rat span = seg.times[j] - seg.times[j - 1];
        const Rat lam = (time - seg.times[j - 1]) / span;
        for (int i = 0; i < seg.cell.dim; ++i)
          coords[i] = seg.points[j - 1][i] +
                      lam * (seg.points[j][i] - seg.points[j - 1][i]);
        break;
      }
      if (time == seg.times.front()) coords = seg.points.front();
      // map to ambient cube coordinates through the cell word
      const std::string& cell_word = cube.id(seg.cell);
      if (static_cast<int>(cell_word.size()) != n)
        throw std::invalid_argument(
            "hits_intermediate_vertex: path not inside the standard cube");
      std::string ambient(n, '?');
      int free = 0;
      bool is_vertex = true;
      for (int i = 0; i < n; ++i) {
        if (cell_word[i] != '*') {
          ambient[i] = cell_word[i];
          continue;
        }
        const Rat& x = coords[free++];
        if (x == 0)
          ambient[i] = '0';
        else if (x == 1)
          ambient[i] = '1';
        else {
          is_vertex = false;
          break;
        }
      }
      if (is_vertex && ambient != zero && ambient != one) return true;
      break;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// dpath v1 I/O

PLDPath read_dpath(std::istream& in, const PrecubicalSet& K) {
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  PLDPath path;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      tokens.push_back(tok);
    }
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "dpath" || tokens[1] != "v1")
        throw FormatError(where + ": expected 'dpath v1' header");
      saw_header = true;
      continue;
    }
    if (tokens[0] == "segment") {
      if (tokens.size() != 2)
        throw FormatError(where + ": expected 'segment <cell-id>'");
      std::optional<CellId> cell;
      for (int d = 0; d <= K.top_dim(); ++d) {
        if (auto c = K.find(d, tokens[1])) {
          if (cell) throw FormatError(where + ": ambiguous cell id");
          cell = c;
        }
      }
      if (!cell) throw FormatError(where + ": unknown cell '" + tokens[1] + "'");
      path.segments.push_back(PathSegment{*cell, {}, {}});
    } else if (tokens[0] == "pt") {
      if (path.segments.empty())
        throw FormatError(where + ": 'pt' before any 'segment'");
      auto& seg = path.segments.back();
      if (static_cast<int>(tokens.size()) != 2 + seg.cell.dim)
        throw FormatError(where + ": expected 'pt <t>' plus " +
                          std::to_string(seg.cell.dim) + " coordinates");
      try {
        seg.times.push_back(parse_rat(tokens[1]));
        std::vector<Rat> coords;
        for (int i = 0; i < seg.cell.dim; ++i)
          coords.push_back(parse_rat(tokens[2 + i]));
        seg.points.push_back(std::move(coords));
      } catch (const std::invalid_argument& err) {
        throw FormatError(where + ": " + err.what());
      }
    } else {
      throw FormatError(where + ": unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_header) throw FormatError("missing 'dpath v1' header");
  const std::string defect = path_defect(K, path);
  if (!defect.empty()) throw FormatError("ill-formed d-path: " + defect);
  return path;
}

void write_dpath(std::ostream& out, const PrecubicalSet& K, const PLDPath& g) {
  out << "dpath v1\n";
  for (const auto& seg : g.segments) {
    out << "segment " << K.id(seg.cell) << "\n";
    for (std::size_t j = 0; j < seg.points.size(); ++j) {
      out << "pt " << rat_str(seg.times[j]);
      for (const Rat& x : seg.points[j]) out << " " << rat_str(x);
      out << "\n";
    }
  }
}

std::string dpath_string(const PrecubicalSet& K, const PLDPath& g) {
  std::ostringstream out;
  write_dpath(out, K, g);
  return out.str();
}

}  // namespace cubepaths
