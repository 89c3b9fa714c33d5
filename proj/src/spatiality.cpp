#include "cubepaths/spatiality.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cubepaths {

CubeSubcomplex face_closure(int n, const std::set<std::string>& cells) {
  CubeSubcomplex A;
  A.n = n;
  std::vector<std::string> queue(cells.begin(), cells.end());
  while (!queue.empty()) {
    std::string w = queue.back();
    queue.pop_back();
    if (static_cast<int>(w.size()) != n ||
        w.find_first_not_of("01*") != std::string::npos)
      throw std::invalid_argument("face_closure: bad cell word '" + w + "'");
    if (!A.cells.insert(w).second) continue;
    for (int i = 1; i <= word_dim(w); ++i)
      for (int eps = 0; eps <= 1; ++eps) queue.push_back(word_face(w, i, eps));
  }
  return A;
}

bool is_face_closed(const CubeSubcomplex& A) {
  for (const auto& w : A.cells)
    for (int i = 1; i <= word_dim(w); ++i)
      for (int eps = 0; eps <= 1; ++eps)
        if (!A.contains(word_face(w, i, eps))) return false;
  return true;
}

ProperReport is_proper(const PrecubicalSet& K) {
  ProperReport report;
  std::map<std::pair<int, int>, CellId> seen;  // (lower, upper) -> first cell
  for (const CellId& c : K.all_cells()) {
    const int lo = K.lower_extreme(c).index;
    const int hi = K.upper_extreme(c).index;
    const auto [it, inserted] = seen.try_emplace({lo, hi}, c);
    if (!inserted) {
      report.proper = false;
      report.cell_a = K.id(it->second);
      report.cell_b = K.id(c);
      report.lower = K.id(CellId{0, lo});
      report.upper = K.id(CellId{0, hi});
      return report;
    }
  }
  return report;
}

CubeSubcomplex agreement(const PrecubicalSet& K, CellId c1, CellId c2) {
  if (c1.dim != c2.dim)
    throw std::invalid_argument("agreement: cells of different dimension");
  CubeSubcomplex A;
  A.n = c1.dim;
  for (const std::string& w : all_words(c1.dim)) {
    if (word_dim(w) == c1.dim) continue;  // boundary cells only
    if (evaluate_word(K, c1, w) == evaluate_word(K, c2, w)) A.cells.insert(w);
  }
  return A;
}

namespace {

// Fixed-grid directed reachability inside |A|, avoiding intermediate corner
// vertices. Grid points are tuples in {0..N}^n indexed in mixed radix.
struct GridSearch {
  const CubeSubcomplex& A;
  const int n, N;
  const int points;

  explicit GridSearch(const CubeSubcomplex& A_, int N_)
      : A(A_), n(A_.n), N(N_), points(power(N_ + 1, A_.n)) {}

  static int power(int base, int exp) {
    int out = 1;
    while (exp-- > 0) out *= base;
    return out;
  }

  std::vector<int> decode(int index) const {
    std::vector<int> coords(n);
    for (int i = n - 1; i >= 0; --i) {
      coords[i] = index % (N + 1);
      index /= (N + 1);
    }
    return coords;
  }

  std::string point_word(const std::vector<int>& coords) const {
    std::string w(n, '*');
    for (int i = 0; i < n; ++i) {
      if (coords[i] == 0) w[i] = '0';
      if (coords[i] == N) w[i] = '1';
    }
    return w;
  }

  bool is_corner(const std::vector<int>& coords) const {
    for (int x : coords)
      if (x != 0 && x != N) return false;
    return true;
  }

  bool node_ok(const std::vector<int>& coords) const {
    const std::string w = point_word(coords);
    if (!A.contains(w)) return false;
    if (is_corner(coords)) {
      // only the two extreme vertices are allowed
      bool all0 = true, all1 = true;
      for (int x : coords) {
        if (x != 0) all0 = false;
        if (x != N) all1 = false;
      }
      return all0 || all1;
    }
    return true;
  }

  // carrier of the +1 step segment at coordinate `axis`
  std::string step_word(const std::vector<int>& coords, int axis) const {
    std::string w = point_word(coords);
    w[axis] = '*';
    return w;
  }

  // Reconstructs the grid path (sequence of point indices) if 1_n is
  // reachable from 0_n.
  std::optional<std::vector<int>> run() const {
    const int start = 0;
    int goal = 0;
    for (int i = 0; i < n; ++i) goal = goal * (N + 1) + N;
    {
      std::vector<int> s(n, 0), g(n, N);
      if (!node_ok(s) || !node_ok(g)) return std::nullopt;
    }
    std::vector<int> parent(points, -2);  // -2 unvisited, -1 root
    std::vector<int> queue{start};
    parent[start] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      if (v == goal) break;
      const std::vector<int> coords = decode(v);
      int stride = 1;
      for (int axis = n - 1; axis >= 0; --axis) {
        if (coords[axis] < N) {
          const int w = v + stride;
          if (parent[w] == -2) {
            std::vector<int> next = coords;
            ++next[axis];
            if (node_ok(next) && A.contains(step_word(coords, axis))) {
              parent[w] = v;
              queue.push_back(w);
            }
          }
        }
        stride *= N + 1;
      }
    }
    if (parent[goal] == -2) return std::nullopt;
    std::vector<int> path;
    for (int v = goal; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

PLDPath grid_path_to_dpath(const CubeSubcomplex& A, int N,
                           const std::vector<int>& path) {
  const GridSearch grid(A, N);
  // merge collinear runs into single breakpoint intervals
  std::vector<std::vector<int>> pts;
  for (int idx : path) pts.push_back(grid.decode(idx));
  std::vector<std::vector<int>> merged{pts.front()};
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    // keep pts[i] unless it is collinear with its neighbours
    int before = -1, after = -1;
    for (int k = 0; k < A.n; ++k) {
      if (pts[i][k] != merged.back()[k]) before = k;
      if (pts[i + 1][k] != pts[i][k]) after = k;
    }
    if (before != after) merged.push_back(pts[i]);
  }
  merged.push_back(pts.back());

  const PrecubicalSet cube = standard_cube(A.n);
  const CellId top = *cube.find(A.n, std::string(A.n, '*'));
  PathSegment seg;
  seg.cell = top;
  for (const auto& p : merged) {
    std::vector<Rat> coords;
    Rat sum(0);
    for (int x : p) {
      coords.push_back(make_rat(x, N));
      sum += coords.back();
    }
    seg.times.push_back(sum);
    seg.points.push_back(std::move(coords));
  }
  PLDPath out;
  out.segments.push_back(std::move(seg));
  return out;
}

}  // namespace

BnCertificate vertex_avoiding_reach(const CubeSubcomplex& A, int N) {
  if (N < 2) throw std::invalid_argument("vertex_avoiding_reach: N < 2");
  if (A.n < 1) throw std::invalid_argument("vertex_avoiding_reach: n < 1");
  BnCertificate cert;
  cert.grid = N;
  const GridSearch grid(A, N);
  const auto path = grid.run();
  if (!path) return cert;
  cert.member = true;
  cert.witness = grid_path_to_dpath(A, N, *path);

  // sanity of the positive certificate; failures here are bugs
  const PrecubicalSet cube = standard_cube(A.n);
  if (!is_natural(cube, cert.witness) ||
      hits_intermediate_vertex(cube, cert.witness, A.n))
    throw std::logic_error("vertex_avoiding_reach: invalid certificate");
  const auto& seg = cert.witness.segments.front();
  for (std::size_t j = 1; j < seg.points.size(); ++j) {
    std::string w(A.n, '*');
    for (int i = 0; i < A.n; ++i) {
      if (seg.points[j - 1][i] == seg.points[j][i]) {
        if (seg.points[j][i] == 0) w[i] = '0';
        if (seg.points[j][i] == 1) w[i] = '1';
      }
    }
    if (!A.contains(w))
      throw std::logic_error("vertex_avoiding_reach: certificate leaves |A|");
  }
  return cert;
}

BnCertificate in_Bn(const CubeSubcomplex& A) {
  if (A.n <= 2) return BnCertificate{};
  BnCertificate c3 = vertex_avoiding_reach(A, 3);
  if (c3.member) return c3;
  return vertex_avoiding_reach(A, 4);
}

BnCertificate in_Bn(const CubeSubcomplex& A, int grid) {
  if (A.n <= 2) return BnCertificate{};
  return vertex_avoiding_reach(A, grid);
}

SpatialReport is_spatial(const PrecubicalSet& K, std::optional<int> grid) {
  SpatialReport report;
  for (int n = 3; n <= std::min(K.top_dim(), report.dim_cap); ++n) {
    for (int i = 0; i < K.size(n); ++i)
      for (int j = i + 1; j < K.size(n); ++j) {
        const CellId c1{n, i}, c2{n, j};
        const CubeSubcomplex A = agreement(K, c1, c2);
        const BnCertificate cert = grid ? in_Bn(A, *grid) : in_Bn(A);
        if (cert.member)
          report.defects.push_back(SpatialDefect{n, K.id(c1), K.id(c2), cert});
      }
  }
  if (!report.defects.empty())
    report.verdict = SpatialVerdict::NotSpatial;
  else if (K.top_dim() > report.dim_cap)
    report.verdict = SpatialVerdict::UndecidedDimCap;
  else
    report.verdict = SpatialVerdict::Spatial;
  return report;
}

std::vector<SpatialDefect> spatial_defects(const PrecubicalSet& K) {
  return is_spatial(K).defects;
}

std::string spatial_report_text(const SpatialReport& report) {
  std::ostringstream out;
  out << "spatial v1\n";
  switch (report.verdict) {
    case SpatialVerdict::Spatial:
      out << "spatial: yes\n";
      break;
    case SpatialVerdict::NotSpatial:
      out << "spatial: no\n";
      break;
    case SpatialVerdict::UndecidedDimCap:
      out << "spatial: undecided (dimension cap " << report.dim_cap << ")\n";
      break;
  }
  for (const auto& defect : report.defects) {
    out << "defect: dim " << defect.n << " cubes " << defect.cube1 << " "
        << defect.cube2 << " grid " << defect.certificate.grid << "\n";
    const PrecubicalSet cube = standard_cube(defect.n);
    out << dpath_string(cube, defect.certificate.witness);
  }
  return out.str();
}

}  // namespace cubepaths
