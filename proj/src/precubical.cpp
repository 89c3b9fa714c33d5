#include "cubepaths/precubical.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <map>
#include <stdexcept>
#include <utility>

namespace cubepaths {

namespace {

[[noreturn]] void bad_cell(const char* what) {
  throw std::invalid_argument(std::string("invalid cell reference: ") + what);
}

}  // namespace

int PrecubicalSet::size(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(cells_.size())) return 0;
  return static_cast<int>(cells_[dim].size());
}

int PrecubicalSet::total_cells() const {
  int total = 0;
  for (const auto& layer : cells_) total += static_cast<int>(layer.size());
  return total;
}

const std::string& PrecubicalSet::id(CellId c) const {
  if (c.dim < 0 || c.dim >= static_cast<int>(cells_.size()) || c.index < 0 ||
      c.index >= static_cast<int>(cells_[c.dim].size()))
    bad_cell("id");
  return cells_[c.dim][c.index];
}

std::optional<CellId> PrecubicalSet::find(int dim, std::string_view id) const {
  if (dim < 0 || dim >= static_cast<int>(cells_.size())) return std::nullopt;
  const auto& layer = cells_[dim];
  auto it = std::lower_bound(layer.begin(), layer.end(), id);
  if (it == layer.end() || *it != id) return std::nullopt;
  return CellId{dim, static_cast<std::int32_t>(it - layer.begin())};
}

bool PrecubicalSet::has_face(CellId c, int i, int eps) const {
  if (c.dim <= 0 || i < 1 || i > c.dim || eps < 0 || eps > 1) return false;
  const auto& table = faces_[c.dim];
  const std::size_t slot =
      static_cast<std::size_t>(c.index) * 2 * c.dim + 2 * (i - 1) + eps;
  return slot < table.size() && table[slot] >= 0;
}

CellId PrecubicalSet::face(CellId c, int i, int eps) const {
  if (c.dim <= 0 || i < 1 || i > c.dim) bad_cell("face index");
  if (eps < 0 || eps > 1) bad_cell("face sign");
  const auto& table = faces_[c.dim];
  const std::size_t slot =
      static_cast<std::size_t>(c.index) * 2 * c.dim + 2 * (i - 1) + eps;
  if (slot >= table.size() || table[slot] < 0) bad_cell("missing face entry");
  return CellId{c.dim - 1, table[slot]};
}

CellId PrecubicalSet::lower_extreme(CellId c) const {
  while (c.dim > 0) c = face(c, 1, 0);
  return c;
}

CellId PrecubicalSet::upper_extreme(CellId c) const {
  while (c.dim > 0) c = face(c, 1, 1);
  return c;
}

std::vector<CellId> PrecubicalSet::all_cells() const {
  std::vector<CellId> out;
  for (int d = 0; d <= top_dim(); ++d)
    for (int i = 0; i < size(d); ++i)
      out.push_back(CellId{d, static_cast<std::int32_t>(i)});
  return out;
}

// ---------------------------------------------------------------------------
// Builder

PcsBuilder& PcsBuilder::cell(std::string id, int dim) {
  if (dim < 0) throw std::invalid_argument("negative cell dimension");
  if (id.empty()) throw std::invalid_argument("empty cell identifier");
  cells_.emplace_back(std::move(id), dim);
  return *this;
}

PcsBuilder& PcsBuilder::face(const std::string& id, int i, int eps,
                             std::string target) {
  faces_.push_back(FaceDecl{id, i, eps, std::move(target)});
  return *this;
}

PrecubicalSet PcsBuilder::build() {
  PrecubicalSet K;
  int top = -1;
  for (const auto& [id, dim] : cells_) top = std::max(top, dim);
  K.cells_.resize(top + 1);
  K.faces_.resize(top + 1);

  for (const auto& [id, dim] : cells_) K.cells_[dim].push_back(id);
  for (auto& layer : K.cells_) {
    std::sort(layer.begin(), layer.end());
    for (std::size_t i = 1; i < layer.size(); ++i)
      if (layer[i] == layer[i - 1]) K.duplicate_ids_.push_back(layer[i]);
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  for (int d = 0; d <= top; ++d)
    K.faces_[d].assign(K.cells_[d].size() * 2 * static_cast<std::size_t>(d),
                       -1);

  for (const auto& decl : faces_) {
    // Identifiers are only required to be unique per dimension; a face line
    // names a cell of dimension >= 1, so those dimensions are searched first.
    std::optional<CellId> owner;
    for (int d = 1; d <= top && !owner; ++d) owner = K.find(d, decl.id);
    if (!owner) owner = K.find(0, decl.id);
    if (!owner)
      throw std::invalid_argument("face declared on unknown cell '" + decl.id +
                                  "'");
    const int d = owner->dim;
    if (decl.i < 1 || decl.i > d || decl.eps < 0 || decl.eps > 1) {
      // kept for validate() as a bad index; recorded as dangling with i/eps
      K.dangling_.push_back(PrecubicalSet::Dangling{d, owner->index, decl.i,
                                                    decl.eps, decl.target});
      continue;
    }
    auto target = K.find(d - 1, decl.target);
    const std::size_t slot = static_cast<std::size_t>(owner->index) * 2 * d +
                             2 * (decl.i - 1) + decl.eps;
    if (!target) {
      K.dangling_.push_back(PrecubicalSet::Dangling{d, owner->index, decl.i,
                                                    decl.eps, decl.target});
      continue;
    }
    K.faces_[d][slot] = target->index;
  }
  return K;
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationDetail {
  static void run(const PrecubicalSet& K, ValidationReport& report) {
    for (const auto& dup : K.duplicate_ids_)
      report.violations.push_back(
          {Violation::Kind::DuplicateId, "duplicate identifier " + dup});
    std::set<std::tuple<int, std::int32_t, int, int>> declared;
    for (const auto& d : K.dangling_) {
      declared.emplace(d.dim, d.index, d.i, d.eps);
      const std::string cell = K.cells_[d.dim][d.index];
      if (d.i < 1 || d.i > d.dim || d.eps < 0 || d.eps > 1)
        report.violations.push_back(
            {Violation::Kind::BadFaceIndex,
             "face " + cell + " " + std::to_string(d.i) + " " +
                 std::to_string(d.eps) + " out of range"});
      else
        report.violations.push_back(
            {Violation::Kind::DanglingFace,
             "face " + cell + " " + std::to_string(d.i) + " " +
                 std::to_string(d.eps) + " targets unknown cell " + d.target});
    }
    for (int dim = 1; dim <= K.top_dim(); ++dim) {
      for (int idx = 0; idx < K.size(dim); ++idx) {
        const CellId c{dim, idx};
        for (int i = 1; i <= dim; ++i)
          for (int eps = 0; eps <= 1; ++eps)
            if (!K.has_face(c, i, eps) &&
                !declared.count({dim, c.index, i, eps}))
              report.violations.push_back(
                  {Violation::Kind::MissingFace,
                   "cell " + K.id(c) + " has no face (" + std::to_string(i) +
                       "," + std::to_string(eps) + ")"});
      }
    }
    if (!report.violations.empty()) return;  // relations need a total table
    for (int dim = 2; dim <= K.top_dim(); ++dim) {
      for (int idx = 0; idx < K.size(dim); ++idx) {
        const CellId c{dim, idx};
        for (int j = 2; j <= dim; ++j)
          for (int i = 1; i < j; ++i)
            for (int eps = 0; eps <= 1; ++eps)
              for (int eta = 0; eta <= 1; ++eta) {
                const CellId lhs = K.face(K.face(c, j, eta), i, eps);
                const CellId rhs = K.face(K.face(c, i, eps), j - 1, eta);
                if (lhs != rhs)
                  report.violations.push_back(
                      {Violation::Kind::RelationViolation,
                       "cell " + K.id(c) + ": face(face(.," +
                           std::to_string(j) + "," + std::to_string(eta) +
                           ")," + std::to_string(i) + "," +
                           std::to_string(eps) + ") = " + K.id(lhs) +
                           " but face(face(.," + std::to_string(i) + "," +
                           std::to_string(eps) + ")," + std::to_string(j - 1) +
                           "," + std::to_string(eta) + ") = " + K.id(rhs)});
              }
      }
    }
  }
};

ValidationReport validate(const PrecubicalSet& K) {
  ValidationReport report;
  ValidationDetail::run(K, report);
  return report;
}

// ---------------------------------------------------------------------------
// Cell words

int word_dim(std::string_view w) {
  return static_cast<int>(std::count(w.begin(), w.end(), '*'));
}

std::string word_face(std::string_view w, int i, int eps) {
  std::string out(w);
  int seen = 0;
  for (char& ch : out) {
    if (ch != '*') continue;
    if (++seen == i) {
      ch = eps ? '1' : '0';
      return out;
    }
  }
  throw std::invalid_argument("word_face: index out of range");
}

std::vector<std::string> all_words(int n) {
  std::vector<std::string> out;
  std::string w(n, '0');
  // 3^n words in lexicographic {0,1,*} positional enumeration
  const char symbols[3] = {'0', '1', '*'};
  std::vector<int> digits(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) w[i] = symbols[digits[i]];
    out.push_back(w);
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

CellId evaluate_word(const PrecubicalSet& K, CellId c, std::string_view word) {
  if (static_cast<int>(word.size()) != c.dim)
    throw std::invalid_argument("evaluate_word: word length != dim(cell)");
  // Fix positions in decreasing order; all lower positions are still free at
  // application time, so the face index equals the position itself.
  for (int p = static_cast<int>(word.size()); p >= 1; --p) {
    const char ch = word[p - 1];
    if (ch == '*') continue;
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("evaluate_word: bad symbol in word");
    c = K.face(c, p, ch == '1' ? 1 : 0);
  }
  return c;
}

CellId iterated_face(const PrecubicalSet& K, CellId c,
                     const std::vector<int>& axes, int eps) {
  std::string word(c.dim, '*');
  for (int a : axes) {
    if (a < 1 || a > c.dim)
      throw std::invalid_argument("iterated_face: index out of range");
    word[a - 1] = eps ? '1' : '0';
  }
  return evaluate_word(K, c, word);
}

// ---------------------------------------------------------------------------
// Constructions

PrecubicalSet standard_cube(int n) {
  if (n < 0) throw std::invalid_argument("standard_cube: n < 0");
  PcsBuilder b;
  const auto words = all_words(n);
  for (const auto& w : words) b.cell(w.empty() ? "()" : w, word_dim(w));
  for (const auto& w : words) {
    const int d = word_dim(w);
    const std::string name = w.empty() ? "()" : w;
    for (int i = 1; i <= d; ++i)
      for (int eps = 0; eps <= 1; ++eps) b.face(name, i, eps, word_face(w, i, eps));
  }
  return b.build();
}

PrecubicalSet skeleton(const PrecubicalSet& K, int n) {
  if (n < 0) throw std::invalid_argument("skeleton: n < 0");
  PcsBuilder b;
  for (int d = 0; d <= std::min(n, K.top_dim()); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      const CellId c{d, i};
      b.cell(K.id(c), d);
      for (int axis = 1; axis <= d; ++axis)
        for (int eps = 0; eps <= 1; ++eps)
          b.face(K.id(c), axis, eps, K.id(K.face(c, axis, eps)));
    }
  return b.build();
}

PrecubicalSet boundary_cube(int n) {
  if (n < 0) throw std::invalid_argument("boundary_cube: n < 0");
  if (n == 0) return PrecubicalSet{};  // the boundary of a point is empty
  return skeleton(standard_cube(n), n - 1);
}

PrecubicalSet chain_cube(const std::vector<int>& ns) {
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("chain_cube: block dims must be >= 1");
  PcsBuilder b;
  // The glued vertex between block i and i+1 keeps block i's name.
  auto block_name = [&](int block, const std::string& word) -> std::string {
    const int n = ns[block];
    if (block > 0 && word == std::string(static_cast<std::size_t>(n), '0'))
      return std::to_string(block) + ":" + std::string(ns[block - 1], '1');
    return std::to_string(block + 1) + ":" + word;
  };
  for (std::size_t block = 0; block < ns.size(); ++block) {
    const auto words = all_words(ns[block]);
    for (const auto& w : words) {
      const std::string name = block_name(static_cast<int>(block), w);
      if (block > 0 && w == std::string(static_cast<std::size_t>(ns[block]), '0'))
        continue;  // identified with previous block's final vertex
      b.cell(name, word_dim(w));
      for (int i = 1; i <= word_dim(w); ++i)
        for (int eps = 0; eps <= 1; ++eps)
          b.face(name, i, eps,
                 block_name(static_cast<int>(block), word_face(w, i, eps)));
    }
  }
  return b.build();
}

CellId PcsMap::apply(CellId c) const {
  if (c.dim < 0 || c.dim >= static_cast<int>(image.size()) || c.index < 0 ||
      c.index >= static_cast<int>(image[c.dim].size()))
    throw std::invalid_argument("PcsMap::apply: cell out of range");
  return CellId{c.dim, image[c.dim][c.index]};
}

bool map_commutes(const PrecubicalSet& src, const PrecubicalSet& dst,
                  const PcsMap& f) {
  if (static_cast<int>(f.image.size()) < src.top_dim() + 1) return false;
  for (int d = 0; d <= src.top_dim(); ++d) {
    if (static_cast<int>(f.image[d].size()) != src.size(d)) return false;
    for (int i = 0; i < src.size(d); ++i) {
      const CellId c{d, i};
      const CellId fc = f.apply(c);
      if (fc.index < 0 || fc.index >= dst.size(d)) return false;
      for (int axis = 1; axis <= d; ++axis)
        for (int eps = 0; eps <= 1; ++eps)
          if (f.apply(src.face(c, axis, eps)) != dst.face(fc, axis, eps))
            return false;
    }
  }
  return true;
}

namespace {

// Face closure of a set of words inside the standard n-cube.
std::set<std::string> word_closure(const std::set<std::string>& cells) {
  std::set<std::string> closed;
  std::vector<std::string> queue(cells.begin(), cells.end());
  while (!queue.empty()) {
    std::string w = queue.back();
    queue.pop_back();
    if (!closed.insert(w).second) continue;
    const int d = word_dim(w);
    for (int i = 1; i <= d; ++i)
      for (int eps = 0; eps <= 1; ++eps) queue.push_back(word_face(w, i, eps));
  }
  return closed;
}

}  // namespace

Amalgam amalgam(int n, const std::set<std::string>& a_cells) {
  if (n < 1) throw std::invalid_argument("amalgam: n < 1");
  for (const auto& w : a_cells) {
    if (static_cast<int>(w.size()) != n || word_dim(w) >= n ||
        w.find_first_not_of("01*") != std::string::npos)
      throw std::invalid_argument("amalgam: '" + w +
                                  "' is not a cell of the boundary");
  }
  const std::set<std::string> shared = word_closure(a_cells);
  std::vector<std::string> added;
  for (const auto& w : shared)
    if (!a_cells.count(w)) added.push_back(w);

  PcsBuilder b;
  const auto words = all_words(n);
  auto name_in = [&](char side, const std::string& w) -> std::string {
    if (shared.count(w)) return w;
    return std::string(1, side) + ":" + w;
  };
  for (char side : {'L', 'R'}) {
    for (const auto& w : words) {
      if (shared.count(w) && side == 'R') continue;
      const std::string name = name_in(side, w);
      b.cell(name, word_dim(w));
      for (int i = 1; i <= word_dim(w); ++i)
        for (int eps = 0; eps <= 1; ++eps)
          b.face(name, i, eps, name_in(side, word_face(w, i, eps)));
    }
  }
  Amalgam out;
  out.complex = b.build();
  out.closure_added = std::move(added);

  const PrecubicalSet cube = standard_cube(n);
  auto build_map = [&](char side) {
    PcsMap f;
    f.image.resize(cube.top_dim() + 1);
    for (int d = 0; d <= cube.top_dim(); ++d) {
      f.image[d].resize(cube.size(d));
      for (int i = 0; i < cube.size(d); ++i) {
        const std::string w = cube.id(CellId{d, i});
        const auto target = out.complex.find(d, name_in(side, w));
        f.image[d][i] = target->index;
      }
    }
    return f;
  };
  out.left = build_map('L');
  out.right = build_map('R');
  return out;
}

std::vector<PcsMap> cube_maps_into(const PrecubicalSet& K, int n) {
  if (n < 0) throw std::invalid_argument("cube_maps_into: n < 0");
  const PrecubicalSet cube = standard_cube(n);
  std::vector<PcsMap> maps;
  for (int top = 0; top < K.size(n); ++top) {
    PcsMap f;
    f.image.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
      f.image[d].resize(cube.size(d));
      for (int i = 0; i < cube.size(d); ++i) {
        const std::string w = cube.id(CellId{d, i});
        f.image[d][i] =
            evaluate_word(K, CellId{n, top}, w == "()" ? "" : w).index;
      }
    }
    maps.push_back(std::move(f));
  }
  return maps;
}

PrecubicalSet tensor(const PrecubicalSet& K, const PrecubicalSet& L) {
  PcsBuilder b;
  auto pair_name = [&](CellId c, CellId d) {
    return K.id(c) + "," + L.id(d);
  };
  for (int p = 0; p <= K.top_dim(); ++p)
    for (int q = 0; q <= L.top_dim(); ++q)
      for (int ci = 0; ci < K.size(p); ++ci)
        for (int di = 0; di < L.size(q); ++di) {
          const CellId c{p, ci}, d{q, di};
          const std::string name = pair_name(c, d);
          b.cell(name, p + q);
          for (int i = 1; i <= p; ++i)
            for (int eps = 0; eps <= 1; ++eps)
              b.face(name, i, eps, pair_name(K.face(c, i, eps), d));
          for (int i = 1; i <= q; ++i)
            for (int eps = 0; eps <= 1; ++eps)
              b.face(name, p + i, eps, pair_name(c, L.face(d, i, eps)));
        }
  return b.build();
}

}  // namespace cubepaths
