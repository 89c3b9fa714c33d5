#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cubepaths {

// A cell is addressed by (dimension, index into the canonically sorted
// per-dimension identifier list).
struct CellId {
  int dim = -1;
  std::int32_t index = -1;

  friend bool operator==(const CellId&, const CellId&) = default;
  friend auto operator<=>(const CellId&, const CellId&) = default;
  bool valid() const { return dim >= 0 && index >= 0; }
};

// Finite precubical set: per-dimension cell identifiers plus the face table
// face(c, i, eps) for 1 <= i <= dim(c), eps in {0,1}. Instances are immutable
// once built; cells are stored sorted by (dimension, identifier), which makes
// every derived output deterministic. An instance may hold an incomplete or
// inconsistent face table (e.g. straight from a parsed file); validate()
// reports all defects, and every other operation requires a valid input.
class PrecubicalSet {
 public:
  PrecubicalSet() = default;

  int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
  int size(int dim) const;
  int total_cells() const;
  bool empty() const { return cells_.empty(); }

  const std::string& id(CellId c) const;
  std::optional<CellId> find(int dim, std::string_view id) const;

  bool has_face(CellId c, int i, int eps) const;
  CellId face(CellId c, int i, int eps) const;

  // Lower/upper extreme vertices: the iterated 0-face resp. 1-face over all
  // axes of c.
  CellId lower_extreme(CellId c) const;
  CellId upper_extreme(CellId c) const;

  // All cells in canonical order.
  std::vector<CellId> all_cells() const;

 private:
  friend class PcsBuilder;

  std::vector<std::vector<std::string>> cells_;
  // faces_[k][idx * 2k + 2(i-1) + eps] = index in dimension k-1, or -1.
  std::vector<std::vector<std::int32_t>> faces_;

  struct Dangling {
    int dim;  // dimension of the owning cell
    std::int32_t index;
    int i, eps;
    std::string target;
  };
  std::vector<Dangling> dangling_;
  std::vector<std::string> duplicate_ids_;

  friend struct ValidationDetail;
};

// Incremental construction by cell/face declarations in any order.
// build() resolves names, sorts canonically and keeps any defects around for
// validate() to report.
class PcsBuilder {
 public:
  PcsBuilder& cell(std::string id, int dim);
  PcsBuilder& face(const std::string& id, int i, int eps, std::string target);
  PrecubicalSet build();

 private:
  struct FaceDecl {
    std::string id;
    int i, eps;
    std::string target;
  };
  std::vector<std::pair<std::string, int>> cells_;
  std::vector<FaceDecl> faces_;
};

struct Violation {
  enum class Kind {
    DuplicateId,
    MissingFace,
    DanglingFace,
    BadFaceIndex,
    RelationViolation,
  };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks uniqueness of identifiers, totality of the face table and every
// cubical relation face(face(c,j,eta),i,eps) = face(face(c,i,eps),j-1,eta)
// for i < j. Empty report iff K is a precubical set.
ValidationReport validate(const PrecubicalSet& K);

// ---------------------------------------------------------------------------
// Cell words: cells of the standard cube as strings over {0,1,*}, dim = number
// of '*'. word_face replaces the i-th '*' by eps.

int word_dim(std::string_view w);
std::string word_face(std::string_view w, int i, int eps);
// All words of length n, every dimension.
std::vector<std::string> all_words(int n);

// Image of the cell of the standard n-cube named by `word` under the
// characteristic map of c (dim(c) = length of word): the mixed iterated face
// fixing position p to word[p] for every non-'*' position.
CellId evaluate_word(const PrecubicalSet& K, CellId c, std::string_view word);

// Iterated face map over a set of axes (1-based positions), single sign.
// Faces are applied in decreasing index order; the result is
// order-independent by the cubical relations.
CellId iterated_face(const PrecubicalSet& K, CellId c,
                     const std::vector<int>& axes, int eps);

// ---------------------------------------------------------------------------
// Standard constructions.

PrecubicalSet standard_cube(int n);
// boundary_cube(0) is the empty precubical set.
PrecubicalSet boundary_cube(int n);
PrecubicalSet skeleton(const PrecubicalSet& K, int n);

// The chain of cubes with dimensions ns, final vertex of each block glued to
// the initial vertex of the next. Cells of block b (1-based) are named
// "<b>:<word>"; a glued vertex keeps the earlier block's name.
PrecubicalSet chain_cube(const std::vector<int>& ns);

// Maps of precubical sets: per-dimension cell functions. Validity against a
// concrete (source, target) pair is checked by map_commutes.
struct PcsMap {
  // image[dim][source index] = target index (same dimension).
  std::vector<std::vector<std::int32_t>> image;

  CellId apply(CellId c) const;
};

bool map_commutes(const PrecubicalSet& src, const PrecubicalSet& dst,
                  const PcsMap& f);

// Two copies of the standard n-cube glued along a face-closed A inside the
// boundary; shared cells keep their word names, the rest get "L:"/"R:"
// prefixes. Returns the two inclusions.
struct Amalgam {
  PrecubicalSet complex;
  PcsMap left;
  PcsMap right;
  // Cells added to A by the automatic face closure (empty when the input was
  // already closed); callers surface these as a warning.
  std::vector<std::string> closure_added;
};
// `a_cells` are words of cells of the boundary of the n-cube; the face
// closure is taken automatically. Throws std::invalid_argument if a word does
// not name a cell of the boundary.
Amalgam amalgam(int n, const std::set<std::string>& a_cells);

// All precubical maps from the standard n-cube into K, one per n-cell,
// ordered like K's n-cells.
std::vector<PcsMap> cube_maps_into(const PrecubicalSet& K, int n);

// Tensor product: cells in dimension k are pairs (c, d) with dim c + dim d =
// k, named "<c>,<d>"; faces act on the matching factor with index shift.
PrecubicalSet tensor(const PrecubicalSet& K, const PrecubicalSet& L);

}  // namespace cubepaths
