#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubepaths/errors.hpp"
#include "cubepaths/precubical.hpp"

namespace cubepaths {

// A cube chain from alpha to beta: cells of dimension >= 1 whose extreme
// vertices match up (the upper extreme of each cell is the lower extreme of
// the next); the lower extreme of the first cell is alpha and the upper
// extreme of the last is beta. The grade is the total dimension.
struct CubeChain {
  std::vector<CellId> cells;

  int grade() const;
  friend bool operator==(const CubeChain&, const CubeChain&) = default;
};

CellId chain_from(const PrecubicalSet& K, const CubeChain& c);
CellId chain_to(const PrecubicalSet& K, const CubeChain& c);

// Ordered partition of {1..m} into nonempty blocks (1-based axis positions,
// each block sorted ascending).
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Witness of a refinement morphism from a fine chain to a coarse chain: one
// ordered partition per coarse cube. The fine cube for block r of a coarse
// cube c is the mixed iterated face of c fixing the axes of earlier blocks to
// 1 and the axes of later blocks to 0.
struct RefinementWitness {
  std::vector<OrderedPartition> parts;
  friend bool operator==(const RefinementWitness&, const RefinementWitness&) = default;

  bool is_identity() const;
};

std::string witness_string(const RefinementWitness& w);

struct ChainMorphism {
  int src = -1;  // fine object index
  int dst = -1;  // coarse object index
  RefinementWitness witness;
};

// The finite category of cube chains of a fixed grade between two vertices.
// Identities are implicit; `morphisms` holds everything else in canonical
// order. `composition[(f,g)]` is the index of g-after-f, or -1 when the
// composite is an identity.
struct ChainCategory {
  int grade = 0;
  CellId from, to;
  std::vector<CubeChain> objects;
  std::vector<ChainMorphism> morphisms;
  std::map<std::pair<int, int>, int> composition;
  // Reported, never suppressed: object pairs with more than one morphism
  // between them, and nontrivial endomorphisms.
  std::vector<std::pair<int, int>> nonthin_pairs;
  std::vector<int> endomorphisms;
};

// Every chain from alpha to beta of grade 1..n_max, keyed by grade, each
// grade sorted canonically (by number of cubes, then cell-id lists).
std::map<int, std::vector<CubeChain>> enumerate_chains(const PrecubicalSet& K,
                                                       CellId alpha,
                                                       CellId beta, int n_max);

// The cell named by the block word of `part` position r within coarse cube c.
CellId witness_block_cell(const PrecubicalSet& K, CellId c,
                          const OrderedPartition& part, int r);

// All refinement witnesses from fine chain a to coarse chain b. Empty unless
// grades and endpoints agree. hom(a,a) = {identity}.
std::vector<RefinementWitness> hom(const PrecubicalSet& K, const CubeChain& a,
                                   const CubeChain& b);

// Blockwise composition of witnesses along a -> b -> c.
RefinementWitness compose_witness(const PrecubicalSet& K, const CubeChain& a,
                                  const CubeChain& b, const CubeChain& c,
                                  const RefinementWitness& f,
                                  const RefinementWitness& g);

// Objects, morphisms and the composition table; closure and associativity are
// checked exhaustively during construction.
ChainCategory build_category(const PrecubicalSet& K, CellId alpha, CellId beta,
                             int n);

// Index of the object receiving exactly one morphism from every object.
std::optional<int> has_terminal(const ChainCategory& C);

// Concatenation of chains; grades add. Throws on endpoint mismatch.
CubeChain concat(const PrecubicalSet& K, const CubeChain& a,
                 const CubeChain& b);

// Blockwise extension of concatenation to refinement witnesses: a witness
// from concat(src f, src g) to concat(dst f, dst g).
RefinementWitness concat_witness(const RefinementWitness& f,
                                 const RefinementWitness& g);

// Grade bound for exhaustive enumeration: the longest weighted alpha-to-beta
// path in the chain extension graph when that graph is acyclic, nullopt when
// it has a directed cycle (enumeration then needs an explicit bound).
std::optional<int> natural_grade_bound(const PrecubicalSet& K, CellId alpha,
                                       CellId beta);

// chains v1 report: per grade, object and morphism lines in canonical order.
std::string chains_report(const PrecubicalSet& K,
                          const std::map<int, ChainCategory>& per_grade);

}  // namespace cubepaths
