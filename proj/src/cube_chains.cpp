#include "cubepaths/cube_chains.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace cubepaths {

namespace {

constexpr int kPartitionDimCap = 12;

}  // namespace

int CubeChain::grade() const {
  int total = 0;
  for (const CellId& c : cells) total += c.dim;
  return total;
}

CellId chain_from(const PrecubicalSet& K, const CubeChain& c) {
  if (c.cells.empty()) throw std::invalid_argument("empty chain");
  return K.lower_extreme(c.cells.front());
}

CellId chain_to(const PrecubicalSet& K, const CubeChain& c) {
  if (c.cells.empty()) throw std::invalid_argument("empty chain");
  return K.upper_extreme(c.cells.back());
}

bool RefinementWitness::is_identity() const {
  for (const auto& part : parts)
    if (part.blocks.size() != 1) return false;
  return true;
}

std::string witness_string(const RefinementWitness& w) {
  std::ostringstream out;
  for (const auto& part : w.parts) {
    out << "(";
    for (const auto& block : part.blocks) {
      out << "{";
      for (std::size_t i = 0; i < block.size(); ++i)
        out << (i ? "," : "") << block[i];
      out << "}";
    }
    out << ")";
  }
  return out.str();
}

std::map<int, std::vector<CubeChain>> enumerate_chains(const PrecubicalSet& K,
                                                       CellId alpha,
                                                       CellId beta,
                                                       int n_max) {
  if (alpha.dim != 0 || beta.dim != 0 || alpha.index < 0 ||
      alpha.index >= K.size(0) || beta.index < 0 || beta.index >= K.size(0))
    throw std::invalid_argument("enumerate_chains: unknown vertices");
  if (n_max < 1) throw std::invalid_argument("enumerate_chains: n_max < 1");

  // cells of dim >= 1 grouped by lower extreme vertex
  std::vector<std::vector<CellId>> outgoing(K.size(0));
  for (int d = 1; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      const CellId c{d, i};
      outgoing[K.lower_extreme(c).index].push_back(c);
    }

  std::map<int, std::vector<CubeChain>> per_grade;
  std::vector<CellId> stack;
  auto dfs = [&](auto&& self, CellId at, int used) -> void {
    if (!stack.empty() && at == beta)
      per_grade[used].push_back(CubeChain{stack});
    for (const CellId& c : outgoing[at.index]) {
      if (used + c.dim > n_max) continue;
      stack.push_back(c);
      self(self, K.upper_extreme(c), used + c.dim);
      stack.pop_back();
    }
  };
  dfs(dfs, alpha, 0);

  auto chain_less = [&](const CubeChain& a, const CubeChain& b) {
    if (a.cells.size() != b.cells.size())
      return a.cells.size() < b.cells.size();
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      const std::string& ia = K.id(a.cells[i]);
      const std::string& ib = K.id(b.cells[i]);
      if (ia != ib) return ia < ib;
    }
    return false;
  };
  for (auto& [grade, chains] : per_grade)
    std::sort(chains.begin(), chains.end(), chain_less);
  return per_grade;
}

CellId witness_block_cell(const PrecubicalSet& K, CellId c,
                          const OrderedPartition& part, int r) {
  std::string word(c.dim, '0');
  for (int s = 0; s < static_cast<int>(part.blocks.size()); ++s)
    for (int axis : part.blocks[s]) {
      if (axis < 1 || axis > c.dim)
        throw std::invalid_argument("witness block axis out of range");
      word[axis - 1] = s < r ? '1' : (s == r ? '*' : '0');
    }
  return evaluate_word(K, c, word);
}

namespace {

// Enumerates ordered partitions of `coords` (sorted) with prescribed block
// sizes, pruning each block against the required fine cube.
struct PartitionSearch {
  const PrecubicalSet& K;
  CellId coarse;
  const std::vector<CellId>& fine;  // the segment of fine cubes to match
  std::vector<OrderedPartition> found;

  std::vector<int> remaining;          // unassigned axes, ascending
  OrderedPartition current;

  PartitionSearch(const PrecubicalSet& K_, CellId coarse_,
                  const std::vector<CellId>& fine_)
      : K(K_), coarse(coarse_), fine(fine_) {
    for (int a = 1; a <= coarse.dim; ++a) remaining.push_back(a);
  }

  bool block_matches(int r) const {
    // word: axes of earlier blocks 1, this block *, everything else 0
    std::string word(coarse.dim, '0');
    for (int s = 0; s < r; ++s)
      for (int axis : current.blocks[s]) word[axis - 1] = '1';
    for (int axis : current.blocks[r]) word[axis - 1] = '*';
    return evaluate_word(K, coarse, word) == fine[r];
  }

  void run(int r) {
    if (r == static_cast<int>(fine.size())) {
      if (remaining.empty()) found.push_back(current);
      return;
    }
    const int want = fine[r].dim;
    std::vector<int> pick;
    choose(r, want, 0, pick);
  }

  void choose(int r, int want, std::size_t start, std::vector<int>& pick) {
    if (static_cast<int>(pick.size()) == want) {
      current.blocks.push_back(pick);
      std::vector<int> rest;
      for (int a : remaining)
        if (std::find(pick.begin(), pick.end(), a) == pick.end())
          rest.push_back(a);
      std::swap(rest, remaining);
      if (block_matches(static_cast<int>(current.blocks.size()) - 1))
        run(r + 1);
      std::swap(rest, remaining);
      current.blocks.pop_back();
      return;
    }
    for (std::size_t i = start; i < remaining.size(); ++i) {
      pick.push_back(remaining[i]);
      choose(r, want, i + 1, pick);
      pick.pop_back();
    }
  }
};

}  // namespace

std::vector<RefinementWitness> hom(const PrecubicalSet& K, const CubeChain& a,
                                   const CubeChain& b) {
  std::vector<RefinementWitness> out;
  if (a.grade() != b.grade()) return out;
  if (!(chain_from(K, a) == chain_from(K, b)) ||
      !(chain_to(K, a) == chain_to(K, b)))
    return out;

  // The grouping of a's cubes into consecutive segments is forced by the
  // dimension sequences: prefix sums must match exactly.
  std::vector<std::vector<CellId>> segments;
  std::size_t pos = 0;
  for (const CellId& coarse : b.cells) {
    int need = coarse.dim;
    if (coarse.dim > kPartitionDimCap)
      throw CapError("refinement enumeration capped at cube dimension " +
                     std::to_string(kPartitionDimCap));
    std::vector<CellId> seg;
    while (need > 0) {
      if (pos >= a.cells.size()) return out;
      if (a.cells[pos].dim > need) return out;
      need -= a.cells[pos].dim;
      seg.push_back(a.cells[pos++]);
    }
    segments.push_back(std::move(seg));
  }
  if (pos != a.cells.size()) return out;

  // Candidate partitions per coarse cube, then their cartesian product.
  std::vector<std::vector<OrderedPartition>> candidates;
  for (std::size_t j = 0; j < b.cells.size(); ++j) {
    PartitionSearch search(K, b.cells[j], segments[j]);
    search.run(0);
    if (search.found.empty()) return out;
    candidates.push_back(std::move(search.found));
  }
  RefinementWitness w;
  auto emit = [&](auto&& self, std::size_t j) -> void {
    if (j == candidates.size()) {
      out.push_back(w);
      return;
    }
    for (const auto& part : candidates[j]) {
      w.parts.push_back(part);
      self(self, j + 1);
      w.parts.pop_back();
    }
  };
  emit(emit, 0);
  return out;
}

RefinementWitness compose_witness(const PrecubicalSet& K, const CubeChain& a,
                                  const CubeChain& b, const CubeChain& c,
                                  const RefinementWitness& f,
                                  const RefinementWitness& g) {
  (void)a;
  if (g.parts.size() != c.cells.size() || f.parts.size() != b.cells.size())
    throw std::invalid_argument("compose_witness: arity mismatch");
  RefinementWitness out;
  std::size_t b_cursor = 0;
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    OrderedPartition combined;
    for (const auto& block : g.parts[k].blocks) {
      // block names the axes of c's cube k carried by b's cube b_cursor;
      // refine it through f's partition of that cube (axes of the b-cube are
      // identified with the sorted elements of `block`).
      const OrderedPartition& inner = f.parts[b_cursor++];
      for (const auto& inner_block : inner.blocks) {
        std::vector<int> mapped;
        for (int axis : inner_block) mapped.push_back(block[axis - 1]);
        combined.blocks.push_back(std::move(mapped));
      }
    }
    out.parts.push_back(std::move(combined));
  }
  (void)K;
  return out;
}

ChainCategory build_category(const PrecubicalSet& K, CellId alpha, CellId beta,
                             int n) {
  ChainCategory cat;
  cat.grade = n;
  cat.from = alpha;
  cat.to = beta;
  auto per_grade = enumerate_chains(K, alpha, beta, n);
  if (per_grade.count(n)) cat.objects = per_grade[n];

  const int count = static_cast<int>(cat.objects.size());
  std::map<std::string, int> index_of;  // (src,dst,witness) -> morphism index
  auto key_of = [](int src, int dst, const RefinementWitness& w) {
    return std::to_string(src) + ">" + std::to_string(dst) + ":" +
           witness_string(w);
  };
  std::map<std::pair<int, int>, int> hom_count;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const auto witnesses = hom(K, cat.objects[i], cat.objects[j]);
      for (const auto& w : witnesses) {
        if (i == j && w.is_identity()) continue;  // identities are implicit
        cat.morphisms.push_back(ChainMorphism{i, j, w});
      }
      const int arrows = static_cast<int>(witnesses.size());
      hom_count[{i, j}] = arrows;
      if (arrows > 1) cat.nonthin_pairs.emplace_back(i, j);
    }
  std::sort(cat.morphisms.begin(), cat.morphisms.end(),
            [&](const ChainMorphism& x, const ChainMorphism& y) {
              if (x.src != y.src) return x.src < y.src;
              if (x.dst != y.dst) return x.dst < y.dst;
              return witness_string(x.witness) < witness_string(y.witness);
            });
  for (int m = 0; m < static_cast<int>(cat.morphisms.size()); ++m) {
    const auto& mor = cat.morphisms[m];
    index_of[key_of(mor.src, mor.dst, mor.witness)] = m;
    if (mor.src == mor.dst) cat.endomorphisms.push_back(m);
  }

  // composition table; closure is asserted as we go
  for (int f = 0; f < static_cast<int>(cat.morphisms.size()); ++f)
    for (int g = 0; g < static_cast<int>(cat.morphisms.size()); ++g) {
      const auto& mf = cat.morphisms[f];
      const auto& mg = cat.morphisms[g];
      if (mf.dst != mg.src) continue;
      const RefinementWitness w =
          compose_witness(K, cat.objects[mf.src], cat.objects[mg.src],
                          cat.objects[mg.dst], mf.witness, mg.witness);
      if (mf.src == mg.dst && w.is_identity()) {
        cat.composition[{f, g}] = -1;
        continue;
      }
      const auto it = index_of.find(key_of(mf.src, mg.dst, w));
      if (it == index_of.end())
        throw std::logic_error("composition not closed in chain category");
      cat.composition[{f, g}] = it->second;
    }

  // associativity, exhaustively over composable triples
  auto compose_idx = [&](int f, int g) { return cat.composition.at({f, g}); };
  for (const auto& [fg_pair, fg] : cat.composition) {
    const auto [f, g] = fg_pair;
    for (int h = 0; h < static_cast<int>(cat.morphisms.size()); ++h) {
      if (cat.morphisms[h].src != cat.morphisms[g].dst) continue;
      const int gh = compose_idx(g, h);
      // (f;g);h
      const int left = fg == -1 ? h : compose_idx(fg, h);
      // f;(g;h)
      const int right = gh == -1 ? f : compose_idx(f, gh);
      if (left != right)
        throw std::logic_error("composition not associative in chain category");
    }
  }
  return cat;
}

std::optional<int> has_terminal(const ChainCategory& C) {
  const int count = static_cast<int>(C.objects.size());
  if (count == 0) return std::nullopt;
  std::vector<std::vector<int>> arrows(count, std::vector<int>(count, 0));
  for (const auto& m : C.morphisms) ++arrows[m.src][m.dst];
  for (int t = 0; t < count; ++t) {
    bool terminal = arrows[t][t] == 0;  // only the implicit identity
    for (int a = 0; a < count && terminal; ++a)
      if (a != t && arrows[a][t] != 1) terminal = false;
    if (terminal) return t;
  }
  return std::nullopt;
}

CubeChain concat(const PrecubicalSet& K, const CubeChain& a,
                 const CubeChain& b) {
  if (!(chain_to(K, a) == chain_from(K, b)))
    throw std::invalid_argument("concat: endpoint mismatch");
  CubeChain out = a;
  out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
  return out;
}

RefinementWitness concat_witness(const RefinementWitness& f,
                                 const RefinementWitness& g) {
  RefinementWitness out = f;
  out.parts.insert(out.parts.end(), g.parts.begin(), g.parts.end());
  return out;
}

std::optional<int> natural_grade_bound(const PrecubicalSet& K, CellId alpha,
                                       CellId beta) {
  const int verts = K.size(0);
  struct Edge {
    int to, weight;
  };
  std::vector<std::vector<Edge>> adj(verts);
  std::vector<int> indegree(verts, 0);
  for (int d = 1; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      const CellId c{d, i};
      const int lo = K.lower_extreme(c).index;
      const int hi = K.upper_extreme(c).index;
      adj[lo].push_back(Edge{hi, d});
      ++indegree[hi];
    }
  // Kahn topological sort; leftovers mean a directed cycle.
  std::queue<int> ready;
  for (int v = 0; v < verts; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  std::vector<int> degree = indegree;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (const Edge& e : adj[v])
      if (--degree[e.to] == 0) ready.push(e.to);
  }
  if (static_cast<int>(order.size()) != verts) return std::nullopt;

  constexpr int kUnreachable = -1;
  std::vector<int> best(verts, kUnreachable);
  best[alpha.index] = 0;
  for (int v : order) {
    if (best[v] == kUnreachable) continue;
    for (const Edge& e : adj[v])
      best[e.to] = std::max(best[e.to], best[v] + e.weight);
  }
  return best[beta.index] == kUnreachable ? 0 : best[beta.index];
}

std::string chains_report(const PrecubicalSet& K,
                          const std::map<int, ChainCategory>& per_grade) {
  std::ostringstream out;
  out << "chains v1\n";
  for (const auto& [grade, cat] : per_grade) {
    out << "grade " << grade << "\n";
    for (std::size_t i = 0; i < cat.objects.size(); ++i) {
      out << "object " << i << " :";
      std::string sep = " ";
      for (const CellId& c : cat.objects[i].cells) {
        out << sep << K.id(c);
        sep = ",";
      }
      out << "\n";
    }
    for (const auto& m : cat.morphisms)
      out << "mor " << m.src << " -> " << m.dst << " : "
          << witness_string(m.witness) << "\n";
  }
  return out.str();
}

}  // namespace cubepaths
