#include "cubepaths/nerve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cubepaths {

namespace {

constexpr int kNerveDimCap = 8;

using Simplex = std::vector<int>;  // morphism indices, composable in order

}  // namespace

int default_nerve_dim(const ChainCategory& C) {
  // longest path in the morphism composability graph; composable strings of
  // non-identity morphisms strictly coarsen, so depth is finite unless the
  // category has endomorphisms, in which case the cap applies directly.
  if (!C.endomorphisms.empty()) return kNerveDimCap;
  const int m = static_cast<int>(C.morphisms.size());
  // longest[f] = longest string starting with morphism f
  std::vector<int> longest(m, -1);
  auto rec = [&](auto&& self, int f) -> int {
    if (longest[f] >= 0) return longest[f];
    int best = 1;
    for (int g = 0; g < m; ++g)
      if (C.morphisms[g].src == C.morphisms[f].dst)
        best = std::max(best, 1 + self(self, g));
    return longest[f] = best;
  };
  int depth = 0;
  for (int f = 0; f < m; ++f) depth = std::max(depth, rec(rec, f));
  return std::min(depth, kNerveDimCap);
}

NerveComplex nerve(const ChainCategory& C, int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("nerve: max_dim < 0");
  NerveComplex N;
  N.capped = max_dim < default_nerve_dim(C);

  const int object_count = static_cast<int>(C.objects.size());
  const int morphism_count = static_cast<int>(C.morphisms.size());

  std::vector<std::vector<Simplex>> levels;  // levels[k-1] = k-simplices
  if (max_dim >= 1) {
    std::vector<Simplex> ones;
    for (int f = 0; f < morphism_count; ++f) ones.push_back({f});
    levels.push_back(std::move(ones));
    for (int k = 2; k <= max_dim; ++k) {
      std::vector<Simplex> next;
      for (const Simplex& s : levels.back())
        for (int g = 0; g < morphism_count; ++g)
          if (C.morphisms[g].src == C.morphisms[s.back()].dst) {
            Simplex t = s;
            t.push_back(g);
            next.push_back(std::move(t));
          }
      if (next.empty()) break;
      levels.push_back(std::move(next));
    }
  }

  N.simplex_counts.push_back(object_count);
  for (const auto& level : levels)
    N.simplex_counts.push_back(static_cast<int>(level.size()));

  // index maps per level for boundary targets
  std::vector<std::map<Simplex, int>> index(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l)
    for (int i = 0; i < static_cast<int>(levels[l].size()); ++i)
      index[l][levels[l][i]] = i;

  N.boundaries.resize(N.simplex_counts.size());
  if (N.dim() >= 1) {
    // d1: target - source
    IntMatrix d1(object_count, N.simplex_counts[1]);
    for (int f = 0; f < N.simplex_counts[1]; ++f) {
      d1.at(C.morphisms[f].dst, f) += 1;
      d1.at(C.morphisms[f].src, f) -= 1;
    }
    N.boundaries[1] = std::move(d1);
  }
  for (int k = 2; k <= N.dim(); ++k) {
    IntMatrix dk(N.simplex_counts[k - 1], N.simplex_counts[k]);
    const auto& level = levels[k - 1];
    for (int col = 0; col < static_cast<int>(level.size()); ++col) {
      const Simplex& s = level[col];
      for (int i = 0; i <= k; ++i) {
        const int sign = i % 2 == 0 ? 1 : -1;
        Simplex face;
        if (i == 0)
          face.assign(s.begin() + 1, s.end());
        else if (i == k)
          face.assign(s.begin(), s.end() - 1);
        else {
          const int composite = C.composition.at({s[i - 1], s[i]});
          if (composite == -1) continue;  // degenerate face, dropped
          face.assign(s.begin(), s.end());
          face[i - 1] = composite;
          face.erase(face.begin() + i);
        }
        dk.at(index[k - 2].at(face), col) += sign;
      }
    }
    N.boundaries[k] = std::move(dk);
  }
  return N;
}

NerveComplex nerve(const ChainCategory& C) {
  return nerve(C, default_nerve_dim(C));
}

HomologySummary homology(const NerveComplex& N, int up_to) {
  HomologySummary sum;
  long long euler = 0;
  for (int k = 0; k <= N.dim(); ++k)
    euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(N.simplex_counts[k]);
  sum.euler = euler;

  std::vector<int> rank(N.dim() + 2, 0);
  std::vector<std::vector<Int>> torsion_src(N.dim() + 2);
  for (int k = 1; k <= N.dim(); ++k) {
    const std::vector<Int> divisors = smith_divisors(N.boundaries[k]);
    rank[k] = static_cast<int>(divisors.size());
    for (const Int& d : divisors)
      if (d > 1) torsion_src[k].push_back(d);
  }
  for (int k = 0; k <= up_to; ++k) {
    const int chains = k <= N.dim() ? N.simplex_counts[k] : 0;
    const int below = k <= N.dim() ? rank[k] : 0;          // rank of d_k
    const int above = k + 1 <= N.dim() ? rank[k + 1] : 0;  // rank of d_{k+1}
    sum.betti.push_back(chains - below - above);
    sum.torsion.push_back(k + 1 <= N.dim() ? torsion_src[k + 1]
                                           : std::vector<Int>{});
  }
  return sum;
}

HomologySummary homology(const NerveComplex& N) {
  return homology(N, std::max(N.dim(), 0));
}

std::vector<std::vector<int>> pi0(const ChainCategory& C) {
  const int n = static_cast<int>(C.objects.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : C.morphisms) {
    const int a = find(m.src), b = find(m.dst);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  return out;
}

std::string homology_report(const HomologySummary& h) {
  std::ostringstream out;
  for (std::size_t k = 0; k < h.betti.size(); ++k) {
    out << "H_" << k << " = Z^" << h.betti[k];
    for (const Int& d : h.torsion[k]) out << " + Z/" << int_str(d);
    out << "\n";
  }
  out << "chi = " << h.euler << "\n";
  return out.str();
}

}  // namespace cubepaths
