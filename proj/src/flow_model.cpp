#include "cubepaths/flow_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubepaths {

PathSpaceModel path_space_model(const PrecubicalSet& K, CellId alpha,
                                CellId beta, std::optional<int> n_max) {
  if (alpha.dim != 0 || beta.dim != 0 || alpha.index < 0 ||
      alpha.index >= K.size(0) || beta.index < 0 || beta.index >= K.size(0))
    throw std::invalid_argument("path_space_model: unknown vertices");
  PathSpaceModel model;
  model.from = alpha;
  model.to = beta;
  const std::optional<int> natural = natural_grade_bound(K, alpha, beta);
  if (natural) {
    model.bound = *natural;
    model.natural_bound = true;
  } else if (n_max) {
    model.bound = *n_max;
  } else {
    throw std::invalid_argument(
        "path_space_model: the chain extension graph is cyclic, a grade bound "
        "is required");
  }
  if (model.bound < 1) return model;  // no chains at all

  const auto per_grade = enumerate_chains(K, alpha, beta, model.bound);
  for (const auto& [grade, chains] : per_grade) {
    (void)chains;
    GradeModel gm;
    gm.category = build_category(K, alpha, beta, grade);
    gm.nerve_complex = nerve(gm.category);
    gm.hom = homology(gm.nerve_complex);
    gm.components = static_cast<int>(pi0(gm.category).size());
    model.pi0_total += gm.components;
    model.grades.emplace(grade, std::move(gm));
  }
  return model;
}

FlowModel natural_cube_flow(int n) {
  if (n < 0) throw std::invalid_argument("natural_cube_flow: n < 0");
  FlowModel flow;
  flow.complex = standard_cube(n);
  const PrecubicalSet& K = flow.complex;
  for (int a = 0; a < K.size(0); ++a)
    for (int b = 0; b < K.size(0); ++b) {
      const CellId va{0, a}, vb{0, b};
      PathSpaceModel m =
          path_space_model(K, va, vb, std::nullopt);  // cube is acyclic
      flow.path_spaces.emplace(std::make_pair(K.id(va), K.id(vb)),
                               std::move(m));
    }
  return flow;
}

CubeChain compose_classes(const PrecubicalSet& K, const CubeChain& x,
                          const CubeChain& y) {
  return concat(K, x, y);
}

std::vector<CellId> reachable_vertices(const PrecubicalSet& K, CellId from) {
  if (from.dim != 0) throw std::invalid_argument("reachable_vertices: not a vertex");
  std::vector<std::vector<int>> adj(K.size(0));
  for (int d = 1; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i) {
      const CellId c{d, i};
      adj[K.lower_extreme(c).index].push_back(K.upper_extreme(c).index);
    }
  std::vector<bool> seen(K.size(0), false);
  std::vector<int> stack{from.index};
  seen[from.index] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  std::vector<CellId> out;
  for (int v = 0; v < K.size(0); ++v)
    if (seen[v]) out.push_back(CellId{0, v});
  return out;
}

std::vector<CellId> deadlock_vertices(const PrecubicalSet& K, CellId init,
                                      CellId final_vertex) {
  std::vector<bool> has_exit(K.size(0), false);
  for (int d = 1; d <= K.top_dim(); ++d)
    for (int i = 0; i < K.size(d); ++i)
      has_exit[K.lower_extreme(CellId{d, i}).index] = true;
  std::vector<CellId> out;
  for (const CellId& v : reachable_vertices(K, init))
    if (!(v == final_vertex) && !has_exit[v.index]) out.push_back(v);
  return out;
}

std::string pathspace_report(const PrecubicalSet& K, const PathSpaceModel& m) {
  std::ostringstream out;
  out << "pathspace v1\n";
  out << "source " << K.id(m.from) << "\n";
  out << "target " << K.id(m.to) << "\n";
  out << "bound " << m.bound << (m.natural_bound ? " natural" : " given")
      << "\n";
  for (const auto& [grade, gm] : m.grades) {
    out << "grade " << grade << ": objects " << gm.category.objects.size()
        << " morphisms " << gm.category.morphisms.size() << " pi0 "
        << gm.components << " betti";
    // trailing zero Betti numbers trimmed, at least one entry printed
    int last = 0;
    for (std::size_t k = 0; k < gm.hom.betti.size(); ++k)
      if (gm.hom.betti[k] != 0) last = static_cast<int>(k);
    for (int k = 0; k <= last; ++k) out << " " << gm.hom.betti[k];
    out << "\n";
  }
  out << "pi0 = " << m.pi0_total << "\n";
  return out.str();
}

}  // namespace cubepaths
