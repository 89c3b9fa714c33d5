#pragma once

#include <string>
#include <vector>

#include "cubepaths/cube_chains.hpp"
#include "cubepaths/snf.hpp"

namespace cubepaths {

// Normalized nerve of a finite category: non-degenerate k-simplices are
// composable strings of k non-identity morphisms; faces compose adjacent
// morphisms or drop the ends, and a face whose composite is an identity is
// degenerate and contributes nothing to the boundary.
struct NerveComplex {
  std::vector<int> simplex_counts;      // index k = number of k-simplices
  std::vector<IntMatrix> boundaries;    // boundaries[k] : C_k -> C_{k-1}, k >= 1
  bool capped = false;                  // true when the depth cap was hit

  int dim() const { return static_cast<int>(simplex_counts.size()) - 1; }
};

// Nerve truncated at max_dim (inclusive).
NerveComplex nerve(const ChainCategory& C, int max_dim);

// Longest composable string of non-identity morphisms, capped at 8.
int default_nerve_dim(const ChainCategory& C);
NerveComplex nerve(const ChainCategory& C);

struct HomologySummary {
  std::vector<int> betti;
  std::vector<std::vector<Int>> torsion;  // per degree, divisors > 1
  long long euler = 0;
};

// Integer homology via Smith normal form of the boundary matrices.
HomologySummary homology(const NerveComplex& N, int up_to);
HomologySummary homology(const NerveComplex& N);

// Zigzag-connected components of the objects, each sorted, listed by smallest
// member.
std::vector<std::vector<int>> pi0(const ChainCategory& C);

// "H_k = Z^b (+ Z/d ...)" lines followed by "chi = <int>".
std::string homology_report(const HomologySummary& h);

}  // namespace cubepaths
