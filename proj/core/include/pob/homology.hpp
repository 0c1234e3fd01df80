#pragma once

#include <string>
#include <vector>

#include "pob/surface.hpp"
#include "pob/word.hpp"

namespace pob {

using Mat = std::vector<std::vector<long long>>;  // row-major

// Invariants of a finitely generated abelian group in canonical form:
// free rank plus torsion coefficients d1 | d2 | ... , each > 1.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianInvariants& a, const AbelianInvariants& b) {
    return !(a == b);
  }
  std::string str() const;
};

struct SmithResult {
  Mat d;  // diagonal form, same shape as input
  Mat u;  // rows transform: u * m * v == d
  Mat v;
};

SmithResult smith_normal_form(Mat m);

// Diagonal entries of the Smith form, nonzero ones first.
std::vector<long long> smith_diagonal(const Mat& m);

long long matrix_rank(const Mat& m);  // rank over Q

// Invariants of Z^ambient / (column span of the given columns).
AbelianInvariants quotient_invariants(int ambient, const Mat& columns);

// Coordinates of a closed word in the deterministic basis of H1 of the
// surface: one generator per gluing edge outside the spanning forest,
// ordered by edge id.  Crossing an edge from its b side to its a side
// counts +1.
std::vector<long long> h1_class(const Surface& s, const EdgeWord& w);

// The closed curve dual to a spanning-forest generator: crosses the edge
// once and returns through the forest.
EdgeWord spine_loop(const Surface& s, int gen_edge);

// First homology of the surface rel its full boundary.  The intersection
// pairing against closed curves is unimodular, so coordinates of an arc
// are its algebraic intersections with the dual basis loops of the
// spanning-forest generators; this is invariant under sliding endpoints
// along the boundary.
class RelativeH1 {
 public:
  explicit RelativeH1(const Surface& s);
  int rank() const { return static_cast<int>(loops_.size()); }
  std::vector<long long> word_class(const EdgeWord& w) const;

 private:
  const Surface* surf_;
  std::vector<EdgeWord> loops_;
};

}  // namespace pob
