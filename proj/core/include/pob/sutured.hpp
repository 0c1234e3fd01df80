#pragma once

#include <string>
#include <vector>

#include "pob/cut.hpp"
#include "pob/homology.hpp"
#include "pob/openbook.hpp"

namespace pob {

// Counts and Euler characteristics describing the sutured manifold
// associated to a partial open book.
struct SuturedData {
  int gamma_components = 0;
  int chi_r_plus = 0;
  int chi_r_minus = 0;
  int boundary_components_of_m = 0;
  std::vector<int> incidence;  // suture circles per boundary component
  int chi_boundary_m = 0;      // from the assembled boundary surface
};

// The two handlebody pieces and the surface they meet along: the page
// handlebody carries the page's H1, the partial-region piece carries one
// solid component per partial handle, and the intersection is the double
// of the partial region along its free page boundary.
struct GluingModel {
  Surface double_p;          // one doubled band per partial handle
  int disk_count = 0;        // the vertical disks, one per free foot arc
  Mat into_page;             // columns: H1(double) basis -> H1(S)
  Mat into_partial;          // columns: H1(double) basis -> H1(P) (rank 0 here:
                             // disjoint bands have no first homology)
  Mat component_map;         // H0(double) -> H0(N) + H0(H)
};

// Traces the suture, both open complement regions, and the boundary of
// the glued manifold.  Throws ValidationError when the book is invalid.
SuturedData build_sutured(const PartialOpenBook& pob);

struct BalanceVerdict {
  bool balanced = false;
  std::vector<std::string> reasons;  // empty when balanced
};

BalanceVerdict check_balanced(const SuturedData& sd);

GluingModel build_gluing_model(const PartialOpenBook& pob);

// First homology of the glued manifold by Mayer-Vietoris over the two
// handlebody pieces; independent of the Heegaard-diagram presentation.
AbelianInvariants h1_oracle(const PartialOpenBook& pob);

}  // namespace pob
