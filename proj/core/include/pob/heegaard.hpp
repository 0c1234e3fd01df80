#pragma once

#include <string>
#include <vector>

#include "pob/homology.hpp"
#include "pob/openbook.hpp"

namespace pob {

// The sutured Heegaard diagram of a partial open book: the diagram
// surface doubles the partial region over the page (the page copy is
// orientation-reversed), the alpha curves double the cocores, and each
// beta curve joins a pushoff of a cocore with the matching pushoff of
// its monodromy image.
struct HeegaardDiagram {
  Surface sigma;
  // page faces and gluing edges keep their ids from the assembled page;
  // top faces (one per partial handle) follow.
  std::vector<EdgeWord> alpha, beta;  // closed curves on sigma
  std::vector<EdgeWord> a_arcs;       // cocores a_j on the page
  std::vector<EdgeWord> b_arcs;       // pushoffs b_j on the page
  int page_faces = 0;                 // faces cloned from the page
  int r = 0;
};

HeegaardDiagram build_diagram(const PartialOpenBook& pob);

struct JuhaszVerdict {
  bool balanced = false;
  std::vector<std::string> reasons;
};

// |alpha| = |beta|, no closed diagram component, and each curve family
// independent in the rational first homology of the diagram surface.
JuhaszVerdict check_juhasz_balanced(const HeegaardDiagram& hd);

// entry (i, j) = algebraic intersection of alpha_i with beta_j
Mat intersection_matrix(const HeegaardDiagram& hd);

// H1 of the manifold presented by the diagram: H1(sigma) modulo all
// alpha and beta classes.
AbelianInvariants h1_from_diagram(const HeegaardDiagram& hd);

// Recognizes `big` as a single stabilization of `small`: chi drops by
// two, boundary counts agree, one new alpha meets one new beta exactly
// once and misses the other betas, and the remaining curves reproduce
// the small intersection matrix under some index pairing.
bool stabilization_pattern(const HeegaardDiagram& small, const HeegaardDiagram& big);

}  // namespace pob
