#pragma once

#include <vector>

#include "pob/curves.hpp"
#include "pob/surface.hpp"

namespace pob {

// Result of cutting a surface along a crossing-free realized arc system.
// Every face is subdivided by its chords, crossed gluing edges split into
// matching sub-edges, and each cutting arc leaves two free seam copies.
struct CutResult {
  Surface cut;

  struct Origin {
    enum class Kind { Piece, Seam } kind = Kind::Piece;
    // Piece: sub-interval of an original boundary cell.
    int orig_item = -1;
    int piece = 0;  // index along the original cell in its face reading
    // Seam: copy of a chord of a cutting arc.
    int word = -1;
    int chord = -1;
    int side = 0;  // 0 = left of the directed chord, 1 = right
  };
  std::vector<Origin> origins;     // per item of `cut`
  std::vector<int> face_origin;    // per face of `cut`: original face id

  // items of `cut` that came from the given original item, ordered by piece
  std::vector<int> pieces_of(int orig_item) const;
};

// The realization must have no crossings (a disjoint embedded system).
CutResult cut_along(const Surface& s, const Realization& r);

// True when cutting the surface along the system leaves a single disk
// (used to certify cut systems).  With `exact` false only the Euler
// characteristic count is checked.
bool complement_is_single_disk(const Surface& s, const std::vector<EdgeWord>& arcs, bool exact);

}  // namespace pob
