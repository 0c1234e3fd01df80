#pragma once

#include <vector>

#include "pob/surface.hpp"

namespace pob {

enum class WordKind { Arc, Closed };

// An arc or closed curve as a reduced combinatorial crossing word.
//
// The curve is recorded by the sequence of gluing edges it crosses; the
// piece between consecutive crossings is a chord inside the face both
// crossings border (chords in a disk are determined by their endpoints,
// so no further data is needed).  For an arc with k crossings, faces has
// k+1 entries and chord i runs inside faces[i]; the first chord starts
// at `start`, the last ends at `end`, both points on free boundary
// cells.  For a closed word, faces has k entries and faces[i] houses the
// chord from cross[i] to cross[(i+1) mod k]; a contractible loop is a
// closed word with no crossings and a single face entry.
struct EdgeWord {
  WordKind kind = WordKind::Closed;
  std::vector<int> cross;
  std::vector<int> faces;
  BPoint start, end;  // arcs only

  int length() const { return static_cast<int>(cross.size()); }

  friend bool operator==(const EdgeWord& a, const EdgeWord& b) {
    return a.kind == b.kind && a.cross == b.cross && a.faces == b.faces &&
           (a.kind == WordKind::Closed || (a.start == b.start && a.end == b.end));
  }
  friend bool operator!=(const EdgeWord& a, const EdgeWord& b) { return !(a == b); }
};

// Convenience constructors.
EdgeWord make_arc(const Surface& s, BPoint start, std::vector<int> crossings,
                  std::vector<int> faces, BPoint end);
EdgeWord make_closed(const Surface& s, std::vector<int> crossings, std::vector<int> faces);
EdgeWord make_trivial_loop(const Surface& s, int face);

// Throws NotIncident when consecutive letters do not share faces or arc
// endpoints are off their stated faces.
void check_incident(const Surface& s, const EdgeWord& w);

// Iterated spur removal plus, for closed words, canonical rotation.
// The result is the unique shortest word in the isotopy class (arcs: rel
// endpoints); idempotent; arc endpoints are untouched.
EdgeWord reduce(const Surface& s, const EdgeWord& w);

bool is_reduced(const Surface& s, const EdgeWord& w);

// The word traversed backwards.
EdgeWord reversed(const Surface& s, const EdgeWord& w);

// w1 followed by w2 (arcs; w1.end and w2.start must lie on a common
// face, where the seam chord is inserted): used to close image arcs into
// test loops.  The concatenation of an arc with the reverse of another
// arc sharing both endpoints, closed up, is produced by close_up().
EdgeWord close_up(const Surface& s, const EdgeWord& there, const EdgeWord& back);

}  // namespace pob
