#pragma once

#include <optional>
#include <vector>

#include "pob/surface.hpp"
#include "pob/word.hpp"

namespace pob {

// A point on the boundary of a face, in that face's reading direction.
struct FacePos {
  int slot = -1;  // index into face.items
  Rat t;          // position within the cell

  friend bool operator==(const FacePos& a, const FacePos& b) {
    return a.slot == b.slot && a.t == b.t;
  }
  friend bool operator<(const FacePos& a, const FacePos& b) {
    return a.slot != b.slot ? a.slot < b.slot : a.t < b.t;
  }
};

// One chord of a realized curve inside a face, directed a -> b.
struct Chord {
  int word = -1;   // index into the realized system
  int index = -1;  // chord index within its word
  int face = -1;
  FacePos a, b;
};

// A transverse crossing of two realized chords.
struct Crossing {
  int word1, chord1;  // (word1, chord1) < (word2, chord2) lexicographically
  int word2, chord2;
  int face;
  int sign;  // +1 when (dir chord1, dir chord2) is a positive frame
};

// Reference to one edge crossing of one word.
struct CrossRef {
  int word = -1;
  int index = -1;  // position in word.cross
  friend bool operator==(const CrossRef& a, const CrossRef& b) {
    return a.word == b.word && a.index == b.index;
  }
};

// A joint realization of a system of reduced words.  Crossing points
// along each gluing edge are ordered by comparing the curves' combinatorial
// itineraries away from the edge (parallel strands compare equal and fall
// back to a fixed tie-break), chords then join consecutive points inside
// each face, and face-level crossings are read off chord interleaving.
// A bounded bigon-removal sweep follows, so the realized crossing count
// of a pair is its geometric intersection number at this scale.
class Realization {
 public:
  Realization(const Surface& s, std::vector<EdgeWord> words, int tighten_depth = 32);

  const Surface& surface() const { return *surf_; }
  const std::vector<EdgeWord>& words() const { return words_; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int geometric(int w1, int w2) const;        // unordered; w1 == w2 counts self-crossings
  long long algebraic(int w1, int w2) const;  // signed, in the (w1, w2) order

  // Crossing points along an edge, in the canonical direction (the a-side
  // face's reading of the edge).
  const std::vector<CrossRef>& edge_order(int e) const { return order_[e]; }
  std::vector<Chord> face_chords(int f) const;

  // Parameter of the crossing along the given chord of the straight-chord
  // model (used to sort crossings along a strand).
  Rat parameter_on(const Crossing& c, int word, int chord) const;

 private:
  void build_chords();
  void count_crossings();
  bool remove_one_bigon();

  const Surface* surf_;
  std::vector<EdgeWord> words_;
  std::vector<std::vector<CrossRef>> order_;  // per edge
  std::vector<Chord> chords_;
  std::vector<Crossing> crossings_;
};

int intersection_geometric(const Surface& s, const EdgeWord& a, const EdgeWord& b);
long long intersection_algebraic(const Surface& s, const EdgeWord& a, const EdgeWord& b);
int self_intersection(const Surface& s, const EdgeWord& w);
bool is_embedded(const Surface& s, const EdgeWord& w);
// True when every word is embedded and the words are pairwise disjoint
// (shared arc endpoints are not counted).
bool disjoint_embedded_system(const Surface& s, const std::vector<EdgeWord>& ws);

enum class Handedness { Right, Left };

// Image of `target` under the Dehn twist along the embedded closed curve
// `gamma`.  Right-handed means each strand crossing gamma with sign s
// detours around gamma in the direction s, which gives
//   [T(t)] = [t] + <gamma, t> [gamma]
// on closed curves.  Arc endpoints are untouched.  Throws NotEmbedded.
EdgeWord dehn_twist(const Surface& s, const EdgeWord& gamma, const EdgeWord& target,
                    Handedness h);

// Parallel copy of an arc with both endpoints slid forward (in the
// direction induced by the surface orientation on the boundary) halfway
// toward the end of their cells; crosses the original exactly once.
EdgeWord forward_pushoff(const Surface& s, const EdgeWord& arc);

}  // namespace pob
