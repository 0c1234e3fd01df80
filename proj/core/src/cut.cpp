#include "pob/cut.hpp"

#include <algorithm>
#include <map>

#include "pob/errors.hpp"
#include "pob/word.hpp"

namespace pob {

namespace {

// One stop along a face boundary while subdividing: either a piece of an
// original cell or an endpoint of a chord.
struct Atom {
  bool is_point = false;
  // piece
  int orig_item = -1;
  int piece = -1;
  // point: chord end
  int chord = -1;  // index into the face's chord list
  int end = 0;     // 0 = chord.a, 1 = chord.b
  FacePos pos;     // for points
};

struct PendingFace {
  std::vector<Atom> atoms;  // circular, positive order
};

}  // namespace

std::vector<int> CutResult::pieces_of(int orig_item) const {
  std::vector<std::pair<int, int>> found;
  for (int i = 0; i < static_cast<int>(origins.size()); ++i)
    if (origins[i].kind == Origin::Kind::Piece && origins[i].orig_item == orig_item)
      found.push_back({origins[i].piece, i});
  std::sort(found.begin(), found.end());
  std::vector<int> out;
  for (auto& [p, i] : found) out.push_back(i);
  return out;
}

CutResult cut_along(const Surface& s, const Realization& r) {
  if (!r.crossings().empty()) throw Error("cut_along needs a crossing-free system");
  CutResult res;

  // Sub-pieces per original item, keyed by the cut positions on it.
  // For glued items both sides see the same points (mirrored), so the
  // per-item subdivision is consistent across the gluing.
  std::map<int, std::vector<Rat>> points_on_item;
  struct ChordRec {
    int word, index, face;
    FacePos a, b;
  };
  std::vector<ChordRec> chords;
  for (int f = 0; f < s.face_count(); ++f)
    for (const Chord& c : r.face_chords(f))
      chords.push_back(ChordRec{c.word, c.index, c.face, c.a, c.b});

  for (const ChordRec& c : chords)
    for (const FacePos* p : {&c.a, &c.b}) {
      int item = s.face(c.face).items[p->slot];
      std::vector<Rat>& v = points_on_item[item];
      if (std::find(v.begin(), v.end(), p->t) == v.end()) v.push_back(p->t);
    }
  for (auto& [item, v] : points_on_item) std::sort(v.begin(), v.end());

  auto piece_count = [&](int item) {
    auto it = points_on_item.find(item);
    return 1 + (it == points_on_item.end() ? 0 : static_cast<int>(it->second.size()));
  };
  auto piece_index = [&](int item, const Rat& t) {
    // the piece strictly below t would be wrong for points; this is the
    // index of the piece bounded above by t
    auto it = points_on_item.find(item);
    int idx = 0;
    if (it != points_on_item.end())
      for (const Rat& x : it->second) {
        if (x < t) ++idx;
        else break;
      }
    return idx;
  };
  (void)piece_index;

  // Build the subdivided faces.
  std::vector<std::pair<int, PendingFace>> final_faces;  // (orig face, atoms)
  for (int f = 0; f < s.face_count(); ++f) {
    // seed atom list
    PendingFace seed;
    std::vector<int> chord_ids;
    for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci)
      if (chords[ci].face == f) chord_ids.push_back(ci);
    const std::vector<int>& items = s.face(f).items;
    for (int slot = 0; slot < static_cast<int>(items.size()); ++slot) {
      int item = items[slot];
      auto it = points_on_item.find(item);
      std::vector<Rat> pts = it == points_on_item.end() ? std::vector<Rat>{} : it->second;
      int piece = 0;
      Atom a;
      a.orig_item = item;
      a.piece = piece++;
      seed.atoms.push_back(a);
      for (const Rat& t : pts) {
        Atom p;
        p.is_point = true;
        p.pos = FacePos{slot, t};
        // find which chord end this is
        p.chord = -1;
        for (int ci : chord_ids) {
          if (chords[ci].a == p.pos && p.chord < 0) {
            p.chord = ci;
            p.end = 0;
          } else if (chords[ci].b == p.pos && p.chord < 0) {
            p.chord = ci;
            p.end = 1;
          }
        }
        if (p.chord < 0) throw Error("internal: cut point is not a chord end");
        seed.atoms.push_back(p);
        Atom b;
        b.orig_item = item;
        b.piece = piece++;
        seed.atoms.push_back(b);
      }
    }
    // recursively split by chords
    std::vector<PendingFace> stack{seed};
    while (!stack.empty()) {
      PendingFace cur = std::move(stack.back());
      stack.pop_back();
      // find a chord with both endpoints present
      int pa = -1, pb = -1, chord = -1;
      std::map<int, std::vector<int>> ends;  // chord -> atom positions
      for (int i = 0; i < static_cast<int>(cur.atoms.size()); ++i)
        if (cur.atoms[i].is_point) ends[cur.atoms[i].chord].push_back(i);
      for (auto& [ci, pos] : ends)
        if (pos.size() == 2) {
          chord = ci;
          // order: pa = the chord's a end
          pa = cur.atoms[pos[0]].end == 0 ? pos[0] : pos[1];
          pb = cur.atoms[pos[0]].end == 0 ? pos[1] : pos[0];
          break;
        }
      if (chord < 0) {
        if (!ends.empty()) throw Error("internal: dangling cut point");
        final_faces.push_back({f, std::move(cur)});
        continue;
      }
      int n = static_cast<int>(cur.atoms.size());
      // right piece: atoms strictly between a and b (positive order)
      PendingFace right, left;
      for (int i = (pa + 1) % n; i != pb; i = (i + 1) % n) right.atoms.push_back(cur.atoms[i]);
      {
        Atom seam;
        seam.is_point = false;
        seam.orig_item = -1;
        seam.chord = chord;
        seam.end = 1;  // reused as side marker: 1 = right
        right.atoms.push_back(seam);
      }
      for (int i = (pb + 1) % n; i != pa; i = (i + 1) % n) left.atoms.push_back(cur.atoms[i]);
      {
        Atom seam;
        seam.is_point = false;
        seam.orig_item = -1;
        seam.chord = chord;
        seam.end = 0;  // left
        left.atoms.push_back(seam);
      }
      stack.push_back(std::move(right));
      stack.push_back(std::move(left));
    }
  }

  // Emit the cut surface.
  Surface& cut = res.cut;
  // (orig item, piece) -> new item id, for regluing
  std::map<std::pair<int, int>, int> piece_item;
  for (auto& [orig_face, pf] : final_faces) {
    int nf = cut.add_face(s.face(orig_face).label);
    res.face_origin.push_back(orig_face);
    for (const Atom& a : pf.atoms) {
      if (a.is_point) throw Error("internal: unconsumed point atom");
      if (a.orig_item >= 0) {
        const Item& oi = s.item(a.orig_item);
        int it = cut.add_item(nf, oi.kind, oi.label);
        res.origins.resize(it + 1);
        res.origins[it] =
            CutResult::Origin{CutResult::Origin::Kind::Piece, a.orig_item, a.piece, -1, -1, 0};
        piece_item[{a.orig_item, a.piece}] = it;
      } else {
        const ChordRec& c = chords[a.chord];
        int it = cut.add_item(nf, ItemKind::CutSeam, "cut");
        res.origins.resize(it + 1);
        res.origins[it] = CutResult::Origin{CutResult::Origin::Kind::Seam, -1, 0, c.word,
                                            c.index, a.end};
      }
    }
  }

  // Reglue matching pieces of originally glued cells.  The two sides read
  // the edge in opposite directions, so piece k on side a matches piece
  // (count-1-k) on side b.
  for (int e = 0; e < s.edge_count(); ++e) {
    int ia = s.edge(e).a, ib = s.edge(e).b;
    // positions on the two sides mirror each other; counts agree because
    // every crossing of the edge has a chord on each side
    int ca = piece_count(ia), cb = piece_count(ib);
    if (ca != cb) throw Error("internal: cut pieces disagree across an edge");
    for (int k = 0; k < ca; ++k) {
      int x = piece_item.at({ia, k});
      int y = piece_item.at({ib, ca - 1 - k});
      cut.glue(x, y);
    }
  }
  return res;
}

bool complement_is_single_disk(const Surface& s, const std::vector<EdgeWord>& arcs, bool exact) {
  std::vector<EdgeWord> reduced;
  for (const EdgeWord& a : arcs) reduced.push_back(reduce(s, a));
  Realization r(s, reduced);
  if (!r.crossings().empty()) return false;
  if (!exact) {
    // chi of the complement must be 1 and that of a connected sum of disks
    // can only reach 1 with a single piece when the count matches
    return s.euler() + static_cast<int>(arcs.size()) == 1;
  }
  CutResult c = cut_along(s, r);
  return c.cut.component_count() == 1 && c.cut.euler() == 1 &&
         c.cut.boundary_cycles().size() == 1;
}

}  // namespace pob
