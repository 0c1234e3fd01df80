#pragma once

#include <string>
#include <vector>

#include "pob/errors.hpp"
#include "pob/rational.hpp"

namespace pob {

// A compact oriented surface with boundary, presented as a collection of
// polygonal faces (each a disk) whose boundary cells are either glued in
// pairs or free.  All faces are stored positively oriented and every
// gluing identifies the two cells antiparallel, so the whole complex is
// coherently oriented by construction.  Every vertex lies on the
// boundary (cells that can be glued are always flanked by free cells),
// which keeps boundary traversal and curve bookkeeping elementary.
//
// The complex deformation-retracts onto its face-adjacency graph (one
// vertex per face, one edge per gluing), so Euler characteristic and
// first homology are read off that graph.

enum class ItemKind {
  DiskMark,   // attachment position on a disk boundary
  DiskGap,    // free boundary between disk marks
  Circle,     // entire boundary of a markless disk
  Foot,       // short side of a handle rectangle (always glued)
  SideMark,   // attachment position on a handle's long side
  SideGap,    // free boundary between side marks
  CutSeam,    // free cell created by cutting along an arc
  Plain,      // generic cell used by derived constructions
};

struct Item {
  int face = -1;
  ItemKind kind = ItemKind::Plain;
  int edge = -1;  // gluing edge id, or -1 when free
  std::string label;
};

struct Face {
  std::vector<int> items;  // item ids in positive (counterclockwise) cyclic order
  std::string label;
};

// Gluing edge: cell `a` and cell `b` are identified antiparallel
// (a-tail = b-head and a-head = b-tail).  The canonical coordinate on
// the edge runs along side `a`'s reading direction.
struct GluingEdge {
  int a = -1;
  int b = -1;
};

// A point on a free boundary cell, with t in the owning face's reading
// direction of that cell.
struct BPoint {
  int item = -1;
  Rat t;
  friend bool operator==(const BPoint& x, const BPoint& y) { return x.item == y.item && x.t == y.t; }
  friend bool operator!=(const BPoint& x, const BPoint& y) { return !(x == y); }
};

class Surface {
 public:
  int add_face(std::string label = {});
  // Appends a boundary cell to the face's cyclic order.
  int add_item(int face, ItemKind kind, std::string label = {});
  // Identifies two free cells on distinct faces, antiparallel.
  int glue(int item_a, int item_b);

  int face_count() const { return static_cast<int>(faces_.size()); }
  int item_count() const { return static_cast<int>(items_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Face& face(int f) const { return faces_[f]; }
  const Item& item(int i) const { return items_[i]; }
  const GluingEdge& edge(int e) const { return edges_[e]; }

  bool is_free(int item) const { return items_[item].edge < 0; }
  // The cell on the other side of the gluing edge through `item`.
  int mate(int item) const;
  int other_face(int edge, int face) const;
  // The side of a gluing edge lying on the given face.
  int edge_item_in_face(int edge, int face) const;
  // Position of `item` within its face's cyclic item list.
  int slot_of(int item) const;
  int next_in_face(int item) const;
  int prev_in_face(int item) const;

  // chi = #faces - #gluing edges (spine graph).
  int euler() const { return face_count() - edge_count(); }
  // chi recomputed from the cell structure (V - E + F); used as an
  // internal consistency check.
  int euler_cellular() const;

  // Free cells arranged into boundary circles.  Each circle is listed
  // as the cyclic sequence of free item ids in the direction induced by
  // the face orientations; each circle starts at its lowest item id and
  // circles are sorted by that id.
  std::vector<std::vector<int>> boundary_cycles() const;

  int component_count() const;
  int component_of_face(int f) const;           // 0-based, ordered by least face id
  std::vector<int> component_faces(int c) const;

  // Genus of each connected component, ordered by component index.
  std::vector<int> genus_per_component() const;
  int euler_of_component(int c) const;
  int boundary_cycles_of_component(int c) const;

  // Deterministic spanning forest of the face-adjacency graph: BFS from
  // the least face of each component, edges scanned in id order.
  // Returns edge ids outside the forest (the H1 generators).
  std::vector<int> h1_generator_edges() const;
  bool edge_in_forest(int e) const;
  int h1_rank() const { return static_cast<int>(h1_generator_edges().size()); }

 private:
  void ensure_components() const;

  std::vector<Face> faces_;
  std::vector<Item> items_;
  std::vector<GluingEdge> edges_;

  mutable std::vector<int> comp_of_face_;  // lazy
  mutable std::vector<char> forest_edge_;
  mutable std::vector<int> gen_edges_;
  mutable bool comp_valid_ = false;
};

}  // namespace pob
