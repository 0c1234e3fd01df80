#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pob/surface.hpp"
#include "pob/word.hpp"

namespace pob {

// A compact oriented surface with boundary built from disks and ribbon
// 1-handles.  Disks declare named attachment marks on their boundary
// (marks alternate with free gaps); each handle is a rectangle whose two
// short sides are glued onto two previously declared, unconsumed marks.
// A handle's long sides may declare marks of their own so that later
// handles can attach onto it.

struct SlotRef {
  enum class Kind { Disk, HandleSide };
  Kind kind = Kind::Disk;
  int owner = -1;  // disk index or handle index
  int side = 0;    // 0 = L, 1 = R (handle sides only)
  int mark = 0;

  static SlotRef disk(int d, int m) { return {Kind::Disk, d, 0, m}; }
  static SlotRef handle_side(int h, int side, int m) { return {Kind::HandleSide, h, side, m}; }
  friend bool operator==(const SlotRef& a, const SlotRef& b) {
    return a.kind == b.kind && a.owner == b.owner && a.side == b.side && a.mark == b.mark;
  }
  std::string str() const;
};

struct DiskDecl {
  int marks = 0;
  int orientation = +1;  // -1 declares the disk clockwise
  std::string name;
};

struct HandleDecl {
  std::string name;
  SlotRef a, b;
  bool twisted = false;  // request the reversed gluing direction at slot b
  int side_marks_l = 0;
  int side_marks_r = 0;
};

// Identifies what role a boundary cell plays.
struct ItemInfo {
  enum class Role { DiskMark, DiskGap, DiskCircle, Foot, SideMark, SideGap } role;
  int owner = -1;  // disk or handle index
  int side = 0;    // feet: 0 = A end, 1 = B end; side cells: 0 = L, 1 = R
  int index = 0;   // mark/gap index within its run
};

class HandleComplex {
 public:
  // Validates slot references and orientability, then compiles the
  // surface.  Throws BadSlot / NonOrientable.
  static HandleComplex build(std::vector<DiskDecl> disks, std::vector<HandleDecl> handles);

  const Surface& surface() const { return surf_; }
  int disk_count() const { return static_cast<int>(disks_.size()); }
  int handle_count() const { return static_cast<int>(handles_.size()); }
  const DiskDecl& disk(int d) const { return disks_[d]; }
  const HandleDecl& handle(int h) const { return handles_[h]; }

  int euler() const { return disk_count() - handle_count(); }

  int disk_face(int d) const { return disk_face_[d]; }
  int handle_face(int h) const { return handle_face_[h]; }
  int disk_mark_item(int d, int m) const;
  int disk_gap_item(int d, int g) const;
  int disk_circle_item(int d) const;
  int side_mark_item(int h, int side, int m) const;
  int side_gap_item(int h, int side, int g) const;
  int foot_item(int h, int end) const;
  int foot_edge(int h, int end) const;  // gluing edge at a foot
  int slot_item(const SlotRef& s) const;

  const ItemInfo& info(int item) const { return info_[item]; }

  // Face orientation signs from the coherence solve (+1 everywhere after
  // normalization; the declared sign is kept for round-tripping).
  int declared_orientation(int face) const { return face_sign_[face]; }

 private:
  std::vector<DiskDecl> disks_;
  std::vector<HandleDecl> handles_;
  Surface surf_;
  std::vector<int> disk_face_, handle_face_;
  std::vector<ItemInfo> info_;
  std::vector<int> face_sign_;
  std::vector<std::vector<int>> disk_items_;               // per disk, stored order
  std::vector<std::array<std::vector<int>, 2>> side_items_;  // per handle, per side
  std::vector<std::array<int, 2>> foot_items_;
};

// The canonical cocore of a handle: the chord from the first free gap of
// side L to the first free gap of side R, at the middle of each.  It
// crosses the handle once (it separates the two feet) and no other.
EdgeWord cocore_arc(const HandleComplex& hc, int h);

// A deterministic embedded closed curve running once through the given
// handle and returning through the spanning forest of the complex.
EdgeWord core_loop(const HandleComplex& hc, int h);

// Signed count of chords of w inside rect(h) separating the two feet
// (+1 when oriented L to R); the unsigned count is the number of times
// the curve runs across the handle.
int handle_transit_count(const HandleComplex& hc, const EdgeWord& w, int h, bool signed_count);

}  // namespace pob
