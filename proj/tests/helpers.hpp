#pragma once

#include <random>
#include <vector>

#include "pob/complex.hpp"
#include "pob/openbook.hpp"

namespace pobtest {

using namespace pob;

// disk with two marks carrying one handle: an annulus
inline HandleComplex annulus() {
  return HandleComplex::build({DiskDecl{2, +1, "d0"}},
                              {HandleDecl{"h0", SlotRef::disk(0, 0), SlotRef::disk(0, 1)}});
}

// disk with four marks, handles on (0,2) and (1,3): a once punctured torus
inline HandleComplex punctured_torus() {
  return HandleComplex::build({DiskDecl{4, +1, "d0"}},
                              {HandleDecl{"h0", SlotRef::disk(0, 0), SlotRef::disk(0, 2)},
                               HandleDecl{"h1", SlotRef::disk(0, 1), SlotRef::disk(0, 3)}});
}

// base disk, one partial handle, identity monodromy
inline PartialOpenBook e0() {
  return PartialOpenBook::make({DiskDecl{2, +1, "d0"}}, {},
                               {HandleDecl{"p0", SlotRef::disk(0, 0), SlotRef::disk(0, 1)}}, {});
}

// annulus base with an interleaved partial handle: the page is a once
// punctured torus
inline PartialOpenBook e1() {
  return PartialOpenBook::make({DiskDecl{4, +1, "d0"}},
                               {HandleDecl{"q0", SlotRef::disk(0, 0), SlotRef::disk(0, 2)}},
                               {HandleDecl{"p0", SlotRef::disk(0, 1), SlotRef::disk(0, 3)}}, {});
}

// random valid handle complex: disks plus untwisted handles on free slots
inline HandleComplex random_complex(std::mt19937& rng, int max_disks = 2, int max_handles = 3,
                                    int max_side_marks = 1) {
  std::uniform_int_distribution<int> disk_count(1, max_disks);
  int nd = disk_count(rng);
  std::vector<DiskDecl> disks;
  for (int d = 0; d < nd; ++d) {
    std::uniform_int_distribution<int> marks(d == 0 ? 1 : 0, 4);
    disks.push_back(DiskDecl{marks(rng), +1, "d" + std::to_string(d)});
  }
  std::uniform_int_distribution<int> handle_count(0, max_handles);
  int nh = handle_count(rng);
  std::vector<HandleDecl> handles;
  // track free slots: disk marks and side marks of earlier handles
  std::vector<SlotRef> free;
  for (int d = 0; d < nd; ++d)
    for (int m = 0; m < disks[d].marks; ++m) free.push_back(SlotRef::disk(d, m));
  for (int h = 0; h < nh; ++h) {
    if (free.size() < 2) break;
    std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
    size_t ia = pick(rng);
    SlotRef a = free[ia];
    free.erase(free.begin() + ia);
    std::uniform_int_distribution<size_t> pick2(0, free.size() - 1);
    size_t ib = pick2(rng);
    SlotRef b = free[ib];
    free.erase(free.begin() + ib);
    HandleDecl decl{"h" + std::to_string(h), a, b, false, 0, 0};
    std::uniform_int_distribution<int> side(0, max_side_marks);
    decl.side_marks_l = side(rng);
    decl.side_marks_r = side(rng);
    handles.push_back(decl);
    for (int m = 0; m < decl.side_marks_l; ++m)
      free.push_back(SlotRef::handle_side(h, 0, m));
    for (int m = 0; m < decl.side_marks_r; ++m)
      free.push_back(SlotRef::handle_side(h, 1, m));
  }
  return HandleComplex::build(disks, handles);
}

}  // namespace pobtest
