#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pob/complex.hpp"
#include "pob/curves.hpp"
#include "pob/word.hpp"

namespace pob {

struct TwistStep {
  EdgeWord curve;  // embedded closed curve on the assembled surface
  Handedness handed = Handedness::Right;
};

// A partial open book: base surface Q, ordered partial handles attached
// onto Q material, and the monodromy recorded through the images of the
// canonical cocores.  Partial handles attach to base material only (the
// feet of later partial handles never land on earlier partial handles);
// this realizes the successive-attachment condition directly.
class PartialOpenBook {
 public:
  // images empty means the identity monodromy (images = cocores).
  static PartialOpenBook make(std::vector<DiskDecl> disks, std::vector<HandleDecl> q_handles,
                              std::vector<HandleDecl> p_handles, std::vector<EdgeWord> images,
                              std::vector<TwistStep> provenance = {});
  // Convenience: monodromy given as a twist word applied to the cocores.
  static PartialOpenBook from_twists(std::vector<DiskDecl> disks,
                                     std::vector<HandleDecl> q_handles,
                                     std::vector<HandleDecl> p_handles,
                                     std::vector<TwistStep> word);

  const HandleComplex& base() const { return q_; }        // Q
  const HandleComplex& assembled() const { return s_; }   // S
  int partial_count() const { return static_cast<int>(p_handles_.size()); }  // r
  int q_handle_count() const { return static_cast<int>(q_handles_.size()); }
  // index of partial handle j within the assembled complex
  int p_handle_index(int j) const { return q_handle_count() + j; }

  const std::vector<DiskDecl>& disks() const { return disks_; }
  const std::vector<HandleDecl>& q_handles() const { return q_handles_; }
  const std::vector<HandleDecl>& p_handles() const { return p_handles_; }
  const std::vector<EdgeWord>& images() const { return images_; }
  const std::vector<TwistStep>& provenance() const { return provenance_; }

  // canonical cocores a_j on the assembled surface
  std::vector<EdgeWord> cocores() const;

 private:
  std::vector<DiskDecl> disks_;
  std::vector<HandleDecl> q_handles_, p_handles_;
  std::vector<EdgeWord> images_;
  std::vector<TwistStep> provenance_;
  HandleComplex q_, s_;
};

// The three families tiling the boundary of S and of P.
struct BoundaryPartition {
  struct Run {
    std::vector<int> items;  // free items of the assembled surface, in boundary order
    bool is_circle = false;
    // the partial-handle feet flanking an arc run (edge ids; -1 for circles)
    int foot_before = -1;
    int foot_after = -1;
  };
  std::vector<Run> a_arcs;   // components of the free long-side material of P
  std::vector<Run> outer;    // closure of the boundary of S minus that of P
  struct CArc {
    int p_index;  // which partial handle
    int end;      // 0 = A foot, 1 = B foot
    int edge;     // gluing edge of the foot
  };
  std::vector<CArc> c_arcs;  // components of the closure of dP minus dS
  int n() const { return static_cast<int>(c_arcs.size()); }
};

BoundaryPartition boundary_partition(const PartialOpenBook& pob);

// Images of the cocores under a twist word (applied jointly, validated).
std::vector<EdgeWord> monodromy_from_word(const HandleComplex& s, int first_p_handle,
                                          int p_count, const std::vector<TwistStep>& word);

struct ValidationReport {
  struct Entry {
    std::string condition;
    bool pass;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool all_pass() const {
    for (const Entry& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Checks every defining condition and reports each with a witness.
ValidationReport validate(const PartialOpenBook& pob);

// Attaches a handle along the endpoints of the proper arc `s_arc`, adds
// it to the partial family, and composes the monodromy with the
// right-handed twist along (s_arc + the new core).  Endpoints must lie on
// free base-material gaps.  Throws NotProperArc.
PartialOpenBook positive_stabilize(const PartialOpenBook& pob, const EdgeWord& s_arc);

// A deterministic menu of valid stabilization arcs.
std::vector<EdgeWord> stabilization_arc_menu(const PartialOpenBook& pob, int want);

struct IsoWitness {
  std::vector<int> disk_perm;       // pob1 disk d -> pob2 disk
  std::vector<int> disk_rotation;   // added to mark indices mod count
  std::vector<int> q_perm;          // pob1 q-handle -> pob2 q-handle
  std::vector<bool> q_flip;         // end-over-end flip
  std::vector<int> p_perm;
  std::vector<bool> p_flip;
  std::string str() const;
};

// Searches for a relabeling carrying one partial open book to the other
// (same underlying data up to disk rotations and handle flips, with the
// monodromy images matching as reduced words).
std::optional<IsoWitness> isomorphic(const PartialOpenBook& a, const PartialOpenBook& b);

}  // namespace pob
