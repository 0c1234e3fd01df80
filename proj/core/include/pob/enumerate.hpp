#pragma once

#include <functional>
#include <vector>

#include "pob/openbook.hpp"

namespace pob {

struct EnumBounds {
  int max_disks = 1;
  int max_handles = 1;  // base + partial together
  int max_twists = 0;   // monodromy word length
};

// Streams every valid partial open book within the bounds, in a fixed
// deterministic order, with feet laid out on disk marks and a cheap
// canonical-relabeling reduction (least representative over disk
// permutations and rotations).  Twisted variants run over a deterministic
// menu of embedded curves.  The callback returns false to stop early.
void enumerate_pobs(const EnumBounds& bounds,
                    const std::function<bool(const PartialOpenBook&)>& emit);

// Convenience: collect everything.
std::vector<PartialOpenBook> enumerate_all(const EnumBounds& bounds);

}  // namespace pob
