#include "pob/enumerate.hpp"

#include <algorithm>

#include "pob/complex.hpp"
#include "pob/errors.hpp"

namespace pob {

namespace {

struct Layout {
  // per disk: cyclic sequence of feet (handle, end)
  std::vector<std::vector<std::pair<int, int>>> disks;

  std::vector<long long> key_under(const std::vector<int>& perm,
                                   const std::vector<int>& rot) const {
    // serialize disk contents in permuted order with rotated sequences
    std::vector<long long> out;
    int nd = static_cast<int>(disks.size());
    std::vector<int> inv(nd);
    for (int i = 0; i < nd; ++i) inv[perm[i]] = i;
    for (int target = 0; target < nd; ++target) {
      int src = inv[target];
      const auto& seq = disks[src];
      out.push_back(static_cast<long long>(seq.size()));
      int k = static_cast<int>(seq.size());
      for (int i = 0; i < k; ++i) {
        const auto& [h, e] = seq[(i + rot[src]) % std::max(1, k)];
        out.push_back(h * 2 + e);
      }
    }
    return out;
  }

  bool is_canonical() const {
    int nd = static_cast<int>(disks.size());
    std::vector<int> perm(nd), rot(nd, 0);
    for (int i = 0; i < nd; ++i) perm[i] = i;
    std::vector<long long> self = key_under(perm, rot);
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> r(nd, 0);
      while (true) {
        if (key_under(perm, r) < self) return false;
        int d = 0;
        while (d < nd) {
          if (++r[d] < std::max<int>(1, static_cast<int>(disks[d].size()))) break;
          r[d] = 0;
          ++d;
        }
        if (d == nd) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }
};

}  // namespace

void enumerate_pobs(const EnumBounds& bounds,
                    const std::function<bool(const PartialOpenBook&)>& emit) {
  bool stop = false;
  for (int nd = 1; nd <= bounds.max_disks && !stop; ++nd) {
    for (int t = 1; t <= bounds.max_handles && !stop; ++t) {
      for (int r = 1; r <= t && !stop; ++r) {
        int q = t - r;
        // place the 2t feet one at a time: every (disk, position) choice
        Layout layout;
        layout.disks.assign(nd, {});
        std::function<void(int)> place = [&](int foot) {
          if (stop) return;
          if (foot == 2 * t) {
            if (!layout.is_canonical()) return;
            // build declarations
            std::vector<DiskDecl> disks(nd);
            std::vector<HandleDecl> qs(q), ps(r);
            for (int d = 0; d < nd; ++d) {
              disks[d].name = "d" + std::to_string(d);
              disks[d].marks = static_cast<int>(layout.disks[d].size());
            }
            for (int h = 0; h < t; ++h) {
              HandleDecl& decl = h < q ? qs[h] : ps[h - q];
              decl.name = (h < q ? "q" + std::to_string(h) : "p" + std::to_string(h - q));
            }
            for (int d = 0; d < nd; ++d)
              for (int m = 0; m < static_cast<int>(layout.disks[d].size()); ++m) {
                auto [h, end] = layout.disks[d][m];
                HandleDecl& decl = h < q ? qs[h] : ps[h - q];
                (end == 0 ? decl.a : decl.b) = SlotRef::disk(d, m);
              }
            PartialOpenBook identity;
            try {
              identity = PartialOpenBook::make(disks, qs, ps, {});
            } catch (const Error&) {
              return;  // misassembled layout
            }
            if (identity.assembled().surface().component_count() != 1) return;
            if (!emit(identity)) {
              stop = true;
              return;
            }
            // twisted variants over the deterministic curve menu
            if (bounds.max_twists >= 1) {
              std::vector<EdgeWord> menu;
              for (int h = 0; h < t; ++h) {
                EdgeWord loop = core_loop(identity.assembled(), h);
                if (loop.length() > 0 && is_embedded(identity.assembled().surface(), loop))
                  menu.push_back(loop);
              }
              std::vector<TwistStep> word;
              std::function<void(int)> extend = [&](int depth) {
                if (stop || depth == bounds.max_twists) return;
                for (const EdgeWord& curve : menu) {
                  for (Handedness h : {Handedness::Right, Handedness::Left}) {
                    if (stop) return;
                    word.push_back({curve, h});
                    bool ok = true;
                    PartialOpenBook twisted;
                    try {
                      twisted = PartialOpenBook::from_twists(disks, qs, ps, word);
                    } catch (const Error&) {
                      ok = false;
                    }
                    if (ok && !emit(twisted)) {
                      stop = true;
                      return;
                    }
                    if (ok) extend(depth + 1);
                    word.pop_back();
                  }
                }
              };
              extend(0);
            }
            return;
          }
          for (int d = 0; d < nd && !stop; ++d) {
            int len = static_cast<int>(layout.disks[d].size());
            for (int pos = 0; pos <= len && !stop; ++pos) {
              layout.disks[d].insert(layout.disks[d].begin() + pos, {foot / 2, foot % 2});
              place(foot + 1);
              layout.disks[d].erase(layout.disks[d].begin() + pos);
            }
          }
        };
        place(0);
      }
    }
  }
}

std::vector<PartialOpenBook> enumerate_all(const EnumBounds& bounds) {
  std::vector<PartialOpenBook> out;
  enumerate_pobs(bounds, [&](const PartialOpenBook& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace pob
