#include "pob/complex.hpp"

#include <algorithm>

#include "pob/errors.hpp"

namespace pob {

std::string SlotRef::str() const {
  if (kind == Kind::Disk) return "d" + std::to_string(owner) + ".m" + std::to_string(mark);
  return "h" + std::to_string(owner) + (side == 0 ? ".L" : ".R") + "m" + std::to_string(mark);
}

HandleComplex HandleComplex::build(std::vector<DiskDecl> disks, std::vector<HandleDecl> handles) {
  HandleComplex hc;
  hc.disks_ = std::move(disks);
  hc.handles_ = std::move(handles);
  int nd = hc.disk_count();
  int nh = hc.handle_count();
  if (nd == 0) throw BadSlot("a complex needs at least one disk");

  for (const DiskDecl& d : hc.disks_) {
    if (d.marks < 0) throw BadSlot("negative mark count on disk '" + d.name + "'");
    if (d.orientation != 1 && d.orientation != -1)
      throw BadSlot("disk orientation must be +1 or -1");
  }

  // Orientation coherence: disks carry their declared sign, a handle face
  // copies the sign of its slot-A host, and the slot-B gluing direction
  // must then agree (twisted requests the reversed direction, which needs
  // oppositely signed hosts).
  auto slot_host_face = [&](const SlotRef& s) {
    return s.kind == SlotRef::Kind::Disk ? s.owner : nd + s.owner;
  };
  hc.face_sign_.assign(nd + nh, +1);
  for (int d = 0; d < nd; ++d) hc.face_sign_[d] = hc.disks_[d].orientation;

  for (int h = 0; h < nh; ++h) {
    const HandleDecl& hd = hc.handles_[h];
    auto check_slot = [&](const SlotRef& s, const char* which) {
      if (s.kind == SlotRef::Kind::Disk) {
        if (s.owner < 0 || s.owner >= nd)
          throw BadSlot("handle '" + hd.name + "' slot " + which + ": unknown disk");
        if (s.mark < 0 || s.mark >= hc.disks_[s.owner].marks)
          throw BadSlot("handle '" + hd.name + "' slot " + which + ": unknown mark " + s.str());
      } else {
        if (s.owner < 0 || s.owner >= h)
          throw BadSlot("handle '" + hd.name + "' slot " + which +
                        ": handle not previously declared");
        const HandleDecl& host = hc.handles_[s.owner];
        int count = s.side == 0 ? host.side_marks_l : host.side_marks_r;
        if (s.side != 0 && s.side != 1) throw BadSlot("bad side");
        if (s.mark < 0 || s.mark >= count)
          throw BadSlot("handle '" + hd.name + "' slot " + which + ": unknown mark " + s.str());
      }
    };
    check_slot(hd.a, "A");
    check_slot(hd.b, "B");
    if (hd.a == hd.b)
      throw BadSlot("handle '" + hd.name + "' attaches both ends to one mark");
    if (hd.side_marks_l < 0 || hd.side_marks_r < 0)
      throw BadSlot("negative side mark count on handle '" + hd.name + "'");

    int fa = slot_host_face(hd.a);
    int fb = slot_host_face(hd.b);
    int rect_sign = hc.face_sign_[fa];
    int needed = hd.twisted ? -rect_sign : rect_sign;
    if (hc.face_sign_[fb] != needed)
      throw NonOrientable("handle '" + hd.name + "' gluing signs are incoherent");
    hc.face_sign_[nd + h] = rect_sign;
  }

  // Emit faces, all stored counterclockwise.
  Surface& s = hc.surf_;
  hc.info_.clear();
  hc.disk_items_.assign(nd, {});
  hc.side_items_.assign(nh, {});
  hc.foot_items_.assign(nh, {-1, -1});
  auto set_info = [&](int item, ItemInfo inf) {
    if (static_cast<int>(hc.info_.size()) <= item) hc.info_.resize(item + 1);
    hc.info_[item] = inf;
  };

  for (int d = 0; d < nd; ++d) {
    int f = s.add_face(hc.disks_[d].name);
    hc.disk_face_.push_back(f);
    int k = hc.disks_[d].marks;
    std::vector<int>& items = hc.disk_items_[d];
    if (k == 0) {
      int it = s.add_item(f, ItemKind::Circle, hc.disks_[d].name + ".o");
      set_info(it, {ItemInfo::Role::DiskCircle, d, 0, 0});
      items.push_back(it);
      continue;
    }
    // Declared order: m0 g0 m1 g1 ...; reversed when the disk is declared
    // clockwise so storage is always positive.
    std::vector<std::pair<ItemKind, int>> declared;
    for (int m = 0; m < k; ++m) {
      declared.push_back({ItemKind::DiskMark, m});
      declared.push_back({ItemKind::DiskGap, m});
    }
    if (hc.face_sign_[f] < 0) std::reverse(declared.begin(), declared.end());
    items.assign(2 * k, -1);
    for (auto [kind, idx] : declared) {
      std::string nm = hc.disks_[d].name + (kind == ItemKind::DiskMark ? ".m" : ".g") +
                       std::to_string(idx);
      int it = s.add_item(f, kind, nm);
      ItemInfo::Role role =
          kind == ItemKind::DiskMark ? ItemInfo::Role::DiskMark : ItemInfo::Role::DiskGap;
      set_info(it, {role, d, 0, idx});
      items[(kind == ItemKind::DiskMark ? 2 * idx : 2 * idx + 1)] = it;
    }
  }

  for (int h = 0; h < nh; ++h) {
    const HandleDecl& hd = hc.handles_[h];
    int f = s.add_face(hd.name);
    hc.handle_face_.push_back(f);
    // Positive cycle: footA, L run, footB, R run.
    struct Cell {
      ItemKind kind;
      ItemInfo inf;
      std::string nm;
    };
    std::vector<Cell> cells;
    cells.push_back({ItemKind::Foot, {ItemInfo::Role::Foot, h, 0, 0}, hd.name + ".A"});
    auto run = [&](int side, int count) {
      const char* sn = side == 0 ? ".L" : ".R";
      cells.push_back({ItemKind::SideGap, {ItemInfo::Role::SideGap, h, side, 0},
                       hd.name + sn + "g0"});
      for (int m = 0; m < count; ++m) {
        cells.push_back({ItemKind::SideMark, {ItemInfo::Role::SideMark, h, side, m},
                         hd.name + sn + "m" + std::to_string(m)});
        cells.push_back({ItemKind::SideGap, {ItemInfo::Role::SideGap, h, side, m + 1},
                         hd.name + sn + "g" + std::to_string(m + 1)});
      }
    };
    run(0, hd.side_marks_l);
    cells.push_back({ItemKind::Foot, {ItemInfo::Role::Foot, h, 1, 0}, hd.name + ".B"});
    run(1, hd.side_marks_r);
    if (hc.face_sign_[f] < 0) std::reverse(cells.begin(), cells.end());
    hc.side_items_[h][0].assign(2 * hd.side_marks_l + 1, -1);
    hc.side_items_[h][1].assign(2 * hd.side_marks_r + 1, -1);
    for (const Cell& c : cells) {
      int it = s.add_item(f, c.kind, c.nm);
      set_info(it, c.inf);
      if (c.inf.role == ItemInfo::Role::Foot) {
        hc.foot_items_[h][c.inf.side] = it;
      } else if (c.inf.role == ItemInfo::Role::SideGap) {
        hc.side_items_[h][c.inf.side][2 * c.inf.index] = it;
      } else {
        hc.side_items_[h][c.inf.side][2 * c.inf.index + 1] = it;
      }
    }
    // Attach the feet.
    for (int end = 0; end < 2; ++end) {
      const SlotRef& slot = end == 0 ? hd.a : hd.b;
      int mark_item = hc.slot_item(slot);
      if (!s.is_free(mark_item))
        throw BadSlot("handle '" + hd.name + "': mark " + slot.str() + " already consumed");
      s.glue(mark_item, hc.foot_items_[h][end]);
    }
  }

  // The compiled surface must agree with the handle count bookkeeping.
  if (s.euler() != hc.euler()) throw Error("internal: euler mismatch after build");
  if (s.euler_cellular() != s.euler()) throw Error("internal: cellular euler mismatch");
  return hc;
}

int HandleComplex::disk_mark_item(int d, int m) const { return disk_items_[d][2 * m]; }
int HandleComplex::disk_gap_item(int d, int g) const { return disk_items_[d][2 * g + 1]; }
int HandleComplex::disk_circle_item(int d) const { return disk_items_[d][0]; }
int HandleComplex::side_mark_item(int h, int side, int m) const {
  return side_items_[h][side][2 * m + 1];
}
int HandleComplex::side_gap_item(int h, int side, int g) const {
  return side_items_[h][side][2 * g];
}
int HandleComplex::foot_item(int h, int end) const { return foot_items_[h][end]; }

int HandleComplex::foot_edge(int h, int end) const {
  int it = foot_items_[h][end];
  return surf_.item(it).edge;
}

int HandleComplex::slot_item(const SlotRef& s) const {
  if (s.kind == SlotRef::Kind::Disk) return disk_mark_item(s.owner, s.mark);
  return side_mark_item(s.owner, s.side, s.mark);
}

EdgeWord cocore_arc(const HandleComplex& hc, int h) {
  int f = hc.handle_face(h);
  BPoint a{hc.side_gap_item(h, 0, 0), Rat(1, 2)};
  BPoint b{hc.side_gap_item(h, 1, 0), Rat(1, 2)};
  return make_arc(hc.surface(), a, {}, {f}, b);
}

EdgeWord core_loop(const HandleComplex& hc, int h) {
  const Surface& s = hc.surface();
  int ea = hc.foot_edge(h, 0);
  int eb = hc.foot_edge(h, 1);
  int rect = hc.handle_face(h);
  int host_a = s.other_face(ea, rect);
  int host_b = s.other_face(eb, rect);

  std::vector<int> cross{ea, eb};
  std::vector<int> faces{rect, host_b};
  if (host_a != host_b) {
    // return path avoiding the handle's own feet when possible, so the
    // loop does not contract through the handle; when the handle
    // separates, the contractible loop is the honest answer
    auto bfs = [&](bool avoid_own) {
      std::vector<int> parent_face(s.face_count(), -1), parent_edge(s.face_count(), -1);
      std::vector<int> frontier{host_b};
      parent_face[host_b] = host_b;
      while (!frontier.empty() && parent_face[host_a] < 0) {
        std::vector<int> next;
        for (int f : frontier) {
          for (int e = 0; e < s.edge_count(); ++e) {
            if (avoid_own && (e == ea || e == eb)) continue;
            int fa = s.item(s.edge(e).a).face;
            int fb = s.item(s.edge(e).b).face;
            if (fa != f && fb != f) continue;
            int g = fa == f ? fb : fa;
            if (parent_face[g] >= 0) continue;
            parent_face[g] = f;
            parent_edge[g] = e;
            next.push_back(g);
          }
        }
        frontier = std::move(next);
      }
      return std::pair(parent_face, parent_edge);
    };
    auto [parent_face, parent_edge] = bfs(true);
    if (parent_face[host_a] < 0) std::tie(parent_face, parent_edge) = bfs(false);
    if (parent_face[host_a] < 0) throw Error("internal: disconnected surface in core_loop");
    std::vector<int> path_edges, path_faces;
    for (int f = host_a; f != host_b; f = parent_face[f]) {
      path_edges.push_back(parent_edge[f]);
      path_faces.push_back(f);
    }
    std::reverse(path_edges.begin(), path_edges.end());
    std::reverse(path_faces.begin(), path_faces.end());
    for (size_t i = 0; i < path_edges.size(); ++i) {
      cross.push_back(path_edges[i]);
      faces.push_back(path_faces[i]);
    }
  }
  return reduce(s, make_closed(s, cross, faces));
}

int handle_transit_count(const HandleComplex& hc, const EdgeWord& w, int h, bool signed_count) {
  const Surface& s = hc.surface();
  int rect = hc.handle_face(h);
  // classify a chord endpoint by the run it lies in: 0 = L, 1 = R, -1 = a foot
  auto side_of_item = [&](int item) -> int {
    const ItemInfo& inf = hc.info(item);
    if (inf.role == ItemInfo::Role::SideGap || inf.role == ItemInfo::Role::SideMark)
      return inf.owner == h ? inf.side : -2;
    return -1;
  };
  int total = 0;
  int k = w.length();
  auto chord_ends_side = [&](int face, int from_edge, int to_edge, const BPoint* from_pt,
                             const BPoint* to_pt) {
    if (face != rect) return;
    int ia = from_pt ? from_pt->item : s.edge_item_in_face(from_edge, rect);
    int ib = to_pt ? to_pt->item : s.edge_item_in_face(to_edge, rect);
    int sa = side_of_item(ia), sb = side_of_item(ib);
    if (sa < 0 || sb < 0 || sa == sb) return;
    total += signed_count ? (sa == 0 ? +1 : -1) : 1;
  };
  if (w.kind == WordKind::Arc) {
    for (int i = 0; i <= k; ++i) {
      const BPoint* fp = i == 0 ? &w.start : nullptr;
      const BPoint* tp = i == k ? &w.end : nullptr;
      chord_ends_side(w.faces[i], i > 0 ? w.cross[i - 1] : -1, i < k ? w.cross[i] : -1, fp, tp);
    }
  } else {
    for (int i = 0; i < k; ++i)
      chord_ends_side(w.faces[i], w.cross[i], w.cross[(i + 1) % k], nullptr, nullptr);
  }
  return total;
}

}  // namespace pob
