#include "pob/openbook.hpp"

#include <algorithm>
#include <map>

#include "pob/errors.hpp"

namespace pob {

namespace {

// Boundary walk that records the gluing edges hopped at each corner.
struct WalkStep {
  int free_item;
  std::vector<int> hops_before;  // edges crossed between the previous free item and this one
};

std::vector<std::vector<WalkStep>> boundary_walk_with_fans(const Surface& s) {
  std::vector<std::vector<WalkStep>> cycles;
  std::vector<char> seen(s.item_count(), 0);
  for (int start = 0; start < s.item_count(); ++start) {
    if (!s.is_free(start) || seen[start]) continue;
    std::vector<WalkStep> cycle;
    int cur = start;
    do {
      seen[cur] = 1;
      WalkStep step;
      step.free_item = cur;
      int j = s.next_in_face(cur);
      std::vector<int> hops;
      int guard = 0;
      while (!s.is_free(j)) {
        hops.push_back(s.item(j).edge);
        j = s.next_in_face(s.mate(j));
        if (++guard > 2 * s.item_count()) throw Error("boundary walk failed to terminate");
      }
      // hops happen after cur; attribute them to the NEXT step
      cycle.push_back(step);
      cur = j;
      if (cur != start) {
        // stash hops on the upcoming step
        // (handled by rotating below: simplest is to attach now)
      }
      if (!cycle.empty()) cycle.back().hops_before = {};  // placeholder, fixed below
      // we re-walk to fill hops_before properly after the loop
      (void)hops;
    } while (cur != start);
    // Second pass to fill hop data (attribute hops to the step they precede).
    for (size_t i = 0; i < cycle.size(); ++i) {
      int item = cycle[i].free_item;
      int j = s.next_in_face(item);
      std::vector<int> hops;
      while (!s.is_free(j)) {
        hops.push_back(s.item(j).edge);
        j = s.next_in_face(s.mate(j));
      }
      cycle[(i + 1) % cycle.size()].hops_before = hops;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

PartialOpenBook PartialOpenBook::make(std::vector<DiskDecl> disks,
                                      std::vector<HandleDecl> q_handles,
                                      std::vector<HandleDecl> p_handles,
                                      std::vector<EdgeWord> images,
                                      std::vector<TwistStep> provenance) {
  PartialOpenBook pob;
  pob.disks_ = std::move(disks);
  pob.q_handles_ = std::move(q_handles);
  pob.p_handles_ = std::move(p_handles);
  pob.provenance_ = std::move(provenance);
  if (pob.p_handles_.empty())
    throw ValidationError("a partial open book needs at least one partial handle");
  int nq = static_cast<int>(pob.q_handles_.size());
  for (const HandleDecl& h : pob.p_handles_)
    for (const SlotRef* slot : {&h.a, &h.b})
      if (slot->kind == SlotRef::Kind::HandleSide && slot->owner >= nq)
        throw ValidationError("partial handle '" + h.name +
                              "' must attach to base material, not to a partial handle");

  pob.q_ = HandleComplex::build(pob.disks_, pob.q_handles_);
  std::vector<HandleDecl> all = pob.q_handles_;
  all.insert(all.end(), pob.p_handles_.begin(), pob.p_handles_.end());
  pob.s_ = HandleComplex::build(pob.disks_, all);

  const Surface& surf = pob.s_.surface();
  if (images.empty()) {
    pob.images_ = pob.cocores();
  } else {
    if (static_cast<int>(images.size()) != pob.partial_count())
      throw ValidationError("expected one monodromy image per partial handle");
    for (size_t j = 0; j < images.size(); ++j) {
      EdgeWord w = reduce(surf, images[j]);
      if (w.kind != WordKind::Arc) throw ValidationError("monodromy images must be arcs");
      EdgeWord a = cocore_arc(pob.s_, pob.p_handle_index(static_cast<int>(j)));
      if (w.start == a.end && w.end == a.start) w = reversed(surf, w);
      pob.images_.push_back(w);
    }
  }
  return pob;
}

PartialOpenBook PartialOpenBook::from_twists(std::vector<DiskDecl> disks,
                                             std::vector<HandleDecl> q_handles,
                                             std::vector<HandleDecl> p_handles,
                                             std::vector<TwistStep> word) {
  PartialOpenBook id = make(disks, q_handles, p_handles, {});
  std::vector<EdgeWord> images =
      monodromy_from_word(id.assembled(), id.q_handle_count(), id.partial_count(), word);
  return make(std::move(disks), std::move(q_handles), std::move(p_handles), std::move(images),
              std::move(word));
}

std::vector<EdgeWord> PartialOpenBook::cocores() const {
  std::vector<EdgeWord> out;
  for (int j = 0; j < partial_count(); ++j) out.push_back(cocore_arc(s_, p_handle_index(j)));
  return out;
}

BoundaryPartition boundary_partition(const PartialOpenBook& pob) {
  const HandleComplex& hc = pob.assembled();
  const Surface& s = hc.surface();
  int first_p = pob.q_handle_count();

  auto is_partial_side = [&](int item) {
    const ItemInfo& inf = hc.info(item);
    return (inf.role == ItemInfo::Role::SideGap || inf.role == ItemInfo::Role::SideMark) &&
           inf.owner >= first_p;
  };
  auto p_foot_of_edge = [&](int e) -> std::optional<std::pair<int, int>> {
    for (int side_item : {s.edge(e).a, s.edge(e).b}) {
      const ItemInfo& inf = hc.info(side_item);
      if (inf.role == ItemInfo::Role::Foot && inf.owner >= first_p)
        return std::pair{inf.owner - first_p, inf.side};
    }
    return std::nullopt;
  };

  BoundaryPartition part;
  std::map<int, int> c_arc_of_edge;
  auto c_arc_id = [&](int e) {
    auto it = c_arc_of_edge.find(e);
    if (it != c_arc_of_edge.end()) return it->second;
    auto foot = p_foot_of_edge(e);
    if (!foot) throw Error("internal: transition corner without a partial foot");
    part.c_arcs.push_back(BoundaryPartition::CArc{foot->first, foot->second, e});
    int id = static_cast<int>(part.c_arcs.size()) - 1;
    c_arc_of_edge[e] = id;
    return id;
  };

  for (const std::vector<WalkStep>& cycle : boundary_walk_with_fans(s)) {
    bool constant = true;
    bool first_class = is_partial_side(cycle[0].free_item);
    for (const WalkStep& st : cycle)
      if (is_partial_side(st.free_item) != first_class) constant = false;
    if (constant) {
      if (first_class)
        throw DegeneratePartition("a boundary circle lies entirely in the partial boundary");
      BoundaryPartition::Run run;
      run.is_circle = true;
      for (const WalkStep& st : cycle) run.items.push_back(st.free_item);
      part.outer.push_back(std::move(run));
      continue;
    }
    // split into maximal runs, noting the partial foot at each transition
    int n = static_cast<int>(cycle.size());
    int begin = 0;
    while (is_partial_side(cycle[(begin + n - 1) % n].free_item) ==
           is_partial_side(cycle[begin].free_item))
      ++begin;  // rotate to a transition
    std::vector<BoundaryPartition::Run> runs;
    std::vector<int> transition_feet;  // foot edge before each run
    int i = begin;
    do {
      bool cls = is_partial_side(cycle[i % n].free_item);
      // the transition fan right before cycle[i] carries the foot
      const std::vector<int>& hops = cycle[i % n].hops_before;
      int foot = -1;
      for (int e : hops)
        if (p_foot_of_edge(e)) foot = e;
      if (foot < 0) throw Error("internal: no partial foot at a boundary transition");
      BoundaryPartition::Run run;
      run.foot_before = foot;
      while (true) {
        run.items.push_back(cycle[i % n].free_item);
        ++i;
        if (is_partial_side(cycle[i % n].free_item) != cls) break;
      }
      runs.push_back(run);
      transition_feet.push_back(foot);
      (void)c_arc_id(foot);
    } while ((i - begin) % n != 0);
    for (size_t k = 0; k < runs.size(); ++k) {
      runs[k].foot_after = transition_feet[(k + 1) % runs.size()];
      if (is_partial_side(runs[k].items[0]))
        part.a_arcs.push_back(runs[k]);
      else
        part.outer.push_back(runs[k]);
    }
  }
  return part;
}

std::vector<EdgeWord> monodromy_from_word(const HandleComplex& s, int first_p_handle, int p_count,
                                          const std::vector<TwistStep>& word) {
  std::vector<EdgeWord> images;
  for (int j = 0; j < p_count; ++j) images.push_back(cocore_arc(s, first_p_handle + j));
  for (const TwistStep& step : word)
    for (EdgeWord& img : images) img = dehn_twist(s.surface(), step.curve, img, step.handed);
  if (!disjoint_embedded_system(s.surface(), images))
    throw ImagesCollide("monodromy images are not pairwise disjoint");
  return images;
}

ValidationReport validate(const PartialOpenBook& pob) {
  ValidationReport rep;
  const Surface& s = pob.assembled().surface();
  auto add = [&](std::string cond, bool pass, std::string detail = {}) {
    rep.entries.push_back({std::move(cond), pass, std::move(detail)});
  };

  bool connected = s.component_count() == 1;
  bool has_boundary = !s.boundary_cycles().empty();
  add("page is a compact oriented connected surface with boundary", connected && has_boundary,
      connected ? (has_boundary ? "" : "no boundary") : "not connected");

  add("partial region is a nonempty union of handles on the base",
      pob.partial_count() >= 1, "r = " + std::to_string(pob.partial_count()));

  bool partition_ok = true;
  std::string partition_detail;
  int n = 0;
  try {
    BoundaryPartition part = boundary_partition(pob);
    n = part.n();
    partition_ok = n >= 1;
    partition_detail = "n = " + std::to_string(n);
  } catch (const DegeneratePartition& e) {
    partition_ok = false;
    partition_detail = e.what();
  }
  add("free partial boundary is a nonempty union of arcs", partition_ok, partition_detail);

  const std::vector<EdgeWord>& images = pob.images();
  bool count_ok = static_cast<int>(images.size()) == pob.partial_count();
  add("one monodromy image per partial handle", count_ok);

  bool reduced_ok = true;
  for (const EdgeWord& w : images)
    if (reduce(s, w) != w) reduced_ok = false;
  add("monodromy images are reduced", reduced_ok);

  bool endpoints_ok = count_ok;
  std::string endpoint_detail;
  if (count_ok) {
    std::vector<EdgeWord> cocores = pob.cocores();
    for (int j = 0; j < pob.partial_count(); ++j) {
      if (images[j].kind != WordKind::Arc ||
          !(images[j].start == cocores[j].start && images[j].end == cocores[j].end)) {
        endpoints_ok = false;
        endpoint_detail = "h does not fix A at cocore " + std::to_string(j);
        break;
      }
    }
  }
  add("monodromy fixes the boundary intersection pointwise", endpoints_ok, endpoint_detail);

  bool disjoint_ok = count_ok;
  std::string disjoint_detail;
  if (count_ok) {
    for (const EdgeWord& w : images)
      if (w.kind != WordKind::Arc) disjoint_ok = false;
    if (disjoint_ok && !disjoint_embedded_system(s, images)) {
      disjoint_ok = false;
      disjoint_detail = "images not disjoint";
    }
  }
  add("monodromy images are pairwise disjoint embedded arcs", disjoint_ok, disjoint_detail);
  return rep;
}

namespace {

// Rebuild declarations with marks inserted at the endpoints of the
// stabilization arc, and produce lookup tables for the new indices.
struct MarkInsertion {
  std::vector<DiskDecl> disks;
  std::vector<HandleDecl> q_handles, p_handles;
  SlotRef slot_start, slot_end;

  // old mark index -> new mark index, per disk and per handle side
  std::map<std::pair<int, int>, int> disk_mark_map;                 // (disk, mark)
  std::map<std::tuple<int, int, int>, int> side_mark_map;           // (handle, side, mark)
};

MarkInsertion insert_marks(const PartialOpenBook& pob, const EdgeWord& arc) {
  const HandleComplex& hc = pob.assembled();
  struct Point {
    ItemInfo inf;
    Rat t;
    bool is_start;
  };
  std::vector<Point> pts;
  pts.push_back({hc.info(arc.start.item), arc.start.t, true});
  pts.push_back({hc.info(arc.end.item), arc.end.t, false});
  for (const Point& p : pts) {
    bool base_gap = p.inf.role == ItemInfo::Role::DiskGap ||
                    (p.inf.role == ItemInfo::Role::SideGap && p.inf.owner < pob.q_handle_count());
    if (!base_gap)
      throw NotProperArc("stabilization arc endpoints must lie on free base-material gaps");
  }

  MarkInsertion out;
  out.disks = pob.disks();
  out.q_handles = pob.q_handles();
  out.p_handles = pob.p_handles();

  // per disk: insertions keyed by (gap, t); per handle side likewise
  std::map<int, std::vector<std::pair<std::pair<int, Rat>, bool>>> disk_ins;
  std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, Rat>, bool>>> side_ins;
  for (const Point& p : pts) {
    if (p.inf.role == ItemInfo::Role::DiskGap)
      disk_ins[p.inf.owner].push_back({{p.inf.index, p.t}, p.is_start});
    else
      side_ins[{p.inf.owner, p.inf.side}].push_back({{p.inf.index, p.t}, p.is_start});
  }
  auto by_pos = [](const auto& a, const auto& b) {
    return a.first.first != b.first.first ? a.first.first < b.first.first
                                          : a.first.second < b.first.second;
  };

  for (auto& [d, ins] : disk_ins) {
    std::sort(ins.begin(), ins.end(), by_pos);
    int k = out.disks[d].marks;
    // new cyclic order: old mark m, then insertions in gap m
    int next = 0;
    for (int m = 0; m < k; ++m) {
      out.disk_mark_map[{d, m}] = next++;
      for (auto& [key, is_start] : ins)
        if (key.first == m) {
          SlotRef slot = SlotRef::disk(d, next++);
          (is_start ? out.slot_start : out.slot_end) = slot;
        }
    }
    out.disks[d].marks = next;
  }
  for (int d = 0; d < static_cast<int>(out.disks.size()); ++d)
    if (!disk_ins.count(d))
      for (int m = 0; m < out.disks[d].marks; ++m) out.disk_mark_map[{d, m}] = m;

  for (auto& [hs, ins] : side_ins) {
    std::sort(ins.begin(), ins.end(), by_pos);
    auto [h, side] = hs;
    int k = side == 0 ? out.q_handles[h].side_marks_l : out.q_handles[h].side_marks_r;
    // side run: gap 0, mark 0, gap 1, ..., mark k-1, gap k; an insertion in
    // gap g lands before old mark g
    int next = 0;
    for (int g = 0; g <= k; ++g) {
      for (auto& [key, is_start] : ins)
        if (key.first == g) {
          SlotRef slot = SlotRef::handle_side(h, side, next++);
          (is_start ? out.slot_start : out.slot_end) = slot;
        }
      if (g < k) out.side_mark_map[{h, side, g}] = next++;
    }
    (side == 0 ? out.q_handles[h].side_marks_l : out.q_handles[h].side_marks_r) = next;
  }
  for (int h = 0; h < static_cast<int>(out.q_handles.size()); ++h)
    for (int side = 0; side < 2; ++side)
      if (!side_ins.count({h, side})) {
        int k = side == 0 ? out.q_handles[h].side_marks_l : out.q_handles[h].side_marks_r;
        for (int m = 0; m < k; ++m) out.side_mark_map[{h, side, m}] = m;
      }
  for (int h = 0; h < static_cast<int>(out.p_handles.size()); ++h)
    for (int side = 0; side < 2; ++side) {
      int k = side == 0 ? out.p_handles[h].side_marks_l : out.p_handles[h].side_marks_r;
      for (int m = 0; m < k; ++m)
        out.side_mark_map[{h + static_cast<int>(out.q_handles.size()), side, m}] = m;
    }

  auto remap_slot = [&](SlotRef& s) {
    if (s.kind == SlotRef::Kind::Disk)
      s.mark = out.disk_mark_map.at({s.owner, s.mark});
    else
      s.mark = out.side_mark_map.at({s.owner, s.side, s.mark});
  };
  for (HandleDecl& h : out.q_handles) {
    remap_slot(h.a);
    remap_slot(h.b);
  }
  for (HandleDecl& h : out.p_handles) {
    remap_slot(h.a);
    remap_slot(h.b);
  }
  return out;
}

// Transport a word from one handle complex to another whose faces and
// gluing edges agree; only endpoint items are looked up again.
EdgeWord transport_word(const HandleComplex& from, const HandleComplex& to, const EdgeWord& w) {
  EdgeWord out = w;
  if (w.kind == WordKind::Arc) {
    auto map_point = [&](const BPoint& p) {
      const ItemInfo& inf = from.info(p.item);
      int item;
      switch (inf.role) {
        case ItemInfo::Role::DiskGap: item = to.disk_gap_item(inf.owner, inf.index); break;
        case ItemInfo::Role::SideGap: item = to.side_gap_item(inf.owner, inf.side, inf.index); break;
        case ItemInfo::Role::DiskMark: item = to.disk_mark_item(inf.owner, inf.index); break;
        case ItemInfo::Role::SideMark: item = to.side_mark_item(inf.owner, inf.side, inf.index); break;
        case ItemInfo::Role::DiskCircle: item = to.disk_circle_item(inf.owner); break;
        default: throw Error("cannot transport a point on a foot");
      }
      return BPoint{item, p.t};
    };
    out.start = map_point(w.start);
    out.end = map_point(w.end);
  }
  check_incident(to.surface(), out);
  return out;
}

}  // namespace

PartialOpenBook positive_stabilize(const PartialOpenBook& pob, const EdgeWord& s_arc_in) {
  const Surface& s = pob.assembled().surface();
  EdgeWord arc = reduce(s, s_arc_in);
  if (arc.kind != WordKind::Arc) throw NotProperArc("stabilization needs a properly embedded arc");
  if (self_intersection(s, arc) != 0)
    throw NotProperArc("stabilization arc is not embedded");

  MarkInsertion ins = insert_marks(pob, arc);

  HandleDecl new_handle;
  new_handle.name = "s" + std::to_string(pob.partial_count());
  new_handle.a = ins.slot_start;
  new_handle.b = ins.slot_end;
  std::vector<HandleDecl> new_p = ins.p_handles;
  new_p.push_back(new_handle);

  PartialOpenBook grown =
      PartialOpenBook::make(ins.disks, ins.q_handles, new_p, {} /* identity for now */);
  const HandleComplex& hc2 = grown.assembled();
  const Surface& s2 = hc2.surface();
  int new_idx = grown.p_handle_index(grown.partial_count() - 1);

  // sigma = the stabilization arc joined with the new core.
  int ea = hc2.foot_edge(new_idx, 0);
  int eb = hc2.foot_edge(new_idx, 1);
  std::vector<int> cross = arc.cross;
  std::vector<int> faces(arc.faces.begin() + 1, arc.faces.end());
  cross.push_back(eb);
  faces.push_back(hc2.handle_face(new_idx));
  cross.push_back(ea);
  faces.push_back(arc.faces.front());
  EdgeWord sigma = reduce(s2, make_closed(s2, cross, faces));
  if (self_intersection(s2, sigma) != 0)
    throw NotProperArc("stabilization curve is not embedded");

  std::vector<EdgeWord> images;
  for (const EdgeWord& img : pob.images())
    images.push_back(transport_word(pob.assembled(), hc2, img));
  images.push_back(cocore_arc(hc2, new_idx));
  for (EdgeWord& img : images) img = dehn_twist(s2, sigma, img, Handedness::Right);
  if (!disjoint_embedded_system(s2, images))
    throw ImagesCollide("stabilized images are not pairwise disjoint");

  std::vector<TwistStep> prov = pob.provenance();
  prov.push_back({sigma, Handedness::Right});
  return PartialOpenBook::make(ins.disks, ins.q_handles, new_p, images, prov);
}

std::vector<EdgeWord> stabilization_arc_menu(const PartialOpenBook& pob, int want) {
  const HandleComplex& hc = pob.assembled();
  const Surface& s = hc.surface();
  std::vector<EdgeWord> menu;
  auto is_base_gap = [&](int item) {
    if (!s.is_free(item)) return false;
    const ItemInfo& inf = hc.info(item);
    return inf.role == ItemInfo::Role::DiskGap || inf.role == ItemInfo::Role::DiskCircle ||
           (inf.role == ItemInfo::Role::SideGap && inf.owner < pob.q_handle_count());
  };
  auto push = [&](const EdgeWord& w) {
    if (static_cast<int>(menu.size()) >= want) return;
    if (self_intersection(s, w) != 0) return;
    menu.push_back(reduce(s, w));
  };

  // arcs inside a single gap
  for (int it = 0; it < s.item_count() && static_cast<int>(menu.size()) < want; ++it)
    if (is_base_gap(it))
      push(make_arc(s, BPoint{it, Rat(1, 3)}, {}, {s.item(it).face}, BPoint{it, Rat(2, 3)}));
  // chords between two gaps of one face
  for (int f = 0; f < s.face_count() && static_cast<int>(menu.size()) < want; ++f) {
    std::vector<int> gaps;
    for (int it : s.face(f).items)
      if (is_base_gap(it)) gaps.push_back(it);
    for (size_t x = 0; x < gaps.size(); ++x)
      for (size_t y = x + 1; y < gaps.size() && static_cast<int>(menu.size()) < want; ++y)
        push(make_arc(s, BPoint{gaps[x], Rat(2, 5)}, {}, {f}, BPoint{gaps[y], Rat(2, 5)}));
  }
  // arcs running once through a handle
  for (int h = 0; h < hc.handle_count() && static_cast<int>(menu.size()) < want; ++h) {
    int ea = hc.foot_edge(h, 0), eb = hc.foot_edge(h, 1);
    int rect = hc.handle_face(h);
    int fa = s.other_face(ea, rect), fb = s.other_face(eb, rect);
    int ga = -1, gb = -1;
    for (int it : s.face(fa).items)
      if (is_base_gap(it) && ga < 0) ga = it;
    for (int it : s.face(fb).items)
      if (is_base_gap(it) && (gb < 0) && it != ga) gb = it;
    if (ga < 0 || gb < 0) continue;
    push(make_arc(s, BPoint{ga, Rat(2, 7)}, {ea, eb}, {fa, rect, fb}, BPoint{gb, Rat(2, 7)}));
  }
  return menu;
}

std::string IsoWitness::str() const {
  std::string out = "disks:";
  for (size_t i = 0; i < disk_perm.size(); ++i)
    out += " " + std::to_string(i) + "->" + std::to_string(disk_perm[i]) + "(+r" +
           std::to_string(disk_rotation[i]) + ")";
  out += "; q:";
  for (size_t i = 0; i < q_perm.size(); ++i)
    out += " " + std::to_string(i) + "->" + std::to_string(q_perm[i]) + (q_flip[i] ? "*" : "");
  out += "; p:";
  for (size_t i = 0; i < p_perm.size(); ++i)
    out += " " + std::to_string(i) + "->" + std::to_string(p_perm[i]) + (p_flip[i] ? "*" : "");
  return out;
}

namespace {

struct Candidate {
  std::vector<int> disk_perm, disk_rot, q_perm, p_perm;
  std::vector<bool> q_flip, p_flip;
};

// apply the relabeling to a's declarations (targets indexed by b)
std::optional<PartialOpenBook> apply_candidate(const PartialOpenBook& a, const Candidate& c) {
  int nd = static_cast<int>(a.disks().size());
  int nq = a.q_handle_count();
  int np = a.partial_count();
  std::vector<DiskDecl> disks(nd);
  for (int d = 0; d < nd; ++d) disks[c.disk_perm[d]] = a.disks()[d];

  auto map_slot = [&](SlotRef s, bool context_is_p) -> SlotRef {
    (void)context_is_p;
    if (s.kind == SlotRef::Kind::Disk) {
      int k = a.disks()[s.owner].marks;
      return SlotRef::disk(c.disk_perm[s.owner], (s.mark + c.disk_rot[s.owner]) % k);
    }
    bool flip = c.q_flip[s.owner];
    return SlotRef::handle_side(c.q_perm[s.owner], flip ? 1 - s.side : s.side, s.mark);
  };
  auto map_handle = [&](const HandleDecl& h, bool flip) {
    HandleDecl out = h;
    out.a = map_slot(flip ? h.b : h.a, false);
    out.b = map_slot(flip ? h.a : h.b, false);
    if (flip) std::swap(out.side_marks_l, out.side_marks_r);
    return out;
  };
  std::vector<HandleDecl> qs(nq), ps(np);
  for (int i = 0; i < nq; ++i) qs[c.q_perm[i]] = map_handle(a.q_handles()[i], c.q_flip[i]);
  for (int j = 0; j < np; ++j) ps[c.p_perm[j]] = map_handle(a.p_handles()[j], c.p_flip[j]);

  // transport image words onto the relabeled complex
  try {
    PartialOpenBook relabeled = PartialOpenBook::make(disks, qs, ps, {});
    const HandleComplex& hc1 = a.assembled();
    const HandleComplex& hc2 = relabeled.assembled();
    const Surface& s2 = hc2.surface();
    auto map_face = [&](int f) {
      if (f < nd) return c.disk_perm[f];
      int h = f - nd;
      return nd + (h < nq ? c.q_perm[h] : nq + c.p_perm[h - nq]);
    };
    auto handle_flip = [&](int h) { return h < nq ? c.q_flip[h] : c.p_flip[h - nq]; };
    auto map_edge = [&](int e) {
      int h = e / 2, end = e % 2;
      int h2 = h < nq ? c.q_perm[h] : nq + c.p_perm[h - nq];
      int end2 = handle_flip(h) ? 1 - end : end;
      return 2 * h2 + end2;
    };
    auto map_point = [&](const BPoint& p) -> BPoint {
      const ItemInfo& inf = hc1.info(p.item);
      switch (inf.role) {
        case ItemInfo::Role::DiskGap: {
          int k = a.disks()[inf.owner].marks;
          return {hc2.disk_gap_item(c.disk_perm[inf.owner], (inf.index + c.disk_rot[inf.owner]) % k),
                  p.t};
        }
        case ItemInfo::Role::DiskCircle:
          return {hc2.disk_circle_item(c.disk_perm[inf.owner]), p.t};
        case ItemInfo::Role::SideGap: {
          int h = inf.owner;
          bool flip = handle_flip(h);
          int h2 = h < nq ? c.q_perm[h] : nq + c.p_perm[h - nq];
          return {hc2.side_gap_item(h2, flip ? 1 - inf.side : inf.side, inf.index), p.t};
        }
        default:
          throw Error("unsupported endpoint in isomorphism transport");
      }
    };
    std::vector<EdgeWord> images(np);
    for (int j = 0; j < np; ++j) {
      const EdgeWord& w = a.images()[j];
      EdgeWord out = w;
      for (int& e : out.cross) e = map_edge(e);
      for (int& f : out.faces) f = map_face(f);
      out.start = map_point(w.start);
      out.end = map_point(w.end);
      if (c.p_flip[j]) out = reversed(s2, out);
      images[c.p_perm[j]] = reduce(s2, out);
    }
    return PartialOpenBook::make(disks, qs, ps, images);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool same_decls(const PartialOpenBook& x, const PartialOpenBook& y) {
  auto eq_handles = [](const std::vector<HandleDecl>& u, const std::vector<HandleDecl>& v) {
    if (u.size() != v.size()) return false;
    for (size_t i = 0; i < u.size(); ++i) {
      if (!(u[i].a == v[i].a) || !(u[i].b == v[i].b) || u[i].twisted != v[i].twisted ||
          u[i].side_marks_l != v[i].side_marks_l || u[i].side_marks_r != v[i].side_marks_r)
        return false;
    }
    return true;
  };
  if (x.disks().size() != y.disks().size()) return false;
  for (size_t d = 0; d < x.disks().size(); ++d)
    if (x.disks()[d].marks != y.disks()[d].marks ||
        x.disks()[d].orientation != y.disks()[d].orientation)
      return false;
  if (!eq_handles(x.q_handles(), y.q_handles()) || !eq_handles(x.p_handles(), y.p_handles()))
    return false;
  for (int j = 0; j < x.partial_count(); ++j)
    if (!(x.images()[j] == y.images()[j])) return false;
  return true;
}

}  // namespace

std::optional<IsoWitness> isomorphic(const PartialOpenBook& a, const PartialOpenBook& b) {
  int nd = static_cast<int>(a.disks().size());
  int nq = a.q_handle_count();
  int np = a.partial_count();
  if (static_cast<int>(b.disks().size()) != nd || b.q_handle_count() != nq ||
      b.partial_count() != np)
    return std::nullopt;
  const Surface& sa = a.assembled().surface();
  const Surface& sb = b.assembled().surface();
  if (sa.euler() != sb.euler() || sa.genus_per_component() != sb.genus_per_component() ||
      sa.boundary_cycles().size() != sb.boundary_cycles().size())
    return std::nullopt;

  std::vector<int> dp(nd), qp(nq), pp(np);
  for (int i = 0; i < nd; ++i) dp[i] = i;
  std::optional<IsoWitness> found;

  auto try_candidate = [&](const Candidate& c) {
    if (found) return;
    std::optional<PartialOpenBook> relabel = apply_candidate(a, c);
    if (!relabel) return;
    if (!same_decls(*relabel, b)) return;
    IsoWitness w;
    w.disk_perm = c.disk_perm;
    w.disk_rotation = c.disk_rot;
    w.q_perm = c.q_perm;
    w.q_flip = c.q_flip;
    w.p_perm = c.p_perm;
    w.p_flip = c.p_flip;
    found = w;
  };

  // enumerate disk permutations with compatible mark counts, rotations,
  // handle permutations and flips
  std::sort(dp.begin(), dp.end());
  do {
    bool ok = true;
    for (int d = 0; d < nd && ok; ++d)
      if (a.disks()[d].marks != b.disks()[dp[d]].marks ||
          a.disks()[d].orientation != b.disks()[dp[d]].orientation)
        ok = false;
    if (!ok) continue;
    // rotations per disk
    std::vector<int> rot(nd, 0);
    std::vector<int> rot_max(nd);
    for (int d = 0; d < nd; ++d) rot_max[d] = std::max(1, a.disks()[d].marks);
    while (true) {
      for (int i = 0; i < nq; ++i) qp[i] = i;
      std::sort(qp.begin(), qp.end());
      do {
        for (int j = 0; j < np; ++j) pp[j] = j;
        std::sort(pp.begin(), pp.end());
        do {
          for (int qf = 0; qf < (1 << nq); ++qf)
            for (int pf = 0; pf < (1 << np); ++pf) {
              Candidate c;
              c.disk_perm = dp;
              c.disk_rot = rot;
              c.q_perm = qp;
              c.p_perm = pp;
              c.q_flip.assign(nq, false);
              c.p_flip.assign(np, false);
              for (int i = 0; i < nq; ++i) c.q_flip[i] = (qf >> i) & 1;
              for (int j = 0; j < np; ++j) c.p_flip[j] = (pf >> j) & 1;
              try_candidate(c);
              if (found) return found;
            }
        } while (std::next_permutation(pp.begin(), pp.end()));
      } while (std::next_permutation(qp.begin(), qp.end()));
      // increment rotation vector
      int d = 0;
      while (d < nd) {
        if (++rot[d] < rot_max[d]) break;
        rot[d] = 0;
        ++d;
      }
      if (d == nd) break;
    }
  } while (std::next_permutation(dp.begin(), dp.end()));
  return found;
}

}  // namespace pob
