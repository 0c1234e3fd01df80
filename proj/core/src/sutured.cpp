#include "pob/sutured.hpp"

#include <algorithm>
#include <map>

#include "pob/errors.hpp"

namespace pob {

namespace {

void require_valid(const PartialOpenBook& pob) {
  ValidationReport rep = validate(pob);
  if (!rep.all_pass()) {
    for (const auto& e : rep.entries)
      if (!e.pass)
        throw ValidationError("invalid partial open book: " + e.condition +
                              (e.detail.empty() ? "" : " (" + e.detail + ")"));
  }
}

// Clone a surface's faces into `dst`, reversing cycles when `reverse` is
// set; returns the item map.
std::vector<int> clone_into(Surface& dst, const Surface& src, bool reverse,
                            const std::string& tag) {
  std::vector<int> item_map(src.item_count(), -1);
  for (int f = 0; f < src.face_count(); ++f) {
    int nf = dst.add_face(tag + src.face(f).label);
    std::vector<int> items = src.face(f).items;
    if (reverse) std::reverse(items.begin(), items.end());
    for (int it : items) item_map[it] = dst.add_item(nf, src.item(it).kind, src.item(it).label);
  }
  for (int e = 0; e < src.edge_count(); ++e)
    dst.glue(item_map[src.edge(e).a], item_map[src.edge(e).b]);
  return item_map;
}

struct GammaCircle {
  std::vector<int> outer_runs;  // indices into partition.outer (arcs)
  int closed_outer = -1;        // or a closed outer circle
  int sample_item = -1;         // an outer item on the circle
};

std::vector<GammaCircle> trace_gamma(const BoundaryPartition& part) {
  std::vector<GammaCircle> out;
  // closed outer circles are suture circles on their own
  for (int i = 0; i < static_cast<int>(part.outer.size()); ++i)
    if (part.outer[i].is_circle) {
      GammaCircle g;
      g.closed_outer = i;
      g.sample_item = part.outer[i].items[0];
      out.push_back(g);
    }
  // arc runs: from a run's trailing foot, the suture continues along the
  // free foot arc to the unique run led by the same foot
  std::map<int, int> run_led_by_foot;
  for (int i = 0; i < static_cast<int>(part.outer.size()); ++i)
    if (!part.outer[i].is_circle) run_led_by_foot[part.outer[i].foot_before] = i;
  std::vector<char> seen(part.outer.size(), 0);
  for (int i = 0; i < static_cast<int>(part.outer.size()); ++i) {
    if (part.outer[i].is_circle || seen[i]) continue;
    GammaCircle g;
    int cur = i;
    do {
      seen[cur] = 1;
      g.outer_runs.push_back(cur);
      auto it = run_led_by_foot.find(part.outer[cur].foot_after);
      if (it == run_led_by_foot.end())
        throw Error("internal: suture trace found no continuation run");
      cur = it->second;
    } while (cur != i);
    g.sample_item = part.outer[i].items[0];
    out.push_back(g);
  }
  return out;
}

}  // namespace

SuturedData build_sutured(const PartialOpenBook& pob) {
  require_valid(pob);
  const HandleComplex& hc = pob.assembled();
  const Surface& s = hc.surface();
  const Surface& q = pob.base().surface();
  BoundaryPartition part = boundary_partition(pob);
  int n = part.n();

  SuturedData sd;
  sd.chi_r_plus = q.euler();

  // complement of the image region: cut the page along the image arcs
  Realization images(s, pob.images());
  if (!images.crossings().empty())
    throw ValidationError("monodromy images do not realize disjointly");
  CutResult cut = cut_along(s, images);
  sd.chi_r_minus = cut.cut.euler();

  // --- assemble the boundary of M as a closed cell complex ---
  // pieces: the base (level 0), the cut page reversed (level -1), and one
  // vertical bigon per free foot arc.
  Surface bdm;
  std::vector<int> q_map = clone_into(bdm, q, false, "q:");
  std::vector<int> cut_map = clone_into(bdm, cut.cut, true, "-s:");

  // outer material is shared by the two levels untouched, cell by cell
  auto is_outer_piece = [&](int cut_item) {
    const CutResult::Origin& o = cut.origins[cut_item];
    if (o.kind != CutResult::Origin::Kind::Piece) return false;
    const ItemInfo& inf = hc.info(o.orig_item);
    bool partial_side =
        (inf.role == ItemInfo::Role::SideGap || inf.role == ItemInfo::Role::SideMark) &&
        inf.owner >= pob.q_handle_count();
    return !partial_side && s.is_free(o.orig_item);
  };
  for (const BoundaryPartition::Run& run : part.outer)
    for (int item : run.items) {
      std::vector<int> pieces = cut.pieces_of(item);
      if (pieces.size() != 1) throw Error("internal: outer cell was subdivided by the cut");
      bdm.glue(q_map[item], cut_map[pieces[0]]);
    }

  // image-side runs along the cut boundary, one per free foot arc
  struct Run {
    std::vector<int> cut_items;  // in walk order
    int word = -1, side = -1;
  };
  std::vector<Run> image_runs;
  for (const std::vector<int>& cycle : cut.cut.boundary_cycles()) {
    int m = static_cast<int>(cycle.size());
    int begin = -1;
    for (int i = 0; i < m; ++i)
      if (is_outer_piece(cycle[i]) && !is_outer_piece(cycle[(i + 1) % m])) {
        begin = (i + 1) % m;
        break;
      }
    if (begin < 0) {
      for (int i = 0; i < m; ++i)
        if (!is_outer_piece(cycle[i]))
          throw Error("internal: cut boundary circle without outer material");
      continue;  // fully outer circle: no image run here
    }
    int i = begin;
    while (true) {
      if (!is_outer_piece(cycle[i % m])) {
        Run run;
        while (!is_outer_piece(cycle[i % m])) {
          int it = cycle[i % m];
          run.cut_items.push_back(it);
          const CutResult::Origin& o = cut.origins[it];
          if (o.kind == CutResult::Origin::Kind::Seam) {
            if (run.word >= 0 && (run.word != o.word || run.side != o.side))
              throw Error("internal: image run mixes seams");
            run.word = o.word;
            run.side = o.side;
          }
          ++i;
        }
        if (run.word < 0) throw Error("internal: image run without a seam");
        image_runs.push_back(std::move(run));
      } else {
        ++i;
      }
      if ((i - begin) >= m) break;
    }
  }
  if (static_cast<int>(image_runs.size()) != n)
    throw Error("internal: expected one image run per free foot arc");

  // vertical bigons: bottom on the base mark, top along the image run
  for (const Run& run : image_runs) {
    int p_idx = run.word;  // image j belongs to partial handle j
    int foot_end = run.side;
    int e = hc.foot_edge(pob.p_handle_index(p_idx), foot_end);
    int mark_item = s.edge(e).a;
    if (hc.info(mark_item).role == ItemInfo::Role::Foot) mark_item = s.edge(e).b;
    int f = bdm.add_face("D:" + std::to_string(p_idx) + (foot_end == 0 ? "A" : "B"));
    int bottom = bdm.add_item(f, ItemKind::Plain, "c");
    std::vector<int> tops;
    for (int it : run.cut_items) tops.push_back(bdm.add_item(f, ItemKind::Plain, "hc"));
    bdm.glue(bottom, q_map[mark_item]);
    for (size_t t = 0; t < run.cut_items.size(); ++t) bdm.glue(tops[t], cut_map[run.cut_items[t]]);
  }

  for (int it = 0; it < bdm.item_count(); ++it)
    if (bdm.is_free(it)) throw Error("internal: assembled boundary is not closed");

  sd.chi_boundary_m = bdm.euler_cellular();
  sd.boundary_components_of_m = bdm.component_count();

  // suture circles and their boundary components
  std::vector<GammaCircle> gamma = trace_gamma(part);
  sd.gamma_components = static_cast<int>(gamma.size());
  sd.incidence.assign(sd.boundary_components_of_m, 0);
  for (const GammaCircle& g : gamma) {
    int qface = q.item(g.sample_item).face;  // outer items share ids between q and s
    int comp = bdm.component_of_face(qface);
    sd.incidence[comp] += 1;
  }
  return sd;
}

BalanceVerdict check_balanced(const SuturedData& sd) {
  BalanceVerdict v;
  v.balanced = true;
  if (sd.boundary_components_of_m < 1) {
    v.balanced = false;
    v.reasons.push_back("the manifold has no boundary");
  }
  if (sd.chi_r_plus != sd.chi_r_minus) {
    v.balanced = false;
    v.reasons.push_back("chi(R+) = " + std::to_string(sd.chi_r_plus) +
                        " differs from chi(R-) = " + std::to_string(sd.chi_r_minus));
  }
  for (size_t c = 0; c < sd.incidence.size(); ++c)
    if (sd.incidence[c] < 1) {
      v.balanced = false;
      v.reasons.push_back("boundary component " + std::to_string(c) + " misses the suture");
    }
  return v;
}

GluingModel build_gluing_model(const PartialOpenBook& pob) {
  require_valid(pob);
  const Surface& s = pob.assembled().surface();
  int r = pob.partial_count();

  GluingModel gm;
  // double of the partial region: two copies of each band glued along
  // both long sides (single cells: the free side material of one band
  // side is one arc of A)
  std::vector<int> left_edge(r), right_edge(r);
  for (int j = 0; j < r; ++j) {
    int f0 = gm.double_p.add_face("p" + std::to_string(j) + "x0");
    int a0 = gm.double_p.add_item(f0, ItemKind::Foot, "A");
    int l0 = gm.double_p.add_item(f0, ItemKind::SideGap, "L");
    int b0 = gm.double_p.add_item(f0, ItemKind::Foot, "B");
    int r0 = gm.double_p.add_item(f0, ItemKind::SideGap, "R");
    int f1 = gm.double_p.add_face("p" + std::to_string(j) + "x1");
    // reversed copy
    int r1 = gm.double_p.add_item(f1, ItemKind::SideGap, "R");
    int b1 = gm.double_p.add_item(f1, ItemKind::Foot, "B");
    int l1 = gm.double_p.add_item(f1, ItemKind::SideGap, "L");
    int a1 = gm.double_p.add_item(f1, ItemKind::Foot, "A");
    (void)a0;
    (void)b0;
    (void)a1;
    (void)b1;
    left_edge[j] = gm.double_p.glue(l0, l1);
    right_edge[j] = gm.double_p.glue(r0, r1);
  }
  BoundaryPartition part = boundary_partition(pob);
  gm.disk_count = part.n();
  if (static_cast<int>(gm.double_p.boundary_cycles().size()) != gm.disk_count)
    throw Error("internal: double boundary does not match the free foot arcs");

  // H1 generators of the double are the doubled cocores; their page-side
  // images close each cocore with the reverse of its monodromy image.
  std::vector<EdgeWord> cocores = pob.cocores();
  for (int j = 0; j < r; ++j) {
    EdgeWord loop = close_up(s, cocores[j], pob.images()[j]);
    gm.into_page.push_back(h1_class(s, loop));
  }
  gm.into_partial.assign(r, std::vector<long long>{});  // H1 of disjoint bands is trivial

  // component map H0(double) -> H0(N) + H0(H): band doubles stay
  // connected, the page is connected
  gm.component_map.assign(r + 1, std::vector<long long>(r, 0));
  for (int j = 0; j < r; ++j) {
    gm.component_map[j][j] = 1;       // component of N containing band j
    gm.component_map[r][j] = -1;      // the page piece
  }
  return gm;
}

AbelianInvariants h1_oracle(const PartialOpenBook& pob) {
  GluingModel gm = build_gluing_model(pob);
  const Surface& s = pob.assembled().surface();
  int ambient = s.h1_rank();
  AbelianInvariants inv = quotient_invariants(ambient, gm.into_page);
  // free part coming from components of the intersection surface that
  // merge pieces already connected elsewhere
  long long rank = matrix_rank(gm.component_map);
  inv.free_rank += static_cast<int>(gm.into_page.size()) - static_cast<int>(rank);
  return inv;
}

}  // namespace pob
