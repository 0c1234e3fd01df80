#include "pob/heegaard.hpp"

#include <algorithm>

#include "pob/curves.hpp"
#include "pob/errors.hpp"

namespace pob {

namespace {

void require_valid(const PartialOpenBook& pob) {
  ValidationReport rep = validate(pob);
  if (!rep.all_pass()) throw ValidationError("invalid partial open book");
}

}  // namespace

HeegaardDiagram build_diagram(const PartialOpenBook& pob) {
  require_valid(pob);
  const HandleComplex& hc = pob.assembled();
  const Surface& s = hc.surface();
  int r = pob.partial_count();

  HeegaardDiagram hd;
  hd.r = r;
  hd.page_faces = s.face_count();

  // page copy, orientation reversed; faces and gluing edges keep their ids
  for (int f = 0; f < s.face_count(); ++f) {
    int nf = hd.sigma.add_face("-s:" + s.face(f).label);
    std::vector<int> items = s.face(f).items;
    std::reverse(items.begin(), items.end());
    for (int it : items) hd.sigma.add_item(nf, s.item(it).kind, s.item(it).label);
  }
  // the reversed clone preserves item ids face by face only; build a map
  std::vector<int> bot_item(s.item_count(), -1);
  {
    int next = 0;
    for (int f = 0; f < s.face_count(); ++f) {
      std::vector<int> items = s.face(f).items;
      std::reverse(items.begin(), items.end());
      for (int it : items) bot_item[it] = next++;
    }
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    int ne = hd.sigma.glue(bot_item[s.edge(e).a], bot_item[s.edge(e).b]);
    if (ne != e) throw Error("internal: page edge ids shifted in the diagram surface");
  }

  // top copies of the partial bands, glued along their free side material
  std::vector<int> a_left_edge(r), a_right_edge(r);
  for (int j = 0; j < r; ++j) {
    int h = pob.p_handle_index(j);
    int nf = hd.sigma.add_face("p" + std::to_string(j) + ":top");
    int foot_a = hd.sigma.add_item(nf, ItemKind::Foot, "A");
    int lg = hd.sigma.add_item(nf, ItemKind::SideGap, "L");
    int foot_b = hd.sigma.add_item(nf, ItemKind::Foot, "B");
    int rg = hd.sigma.add_item(nf, ItemKind::SideGap, "R");
    (void)foot_a;
    (void)foot_b;
    a_left_edge[j] = hd.sigma.glue(lg, bot_item[hc.side_gap_item(h, 0, 0)]);
    a_right_edge[j] = hd.sigma.glue(rg, bot_item[hc.side_gap_item(h, 1, 0)]);
  }

  // alpha: the doubled cocores; beta: the doubled pushoffs, with the
  // monodromy image on the page side
  for (int j = 0; j < r; ++j) {
    int h = pob.p_handle_index(j);
    int bot_band = h < 0 ? -1 : (hc.handle_face(h));  // same id in sigma
    int top_band = hd.page_faces + j;
    EdgeWord alpha = make_closed(hd.sigma, {a_left_edge[j], a_right_edge[j]},
                                 {bot_band, top_band});
    hd.alpha.push_back(reduce(hd.sigma, alpha));

    EdgeWord a = cocore_arc(hc, h);
    EdgeWord b = forward_pushoff(s, a);
    EdgeWord hb = forward_pushoff(s, pob.images()[j]);
    hd.a_arcs.push_back(a);
    hd.b_arcs.push_back(b);

    // traverse the top chord left to right, then the image pushoff
    // backwards along the page copy
    EdgeWord rev = reversed(s, hb);
    std::vector<int> cross{a_right_edge[j]};
    std::vector<int> faces{rev.faces[0]};
    for (int i = 0; i < rev.length(); ++i) {
      cross.push_back(rev.cross[i]);
      faces.push_back(rev.faces[i + 1]);
    }
    cross.push_back(a_left_edge[j]);
    faces.push_back(top_band);
    hd.beta.push_back(reduce(hd.sigma, make_closed(hd.sigma, cross, faces)));
  }
  return hd;
}

JuhaszVerdict check_juhasz_balanced(const HeegaardDiagram& hd) {
  JuhaszVerdict v;
  v.balanced = true;
  if (hd.alpha.size() != hd.beta.size()) {
    v.balanced = false;
    v.reasons.push_back("curve families have different sizes");
  }
  const Surface& sg = hd.sigma;
  for (int c = 0; c < sg.component_count(); ++c)
    if (sg.boundary_cycles_of_component(c) == 0) {
      v.balanced = false;
      v.reasons.push_back("diagram surface has a closed component");
      break;
    }
  Mat acols, bcols;
  for (const EdgeWord& w : hd.alpha) acols.push_back(h1_class(sg, w));
  for (const EdgeWord& w : hd.beta) bcols.push_back(h1_class(sg, w));
  auto rank_of = [&](const Mat& cols) {
    if (cols.empty()) return 0LL;
    Mat m(cols[0].size(), std::vector<long long>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c)
      for (size_t row = 0; row < cols[c].size(); ++row) m[row][c] = cols[c][row];
    return matrix_rank(m);
  };
  if (rank_of(acols) != static_cast<long long>(hd.alpha.size())) {
    v.balanced = false;
    v.reasons.push_back("alpha family is dependent in rational homology");
  }
  if (rank_of(bcols) != static_cast<long long>(hd.beta.size())) {
    v.balanced = false;
    v.reasons.push_back("beta family is dependent in rational homology");
  }
  return v;
}

Mat intersection_matrix(const HeegaardDiagram& hd) {
  int r = hd.r;
  std::vector<EdgeWord> all = hd.alpha;
  all.insert(all.end(), hd.beta.begin(), hd.beta.end());
  Realization sys(hd.sigma, all);
  Mat m(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = sys.algebraic(i, r + j);
  return m;
}

AbelianInvariants h1_from_diagram(const HeegaardDiagram& hd) {
  Mat cols;
  for (const EdgeWord& w : hd.alpha) cols.push_back(h1_class(hd.sigma, w));
  for (const EdgeWord& w : hd.beta) cols.push_back(h1_class(hd.sigma, w));
  return quotient_invariants(hd.sigma.h1_rank(), cols);
}

bool stabilization_pattern(const HeegaardDiagram& small, const HeegaardDiagram& big) {
  if (big.sigma.euler() != small.sigma.euler() - 2) return false;
  if (big.sigma.boundary_cycles().size() != small.sigma.boundary_cycles().size()) return false;
  int rs = small.r;
  if (big.r != rs + 1) return false;

  std::vector<EdgeWord> all = big.alpha;
  all.insert(all.end(), big.beta.begin(), big.beta.end());
  Realization sys(big.sigma, all);
  Mat mb = intersection_matrix(big);
  Mat ms = intersection_matrix(small);

  for (int k = 0; k < big.r; ++k) {
    bool ok = true;
    for (int j = 0; j < big.r && ok; ++j) {
      int geo = sys.geometric(k, big.r + j);
      if (j == k ? geo != 1 : geo != 0) ok = false;
    }
    if (!ok) continue;
    // pair the remaining indices with the small diagram
    std::vector<int> rest;
    for (int i = 0; i < big.r; ++i)
      if (i != k) rest.push_back(i);
    std::vector<int> perm(rs);
    for (int i = 0; i < rs; ++i) perm[i] = i;
    do {
      bool match = true;
      for (int i = 0; i < rs && match; ++i)
        for (int j = 0; j < rs && match; ++j)
          if (mb[rest[perm[i]]][rest[perm[j]]] != ms[i][j]) match = false;
      if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace pob
