#include <functional>
#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "pob/curves.hpp"
#include "pob/errors.hpp"
#include "pob/homology.hpp"
#include "word_helpers.hpp"

using namespace pob;
using namespace pobtest;

namespace {

// Independent crossing counter: given explicit orders of the crossing
// points along each edge, place chords and count interleaved pairs.
// Used to search all orderings for the true minimum.
struct FixedOrderCounter {
  const Surface& s;
  const std::vector<EdgeWord>& words;
  int wa, wb;  // count only crossings between these two words

  int count(const std::map<int, std::vector<std::pair<int, int>>>& order) const {
    struct Pt {
      int slot;
      Rat t;
    };
    auto pos_of = [&](int w, int i, int face) {
      int e = words[w].cross[i];
      const auto& list = order.at(e);
      int rank = -1;
      for (int k = 0; k < static_cast<int>(list.size()); ++k)
        if (list[k] == std::pair(w, i)) rank = k;
      Rat t(rank + 1, static_cast<long long>(list.size()) + 1);
      int item = s.edge_item_in_face(e, face);
      if (item == s.edge(e).b) t = Rat(1) - t;
      return Pt{s.slot_of(item), t};
    };
    struct Ch {
      int word;
      int face;
      Pt a, b;
    };
    std::vector<Ch> chords;
    for (int w = 0; w < static_cast<int>(words.size()); ++w) {
      const EdgeWord& ww = words[w];
      int k = ww.length();
      if (ww.kind == WordKind::Arc) {
        for (int i = 0; i <= k; ++i) {
          Pt a = i == 0 ? Pt{s.slot_of(ww.start.item), ww.start.t} : pos_of(w, i - 1, ww.faces[i]);
          Pt b = i == k ? Pt{s.slot_of(ww.end.item), ww.end.t} : pos_of(w, i, ww.faces[i]);
          chords.push_back({w, ww.faces[i], a, b});
        }
      } else {
        for (int i = 0; i < k; ++i)
          chords.push_back({w, ww.faces[i], pos_of(w, i, ww.faces[i]),
                            pos_of(w, (i + 1) % k, ww.faces[i])});
      }
    }
    auto lt = [](const Pt& x, const Pt& y) {
      return x.slot != y.slot ? x.slot < y.slot : x.t < y.t;
    };
    auto eq = [](const Pt& x, const Pt& y) { return x.slot == y.slot && x.t == y.t; };
    auto inside = [&](const Pt& x, const Pt& from, const Pt& to) {
      if (lt(from, to)) return lt(from, x) && lt(x, to);
      return lt(from, x) || lt(x, to);
    };
    int total = 0;
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j) {
        if (chords[i].face != chords[j].face) continue;
        if (!((chords[i].word == wa && chords[j].word == wb) ||
              (chords[i].word == wb && chords[j].word == wa)))
          continue;
        if (eq(chords[i].a, chords[j].a) || eq(chords[i].a, chords[j].b) ||
            eq(chords[i].b, chords[j].a) || eq(chords[i].b, chords[j].b))
          continue;
        bool p = inside(chords[j].a, chords[i].a, chords[i].b);
        bool q = inside(chords[j].b, chords[i].a, chords[i].b);
        if (p != q) ++total;
      }
    return total;
  }
};

// minimum over every ordering of the crossings along every edge
int min_over_orders(const Surface& s, const std::vector<EdgeWord>& words, int wa, int wb,
                    long long budget = 200000) {
  std::map<int, std::vector<std::pair<int, int>>> order;
  for (int w = 0; w < static_cast<int>(words.size()); ++w)
    for (int i = 0; i < words[w].length(); ++i)
      order[words[w].cross[i]].push_back({w, i});
  std::vector<int> keys;
  for (auto& [e, v] : order) keys.push_back(e);
  FixedOrderCounter counter{s, words, wa, wb};
  int best = -1;
  long long used = 0;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (best == 0 || used > budget) return;
    if (k == keys.size()) {
      ++used;
      int c = counter.count(order);
      if (best < 0 || c < best) best = c;
      return;
    }
    std::vector<std::pair<int, int>>& v = order[keys[k]];
    std::sort(v.begin(), v.end());
    do {
      rec(k + 1);
    } while (std::next_permutation(v.begin(), v.end()) && best != 0 && used <= budget);
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("an embedded cocore has no interior self-crossings") {
  HandleComplex hc = annulus();
  CHECK(self_intersection(hc.surface(), cocore_arc(hc, 0)) == 0);
  CHECK(is_embedded(hc.surface(), cocore_arc(hc, 0)));
}

TEST_CASE("the forward pushoff meets its arc once, positively") {
  for (HandleComplex hc : {annulus(), punctured_torus()}) {
    const Surface& s = hc.surface();
    for (int h = 0; h < hc.handle_count(); ++h) {
      EdgeWord a = cocore_arc(hc, h);
      EdgeWord b = forward_pushoff(s, a);
      CHECK(intersection_geometric(s, a, b) == 1);
      CHECK(intersection_algebraic(s, a, b) == +1);
    }
  }
}

TEST_CASE("annulus core meets the cocore once") {
  HandleComplex hc = annulus();
  const Surface& s = hc.surface();
  EdgeWord core = core_loop(hc, 0);
  EdgeWord a = cocore_arc(hc, 0);
  CHECK(intersection_geometric(s, core, a) == 1);
  CHECK(self_intersection(s, core) == 0);
}

TEST_CASE("algebraic intersections are antisymmetric, geometric symmetric") {
  std::mt19937 rng(2026);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 120; ++trial) {
    HandleComplex hc = random_complex(rng, 2, 3, 0);
    if (hc.handle_count() == 0) continue;
    auto w1 = trial % 2 ? random_arc(hc.surface(), rng, 4) : random_closed(hc.surface(), rng, 4);
    auto w2 = trial % 3 ? random_closed(hc.surface(), rng, 4) : random_arc(hc.surface(), rng, 4);
    if (!w1 || !w2) continue;
    ++done;
    const Surface& s = hc.surface();
    CHECK(intersection_algebraic(s, *w1, *w2) == -intersection_algebraic(s, *w2, *w1));
    CHECK(intersection_geometric(s, *w1, *w2) == intersection_geometric(s, *w2, *w1));
    CHECK(std::abs(intersection_algebraic(s, *w1, *w2)) <= intersection_geometric(s, *w1, *w2));
  }
  CHECK(done >= 60);
}

TEST_CASE("realized counts match the exhaustive ordering search") {
  std::mt19937 rng(909);
  int done = 0;
  for (int trial = 0; trial < 250 && done < 60; ++trial) {
    HandleComplex hc = random_complex(rng, 2, 2, 0);
    if (hc.handle_count() == 0) continue;
    auto w1 = random_closed(hc.surface(), rng, 3);
    auto w2 = trial % 2 ? random_closed(hc.surface(), rng, 3) : random_arc(hc.surface(), rng, 3);
    if (!w1 || !w2) continue;
    EdgeWord r1 = reduce(hc.surface(), *w1);
    EdgeWord r2 = reduce(hc.surface(), *w2);
    if (r1.length() + r2.length() > 7) continue;
    ++done;
    int got = intersection_geometric(hc.surface(), r1, r2);
    int want = min_over_orders(hc.surface(), {r1, r2}, 0, 1);
    CHECK(got == want);
  }
  CHECK(done >= 30);
}

TEST_CASE("self-crossing counts match the exhaustive ordering search") {
  std::mt19937 rng(910);
  int done = 0;
  for (int trial = 0; trial < 250 && done < 40; ++trial) {
    HandleComplex hc = random_complex(rng, 2, 2, 0);
    if (hc.handle_count() == 0) continue;
    auto w = random_closed(hc.surface(), rng, 4);
    if (!w) continue;
    EdgeWord r = reduce(hc.surface(), *w);
    if (r.length() > 6 || r.length() == 0) continue;
    ++done;
    int got = self_intersection(hc.surface(), r);
    int want = min_over_orders(hc.surface(), {r}, 0, 0);
    CHECK(got == want);
  }
  CHECK(done >= 20);
}

TEST_CASE("twisting along a disjoint curve changes nothing") {
  HandleComplex hc = punctured_torus();
  const Surface& s = hc.surface();
  EdgeWord gamma = core_loop(hc, 0);
  EdgeWord x = cocore_arc(hc, 1);
  if (intersection_geometric(s, gamma, x) == 0)
    CHECK(dehn_twist(s, gamma, x, Handedness::Right) == reduce(s, x));
}

TEST_CASE("the annulus twist drags the cocore around the core") {
  HandleComplex hc = annulus();
  const Surface& s = hc.surface();
  EdgeWord core = core_loop(hc, 0);
  EdgeWord a = cocore_arc(hc, 0);
  EdgeWord t = dehn_twist(s, core, a, Handedness::Right);
  CHECK(t.length() == 2);
  CHECK(t.start == a.start);
  CHECK(t.end == a.end);
  CHECK(intersection_geometric(s, core, t) == 1);
  // the dragged arc now runs through the handle longitudinally: it
  // crosses each foot once instead of cutting side to side
  int ea_hits = 0, eb_hits = 0;
  for (int e : t.cross) {
    if (e == hc.foot_edge(0, 0)) ++ea_hits;
    if (e == hc.foot_edge(0, 1)) ++eb_hits;
  }
  CHECK(ea_hits == 1);
  CHECK(eb_hits == 1);
}

TEST_CASE("left and right twists invert each other") {
  std::mt19937 rng(31415);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 150; ++trial) {
    HandleComplex hc = random_complex(rng, 2, 3, 0);
    if (hc.handle_count() == 0) continue;
    std::uniform_int_distribution<int> ph(0, hc.handle_count() - 1);
    EdgeWord gamma = core_loop(hc, ph(rng));
    if (gamma.length() == 0 || !is_embedded(hc.surface(), gamma)) continue;
    auto x = trial % 2 ? random_arc(hc.surface(), rng, 4) : random_closed(hc.surface(), rng, 4);
    if (!x) continue;
    ++done;
    EdgeWord rx = reduce(hc.surface(), *x);
    EdgeWord once = dehn_twist(hc.surface(), gamma, rx, Handedness::Right);
    EdgeWord back = dehn_twist(hc.surface(), gamma, once, Handedness::Left);
    CHECK(back == rx);
  }
  CHECK(done >= 75);
}

TEST_CASE("twists act on homology by the intersection pairing") {
  std::mt19937 rng(27182);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 120; ++trial) {
    HandleComplex hc = random_complex(rng, 2, 3, 0);
    if (hc.handle_count() == 0) continue;
    std::uniform_int_distribution<int> ph(0, hc.handle_count() - 1);
    EdgeWord gamma = core_loop(hc, ph(rng));
    if (gamma.length() == 0 || !is_embedded(hc.surface(), gamma)) continue;
    auto delta = random_closed(hc.surface(), rng, 4);
    if (!delta) continue;
    ++done;
    const Surface& s = hc.surface();
    EdgeWord d = reduce(s, *delta);
    EdgeWord td = dehn_twist(s, gamma, d, Handedness::Right);
    std::vector<long long> lhs = h1_class(s, td);
    std::vector<long long> rhs = h1_class(s, d);
    long long pairing = intersection_algebraic(s, gamma, d);
    std::vector<long long> g = h1_class(s, gamma);
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] += pairing * g[i];
    CHECK(lhs == rhs);
  }
  CHECK(done >= 60);
}
