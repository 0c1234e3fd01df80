#include "pob/curves.hpp"

#include <algorithm>
#include <map>

#include "pob/errors.hpp"

namespace pob {

namespace {

// A ray walks from a crossing along its word, forward or backward.
struct Ray {
  int word;
  int index;
  int dir;  // +1 forward, -1 backward
};

// Next stop of a ray: either a further crossing or an arc endpoint.
struct Stop {
  bool is_end = false;
  int edge = -1;
  BPoint end;
  Ray advanced;  // valid when !is_end
};

Stop next_stop(const std::vector<EdgeWord>& words, const Ray& r) {
  const EdgeWord& w = words[r.word];
  int k = w.length();
  Stop s;
  if (w.kind == WordKind::Arc) {
    int j = r.index + r.dir;
    if (j < 0) {
      s.is_end = true;
      s.end = w.start;
      return s;
    }
    if (j >= k) {
      s.is_end = true;
      s.end = w.end;
      return s;
    }
    s.edge = w.cross[j];
    s.advanced = Ray{r.word, j, r.dir};
    return s;
  }
  int j = ((r.index + r.dir) % k + k) % k;
  s.edge = w.cross[j];
  s.advanced = Ray{r.word, j, r.dir};
  return s;
}

// Face entered by walking direction `dir` away from crossing `index`.
int face_toward(const EdgeWord& w, int index, int dir) {
  int k = w.length();
  if (w.kind == WordKind::Arc) return dir > 0 ? w.faces[index + 1] : w.faces[index];
  return dir > 0 ? w.faces[index] : w.faces[(index + k - 1) % k];
}

Ray ray_into(const std::vector<EdgeWord>& words, const CrossRef& c, int face) {
  const EdgeWord& w = words[c.word];
  if (face_toward(w, c.index, +1) == face) return Ray{c.word, c.index, +1};
  if (face_toward(w, c.index, -1) == face) return Ray{c.word, c.index, -1};
  throw Error("internal: crossing has no ray into the requested face");
}

}  // namespace

// Compare the crossing points of rays x and y along their common edge,
// measured in face F's reading direction, by following the two strands
// through F and beyond until they diverge.  Returns <0 when x sits
// closer to the tail, 0 when the strands never diverge.
static int cmp_rays(const Surface& s, const std::vector<EdgeWord>& words, int e, int F, Ray x,
                    Ray y, int depth) {
  if (depth <= 0) return 0;
  Stop sx = next_stop(words, x);
  Stop sy = next_stop(words, y);
  int e_slot = s.slot_of(s.edge_item_in_face(e, F));
  int n = static_cast<int>(s.face(F).items.size());
  auto offset_of_item = [&](int item) { return ((s.slot_of(item) - e_slot) % n + n) % n; };

  // A chord from e to a target earlier in the walk from e's head attaches
  // nearer the head, i.e. at a larger position in F's reading.
  long long off_x, off_y;
  Rat in_x, in_y;
  if (sx.is_end) {
    off_x = offset_of_item(sx.end.item);
    in_x = sx.end.t;
  } else {
    off_x = offset_of_item(s.edge_item_in_face(sx.edge, F));
    in_x = Rat(0);
  }
  if (sy.is_end) {
    off_y = offset_of_item(sy.end.item);
    in_y = sy.end.t;
  } else {
    off_y = offset_of_item(s.edge_item_in_face(sy.edge, F));
    in_y = Rat(0);
  }
  if (off_x != off_y) return off_x < off_y ? +1 : -1;
  if (sx.is_end != sy.is_end) throw Error("internal: free and glued cells share a slot");
  if (sx.is_end) {
    if (in_x == in_y) return 0;  // shared endpoint
    return in_x < in_y ? +1 : -1;
  }
  // Both continue across the same edge; the comparison transfers directly
  // to the far side (two reading reversals cancel).
  int e2 = sx.edge;
  int G2 = s.other_face(e2, F);
  return cmp_rays(s, words, e2, G2, sx.advanced, sy.advanced, depth - 1);
}

Realization::Realization(const Surface& s, std::vector<EdgeWord> words, int tighten_depth)
    : surf_(&s), words_(std::move(words)) {
  for (const EdgeWord& w : words_) check_incident(s, w);
  order_.assign(s.edge_count(), {});
  for (int wi = 0; wi < static_cast<int>(words_.size()); ++wi)
    for (int i = 0; i < words_[wi].length(); ++i)
      order_[words_[wi].cross[i]].push_back(CrossRef{wi, i});

  int total = 0;
  for (const EdgeWord& w : words_) total += w.length();
  int depth_cap = 2 * total + 8;

  for (int e = 0; e < s.edge_count(); ++e) {
    std::vector<CrossRef>& list = order_[e];
    if (list.size() <= 1) continue;
    int fa = s.item(s.edge(e).a).face;
    int fb = s.item(s.edge(e).b).face;
    std::sort(list.begin(), list.end(), [&](const CrossRef& x, const CrossRef& y) {
      if (x == y) return false;
      int c = cmp_rays(s, words_, e, fa, ray_into(words_, x, fa), ray_into(words_, y, fa),
                       depth_cap);
      if (c != 0) return c < 0;
      c = cmp_rays(s, words_, e, fb, ray_into(words_, x, fb), ray_into(words_, y, fb), depth_cap);
      if (c != 0) return c > 0;  // b-side reading is reversed
      return std::pair(x.word, x.index) < std::pair(y.word, y.index);
    });
  }

  build_chords();
  count_crossings();
  for (int round = 0; round < tighten_depth; ++round)
    if (!remove_one_bigon()) break;
}

// Position of crossing `c` on its edge, read from face `f`.
static FacePos crossing_pos(const Surface& s, const std::vector<std::vector<CrossRef>>& order,
                            int e, const CrossRef& c, int f) {
  const std::vector<CrossRef>& list = order[e];
  int rank = -1;
  for (int i = 0; i < static_cast<int>(list.size()); ++i)
    if (list[i] == c) {
      rank = i;
      break;
    }
  if (rank < 0) throw Error("internal: crossing not found on its edge");
  Rat t(rank + 1, static_cast<long long>(list.size()) + 1);
  int item = s.edge_item_in_face(e, f);
  if (item == s.edge(e).b) t = reflect(t);  // b side reads the edge backwards
  return FacePos{s.slot_of(item), t};
}

void Realization::build_chords() {
  const Surface& s = *surf_;
  chords_.clear();
  for (int wi = 0; wi < static_cast<int>(words_.size()); ++wi) {
    const EdgeWord& w = words_[wi];
    int k = w.length();
    if (w.kind == WordKind::Closed && k == 0) continue;  // contractible loop: no chords
    auto pos_of_crossing = [&](int idx, int face) {
      return crossing_pos(s, order_, w.cross[idx], CrossRef{wi, idx}, face);
    };
    auto pos_of_point = [&](const BPoint& p) { return FacePos{s.slot_of(p.item), p.t}; };
    if (w.kind == WordKind::Arc) {
      for (int i = 0; i <= k; ++i) {
        Chord c;
        c.word = wi;
        c.index = i;
        c.face = w.faces[i];
        c.a = i == 0 ? pos_of_point(w.start) : pos_of_crossing(i - 1, c.face);
        c.b = i == k ? pos_of_point(w.end) : pos_of_crossing(i, c.face);
        chords_.push_back(c);
      }
    } else {
      for (int i = 0; i < k; ++i) {
        Chord c;
        c.word = wi;
        c.index = i;
        c.face = w.faces[i];
        c.a = pos_of_crossing(i, c.face);
        c.b = pos_of_crossing((i + 1) % k, c.face);
        chords_.push_back(c);
      }
    }
  }
}

// strict cyclic membership: x in the open interval (from, to)
static bool in_open_cyclic(const FacePos& x, const FacePos& from, const FacePos& to) {
  if (from < to) return from < x && x < to;
  return from < x || x < to;
}

void Realization::count_crossings() {
  crossings_.clear();
  std::map<int, std::vector<int>> by_face;
  for (int ci = 0; ci < static_cast<int>(chords_.size()); ++ci)
    by_face[chords_[ci].face].push_back(ci);
  for (auto& [face, list] : by_face) {
    for (size_t x = 0; x < list.size(); ++x) {
      for (size_t y = x + 1; y < list.size(); ++y) {
        const Chord& c1 = chords_[list[x]];
        const Chord& c2 = chords_[list[y]];
        if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) continue;
        bool p2in = in_open_cyclic(c2.a, c1.a, c1.b);
        bool q2in = in_open_cyclic(c2.b, c1.a, c1.b);
        if (p2in == q2in) continue;
        Crossing cr;
        cr.word1 = c1.word;
        cr.chord1 = c1.index;
        cr.word2 = c2.word;
        cr.chord2 = c2.index;
        cr.face = face;
        cr.sign = p2in ? +1 : -1;
        crossings_.push_back(cr);
      }
    }
  }
}

int Realization::geometric(int w1, int w2) const {
  int lo = std::min(w1, w2), hi = std::max(w1, w2);
  int n = 0;
  for (const Crossing& c : crossings_)
    if (c.word1 == lo && c.word2 == hi) ++n;
  return n;
}

long long Realization::algebraic(int w1, int w2) const {
  if (w1 == w2) throw Error("algebraic intersection needs two distinct curves");
  long long n = 0;
  for (const Crossing& c : crossings_) {
    if (c.word1 == w1 && c.word2 == w2) n += c.sign;
    if (c.word1 == w2 && c.word2 == w1) n -= c.sign;
  }
  return n;
}

std::vector<Chord> Realization::face_chords(int f) const {
  std::vector<Chord> out;
  for (const Chord& c : chords_)
    if (c.face == f) out.push_back(c);
  return out;
}

// Straight-chord model: boundary point (slot, t) sits on the parabola at
// u = slot + t; points on a parabola are in strictly convex position, so
// chords cross exactly when their endpoints interleave and no three
// chords are concurrent away from shared endpoints.
static std::pair<Rat, Rat> model_point(const FacePos& p) {
  Rat u = Rat(p.slot) + p.t;
  return {u, u * u};
}

static Rat cross2(const std::pair<Rat, Rat>& v, const std::pair<Rat, Rat>& w) {
  return v.first * w.second - v.second * w.first;
}

Rat Realization::parameter_on(const Crossing& c, int word, int chord) const {
  const Chord *on = nullptr, *other = nullptr;
  for (const Chord& ch : chords_) {
    if (ch.word == c.word1 && ch.index == c.chord1 && c.word1 == word && c.chord1 == chord)
      on = &ch;
    else if (ch.word == c.word2 && ch.index == c.chord2 && c.word2 == word && c.chord2 == chord)
      on = &ch;
    if (ch.word == c.word1 && ch.index == c.chord1 && !(c.word1 == word && c.chord1 == chord))
      other = &ch;
    if (ch.word == c.word2 && ch.index == c.chord2 && !(c.word2 == word && c.chord2 == chord))
      other = &ch;
  }
  if (!on || !other) throw Error("internal: crossing chords not found");
  auto p1 = model_point(on->a), q1 = model_point(on->b);
  auto p2 = model_point(other->a), q2 = model_point(other->b);
  auto sub = [](const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    return std::pair<Rat, Rat>{a.first - b.first, a.second - b.second};
  };
  Rat denom = cross2(sub(q1, p1), sub(q2, p2));
  if (denom == Rat(0)) throw Error("internal: degenerate chord intersection");
  return cross2(sub(p2, p1), sub(q2, p2)) / denom;
}

// Edges crossed by the subpath of `w` from chord `from` to chord `to`
// (forward sense for closed words); entries are crossing indices.
static std::vector<int> subpath_crossings(const EdgeWord& w, int from, int to, bool forward) {
  std::vector<int> out;
  int k = w.length();
  if (w.kind == WordKind::Arc) {
    if (!forward) return out;  // only the increasing range is meaningful
    for (int i = from; i < to; ++i) out.push_back(i);  // arc chord i ends at cross[i]
    return out;
  }
  if (forward) {
    for (int i = (from + 1) % k; ; i = (i + 1) % k) {
      out.push_back(i);
      if (i == to) break;
      if (static_cast<int>(out.size()) > k) return {};
    }
  } else {
    for (int i = from; ; i = (i + k - 1) % k) {
      out.push_back(i);
      if (i == (to + 1) % k) break;
      if (static_cast<int>(out.size()) > k) return {};
    }
  }
  return out;
}

bool Realization::remove_one_bigon() {
  const Surface& s = *surf_;
  int before = static_cast<int>(crossings_.size());
  for (size_t pi = 0; pi < crossings_.size(); ++pi) {
    for (size_t qi = pi + 1; qi < crossings_.size(); ++qi) {
      const Crossing& P = crossings_[pi];
      const Crossing& Q = crossings_[qi];
      if (P.word1 != Q.word1 || P.word2 != Q.word2) continue;
      int wa = P.word1, wb = P.word2;
      const EdgeWord& A = words_[wa];
      const EdgeWord& B = words_[wb];
      // candidate corridors between the two crossing points
      for (int fa = 0; fa < 2; ++fa) {
        for (int fb = 0; fb < 2; ++fb) {
          bool fwd_a = fa == 0, fwd_b = fb == 0;
          std::vector<int> ia, ib;
          if (A.kind == WordKind::Arc) {
            if (!fwd_a) continue;
            ia = subpath_crossings(A, std::min(P.chord1, Q.chord1),
                                   std::max(P.chord1, Q.chord1), true);
          } else {
            ia = subpath_crossings(A, P.chord1, Q.chord1, fwd_a);
          }
          if (B.kind == WordKind::Arc) {
            if (!fwd_b) continue;
            ib = subpath_crossings(B, std::min(P.chord2, Q.chord2),
                                   std::max(P.chord2, Q.chord2), true);
          } else {
            ib = subpath_crossings(B, P.chord2, Q.chord2, fwd_b);
          }
          if (ia.size() != ib.size()) continue;
          size_t m = ia.size();
          // the two subpaths must cross the same edges, in order or reversed
          bool same = true, rev = true;
          for (size_t t = 0; t < m; ++t) {
            if (A.cross[ia[t]] != B.cross[ib[t]]) same = false;
            if (A.cross[ia[t]] != B.cross[ib[m - 1 - t]]) rev = false;
          }
          if (m > 0 && !same && !rev) continue;
          std::vector<std::pair<int, std::pair<int, int>>> swaps;  // edge, (posA, posB)
          bool adjacent = true;
          for (size_t t = 0; t < m && adjacent; ++t) {
            int e = A.cross[ia[t]];
            int jb = same ? ib[t] : ib[m - 1 - t];
            const std::vector<CrossRef>& list = order_[e];
            int pa = -1, pb = -1;
            for (int r = 0; r < static_cast<int>(list.size()); ++r) {
              if (list[r] == CrossRef{wa, ia[t]}) pa = r;
              if (list[r] == CrossRef{wb, jb}) pb = r;
            }
            if (pa < 0 || pb < 0 || std::abs(pa - pb) != 1) adjacent = false;
            else swaps.push_back({e, {pa, pb}});
          }
          if (!adjacent) continue;
          // try the swap and keep it only when two crossings vanish
          for (auto& [e, pq] : swaps) std::swap(order_[e][pq.first], order_[e][pq.second]);
          build_chords();
          count_crossings();
          if (static_cast<int>(crossings_.size()) <= before - 2) return true;
          for (auto& [e, pq] : swaps) std::swap(order_[e][pq.first], order_[e][pq.second]);
          build_chords();
          count_crossings();
        }
      }
    }
  }
  return false;
}

int intersection_geometric(const Surface& s, const EdgeWord& a, const EdgeWord& b) {
  Realization r(s, {reduce(s, a), reduce(s, b)});
  return r.geometric(0, 1);
}

long long intersection_algebraic(const Surface& s, const EdgeWord& a, const EdgeWord& b) {
  Realization r(s, {reduce(s, a), reduce(s, b)});
  return r.algebraic(0, 1);
}

int self_intersection(const Surface& s, const EdgeWord& w) {
  Realization r(s, {reduce(s, w)});
  return r.geometric(0, 0);
}

bool is_embedded(const Surface& s, const EdgeWord& w) { return self_intersection(s, w) == 0; }

bool disjoint_embedded_system(const Surface& s, const std::vector<EdgeWord>& ws) {
  std::vector<EdgeWord> reduced;
  for (const EdgeWord& w : ws) reduced.push_back(reduce(s, w));
  Realization r(s, reduced);
  return r.crossings().empty();
}

EdgeWord dehn_twist(const Surface& s, const EdgeWord& gamma_in, const EdgeWord& target_in,
                    Handedness h) {
  EdgeWord gamma = reduce(s, gamma_in);
  EdgeWord target = reduce(s, target_in);
  if (gamma.kind != WordKind::Closed) throw NotEmbedded("twist curve must be closed");
  int m = gamma.length();
  if (m == 0) return target;  // contractible curve twists trivially
  if (self_intersection(s, gamma) != 0)
    throw NotEmbedded("twist curve has self-intersections");

  Realization r(s, {gamma, target});
  // crossings on each target chord, ordered along the chord
  struct Hit {
    Rat tau;
    int gamma_chord;
    int sign;  // sign of (gamma, target) frame
  };
  std::map<int, std::vector<Hit>> hits;
  for (const Crossing& c : r.crossings()) {
    if (c.word1 == 0 && c.word2 == 0)
      throw NotEmbedded("twist curve self-crosses in joint position");
    if (c.word1 == c.word2) continue;  // target self-crossings play no role
    int gc = c.word1 == 0 ? c.chord1 : c.chord2;
    int tc = c.word1 == 0 ? c.chord2 : c.chord1;
    int sign_gt = c.word1 == 0 ? c.sign : -c.sign;
    hits[tc].push_back(Hit{r.parameter_on(c, 1, tc), gc, sign_gt});
  }
  for (auto& [tc, v] : hits)
    std::sort(v.begin(), v.end(), [](const Hit& a, const Hit& b) { return a.tau < b.tau; });

  auto splice = [&](std::vector<int>& cross, std::vector<int>& faces, const Hit& hit) {
    int j = hit.gamma_chord;
    int dir = h == Handedness::Right ? hit.sign : -hit.sign;
    if (dir > 0) {
      for (int t = 1; t <= m; ++t) {
        cross.push_back(gamma.cross[(j + t) % m]);
        faces.push_back(gamma.faces[(j + t) % m]);
      }
    } else {
      for (int t = 0; t < m; ++t) {
        cross.push_back(gamma.cross[(j - t + m) % m]);
        faces.push_back(gamma.faces[(j - t - 1 + 2 * m) % m]);
      }
    }
  };

  EdgeWord out;
  out.kind = target.kind;
  int k = target.length();
  if (target.kind == WordKind::Arc) {
    out.start = target.start;
    out.end = target.end;
    out.faces.push_back(target.faces[0]);
    for (int i = 0; i <= k; ++i) {
      if (auto it = hits.find(i); it != hits.end())
        for (const Hit& hit : it->second) splice(out.cross, out.faces, hit);
      if (i < k) {
        out.cross.push_back(target.cross[i]);
        out.faces.push_back(target.faces[i + 1]);
      }
    }
  } else {
    if (k == 0) return target;  // contractible target misses gamma
    for (int i = 0; i < k; ++i) {
      out.cross.push_back(target.cross[i]);
      out.faces.push_back(target.faces[i]);
      if (auto it = hits.find(i); it != hits.end())
        for (const Hit& hit : it->second) splice(out.cross, out.faces, hit);
    }
  }
  return reduce(s, out);
}

EdgeWord forward_pushoff(const Surface& s, const EdgeWord& arc) {
  if (arc.kind != WordKind::Arc) throw Error("pushoff needs an arc");
  EdgeWord out = arc;
  out.start.t = out.start.t.midpoint(Rat(1));
  out.end.t = out.end.t.midpoint(Rat(1));
  check_incident(s, out);
  return out;
}

}  // namespace pob
