#pragma once

#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pob/surface.hpp"
#include "pob/word.hpp"

namespace pobtest {

using namespace pob;

// ---- random words -------------------------------------------------------

inline std::vector<int> glued_edges_of_face(const Surface& s, int f) {
  std::vector<int> out;
  for (int it : s.face(f).items)
    if (!s.is_free(it)) out.push_back(s.item(it).edge);
  return out;
}

inline std::vector<int> free_items_of_face(const Surface& s, int f) {
  std::vector<int> out;
  for (int it : s.face(f).items)
    if (s.is_free(it)) out.push_back(it);
  return out;
}

// A random arc: a face walk between two random boundary points.
inline std::optional<EdgeWord> random_arc(const Surface& s, std::mt19937& rng, int steps) {
  std::vector<int> free_all;
  for (int it = 0; it < s.item_count(); ++it)
    if (s.is_free(it)) free_all.push_back(it);
  if (free_all.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pick(0, free_all.size() - 1);
  int start_item = free_all[pick(rng)];
  int f = s.item(start_item).face;
  std::vector<int> cross, faces{f};
  for (int i = 0; i < steps; ++i) {
    std::vector<int> edges = glued_edges_of_face(s, f);
    if (edges.empty()) break;
    std::uniform_int_distribution<size_t> pe(0, edges.size() - 1);
    int e = edges[pe(rng)];
    cross.push_back(e);
    f = s.other_face(e, f);
    faces.push_back(f);
  }
  std::vector<int> ends = free_items_of_face(s, f);
  if (ends.empty()) return std::nullopt;
  std::uniform_int_distribution<size_t> pend(0, ends.size() - 1);
  int end_item = ends[pend(rng)];
  std::uniform_int_distribution<int> num(1, 15);
  BPoint a{start_item, Rat(num(rng), 16)};
  BPoint b{end_item, Rat(num(rng), 16)};
  if (cross.empty() && a == b) return std::nullopt;
  return make_arc(s, a, cross, faces, b);
}

// A random closed word: a face walk steered back to its starting face.
inline std::optional<EdgeWord> random_closed(const Surface& s, std::mt19937& rng, int steps) {
  std::uniform_int_distribution<int> pf(0, s.face_count() - 1);
  int f0 = pf(rng);
  int f = f0;
  std::vector<int> cross, faces;
  for (int i = 0; i < steps + 20; ++i) {
    std::vector<int> edges = glued_edges_of_face(s, f);
    if (edges.empty()) return std::nullopt;
    std::uniform_int_distribution<size_t> pe(0, edges.size() - 1);
    int e = edges[pe(rng)];
    int g = s.other_face(e, f);
    cross.push_back(e);
    faces.push_back(g);
    f = g;
    if (i + 1 >= steps && f == f0) break;
  }
  if (f != f0 || cross.empty()) return std::nullopt;
  // faces[i] is the face after cross[i]; the wrap chord lives in f0
  return make_closed(s, cross, faces);
}

// ---- exhaustive local-move oracle ---------------------------------------

// canonical rotation for comparing closed words
inline EdgeWord rotated_min(const EdgeWord& w) {
  if (w.kind != WordKind::Closed || w.length() <= 1) return w;
  int k = w.length();
  EdgeWord best = w;
  for (int r = 0; r < k; ++r) {
    EdgeWord cand = w;
    for (int i = 0; i < k; ++i) {
      cand.cross[i] = w.cross[(i + r) % k];
      cand.faces[i] = w.faces[(i + r) % k];
    }
    if (std::pair(cand.cross, cand.faces) < std::pair(best.cross, best.faces)) best = cand;
  }
  return best;
}

inline std::vector<EdgeWord> spur_removals(const Surface& s, const EdgeWord& w) {
  std::vector<EdgeWord> out;
  int k = w.length();
  if (w.kind == WordKind::Arc) {
    for (int i = 0; i + 1 < k; ++i) {
      if (w.cross[i] != w.cross[i + 1]) continue;
      EdgeWord next = w;
      next.cross.erase(next.cross.begin() + i, next.cross.begin() + i + 2);
      next.faces.erase(next.faces.begin() + i + 1, next.faces.begin() + i + 3);
      out.push_back(next);
    }
  } else {
    for (int i = 0; i < k && k >= 2; ++i) {
      int j = (i + 1) % k;
      if (w.cross[i] != w.cross[j]) continue;
      EdgeWord next;
      next.kind = WordKind::Closed;
      if (k == 2) {
        next.faces = {w.faces[j]};
      } else {
        for (int t = 0; t < k; ++t) {
          if (t == i || t == j) continue;
          next.cross.push_back(w.cross[t]);
          next.faces.push_back(w.faces[t]);
        }
      }
      out.push_back(next);
    }
  }
  return out;
}

inline std::vector<EdgeWord> spur_insertions(const Surface& s, const EdgeWord& w, int max_len) {
  std::vector<EdgeWord> out;
  if (w.length() + 2 > max_len) return out;
  int k = w.length();
  if (w.kind == WordKind::Arc) {
    // insert a spur into chord i (which runs inside faces[i])
    for (int i = 0; i <= k; ++i) {
      for (int e : glued_edges_of_face(s, w.faces[i])) {
        EdgeWord next = w;
        int g = s.other_face(e, w.faces[i]);
        next.cross.insert(next.cross.begin() + i, {e, e});
        next.faces.insert(next.faces.begin() + i + 1, {g, w.faces[i]});
        out.push_back(next);
      }
    }
  } else {
    if (k == 0) {
      for (int e : glued_edges_of_face(s, w.faces[0])) {
        EdgeWord next;
        next.kind = WordKind::Closed;
        next.cross = {e, e};
        next.faces = {s.other_face(e, w.faces[0]), w.faces[0]};
        out.push_back(next);
      }
      return out;
    }
    for (int i = 0; i < k; ++i) {
      for (int e : glued_edges_of_face(s, w.faces[i])) {
        EdgeWord next = w;
        int g = s.other_face(e, w.faces[i]);
        next.cross.insert(next.cross.begin() + i + 1, {e, e});
        next.faces.insert(next.faces.begin() + i + 1, {g, w.faces[i]});
        out.push_back(next);
      }
    }
  }
  return out;
}

struct OracleResult {
  std::vector<EdgeWord> minimal;  // all minimal-length words reachable
  int explored = 0;
};

// Breadth-first search over spur insertions and removals, bounded by the
// word length cap; returns the set of minimal words reachable.
inline OracleResult bfs_normal_forms(const Surface& s, const EdgeWord& start, int max_len) {
  auto key = [&](const EdgeWord& w) {
    EdgeWord c = rotated_min(w);
    std::vector<long long> k;
    k.push_back(c.kind == WordKind::Arc ? 0 : 1);
    for (int x : c.cross) k.push_back(100 + x);
    k.push_back(-1);
    for (int x : c.faces) k.push_back(100 + x);
    if (c.kind == WordKind::Arc) {
      k.push_back(c.start.item);
      k.push_back(c.start.t.num);
      k.push_back(c.start.t.den);
      k.push_back(c.end.item);
      k.push_back(c.end.t.num);
      k.push_back(c.end.t.den);
    }
    return k;
  };
  std::set<std::vector<long long>> seen;
  std::deque<EdgeWord> queue{start};
  seen.insert(key(start));
  OracleResult res;
  int best = start.length() + 1000;
  while (!queue.empty()) {
    EdgeWord w = queue.front();
    queue.pop_front();
    ++res.explored;
    if (w.length() < best) {
      best = w.length();
      res.minimal.clear();
    }
    if (w.length() == best) res.minimal.push_back(rotated_min(w));
    std::vector<EdgeWord> moves = spur_removals(s, w);
    std::vector<EdgeWord> ins = spur_insertions(s, w, max_len);
    moves.insert(moves.end(), ins.begin(), ins.end());
    for (const EdgeWord& m : moves) {
      auto k = key(m);
      if (seen.insert(k).second) queue.push_back(m);
    }
  }
  // dedup minimal
  std::set<std::vector<long long>> mk;
  std::vector<EdgeWord> uniq;
  for (const EdgeWord& w : res.minimal)
    if (mk.insert(key(w)).second) uniq.push_back(w);
  res.minimal = uniq;
  return res;
}

}  // namespace pobtest
