#include "pob/word.hpp"

#include <algorithm>

#include "pob/errors.hpp"

namespace pob {

EdgeWord make_arc(const Surface& s, BPoint start, std::vector<int> crossings,
                  std::vector<int> faces, BPoint end) {
  EdgeWord w;
  w.kind = WordKind::Arc;
  w.start = start;
  w.end = end;
  w.cross = std::move(crossings);
  w.faces = std::move(faces);
  check_incident(s, w);
  return w;
}

EdgeWord make_closed(const Surface& s, std::vector<int> crossings, std::vector<int> faces) {
  EdgeWord w;
  w.kind = WordKind::Closed;
  w.cross = std::move(crossings);
  w.faces = std::move(faces);
  check_incident(s, w);
  return w;
}

EdgeWord make_trivial_loop(const Surface& s, int face) {
  EdgeWord w;
  w.kind = WordKind::Closed;
  w.faces = {face};
  check_incident(s, w);
  return w;
}

static bool edge_joins(const Surface& s, int e, int f, int g) {
  int fa = s.item(s.edge(e).a).face;
  int fb = s.item(s.edge(e).b).face;
  return (fa == f && fb == g) || (fa == g && fb == f);
}

void check_incident(const Surface& s, const EdgeWord& w) {
  int k = w.length();
  if (w.kind == WordKind::Arc) {
    if (static_cast<int>(w.faces.size()) != k + 1)
      throw NotIncident("arc word needs one more face than crossings");
    if (w.start.item < 0 || w.end.item < 0) throw NotIncident("arc endpoints missing");
    if (!s.is_free(w.start.item) || !s.is_free(w.end.item))
      throw NotIncident("arc endpoints must lie on free boundary cells");
    if (s.item(w.start.item).face != w.faces.front())
      throw NotIncident("arc start is not on the first face");
    if (s.item(w.end.item).face != w.faces.back())
      throw NotIncident("arc end is not on the last face");
    if (k == 0 && w.start == w.end) throw NotIncident("degenerate arc with equal endpoints");
    if (!(w.start.t > Rat(0) && w.start.t < Rat(1) && w.end.t > Rat(0) && w.end.t < Rat(1)))
      throw NotIncident("endpoint positions must be interior to their cells");
    for (int i = 0; i < k; ++i) {
      if (w.faces[i] == w.faces[i + 1]) throw NotIncident("crossing must change face");
      if (!edge_joins(s, w.cross[i], w.faces[i], w.faces[i + 1]))
        throw NotIncident("crossing " + std::to_string(i) + " does not join its faces");
    }
  } else {
    if (k == 0) {
      if (w.faces.size() != 1) throw NotIncident("trivial loop carries exactly one face");
      return;
    }
    if (static_cast<int>(w.faces.size()) != k)
      throw NotIncident("closed word needs as many faces as crossings");
    for (int i = 0; i < k; ++i) {
      int before = w.faces[(i + k - 1) % k];
      int after = w.faces[i];
      if (before == after) throw NotIncident("crossing must change face");
      if (!edge_joins(s, w.cross[i], before, after))
        throw NotIncident("crossing " + std::to_string(i) + " does not join its faces");
    }
  }
}

// Rotation of a closed word starting its crossing list at position r.
static EdgeWord rotated(const EdgeWord& w, int r) {
  EdgeWord out = w;
  int k = w.length();
  for (int i = 0; i < k; ++i) {
    out.cross[i] = w.cross[(i + r) % k];
    out.faces[i] = w.faces[(i + r) % k];
  }
  return out;
}

static EdgeWord canonical_rotation(const EdgeWord& w) {
  int k = w.length();
  if (w.kind != WordKind::Closed || k <= 1) return w;
  int best = 0;
  for (int r = 1; r < k; ++r) {
    for (int i = 0; i < k; ++i) {
      long long a_c = w.cross[(best + i) % k], b_c = w.cross[(r + i) % k];
      long long a_f = w.faces[(best + i) % k], b_f = w.faces[(r + i) % k];
      if (a_c != b_c || a_f != b_f) {
        if (b_c < a_c || (b_c == a_c && b_f < a_f)) best = r;
        break;
      }
    }
  }
  return rotated(w, best);
}

EdgeWord reduce(const Surface& s, const EdgeWord& input) {
  check_incident(s, input);
  EdgeWord w = input;
  bool changed = true;
  while (changed) {
    changed = false;
    int k = w.length();
    if (w.kind == WordKind::Arc) {
      for (int i = 0; i + 1 < k; ++i) {
        if (w.cross[i] != w.cross[i + 1]) continue;
        // Chord i+1 has both ends on one edge: pull the curve across it.
        w.cross.erase(w.cross.begin() + i, w.cross.begin() + i + 2);
        w.faces.erase(w.faces.begin() + i + 1, w.faces.begin() + i + 3);
        changed = true;
        break;
      }
    } else {
      for (int i = 0; i < k && k >= 2; ++i) {
        int j = (i + 1) % k;
        if (w.cross[i] != w.cross[j]) continue;
        // Pulling the spur across its edge joins the two flanking chords,
        // which live in the same face; each surviving crossing keeps the
        // face that follows it.
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
        w = std::move(next);
        changed = true;
        break;
      }
    }
  }
  if (w.kind == WordKind::Closed) w = canonical_rotation(w);
  check_incident(s, w);
  return w;
}

bool is_reduced(const Surface& s, const EdgeWord& w) { return reduce(s, w) == w; }

EdgeWord reversed(const Surface& s, const EdgeWord& w) {
  EdgeWord out;
  out.kind = w.kind;
  int k = w.length();
  if (w.kind == WordKind::Arc) {
    out.start = w.end;
    out.end = w.start;
    out.cross.assign(w.cross.rbegin(), w.cross.rend());
    out.faces.assign(w.faces.rbegin(), w.faces.rend());
  } else {
    if (k == 0) return w;
    out.cross.resize(k);
    out.faces.resize(k);
    for (int j = 0; j < k; ++j) {
      out.cross[j] = w.cross[k - 1 - j];
      out.faces[j] = w.faces[(2 * k - 2 - j) % k];
    }
    out = canonical_rotation(out);
  }
  check_incident(s, out);
  return out;
}

EdgeWord close_up(const Surface& s, const EdgeWord& there, const EdgeWord& back) {
  if (there.kind != WordKind::Arc || back.kind != WordKind::Arc)
    throw Error("close_up needs two arcs");
  if (!(there.start.item == back.start.item && there.end.item == back.end.item))
    throw Error("close_up needs arcs sharing both endpoint cells");
  EdgeWord rev = reversed(s, back);
  EdgeWord out;
  out.kind = WordKind::Closed;
  int m = there.length(), mm = rev.length();
  if (m + mm == 0) return reduce(s, make_trivial_loop(s, there.faces[0]));
  out.cross = there.cross;
  out.cross.insert(out.cross.end(), rev.cross.begin(), rev.cross.end());
  // Chord after there.cross[i] stays in there.faces[i+1]; the seam chord
  // through the shared endpoints lives in the arcs' terminal faces.
  for (int i = 0; i + 1 < m; ++i) out.faces.push_back(there.faces[i + 1]);
  if (m > 0) out.faces.push_back(there.faces[m]);  // through shared end point
  for (int j = 0; j + 1 < mm; ++j) out.faces.push_back(rev.faces[j + 1]);
  if (mm > 0) out.faces.push_back(rev.faces[mm]);  // through shared start point
  if (m == 0) {
    // the wrap chord passes through both endpoints inside one face
    // (already appended above as rev's final face)
  }
  return reduce(s, out);
}

}  // namespace pob
