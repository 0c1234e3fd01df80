#include "pob/homology.hpp"

#include <algorithm>
#include <cstdlib>

#include "pob/curves.hpp"
#include "pob/errors.hpp"

namespace pob {

std::string AbelianInvariants::str() const {
  std::string out;
  if (free_rank > 0) out = "Z^" + std::to_string(free_rank);
  for (long long t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  if (out.empty()) out = "0";
  return out;
}

static Mat identity(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

SmithResult smith_normal_form(Mat m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  SmithResult res;
  res.u = identity(rows);
  res.v = identity(cols);
  Mat& a = m;

  auto row_add = [&](int dst, int src, long long f) {
    for (int j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < rows; ++j) res.u[dst][j] += f * res.u[src][j];
  };
  auto col_add = [&](int dst, int src, long long f) {
    for (int i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (int i = 0; i < cols; ++i) res.v[i][dst] += f * res.v[i][src];
  };
  auto row_swap = [&](int x, int y) {
    std::swap(a[x], a[y]);
    std::swap(res.u[x], res.u[y]);
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (int i = 0; i < cols; ++i) std::swap(res.v[i][x], res.v[i][y]);
  };
  auto row_neg = [&](int x) {
    for (int j = 0; j < cols; ++j) a[x][j] = -a[x][j];
    for (int j = 0; j < rows; ++j) res.u[x][j] = -res.u[x][j];
  };

  int t = 0;
  while (t < rows && t < cols) {
    // find a nonzero entry of least absolute value in the remaining block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        long long v = a[i][j] < 0 ? -a[i][j] : a[i][j];
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (a[t][t] < 0) row_neg(t);

    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      long long q = a[i][t] / a[t][t];
      if (q != 0) row_add(i, t, -q);
      if (a[i][t] != 0) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      long long q = a[t][j] / a[t][t];
      if (q != 0) col_add(j, t, -q);
      if (a[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared; repick the pivot

    // enforce divisibility of the rest of the block by the pivot
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_add(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  res.d = a;
  return res;
}

std::vector<long long> smith_diagonal(const Mat& m) {
  SmithResult r = smith_normal_form(m);
  std::vector<long long> out;
  int n = std::min(r.d.size(), r.d.empty() ? size_t(0) : r.d[0].size());
  for (int i = 0; i < n; ++i)
    if (r.d[i][i] != 0) out.push_back(r.d[i][i] < 0 ? -r.d[i][i] : r.d[i][i]);
  return out;
}

long long matrix_rank(const Mat& m) { return static_cast<long long>(smith_diagonal(m).size()); }

AbelianInvariants quotient_invariants(int ambient, const Mat& columns) {
  // columns: list of vectors in Z^ambient
  Mat m(ambient, std::vector<long long>(columns.size(), 0));
  for (size_t c = 0; c < columns.size(); ++c) {
    if (static_cast<int>(columns[c].size()) != ambient)
      throw Error("quotient_invariants: column size mismatch");
    for (int r = 0; r < ambient; ++r) m[r][c] = columns[c][r];
  }
  std::vector<long long> d = smith_diagonal(m);
  AbelianInvariants inv;
  inv.free_rank = ambient - static_cast<int>(d.size());
  for (long long x : d)
    if (x > 1) inv.torsion.push_back(x);
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

// Signed crossing vector of a word in Z^{edges}: crossing an edge from
// its b-side face into its a-side face counts +1.
static std::vector<long long> crossing_vector(const Surface& s, const EdgeWord& w) {
  std::vector<long long> x(s.edge_count(), 0);
  int k = w.length();
  for (int i = 0; i < k; ++i) {
    int e = w.cross[i];
    int face_after = w.kind == WordKind::Arc ? w.faces[i + 1] : w.faces[i];
    int a_face = s.item(s.edge(e).a).face;
    x[e] += (face_after == a_face) ? +1 : -1;
  }
  return x;
}

std::vector<long long> h1_class(const Surface& s, const EdgeWord& w) {
  if (w.kind != WordKind::Closed) throw Error("h1_class expects a closed word");
  std::vector<long long> x = crossing_vector(s, w);
  std::vector<long long> out;
  for (int e : s.h1_generator_edges()) out.push_back(x[e]);
  return out;
}

EdgeWord spine_loop(const Surface& s, int gen_edge) {
  int fa = s.item(s.edge(gen_edge).a).face;
  int fb = s.item(s.edge(gen_edge).b).face;
  std::vector<int> cross{gen_edge};
  std::vector<int> faces{fa};
  if (fa != fb) {
    // forest path from fa back to fb
    std::vector<int> parent_face(s.face_count(), -1), parent_edge(s.face_count(), -1);
    std::vector<int> frontier{fa};
    parent_face[fa] = fa;
    while (!frontier.empty() && parent_face[fb] < 0) {
      std::vector<int> next;
      for (int f : frontier) {
        for (int e = 0; e < s.edge_count(); ++e) {
          if (!s.edge_in_forest(e)) continue;
          int x = s.item(s.edge(e).a).face;
          int y = s.item(s.edge(e).b).face;
          if (x != f && y != f) continue;
          int g = x == f ? y : x;
          if (parent_face[g] >= 0) continue;
          parent_face[g] = f;
          parent_edge[g] = e;
          next.push_back(g);
        }
      }
      frontier = std::move(next);
    }
    if (parent_face[fb] < 0) throw Error("internal: generator edge spans two components");
    std::vector<int> path_edges, path_faces;
    for (int f = fb; f != fa; f = parent_face[f]) {
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

RelativeH1::RelativeH1(const Surface& s) : surf_(&s) {
  for (int e : s.h1_generator_edges()) loops_.push_back(spine_loop(s, e));
}

std::vector<long long> RelativeH1::word_class(const EdgeWord& w) const {
  std::vector<long long> out;
  for (const EdgeWord& loop : loops_)
    out.push_back(intersection_algebraic(*surf_, w, loop));
  return out;
}

}  // namespace pob
