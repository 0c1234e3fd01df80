#include "pob/surface.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pob {

int Surface::add_face(std::string label) {
  faces_.push_back(Face{{}, std::move(label)});
  comp_valid_ = false;
  return face_count() - 1;
}

int Surface::add_item(int face, ItemKind kind, std::string label) {
  Item it;
  it.face = face;
  it.kind = kind;
  it.label = std::move(label);
  items_.push_back(it);
  int id = item_count() - 1;
  faces_[face].items.push_back(id);
  return id;
}

int Surface::glue(int item_a, int item_b) {
  if (item_a == item_b) throw Error("cannot glue a cell to itself");
  Item& a = items_[item_a];
  Item& b = items_[item_b];
  if (a.edge >= 0 || b.edge >= 0) throw Error("cell already glued");
  if (a.face == b.face) throw Error("gluing two cells of one face is not supported");
  edges_.push_back(GluingEdge{item_a, item_b});
  int e = edge_count() - 1;
  a.edge = e;
  b.edge = e;
  comp_valid_ = false;
  return e;
}

int Surface::mate(int item) const {
  const Item& it = items_[item];
  const GluingEdge& e = edges_[it.edge];
  return e.a == item ? e.b : e.a;
}

int Surface::other_face(int edge, int face) const {
  const GluingEdge& e = edges_[edge];
  int fa = items_[e.a].face;
  int fb = items_[e.b].face;
  return fa == face ? fb : fa;
}

int Surface::edge_item_in_face(int edge, int face) const {
  const GluingEdge& e = edges_[edge];
  if (items_[e.a].face == face) return e.a;
  if (items_[e.b].face == face) return e.b;
  throw Error("edge does not border the face");
}

int Surface::slot_of(int item) const {
  const std::vector<int>& cycle = faces_[items_[item].face].items;
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
    if (cycle[i] == item) return i;
  throw Error("item not in its face cycle");
}

int Surface::next_in_face(int item) const {
  const std::vector<int>& cycle = faces_[items_[item].face].items;
  int s = slot_of(item);
  return cycle[(s + 1) % cycle.size()];
}

int Surface::prev_in_face(int item) const {
  const std::vector<int>& cycle = faces_[items_[item].face].items;
  int s = slot_of(item);
  return cycle[(s + cycle.size() - 1) % cycle.size()];
}

int Surface::euler_cellular() const {
  // Vertices are corner classes.  Each cell has a tail end and a head
  // end in its face's reading direction; the corner between consecutive
  // cells identifies head(i) with tail(next(i)), and a gluing edge
  // identifies the two cells' ends crosswise.
  int n = item_count();
  std::vector<int> dsu(2 * n);
  std::iota(dsu.begin(), dsu.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  auto unite = [&](int x, int y) { dsu[find(x)] = find(y); };
  auto tail = [](int item) { return 2 * item; };
  auto head = [](int item) { return 2 * item + 1; };

  for (const Face& f : faces_) {
    int k = static_cast<int>(f.items.size());
    for (int i = 0; i < k; ++i) unite(head(f.items[i]), tail(f.items[(i + 1) % k]));
  }
  for (const GluingEdge& e : edges_) {
    unite(tail(e.a), head(e.b));
    unite(head(e.a), tail(e.b));
  }
  int v = 0;
  for (int x = 0; x < 2 * n; ++x)
    if (find(x) == x) ++v;
  int e_cells = n - edge_count();  // each gluing merges two cells into one
  return v - e_cells + face_count();
}

std::vector<std::vector<int>> Surface::boundary_cycles() const {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(item_count(), 0);
  for (int start = 0; start < item_count(); ++start) {
    if (!is_free(start) || seen[start]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      cycle.push_back(cur);
      seen[cur] = 1;
      // Step past the head corner of `cur`, hopping through glued cells.
      int j = next_in_face(cur);
      int guard = 0;
      while (!is_free(j)) {
        j = next_in_face(mate(j));
        if (++guard > 2 * item_count()) throw Error("boundary walk failed to terminate");
      }
      cur = j;
    } while (cur != start);
    // Canonical rotation: begin at the least item id.
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
  return cycles;
}

void Surface::ensure_components() const {
  if (comp_valid_) return;
  int nf = face_count();
  comp_of_face_.assign(nf, -1);
  forest_edge_.assign(edge_count(), 0);
  gen_edges_.clear();
  int comp = 0;
  for (int root = 0; root < nf; ++root) {
    if (comp_of_face_[root] >= 0) continue;
    comp_of_face_[root] = comp;
    // BFS, scanning edges in id order for determinism.
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int f : frontier) {
        for (int e = 0; e < edge_count(); ++e) {
          int fa = items_[edges_[e].a].face;
          int fb = items_[edges_[e].b].face;
          if (fa != f && fb != f) continue;
          int g = fa == f ? fb : fa;
          if (comp_of_face_[g] < 0) {
            comp_of_face_[g] = comp;
            forest_edge_[e] = 1;
            next.push_back(g);
          }
        }
      }
      frontier = std::move(next);
    }
    ++comp;
  }
  for (int e = 0; e < edge_count(); ++e)
    if (!forest_edge_[e]) gen_edges_.push_back(e);
  comp_valid_ = true;
}

int Surface::component_count() const {
  ensure_components();
  int c = 0;
  for (int f = 0; f < face_count(); ++f) c = std::max(c, comp_of_face_[f] + 1);
  return c;
}

int Surface::component_of_face(int f) const {
  ensure_components();
  return comp_of_face_[f];
}

std::vector<int> Surface::component_faces(int c) const {
  ensure_components();
  std::vector<int> out;
  for (int f = 0; f < face_count(); ++f)
    if (comp_of_face_[f] == c) out.push_back(f);
  return out;
}

int Surface::euler_of_component(int c) const {
  ensure_components();
  int faces = 0, edges = 0;
  for (int f = 0; f < face_count(); ++f)
    if (comp_of_face_[f] == c) ++faces;
  for (const GluingEdge& e : edges_)
    if (comp_of_face_[items_[e.a].face] == c) ++edges;
  return faces - edges;
}

int Surface::boundary_cycles_of_component(int c) const {
  ensure_components();
  int count = 0;
  for (const std::vector<int>& cyc : boundary_cycles())
    if (comp_of_face_[items_[cyc[0]].face] == c) ++count;
  return count;
}

std::vector<int> Surface::genus_per_component() const {
  std::vector<int> out;
  for (int c = 0; c < component_count(); ++c) {
    int chi = euler_of_component(c);
    int b = boundary_cycles_of_component(c);
    int twice_genus = 2 - chi - b;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw Error("component is not an orientable surface");
    out.push_back(twice_genus / 2);
  }
  return out;
}

std::vector<int> Surface::h1_generator_edges() const {
  ensure_components();
  return gen_edges_;
}

bool Surface::edge_in_forest(int e) const {
  ensure_components();
  return forest_edge_[e] != 0;
}

}  // namespace pob
