#include "elimtree/rotation.hpp"

#include <vector>

#include "elimtree/insertion.hpp"

namespace elimtree {

namespace {

// Makes `low` the parent of `high` (its former parent), moving the listed
// children of `low` over to `high`.
void swap_edge(ElimForest& f, Vertex high, Vertex low, std::span<const Vertex> moving) {
  const Vertex p = f.parent(high);
  f.unlink(low);
  for (Vertex k : moving) {
    f.unlink(k);
    f.link(k, high);
  }
  f.unlink(high);
  f.link(low, p);
  f.link(high, low);
}

}  // namespace

std::string format_step(const Step& step) {
  return std::to_string(step.vertex) + (step.dir == Direction::up ? "\u2191" : "\u2193");
}

void rotate_edge_generic_inplace(const Graph& g, ElimForest& f, Vertex i, Vertex j) {
  if (i < 1 || j < 1 || i > f.size() || j > f.size() || f.parent(j) != i)
    throw ForestError("rotation needs " + std::to_string(i) + " to be the parent of " + std::to_string(j));
  const auto sub = f.subtree(i);
  std::vector<char> in_h(static_cast<std::size_t>(f.size()) + 1, 0), comp(in_h.size(), 0);
  for (Vertex x : sub) in_h[static_cast<std::size_t>(x)] = 1;
  in_h[static_cast<std::size_t>(j)] = 0;
  std::vector<Vertex> stack{i};
  comp[static_cast<std::size_t>(i)] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x))
      if (in_h[static_cast<std::size_t>(w)] && !comp[static_cast<std::size_t>(w)]) {
        comp[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> moving;
  for (Vertex c = f.first_child(j); c != 0; c = f.next_sibling(c))
    if (comp[static_cast<std::size_t>(c)]) moving.push_back(c);
  swap_edge(f, i, j, moving);
}

ElimForest rotate_edge_generic(const Graph& g, const ElimForest& f, Vertex i, Vertex j) {
  ElimForest out = f;
  rotate_edge_generic_inplace(g, out, i, j);
  return out;
}

std::size_t rotate_up_fast(const PeoGraph& pg, ElimForest& f, Vertex j) {
  const Vertex i = f.parent(j);
  Vertex buffer[64];
  std::vector<Vertex> spill;
  int count = 0;
  std::size_t scanned = 0;
  for (Vertex k = f.first_child(j); k != 0; k = f.next_sibling(k), ++scanned)
    if (k < j || pg.adjacent(k, i)) {
      if (count < 64) buffer[count] = k; else spill.push_back(k);
      ++count;
    }
  if (count <= 64) {
    swap_edge(f, i, j, std::span<const Vertex>(buffer, static_cast<std::size_t>(count)));
  } else {
    spill.insert(spill.begin(), buffer, buffer + 64);
    swap_edge(f, i, j, spill);
  }
  return scanned;
}

std::size_t rotate_down_fast(const PeoGraph& pg, ElimForest& f, Vertex j, Vertex path_next) {
  const Vertex i = f.smaller_child(j);
  Vertex buffer[64];
  std::vector<Vertex> spill;
  int count = 0;
  std::size_t scanned = 0;
  for (Vertex k = f.first_child(i); k != 0; k = f.next_sibling(k), ++scanned)
    if (k == path_next || (k > j && pg.adjacent(k, j))) {
      if (count < 64) buffer[count] = k; else spill.push_back(k);
      ++count;
    }
  if (count <= 64) {
    swap_edge(f, j, i, std::span<const Vertex>(buffer, static_cast<std::size_t>(count)));
  } else {
    spill.insert(spill.begin(), buffer, buffer + 64);
    swap_edge(f, j, i, spill);
  }
  return scanned;
}

ElimForest rotate_fast(const PeoGraph& pg, const ElimForest& f, Vertex j, Direction dir) {
  if (j < 1 || j > f.size()) throw ForestError("vertex out of range");
  ElimForest out = f;
  if (dir == Direction::up) {
    if (f.is_root(j)) throw ForestError("up-rotation of a root");
    if (f.parent(j) > j) throw ForestError("up-rotation below a larger parent; rotate the parent down instead");
    rotate_up_fast(pg, out, j);
    return out;
  }
  const Vertex i = f.smaller_child(j);
  if (i == 0) throw ForestError("down-rotation needs a unique smaller child");
  // The path vertex right below i is the child of i whose subtree holds a
  // smaller neighbour of j.
  Vertex path_next = 0;
  for (Vertex u : pg.lower_neighbors(j)) {
    Vertex x = u;
    while (x != 0 && f.parent(x) != i) x = f.parent(x);
    if (x != 0 && x < j) {
      path_next = x;
      break;
    }
  }
  rotate_down_fast(pg, out, j, path_next);
  return out;
}

}  // namespace elimtree
