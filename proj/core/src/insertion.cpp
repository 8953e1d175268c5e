#include "elimtree/insertion.hpp"

#include <algorithm>

namespace elimtree {

std::size_t insertion_path_of(const PeoGraph& pg, const ElimForest& f, Vertex j, PathScratch& scratch,
                       std::vector<Vertex>& out) {
  out.clear();
  auto& down = scratch.down;
  auto& mark = scratch.mark;
  Vertex top = 0;
  std::size_t visited = 0;
  for (Vertex u : pg.lower_neighbors(j)) {
    if (mark[static_cast<std::size_t>(u)]) continue;
    Vertex below = 0;
    Vertex x = u;
    while (true) {
      ++visited;
      if (x == 0 || x == j) {
        top = below;
        break;
      }
      if (x > j) {
        x = f.parent(x);
        continue;
      }
      if (mark[static_cast<std::size_t>(x)]) {
        down[static_cast<std::size_t>(x)] = below;
        break;
      }
      mark[static_cast<std::size_t>(x)] = 1;
      down[static_cast<std::size_t>(x)] = below;
      below = x;
      x = f.parent(x);
    }
  }
  for (Vertex x = top; x != 0;) {
    out.push_back(x);
    const Vertex next = down[static_cast<std::size_t>(x)];
    mark[static_cast<std::size_t>(x)] = 0;
    down[static_cast<std::size_t>(x)] = 0;
    x = next;
  }
  return visited;
}

std::vector<Vertex> insertion_path(const PeoGraph& pg, const ElimForest& f) {
  const Vertex nu = f.size() + 1;
  if (nu > pg.size()) throw ForestError("forest is not a proper prefix of the graph");
  PathScratch scratch(f.size());
  std::vector<Vertex> out;
  insertion_path_of(pg, f, nu, scratch, out);
  return out;
}

ElimForest delete_max(const PeoGraph& pg, const ElimForest& f) {
  const Vertex nu = f.size();
  if (nu == 0 || nu > pg.size()) throw ForestError("delete_max needs a non-empty prefix forest");
  if (f.child_count(nu) > 1) throw ForestError("vertex " + std::to_string(nu) + " has several children; labelling is not a PEO");
  std::vector<Vertex> parent(f.parents().begin(), f.parents().end() - 1);
  const Vertex c = f.first_child(nu);
  if (c != 0) parent[static_cast<std::size_t>(c)] = f.parent(nu);
  return ElimForest::from_parents(parent);
}

ElimForest insert_at(const PeoGraph& pg, const ElimForest& f, int i) {
  const Vertex nu = f.size() + 1;
  const auto path = insertion_path(pg, f);
  const int lambda = static_cast<int>(path.size());
  if (i < 1 || i > lambda + 1)
    throw ForestError("insertion index " + std::to_string(i) + " outside 1.." + std::to_string(lambda + 1));
  std::vector<Vertex> parent(f.parents().begin(), f.parents().end());
  parent.push_back(0);
  auto at = [&parent](Vertex v) -> Vertex& { return parent[static_cast<std::size_t>(v)]; };
  if (lambda == 0) return ElimForest::from_parents(parent);
  if (i == 1) {
    at(path.front()) = nu;
  } else if (i <= lambda) {
    at(nu) = path[static_cast<std::size_t>(i - 2)];
    at(path[static_cast<std::size_t>(i - 1)]) = nu;
  } else {
    at(nu) = path.back();
  }
  return ElimForest::from_parents(parent);
}

std::vector<Vertex> sigma_encode(const PeoGraph& pg, const ElimForest& f) {
  const int n = f.size();
  if (n > pg.size()) throw ForestError("forest larger than graph");
  // Doubly linked list over 1..n with sentinel 0.
  std::vector<Vertex> next(static_cast<std::size_t>(n) + 1, 0), prev(static_cast<std::size_t>(n) + 1, 0);
  auto insert_before = [&](Vertex v, Vertex at) {
    const Vertex p = prev[static_cast<std::size_t>(at)];
    next[static_cast<std::size_t>(p)] = v;
    prev[static_cast<std::size_t>(v)] = p;
    next[static_cast<std::size_t>(v)] = at;
    prev[static_cast<std::size_t>(at)] = v;
  };
  std::vector<Vertex> stack;
  for (Vertex nu = 1; nu <= n; ++nu) {
    Vertex up = f.parent(nu);
    while (up != 0 && up > nu) up = f.parent(up);
    // Topmost smaller descendant; at most one by the PEO property.
    Vertex child = 0;
    stack.assign(1, nu);
    while (!stack.empty() && child == 0) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex c = f.first_child(x); c != 0; c = f.next_sibling(c)) {
        if (c < nu) {
          child = c;
          break;
        }
        stack.push_back(c);
      }
    }
    if (child != 0 && up == 0) insert_before(nu, next[0]);
    else if (child != 0) insert_before(nu, child);
    else insert_before(nu, 0);
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Vertex x = next[0]; x != 0; x = next[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

ElimForest sigma_decode(const PeoGraph& pg, std::span<const Vertex> perm) {
  return forest_from_ordering(pg.graph(), perm);
}

}  // namespace elimtree
