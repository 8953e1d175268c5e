#include "elimtree/elim_forest.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "elimtree/peo_graph.hpp"

namespace elimtree {

ElimForest::ElimForest(int n) : n_(n) {
  if (n < 0) throw ForestError("negative forest size");
  const auto size = static_cast<std::size_t>(n) + 1;
  parent_.assign(size, 0);
  first_.assign(size, 0);
  last_.assign(size, 0);
  prev_.assign(size, 0);
  next_.assign(size, 0);
  count_.assign(size, 0);
  smaller_count_.assign(size, 0);
  smaller_xor_.assign(size, 0);
  for (Vertex v = 1; v <= n; ++v) link(v, 0);
}

ElimForest ElimForest::from_parents(std::span<const Vertex> parent) {
  if (parent.empty()) throw ForestError("parent array must include index 0");
  const int n = static_cast<int>(parent.size()) - 1;
  ElimForest f(n);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p < 0 || p > n || p == v) throw ForestError("bad parent for vertex " + std::to_string(v));
    if (p != 0) {
      f.unlink(v);
      f.link(v, p);
    }
  }
  // Every vertex must reach a root within n steps.
  for (Vertex v = 1; v <= n; ++v) {
    Vertex x = v;
    for (int steps = 0; x != 0; ++steps) {
      if (steps > n) throw ForestError("parent array contains a cycle");
      x = f.parent(x);
    }
  }
  return f;
}

std::vector<Vertex> ElimForest::children(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count_[idx(v)]));
  for (Vertex c = first_[idx(v)]; c != 0; c = next_[idx(c)]) out.push_back(c);
  return out;
}

void ElimForest::unlink(Vertex v) {
  const Vertex p = parent_[idx(v)];
  const Vertex a = prev_[idx(v)];
  const Vertex b = next_[idx(v)];
  if (a != 0) next_[idx(a)] = b; else first_[idx(p)] = b;
  if (b != 0) prev_[idx(b)] = a; else last_[idx(p)] = a;
  --count_[idx(p)];
  if (p != 0 && v < p) {
    --smaller_count_[idx(p)];
    smaller_xor_[idx(p)] ^= v;
  }
  parent_[idx(v)] = 0;
  prev_[idx(v)] = next_[idx(v)] = 0;
}

void ElimForest::link(Vertex v, Vertex p) {
  parent_[idx(v)] = p;
  prev_[idx(v)] = last_[idx(p)];
  next_[idx(v)] = 0;
  if (last_[idx(p)] != 0) next_[idx(last_[idx(p)])] = v; else first_[idx(p)] = v;
  last_[idx(p)] = v;
  ++count_[idx(p)];
  if (p != 0 && v < p) {
    ++smaller_count_[idx(p)];
    smaller_xor_[idx(p)] ^= v;
  }
}

std::vector<Vertex> ElimForest::subtree(Vertex v) const {
  std::vector<Vertex> out{v};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Vertex c = first_[idx(out[k])]; c != 0; c = next_[idx(c)]) out.push_back(c);
  return out;
}

bool ElimForest::is_ancestor(Vertex a, Vertex v) const {
  for (Vertex x = parent_[idx(v)]; x != 0; x = parent_[idx(x)])
    if (x == a) return true;
  return false;
}

ElimForest forest_from_ordering(const Graph& g, std::span<const Vertex> order) {
  const int n = g.size();
  if (static_cast<int>(order.size()) != n) throw GraphError("ordering has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex v = order[k];
    if (v < 1 || v > n || pos[static_cast<std::size_t>(v)] != -1) throw GraphError("ordering is not a permutation of 1..n");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  // Union-find over already-processed (later removed) vertices; each set's
  // representative is the topmost vertex of its tree so far.
  std::vector<Vertex> uf(static_cast<std::size_t>(n) + 1), top(static_cast<std::size_t>(n) + 1);
  std::iota(uf.begin(), uf.end(), 0);
  top = uf;
  auto find = [&](Vertex x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex w : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)]) continue;
      const Vertex r = find(w);
      const Vertex t = top[static_cast<std::size_t>(r)];
      if (t == v) continue;
      parent[static_cast<std::size_t>(t)] = v;
      const Vertex rv = find(v);
      uf[static_cast<std::size_t>(r)] = rv;
      top[static_cast<std::size_t>(rv)] = v;
    }
  }
  return ElimForest::from_parents(parent);
}

ElimForest initial_forest(const PeoGraph& pg) {
  std::vector<Vertex> identity(static_cast<std::size_t>(pg.size()));
  std::iota(identity.begin(), identity.end(), 1);
  return forest_from_ordering(pg.graph(), identity);
}

bool validate(const Graph& g, const ElimForest& f) {
  const int n = g.size();
  if (f.size() != n) return false;
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex p = f.parent(v);
    if (p < 0 || p > n || p == v) return false;
  }
  // Acyclicity.
  for (Vertex v = 1; v <= n; ++v) {
    Vertex x = v;
    for (int steps = 0; x != 0; ++steps) {
      if (steps > n) return false;
      x = f.parent(x);
    }
  }
  std::vector<char> blocked(static_cast<std::size_t>(n) + 1), in_sub(static_cast<std::size_t>(n) + 1), seen(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> stack;
  for (Vertex v = 1; v <= n; ++v) {
    std::fill(blocked.begin(), blocked.end(), 0);
    std::fill(in_sub.begin(), in_sub.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (Vertex a = f.parent(v); a != 0; a = f.parent(a)) blocked[static_cast<std::size_t>(a)] = 1;
    const auto sub = f.subtree(v);
    for (Vertex x : sub) in_sub[static_cast<std::size_t>(x)] = 1;
    std::size_t reached = 0;
    seen[static_cast<std::size_t>(v)] = 1;
    stack.assign(1, v);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (!in_sub[static_cast<std::size_t>(x)]) return false;
      ++reached;
      for (Vertex w : g.neighbors(x))
        if (!blocked[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    if (reached != sub.size()) return false;
  }
  return true;
}

std::string canonical_key(const ElimForest& f) {
  std::string out;
  out.reserve(static_cast<std::size_t>(f.size()) * 3);
  for (Vertex v = 1; v <= f.size(); ++v) {
    if (v > 1) out += ' ';
    out += std::to_string(f.parent(v));
  }
  return out;
}

ElimForest forest_from_key(const std::string& key) {
  std::vector<Vertex> parent{0};
  const char* p = key.data();
  const char* end = p + key.size();
  while (p < end) {
    while (p < end && *p == ' ') ++p;
    if (p == end) break;
    Vertex value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) throw ForestError("malformed forest key: " + key);
    parent.push_back(value);
    p = next;
  }
  return ElimForest::from_parents(parent);
}

std::vector<Tube> to_tubing(const Graph& g, const ElimForest& f) {
  std::vector<Tube> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (Vertex v = 1; v <= f.size(); ++v) {
    auto tube = f.subtree(v);
    std::sort(tube.begin(), tube.end());
    out.push_back(std::move(tube));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_tubing(const std::vector<Tube>& tubing) {
  std::string out;
  for (const auto& tube : tubing) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < tube.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(tube[k]);
    }
    out += '}';
  }
  return out;
}

bool is_valid_tubing(const Graph& g, const std::vector<Tube>& tubing) {
  const int n = g.size();
  auto mask_of = [n](const Tube& t) {
    std::vector<char> m(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : t) m[static_cast<std::size_t>(v)] = 1;
    return m;
  };
  for (const auto& t : tubing) {
    if (t.empty()) return false;
    const auto m = mask_of(t);
    std::vector<char> seen(m.size(), 0);
    std::vector<Vertex> stack{t.front()};
    seen[static_cast<std::size_t>(t.front())] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex w : g.neighbors(x))
        if (m[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    if (reached != t.size()) return false;
  }
  for (std::size_t a = 0; a < tubing.size(); ++a)
    for (std::size_t b = a + 1; b < tubing.size(); ++b) {
      const auto& s = tubing[a];
      const auto& t = tubing[b];
      if (std::includes(s.begin(), s.end(), t.begin(), t.end()) || std::includes(t.begin(), t.end(), s.begin(), s.end()))
        continue;
      const auto ms = mask_of(s);
      for (Vertex v : t) {
        if (ms[static_cast<std::size_t>(v)]) return false;
        for (Vertex w : g.neighbors(v))
          if (ms[static_cast<std::size_t>(w)]) return false;
      }
    }
  for (auto comp : connected_components(g))
    if (std::find(tubing.begin(), tubing.end(), comp) == tubing.end()) return false;
  return true;
}

bool is_clean_for(const ElimForest& f, Vertex j) {
  for (Vertex k = j + 1; k <= f.size(); ++k) {
    Vertex root = k;
    while (f.parent(root) != 0) root = f.parent(root);
    int in_tree = 0;
    for (Vertex x : f.subtree(root)) in_tree += x < k ? 1 : 0;
    int below = 0;
    for (Vertex x : f.subtree(k)) below += x < k ? 1 : 0;
    if (below != 0 && below != in_tree) return false;
  }
  return true;
}

}  // namespace elimtree
