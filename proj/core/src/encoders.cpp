#include "elimtree/encoders.hpp"

#include <algorithm>
#include <numeric>

#include "elimtree/generate.hpp"
#include "elimtree/peo_graph.hpp"

namespace elimtree {

const char* shape_name(Shape shape) {
  switch (shape) {
    case Shape::complete: return "complete";
    case Shape::path: return "path";
    case Shape::star: return "star";
    case Shape::matching: return "matching";
    case Shape::matching_plus_clique: return "matching-plus-clique";
    case Shape::generic: return "generic";
  }
  return "generic";
}

namespace {

std::vector<Vertex> identity_map(int n) {
  std::vector<Vertex> out(static_cast<std::size_t>(n) + 1);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Keep the caller's labels when they already are canonical.
std::vector<Vertex> prefer_identity(const Graph& g, const Graph& canonical, std::vector<Vertex> witness) {
  if (g == canonical) return identity_map(g.size());
  return witness;
}

bool is_complete(const Graph& g) {
  const long long n = g.size();
  return g.edge_count() == n * (n - 1) / 2;
}

std::optional<std::vector<Vertex>> path_witness(const Graph& g) {
  const int n = g.size();
  if (n < 1 || g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
  Vertex start = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) <= 1 && start == 0) start = v;
  }
  std::vector<Vertex> map(static_cast<std::size_t>(n) + 1, 0);
  Vertex prev = 0, cur = start;
  for (Vertex label = 1; label <= n; ++label) {
    map[static_cast<std::size_t>(cur)] = label;
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }
  return map;
}

std::optional<std::vector<Vertex>> star_witness(const Graph& g) {
  const int n = g.size();
  if (n < 2 || g.edge_count() != n - 1) return std::nullopt;
  for (Vertex c = 1; c <= n; ++c) {
    if (g.degree(c) != n - 1) continue;
    std::vector<Vertex> map(static_cast<std::size_t>(n) + 1, 0);
    map[static_cast<std::size_t>(c)] = 1;
    Vertex label = 2;
    for (Vertex v = 1; v <= n; ++v)
      if (v != c) map[static_cast<std::size_t>(v)] = label++;
    return map;
  }
  return std::nullopt;
}

// Matching edges get {i, k+i} in order of their smaller endpoint; `clique`
// vertices (sorted) follow at 2k+1.
std::vector<Vertex> matching_map(const Graph& g, const std::vector<std::vector<Vertex>>& edges_comps,
                                 const std::vector<Vertex>& clique) {
  const int k = static_cast<int>(edges_comps.size());
  std::vector<Vertex> map(static_cast<std::size_t>(g.size()) + 1, 0);
  for (int i = 0; i < k; ++i) {
    map[static_cast<std::size_t>(edges_comps[static_cast<std::size_t>(i)][0])] = i + 1;
    map[static_cast<std::size_t>(edges_comps[static_cast<std::size_t>(i)][1])] = k + i + 1;
  }
  for (std::size_t t = 0; t < clique.size(); ++t) map[static_cast<std::size_t>(clique[t])] = 2 * k + 1 + static_cast<Vertex>(t);
  return map;
}

std::string join_values(const std::vector<int>& values, int largest) {
  std::string out;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (largest > 9 && t > 0) out += ',';
    out += std::to_string(values[t]);
  }
  return out;
}

// Vertices from the root of the tree containing `start` down a chain.
std::vector<Vertex> chain_from_root(const ElimForest& f, Vertex start) {
  Vertex root = start;
  while (!f.is_root(root)) root = f.parent(root);
  std::vector<Vertex> out;
  for (Vertex v = root; v != 0;) {
    out.push_back(v);
    if (f.child_count(v) > 1) throw ForestError("expected a chain");
    v = f.first_child(v);
  }
  return out;
}

std::string binary_tree(const ElimForest& f, Vertex v) {
  if (v == 0) return ".";
  Vertex left = 0, right = 0;
  for (Vertex c = f.first_child(v); c != 0; c = f.next_sibling(c)) {
    Vertex& slot = c < v ? left : right;
    if (slot != 0) throw ForestError("path forests have at most one child per side");
    slot = c;
  }
  return std::to_string(v) + "(" + binary_tree(f, left) + "," + binary_tree(f, right) + ")";
}

}  // namespace

ShapeTag detect_shape(const Graph& g) {
  const int n = g.size();
  ShapeTag tag;
  if (is_complete(g)) {
    tag.shape = Shape::complete;
    tag.param = n;
    tag.to_canonical = identity_map(n);
    return tag;
  }
  auto finish = [&](Shape shape, int param, std::vector<Vertex> witness) {
    const Graph canonical = g.relabeled(witness);
    tag.shape = shape;
    tag.param = param;
    tag.to_canonical = prefer_identity(g, canonical, std::move(witness));
    return tag;
  };
  if (auto w = path_witness(g)) return finish(Shape::path, n, *w);
  if (auto w = star_witness(g)) return finish(Shape::star, n, *w);
  const auto comps = connected_components(g);
  std::vector<std::vector<Vertex>> edges_comps, others;
  for (const auto& c : comps) (c.size() == 2 ? edges_comps : others).push_back(c);
  if (n >= 2 && others.empty()) {
    return finish(Shape::matching, static_cast<int>(edges_comps.size()), matching_map(g, edges_comps, {}));
  }
  if (others.size() == 1 && !edges_comps.empty() && others[0].size() == edges_comps.size()) {
    const auto& clique = others[0];
    const long long s = static_cast<long long>(clique.size());
    long long inner = 0;
    for (Vertex v : clique) inner += g.degree(v);
    if (inner == s * (s - 1)) {
      return finish(Shape::matching_plus_clique, static_cast<int>(edges_comps.size()), matching_map(g, edges_comps, clique));
    }
  }
  tag.shape = Shape::generic;
  tag.param = n;
  tag.to_canonical = identity_map(n);
  return tag;
}

std::string encode(const ShapeTag& tag, const ElimForest& f) {
  const int n = f.size();
  if (n + 1 != static_cast<int>(tag.to_canonical.size()))
    throw ForestError("forest has " + std::to_string(n) + " vertices, the graph " +
                      std::to_string(static_cast<int>(tag.to_canonical.size()) - 1));
  switch (tag.shape) {
    case Shape::complete: {
      if (n == 0) return "";
      const auto chain = chain_from_root(f, 1);
      if (static_cast<int>(chain.size()) != n) throw ForestError("forest is not a single chain");
      return join_values(std::vector<int>(chain.begin(), chain.end()), n);
    }
    case Shape::path: {
      const auto roots = f.roots();
      if (roots.size() != 1) throw ForestError("path forests are single trees");
      return binary_tree(f, roots.front());
    }
    case Shape::star: {
      std::vector<int> handle;
      for (Vertex v = f.parent(1); v != 0; v = f.parent(v)) handle.push_back(v - 1);
      std::reverse(handle.begin(), handle.end());
      if (handle.empty()) return "ε";
      return join_values(handle, n - 1);
    }
    case Shape::matching: {
      const int k = tag.param;
      if (n != 2 * k) throw ForestError("forest size does not match the matching");
      std::string bits;
      for (Vertex i = 1; i <= k; ++i) bits += f.is_root(k + i) ? '1' : '0';
      return bits;
    }
    case Shape::matching_plus_clique: {
      const int k = tag.param;
      if (n != 3 * k) throw ForestError("forest size does not match the signed-permutation graph");
      const auto chain = chain_from_root(f, 2 * k + 1);
      std::string out;
      for (std::size_t t = 0; t < chain.size(); ++t) {
        const Vertex i = chain[t] - 2 * k;
        if (k > 9 && t > 0) out += ',';
        out += f.is_root(i) ? '+' : '-';
        out += std::to_string(i);
      }
      return out;
    }
    case Shape::generic: break;
  }
  throw ForestError("generic graphs have no object encoding");
}

std::vector<std::string> gray_code(const Graph& g) {
  const ShapeTag tag = detect_shape(g);
  if (tag.shape == Shape::generic) throw GraphError("graph has no special shape");
  const PeoGraph pg(tag.canonical_graph(g));
  std::vector<std::string> out;
  generate_all(pg, [&](const ElimForest& f, const Step*) {
    out.push_back(encode(tag, f));
    return true;
  });
  return out;
}

}  // namespace elimtree
