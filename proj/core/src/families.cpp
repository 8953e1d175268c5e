#include "elimtree/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace elimtree {

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 2; v <= n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (Vertex v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

Graph matching_graph(int k) {
  Graph g(2 * k);
  for (Vertex i = 1; i <= k; ++i) g.add_edge(i, k + i);
  return g;
}

Graph matching_plus_clique_graph(int k) {
  Graph g(3 * k);
  for (Vertex i = 1; i <= k; ++i) g.add_edge(i, k + i);
  for (Vertex u = 2 * k + 1; u <= 3 * k; ++u)
    for (Vertex v = u + 1; v <= 3 * k; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> pick(1, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

Graph random_chordal(int n, int k, std::uint64_t seed, bool shuffle) {
  if (k < 1) throw GraphError("clique bound must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> lower(static_cast<std::size_t>(n) + 1);
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> pick(1, v - 1);
    const Vertex u = pick(rng);
    std::vector<Vertex> clique = lower[static_cast<std::size_t>(u)];
    clique.push_back(u);
    std::shuffle(clique.begin(), clique.end(), rng);
    std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(clique.size(), static_cast<std::size_t>(k)));
    clique.resize(size(rng));
    std::sort(clique.begin(), clique.end());
    lower[static_cast<std::size_t>(v)] = clique;
    for (Vertex w : clique) edges.emplace_back(w, v);
  }
  std::vector<Vertex> label(static_cast<std::size_t>(n) + 1);
  std::iota(label.begin(), label.end(), 0);
  if (shuffle) std::shuffle(label.begin() + 1, label.end(), rng);
  Graph g(n);
  for (const auto& [a, b] : edges) g.add_edge(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
  return g;
}

}  // namespace elimtree
