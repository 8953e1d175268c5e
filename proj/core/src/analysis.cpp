#include "elimtree/analysis.hpp"

#include <bit>
#include <unordered_map>

namespace elimtree {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class ForestCounter {
 public:
  explicit ForestCounter(const Graph& g) : adj_(static_cast<std::size_t>(g.size()) + 1, 0) {
    if (g.size() > kMaxCountVertices)
      throw SizeLimitError("counting supports at most " + std::to_string(kMaxCountVertices) + " vertices");
    for (const auto& [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
  }

  BigInt count(Mask mask) {
    BigInt product = 1;
    while (mask != 0) {
      const Mask comp = component(mask, std::countr_zero(mask));
      mask &= ~comp;
      product *= connected(comp);
    }
    return product;
  }

 private:
  Mask component(Mask within, int start) const {
    Mask reached = bit(start);
    Mask frontier = reached;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj_[static_cast<std::size_t>(v)] & within & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    return reached;
  }

  const BigInt& connected(Mask comp) {
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    BigInt total = 0;
    if (std::popcount(comp) == 1) {
      total = 1;
    } else {
      for (Mask rest = comp; rest != 0; rest &= rest - 1) total += count(comp & ~(rest & -rest));
    }
    return memo_.emplace(comp, std::move(total)).first->second;
  }

  std::vector<Mask> adj_;
  std::unordered_map<Mask, BigInt> memo_;
};

Mask prefix_mask(int nu) { return nu == 0 ? 0 : ((~Mask{0}) >> (63 - nu)) & ~Mask{1}; }

}  // namespace

BigInt count_forests(const Graph& g) {
  ForestCounter counter(g);
  return counter.count(prefix_mask(g.size()));
}

std::vector<PrefixParity> prefix_parities(const PeoGraph& pg) {
  ForestCounter counter(pg.graph());
  std::vector<PrefixParity> out;
  for (int nu = 2; nu <= pg.size() - 1; ++nu) {
    PrefixParity p;
    p.nu = nu;
    p.count = counter.count(prefix_mask(nu));
    p.even = (p.count & 1) == 0;
    out.push_back(std::move(p));
  }
  return out;
}

CyclicityVerdict predict_cyclic(const PeoGraph& pg) {
  CyclicityVerdict verdict;
  const Graph& g = pg.graph();
  const int n = pg.size();
  ForestCounter counter(g);
  verdict.parities = prefix_parities(pg);

  std::vector<Vertex> rotatable;
  for (Vertex v = 1; v <= n; ++v)
    if (pg.rotatable(v)) rotatable.push_back(v);

  if (rotatable.empty()) {
    verdict.cyclic = false;
    verdict.reasons.push_back("single forest: no edges");
  } else {
    verdict.cyclic = true;
    for (std::size_t k = 1; k < rotatable.size(); ++k) {
      const Vertex nu = rotatable[k];
      const BigInt below = counter.count(prefix_mask(nu - 1));
      if ((below & 1) != 0) {
        verdict.cyclic = false;
        verdict.reasons.push_back("parity: e(G^[" + std::to_string(nu - 1) + "]) = " + below.str() +
                                  " is odd below rotatable vertex " + std::to_string(nu));
        break;
      }
    }
    if (verdict.cyclic) verdict.reasons.push_back("parity: every constraining prefix count is even");
  }
  if (is_2_connected(g)) verdict.reasons.push_back("2-connected");
  if (is_tree(g) && n >= 4) verdict.reasons.push_back("tree");
  if (n >= 2 && g.adjacent(1, 2) && g.degree(1) == 1 && g.degree(2) == 1) verdict.reasons.push_back("isolated-edge");
  return verdict;
}

namespace {

// Induced subgraph on `vertices` (in the given order, renamed 1..k), with the
// first listed vertex becoming 1.
Graph induced(const Graph& g, const std::vector<Vertex>& vertices, std::vector<Vertex>& local) {
  local.assign(static_cast<std::size_t>(g.size()) + 1, 0);
  for (std::size_t k = 0; k < vertices.size(); ++k) local[static_cast<std::size_t>(vertices[k])] = static_cast<Vertex>(k + 1);
  Graph h(static_cast<int>(vertices.size()));
  for (const auto& [u, v] : g.edges())
    if (local[static_cast<std::size_t>(u)] != 0 && local[static_cast<std::size_t>(v)] != 0)
      h.add_edge(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  return h;
}

// Lex-BFS visit order of g[vertices] starting at vertices.front(), mapped back.
std::vector<Vertex> lex_bfs_on(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> local;
  const Graph h = induced(g, vertices, local);
  std::vector<Vertex> out;
  for (Vertex v : lex_bfs_order(h)) out.push_back(vertices[static_cast<std::size_t>(v - 1)]);
  return out;
}

bool is_cyclic_order(const Graph& g, const std::vector<Vertex>& order) {
  if (!is_peo(g, order)) return false;
  return predict_cyclic(relabel_to_peo(g, order)).cyclic;
}

std::vector<Vertex> vertices_of(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Candidate orderings for rules that do not remove a simplicial vertex.
std::optional<CyclicOrdering> base_rules(const Graph& g, int appendix_limit) {
  const int n = g.size();
  if (const auto peo = chordal_peo(g); peo && is_cyclic_order(g, *peo))
    return CyclicOrdering{*peo, is_2_connected(g) ? "2-connected" : "any-peo"};
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) != 1 || g.degree(v) != 1) continue;
    std::vector<Vertex> rest;
    for (Vertex w = 1; w <= n; ++w)
      if (w != u && w != v) rest.push_back(w);
    std::vector<Vertex> order{u, v};
    if (!rest.empty())
      for (Vertex w : lex_bfs_on(g, rest)) order.push_back(w);
    if (is_cyclic_order(g, order)) return CyclicOrdering{order, "isolated-edge"};
  }
  if (n > appendix_limit || n > kMaxCountVertices) return std::nullopt;
  std::vector<Mask> adj(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  const Mask all = prefix_mask(n);
  std::vector<Vertex> local;
  for (Mask h = all; h != 0; h = (h - 1) & all) {
    if (std::popcount(h) < 3 || std::popcount(all & ~h) < 1) continue;
    const auto hv = vertices_of(h);
    if (!is_2_connected(induced(g, hv, local))) continue;
    for (Vertex x : hv) {
      const Mask inner = h & ~bit(x);
      // H - x may only touch x, and x joins at least one outside vertex.
      bool hanging = true;
      for (Vertex y : vertices_of(inner)) hanging = hanging && (adj[static_cast<std::size_t>(y)] & ~h) == 0;
      if (!hanging || (adj[static_cast<std::size_t>(x)] & ~h) == 0) continue;
      const auto innerv = vertices_of(inner);
      const Graph hx = induced(g, innerv, local);
      if (!(is_2_connected(hx) || (hx.size() == 2 && hx.edge_count() == 1))) continue;
      std::vector<Vertex> order = lex_bfs_on(g, hv);
      std::vector<Vertex> outside{x};
      for (Vertex w : vertices_of(all & ~h)) outside.push_back(w);
      const auto tail = lex_bfs_on(g, outside);
      order.insert(order.end(), tail.begin() + 1, tail.end());
      if (is_cyclic_order(g, order)) return CyclicOrdering{order, "H-appendix"};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CyclicOrdering> choose_cyclic_peo(const Graph& g, int appendix_limit) {
  if (!is_chordal(g)) throw NotPeoError("graph is not chordal");
  if (auto found = base_rules(g, appendix_limit)) return found;
  const int n = g.size();
  for (Vertex y = 1; y <= n; ++y) {
    const auto& nb = g.neighbors(y);
    bool simplicial = true;
    for (std::size_t a = 0; a < nb.size() && simplicial; ++a)
      for (std::size_t b = a + 1; b < nb.size() && simplicial; ++b) simplicial = g.adjacent(nb[a], nb[b]);
    if (!simplicial) continue;
    std::vector<Vertex> rest;
    for (Vertex w = 1; w <= n; ++w)
      if (w != y) rest.push_back(w);
    std::vector<Vertex> local;
    const Graph reduced = induced(g, rest, local);
    if (auto inner = base_rules(reduced, appendix_limit)) {
      std::vector<Vertex> order;
      for (Vertex v : inner->order) order.push_back(rest[static_cast<std::size_t>(v - 1)]);
      order.push_back(y);
      if (is_cyclic_order(g, order)) return CyclicOrdering{order, "simplicial-reduction/" + inner->rule};
    }
  }
  return std::nullopt;
}

}  // namespace elimtree
