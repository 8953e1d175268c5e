#include "elimtree/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace elimtree {

namespace {

const char* kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed: return "malformed line";
    case ParseErrorKind::vertex_out_of_range: return "vertex out of range";
    case ParseErrorKind::duplicate_edge: return "duplicate edge";
    case ParseErrorKind::self_loop: return "self-loop";
  }
  return "parse error";
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on blanks and parses every token as a non-negative integer.
std::optional<std::vector<long long>> parse_ints(std::string_view line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long long value = 0;
    const auto* first = line.data() + i;
    const auto* last = line.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0) return std::nullopt;
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + kind_name(kind) + ": " + what),
      kind_(kind),
      line_(line) {}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range: " + std::to_string(n));
  stride_ = static_cast<std::size_t>(n) / 64 + 1;
  adj_.assign(static_cast<std::size_t>(n + 1) * stride_, 0);
  nbrs_.resize(static_cast<std::size_t>(n) + 1);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw GraphError("vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  auto set_bit = [this](Vertex a, Vertex b) {
    const auto bit = static_cast<std::size_t>(b);
    adj_[static_cast<std::size_t>(a) * stride_ + (bit >> 6)] |= std::uint64_t{1} << (bit & 63);
    auto& list = nbrs_[static_cast<std::size_t>(a)];
    list.insert(std::upper_bound(list.begin(), list.end(), b), b);
  };
  set_bit(u, v);
  set_bit(v, u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != n_ + 1) throw GraphError("relabeling has wrong length");
  Graph out(n_);
  for (const auto& [u, v] : edges()) out.add_edge(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
  return out;
}

Graph Graph::prefix(int nu) const {
  if (nu < 0 || nu > n_) throw GraphError("prefix length out of range");
  Graph out(nu);
  for (Vertex u = 1; u <= nu; ++u)
    for (Vertex v : neighbors(u))
      if (u < v && v <= nu) out.add_edge(u, v);
  return out;
}

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  long long expected_edges = 0;
  long long seen_edges = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto ints = parse_ints(line);
    if (!ints || ints->size() != 2)
      throw ParseError(ParseErrorKind::malformed, line_no, "expected two non-negative integers");
    const auto a = (*ints)[0];
    const auto b = (*ints)[1];
    if (!g) {
      if (a > kMaxVertices) throw ParseError(ParseErrorKind::malformed, line_no, "too many vertices");
      if (b > a * (a - 1) / 2) throw ParseError(ParseErrorKind::malformed, line_no, "edge count exceeds n(n-1)/2");
      g.emplace(static_cast<int>(a));
      expected_edges = b;
    } else {
      if (seen_edges == expected_edges)
        throw ParseError(ParseErrorKind::malformed, line_no, "more edge lines than declared");
      const auto n = g->size();
      if (a < 1 || a > n || b < 1 || b > n)
        throw ParseError(ParseErrorKind::vertex_out_of_range, line_no, "endpoints must lie in 1.." + std::to_string(n));
      if (a == b) throw ParseError(ParseErrorKind::self_loop, line_no, "vertex " + std::to_string(a));
      const auto u = static_cast<Vertex>(a);
      const auto v = static_cast<Vertex>(b);
      if (g->adjacent(u, v))
        throw ParseError(ParseErrorKind::duplicate_edge, line_no, std::to_string(a) + " " + std::to_string(b));
      g->add_edge(u, v);
      ++seen_edges;
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError(ParseErrorKind::malformed, line_no, "missing header line \"n m\"");
  if (seen_edges != expected_edges)
    throw ParseError(ParseErrorKind::malformed, line_no,
                     "declared " + std::to_string(expected_edges) + " edges, found " + std::to_string(seen_edges));
  return std::move(*g);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// Partition refinement: an ordered list of classes, each an ascending list of
// vertices. Neighbours are scanned in increasing order, so newly split classes
// stay sorted and the head of the front class is always the smallest vertex
// among those with the lexicographically largest label.
std::vector<Vertex> lex_bfs_order(const Graph& g) {
  const int n = g.size();
  std::vector<Vertex> order;
  if (n == 0) return order;
  order.reserve(static_cast<std::size_t>(n));

  struct Class {
    Vertex head = 0, tail = 0;
    int prev = -1, next = -1;
    int split = -1;
    int stamp = -1;
  };
  std::vector<Class> classes(1);
  std::vector<Vertex> vprev(static_cast<std::size_t>(n) + 1, 0), vnext(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> cls(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v = 1; v <= n; ++v) {
    vprev[static_cast<std::size_t>(v)] = v - 1;
    vnext[static_cast<std::size_t>(v)] = v < n ? v + 1 : 0;
  }
  classes[0].head = 1;
  classes[0].tail = n;
  int front = 0;

  auto unlink_vertex = [&](Vertex v) {
    auto& c = classes[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
    const Vertex p = vprev[static_cast<std::size_t>(v)];
    const Vertex q = vnext[static_cast<std::size_t>(v)];
    if (p != 0) vnext[static_cast<std::size_t>(p)] = q; else c.head = q;
    if (q != 0) vprev[static_cast<std::size_t>(q)] = p; else c.tail = p;
  };
  auto append_vertex = [&](int ci, Vertex v) {
    auto& c = classes[static_cast<std::size_t>(ci)];
    vprev[static_cast<std::size_t>(v)] = c.tail;
    vnext[static_cast<std::size_t>(v)] = 0;
    if (c.tail != 0) vnext[static_cast<std::size_t>(c.tail)] = v; else c.head = v;
    c.tail = v;
    cls[static_cast<std::size_t>(v)] = ci;
  };
  auto unlink_class = [&](int ci) {
    const auto& c = classes[static_cast<std::size_t>(ci)];
    if (c.prev != -1) classes[static_cast<std::size_t>(c.prev)].next = c.next; else front = c.next;
    if (c.next != -1) classes[static_cast<std::size_t>(c.next)].prev = c.prev;
  };

  for (int step = 0; step < n; ++step) {
    while (classes[static_cast<std::size_t>(front)].head == 0) unlink_class(front);
    const Vertex v = classes[static_cast<std::size_t>(front)].head;
    unlink_vertex(v);
    visited[static_cast<std::size_t>(v)] = true;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      const int ci = cls[static_cast<std::size_t>(w)];
      if (classes[static_cast<std::size_t>(ci)].stamp != step) {
        classes[static_cast<std::size_t>(ci)].stamp = step;
        Class fresh;
        fresh.prev = classes[static_cast<std::size_t>(ci)].prev;
        fresh.next = ci;
        fresh.stamp = step;
        classes.push_back(fresh);
        const int ni = static_cast<int>(classes.size()) - 1;
        classes[static_cast<std::size_t>(ci)].split = ni;
        if (fresh.prev != -1) classes[static_cast<std::size_t>(fresh.prev)].next = ni; else front = ni;
        classes[static_cast<std::size_t>(ci)].prev = ni;
      }
      unlink_vertex(w);
      append_vertex(classes[static_cast<std::size_t>(ci)].split, w);
    }
  }
  return order;
}

namespace {

std::vector<int> positions_of(const Graph& g, std::span<const Vertex> order) {
  const int n = g.size();
  if (static_cast<int>(order.size()) != n) throw GraphError("ordering has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex v = order[k];
    if (v < 1 || v > n || pos[static_cast<std::size_t>(v)] != -1) throw GraphError("ordering is not a permutation of 1..n");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  return pos;
}

}  // namespace

// For each x let y be its latest earlier neighbour; the ordering is a PEO iff
// every other earlier neighbour of x is adjacent to y (checked for all x).
bool is_peo(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions_of(g, order);
  for (Vertex x = 1; x <= g.size(); ++x) {
    Vertex latest = 0;
    for (Vertex w : g.neighbors(x))
      if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(x)] &&
          (latest == 0 || pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(latest)]))
        latest = w;
    if (latest == 0) continue;
    for (Vertex w : g.neighbors(x))
      if (w != latest && pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(x)] && !g.adjacent(w, latest))
        return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> chordal_peo(const Graph& g) {
  auto order = lex_bfs_order(g);
  if (!is_peo(g, order)) return std::nullopt;
  return order;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    auto& block = blocks.emplace_back();
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    std::sort(block.begin(), block.end());
  }
  return blocks;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || connected_components(g).size() == 1; }

namespace {

bool connected_without(const Graph& g, Vertex removed) {
  const int n = g.size();
  const Vertex start = removed == 1 ? 2 : 1;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  seen[static_cast<std::size_t>(removed)] = true;
  seen[static_cast<std::size_t>(start)] = true;
  std::vector<Vertex> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n - 1;
}

}  // namespace

bool is_2_connected(const Graph& g) {
  if (g.size() < 3 || !is_connected(g)) return false;
  for (Vertex v = 1; v <= g.size(); ++v)
    if (!connected_without(g, v)) return false;
  return true;
}

bool is_tree(const Graph& g) { return g.size() >= 1 && g.edge_count() == g.size() - 1 && is_connected(g); }

bool is_filled(const Graph& g) {
  for (const auto& [i, k] : g.edges())
    for (Vertex j = i + 1; j < k; ++j)
      if (!g.adjacent(i, j) || !g.adjacent(j, k)) return false;
  return true;
}

namespace {

// Exact maximum independent set size on at most 64 vertices given as
// pairwise adjacency masks; plain branching, meant for small neighbourhoods.
int max_independent(std::uint64_t candidates, const std::vector<std::uint64_t>& adj) {
  if (candidates == 0) return 0;
  const int v = std::countr_zero(candidates);
  const std::uint64_t rest = candidates & ~(std::uint64_t{1} << v);
  const int with = 1 + max_independent(rest & ~adj[static_cast<std::size_t>(v)], adj);
  if ((adj[static_cast<std::size_t>(v)] & rest) == 0) return with;
  return std::max(with, max_independent(rest, adj));
}

}  // namespace

StarNumber max_star_sigma(const Graph& g) {
  StarNumber result;
  if (const auto peo = chordal_peo(g)) {
    // Induced subgraphs of a PEO graph inherit the ordering, and the latest
    // vertex is simplicial; greedily taking latest-first is therefore exact.
    std::vector<int> pos(static_cast<std::size_t>(g.size()) + 1);
    for (std::size_t k = 0; k < peo->size(); ++k) pos[static_cast<std::size_t>((*peo)[k])] = static_cast<int>(k);
    std::vector<Vertex> nb, chosen;
    for (Vertex v = 1; v <= g.size(); ++v) {
      nb = g.neighbors(v);
      std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]; });
      chosen.clear();
      for (Vertex u : nb)
        if (std::none_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(u, c); })) chosen.push_back(u);
      result.value = std::max(result.value, static_cast<int>(chosen.size()));
    }
    return result;
  }
  constexpr int kBruteForceLimit = 20;
  for (Vertex v = 1; v <= g.size(); ++v) {
    const auto& nb = g.neighbors(v);
    if (static_cast<int>(nb.size()) > kBruteForceLimit) {
      result.value = std::max(result.value, static_cast<int>(nb.size()));
      result.exact = false;
      continue;
    }
    std::vector<std::uint64_t> adj(nb.size(), 0);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = 0; b < nb.size(); ++b)
        if (a != b && g.adjacent(nb[a], nb[b])) adj[a] |= std::uint64_t{1} << b;
    const std::uint64_t all = nb.empty() ? 0 : (~std::uint64_t{0} >> (64 - nb.size()));
    result.value = std::max(result.value, max_independent(all, adj));
  }
  return result;
}

}  // namespace elimtree
