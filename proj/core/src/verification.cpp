#include "elimtree/verification.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "elimtree/analysis.hpp"
#include "elimtree/insertion.hpp"
#include "elimtree/rotation.hpp"

namespace elimtree {

namespace {

using Mask = std::uint64_t;

void check_guard(const Graph& g, std::uint64_t guard) {
  if (g.size() > kMaxCountVertices) throw GuardExceeded("oracle limited to " + std::to_string(kMaxCountVertices) + " vertices");
  if (count_forests(g) > guard) throw GuardExceeded("more than " + std::to_string(guard) + " forests");
}

class Enumerator {
 public:
  explicit Enumerator(const Graph& g) : n_(g.size()), adj_(static_cast<std::size_t>(g.size()) + 1, 0),
                                        parent_(static_cast<std::size_t>(g.size()) + 1, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
      adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
  }

  std::vector<ElimForest> run() {
    Mask all = 0;
    for (Vertex v = 1; v <= n_; ++v) all |= Mask{1} << v;
    pending_.push_back({all, 0});
    recurse();
    return std::move(out_);
  }

 private:
  struct Job {
    Mask set;
    Vertex parent;
  };

  Mask component(Mask within, int start) const {
    Mask reached = Mask{1} << start, frontier = reached;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj_[static_cast<std::size_t>(v)] & within & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    return reached;
  }

  void recurse() {
    if (pending_.empty()) {
      out_.push_back(ElimForest::from_parents(parent_));
      return;
    }
    const Job job = pending_.back();
    pending_.pop_back();
    if (job.set != 0) {
      const Mask comp = component(job.set, std::countr_zero(job.set));
      const Mask rest = job.set & ~comp;
      if (rest != 0) pending_.push_back({rest, job.parent});
      for (Mask choice = comp; choice != 0; choice &= choice - 1) {
        const Vertex r = std::countr_zero(choice);
        parent_[static_cast<std::size_t>(r)] = job.parent;
        pending_.push_back({comp & ~(Mask{1} << r), r});
        recurse();
        pending_.pop_back();
      }
      if (rest != 0) pending_.pop_back();
    } else {
      recurse();
    }
    pending_.push_back(job);
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Vertex> parent_;
  std::vector<Job> pending_;
  std::vector<ElimForest> out_;
};

}  // namespace

std::vector<ElimForest> enumerate_all(const Graph& g, std::uint64_t guard) {
  check_guard(g, guard);
  auto forests = Enumerator(g).run();
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(forests.size());
  for (std::size_t k = 0; k < forests.size(); ++k) keyed.emplace_back(canonical_key(forests[k]), k);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ElimForest> out;
  out.reserve(forests.size());
  for (const auto& [key, k] : keyed) out.push_back(std::move(forests[k]));
  return out;
}

std::size_t FlipGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj) twice += row.size();
  return twice / 2;
}

bool FlipGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& row = adj[a];
  return std::find(row.begin(), row.end(), b) != row.end();
}

int FlipGraph::regular_degree() const {
  if (adj.empty()) return 0;
  const auto d = adj.front().size();
  for (const auto& row : adj)
    if (row.size() != d) return -1;
  return static_cast<int>(d);
}

FlipGraph build_flip_graph(const Graph& g, std::uint64_t guard) {
  const auto forests = enumerate_all(g, guard);
  FlipGraph fg;
  fg.keys.reserve(forests.size());
  for (const auto& f : forests) {
    fg.index.emplace(canonical_key(f), fg.keys.size());
    fg.keys.push_back(canonical_key(f));
  }
  fg.adj.resize(forests.size());
  for (std::size_t a = 0; a < forests.size(); ++a) {
    const auto& f = forests[a];
    for (Vertex v = 1; v <= f.size(); ++v) {
      if (f.is_root(v)) continue;
      const auto b = fg.index.at(canonical_key(rotate_edge_generic(g, f, f.parent(v), v)));
      fg.adj[a].push_back(b);
    }
    std::sort(fg.adj[a].begin(), fg.adj[a].end());
  }
  return fg;
}

bool are_rotation_adjacent(const Graph& g, const ElimForest& a, const ElimForest& b) {
  if (a.size() != b.size()) return false;
  for (Vertex v = 1; v <= a.size(); ++v)
    if (!a.is_root(v) && rotate_edge_generic(g, a, a.parent(v), v) == b) return true;
  return false;
}

GrayCodeReport verify_gray_code(const Graph& g, std::span<const ElimForest> seq, std::uint64_t guard) {
  GrayCodeReport report;
  report.length = seq.size();
  report.all_valid = std::all_of(seq.begin(), seq.end(), [&g](const ElimForest& f) { return validate(g, f); });
  std::unordered_set<std::string> keys;
  for (const auto& f : seq) keys.insert(canonical_key(f));
  report.distinct = keys.size() == seq.size();
  report.consecutive_adjacent = report.all_valid;
  for (std::size_t t = 1; t < seq.size() && report.consecutive_adjacent; ++t)
    report.consecutive_adjacent = are_rotation_adjacent(g, seq[t - 1], seq[t]);
  const auto all = enumerate_all(g, guard);
  report.expected = all.size();
  report.complete = report.distinct && seq.size() == all.size() &&
                    std::all_of(all.begin(), all.end(), [&keys](const ElimForest& f) { return keys.contains(canonical_key(f)); });
  report.cyclic = report.all_valid && seq.size() >= 2 && are_rotation_adjacent(g, seq.back(), seq.front());
  return report;
}

std::vector<Permutation> permutation_language(const PeoGraph& pg, std::uint64_t guard) {
  std::vector<Permutation> out;
  for (const auto& f : enumerate_all(pg.graph(), guard)) out.push_back(sigma_encode(pg, f));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Minimal jump of value j in direction dir (-1 left, +1 right) inside the
// language; empty when j cannot jump that way.
Permutation minimal_jump(const Permutation& pi, Vertex j, int dir, const std::set<Permutation>& language) {
  const auto n = static_cast<std::ptrdiff_t>(pi.size());
  std::ptrdiff_t pos = std::find(pi.begin(), pi.end(), j) - pi.begin();
  Permutation cur = pi;
  while (true) {
    const std::ptrdiff_t next = pos + dir;
    if (next < 0 || next >= n || cur[static_cast<std::size_t>(next)] > j) return {};
    std::swap(cur[static_cast<std::size_t>(pos)], cur[static_cast<std::size_t>(next)]);
    pos = next;
    if (language.contains(cur)) return cur;
  }
}

bool clean_jump(const Permutation& pi, Vertex j) {
  const auto n = static_cast<Vertex>(pi.size());
  std::vector<std::size_t> where(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < pi.size(); ++k) where[static_cast<std::size_t>(pi[k])] = k;
  for (Vertex k = j + 1; k <= n; ++k) {
    bool left_of_all = true, right_of_all = true;
    for (Vertex x = 1; x < k; ++x) {
      left_of_all = left_of_all && where[static_cast<std::size_t>(k)] < where[static_cast<std::size_t>(x)];
      right_of_all = right_of_all && where[static_cast<std::size_t>(k)] > where[static_cast<std::size_t>(x)];
    }
    if (!left_of_all && !right_of_all) return false;
  }
  return true;
}

}  // namespace

std::vector<Permutation> algorithm_j(const PeoGraph& pg, std::uint64_t guard) {
  const auto words = permutation_language(pg, guard);
  const std::set<Permutation> language(words.begin(), words.end());
  const int n = pg.size();
  Permutation cur(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) cur[static_cast<std::size_t>(k)] = k + 1;
  std::set<Permutation> seen{cur};
  std::vector<Permutation> out{cur};
  while (true) {
    bool moved = false;
    for (Vertex j = n; j >= 2 && !moved; --j) {
      std::vector<Permutation> fresh;
      for (int dir : {-1, +1}) {
        auto next = minimal_jump(cur, j, dir, language);
        if (!next.empty() && !seen.contains(next)) fresh.push_back(std::move(next));
      }
      if (fresh.size() > 1) return out;
      if (fresh.size() == 1) {
        cur = fresh.front();
        seen.insert(cur);
        out.push_back(cur);
        moved = true;
      }
    }
    if (!moved) return out;
  }
}

std::vector<ZigzagLevel> zigzag_levels(const PeoGraph& pg, std::uint64_t guard) {
  std::vector<ZigzagLevel> levels;
  std::set<Permutation> previous{Permutation{}};
  for (int nu = 1; nu <= pg.size(); ++nu) {
    const auto words = permutation_language(pg.prefix(nu), guard);
    const std::set<Permutation> current(words.begin(), words.end());
    ZigzagLevel level;
    level.nu = nu;
    std::set<Permutation> projected;
    bool only_back = true;
    for (const auto& w : current) {
      Permutation p;
      for (Vertex v : w)
        if (v != nu) p.push_back(v);
      projected.insert(std::move(p));
      only_back = only_back && w.back() == nu;
    }
    level.projection = projected == previous;
    level.z2 = only_back;
    level.z1 = true;
    for (const auto& p : previous) {
      Permutation front{nu}, back = p;
      front.insert(front.end(), p.begin(), p.end());
      back.push_back(nu);
      level.z1 = level.z1 && current.contains(front) && current.contains(back);
    }
    levels.push_back(level);
    previous = current;
  }
  return levels;
}

bool check_zigzag_closure(const PeoGraph& pg, std::uint64_t guard) {
  const auto levels = zigzag_levels(pg, guard);
  return std::all_of(levels.begin(), levels.end(), [](const ZigzagLevel& l) { return l.ok(); });
}

bool check_jump_rotation_correspondence(const PeoGraph& pg, std::uint64_t guard) {
  const Graph& g = pg.graph();
  const auto forests = enumerate_all(g, guard);
  std::set<std::pair<Permutation, Permutation>> rotations, all_rotations, clean_jumps;
  for (const auto& f : forests) {
    const auto from = sigma_encode(pg, f);
    for (Vertex v = 1; v <= f.size(); ++v) {
      if (f.is_root(v)) continue;
      const Vertex p = f.parent(v);
      const Vertex j = std::max(p, v);
      const auto to = sigma_encode(pg, rotate_edge_generic(g, f, p, v));
      all_rotations.insert({from, to});
      if (is_clean_for(f, j)) rotations.insert({from, to});
    }
  }
  const auto words = permutation_language(pg, guard);
  const std::set<Permutation> language(words.begin(), words.end());
  for (const auto& pi : words)
    for (Vertex j = 2; j <= pg.size(); ++j)
      for (int dir : {-1, +1}) {
        auto to = minimal_jump(pi, j, dir, language);
        if (to.empty()) continue;
        if (!all_rotations.contains({pi, to})) return false;
        if (clean_jump(pi, j)) clean_jumps.insert({pi, std::move(to)});
      }
  return rotations == clean_jumps;
}

namespace {

/// One depth-first attempt; ties between equally constrained candidates are
/// broken by `rank`. Leaves result.outcome inconclusive when the budget runs out.
void hamilton_attempt(const FlipGraph& fg, std::uint64_t budget, const std::vector<std::uint64_t>& rank,
                      HamiltonResult& result) {
  const std::size_t n = fg.size();
  std::uint64_t spent = 0;
  std::vector<char> used(n, 0);
  std::vector<std::size_t> path{0};
  used[0] = 1;
  // Iterative DFS; each frame keeps its candidate list ordered by how few
  // unused neighbours a candidate has left.
  std::vector<std::vector<std::size_t>> options;
  auto candidates = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t w : fg.adj[v])
      if (!used[w]) out.push_back(w);
    auto free_degree = [&](std::size_t w) {
      int d = 0;
      for (std::size_t x : fg.adj[w]) d += used[x] ? 0 : 1;
      return d;
    };
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      const int da = free_degree(a), db = free_degree(b);
      return da != db ? da > db : rank[a] > rank[b];  // consumed from the back
    });
    return out;
  };
  // A partial path is hopeless when some unused vertex can no longer be
  // entered and left, or the unused vertices fall apart.
  std::vector<std::size_t> stack;
  std::vector<char> reached(n, 0);
  // Also finds a forced successor: an unused vertex whose only two ways
  // include the current end must come next.
  std::size_t forced = n;
  auto feasible = [&]() {
    const std::size_t end = path.back();
    std::size_t unused = 0, first = n;
    forced = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      ++unused;
      if (first == n) first = x;
      int ways = 0;
      bool next_to_end = false;
      for (std::size_t y : fg.adj[x]) {
        ways += (!used[y] || y == end || y == 0) ? 1 : 0;
        next_to_end = next_to_end || y == end;
      }
      if (ways < 2) return false;
      if (ways == 2 && next_to_end) {
        if (forced != n) return false;
        forced = x;
      }
    }
    if (unused == 0) return true;
    bool closable = false;
    for (std::size_t y : fg.adj[0]) closable = closable || !used[y] || y == end;
    if (!closable) return false;
    std::fill(reached.begin(), reached.end(), 0);
    stack.assign(1, first);
    reached[first] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : fg.adj[x])
        if (!used[y] && !reached[y]) {
          reached[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count == unused;
  };
  options.push_back(candidates(0));
  while (!path.empty()) {
    if (path.size() == n) {
      if (fg.adjacent(path.back(), 0)) {
        result.outcome = SearchOutcome::found;
        result.cycle = path;
        return;
      }
    }
    if (options.back().empty() || path.size() == n) {
      used[path.back()] = 0;
      path.pop_back();
      options.pop_back();
      continue;
    }
    ++result.expansions;
    if (++spent > budget) return;
    const std::size_t w = options.back().back();
    options.back().pop_back();
    used[w] = 1;
    path.push_back(w);
    if (!feasible()) options.emplace_back();
    else if (forced != n) options.push_back({forced});
    else options.push_back(candidates(w));
  }
  result.outcome = SearchOutcome::not_found;
}

}  // namespace

HamiltonResult find_hamilton_cycle(const FlipGraph& fg, std::uint64_t budget) {
  HamiltonResult result;
  if (fg.size() < 3) {
    result.outcome = SearchOutcome::not_found;
    return result;
  }
  // Restarts with fresh tie-breaking and a growing per-attempt budget tame
  // the heavy tail of plain backtracking.
  std::mt19937_64 rng(0x5eed);
  std::vector<std::uint64_t> rank(fg.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::uint64_t attempt_budget = 10'000;
  while (result.expansions < budget) {
    hamilton_attempt(fg, std::min(attempt_budget, budget - result.expansions), rank, result);
    if (result.outcome != SearchOutcome::inconclusive) break;
    std::shuffle(rank.begin(), rank.end(), rng);
    attempt_budget += attempt_budget / 2;
  }
  return result;
}

std::string flip_graph_dot(const FlipGraph& fg, const std::vector<std::string>& labels, const std::vector<std::string>& path) {
  std::set<std::pair<std::size_t, std::size_t>> bold;
  for (std::size_t t = 1; t < path.size(); ++t) {
    auto a = fg.index.at(path[t - 1]);
    auto b = fg.index.at(path[t]);
    bold.insert({std::min(a, b), std::max(a, b)});
  }
  std::string out = "graph flip {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < fg.size(); ++v) {
    const auto& label = labels.empty() ? fg.keys[v] : labels[v];
    out += "  n" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  for (std::size_t a = 0; a < fg.size(); ++a)
    for (std::size_t b : fg.adj[a])
      if (a < b) {
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b);
        if (bold.contains({a, b})) out += " [style=bold, penwidth=3]";
        out += ";\n";
      }
  out += "}\n";
  return out;
}

}  // namespace elimtree
